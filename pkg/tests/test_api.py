def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json()["status"] == "healthy"


def test_root_lists_endpoints(client):
    assert "verify" in client.get("/").json()["endpoints"]


def test_combine(client):
    response = client.post(
        "/api/combine",
        json={"worlds": "w,x,y,z", "left": "z | w | x y", "right": "x z | y | w", "combinator": "tq:12,2,1"},
    )
    assert response.status_code == 200
    body = response.json()
    assert body["order"] == "x z | y | w"
    assert body["belief_set"] == "{x, z}"
    assert body["schedule"] == "12,2,1"


def test_revise(client):
    response = client.post(
        "/api/revise",
        json={"atoms": "p,q", "state": "11 | 10 01 | 00", "input": "!p", "op": "natural"},
    )
    assert response.json() == {"order": "01 | 11 | 10 | 00", "belief_set": "!p & q", "schedule": None}


def test_contract(client):
    response = client.post(
        "/api/contract",
        json={"worlds": "w,x,y,z", "state": "x | y | z | w", "input": "{x, w}", "op": "lex"},
    )
    assert response.json()["order"] == "x y | w z"


def test_postulate_counterexample(client):
    response = client.post(
        "/api/check/postulate",
        json={"atoms": "p,q", "state": "11 | 10 01 | 00", "postulate": "EHI", "contraction": "via-combi"},
    )
    body = response.json()
    assert body["holds"] is False
    assert body["counterexample"]["postulate"] == "EHI"
    assert body["counterexample"]["atoms"] == ["p", "q"]


def test_property_holds(client):
    response = client.post(
        "/api/check/property",
        json={"worlds": "w,x,y,z", "property": "NO", "left": "z | w | x y", "right": "x z | y | w", "combined": "x z | w y"},
    )
    assert response.json() == {"holds": True, "counterexample": None}


def test_theorems(client):
    theorems = {item["theorem"]: item for item in client.get("/api/theorems").json()}
    assert theorems["prop4"]["aliases"] == ["thm1"]
    assert theorems["prop3"]["domain"].endswith("over 3 worlds")


def test_verify(client):
    body = client.post("/api/verify", json={"theorem": "examples"}).json()
    assert body["passed"] is True
    assert "wall_time" not in body


def test_bad_input_is_a_400(client):
    response = client.post(
        "/api/revise",
        json={"atoms": "p,q", "state": "11 | 10 01", "input": "!p"},
    )
    assert response.status_code == 400


def test_cap_is_a_422(client):
    assert client.post("/api/verify", json={"theorem": "prop3", "size": 9}).status_code == 422
