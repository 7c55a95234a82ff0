"""
Shared fixtures.
"""

import pytest
from fastapi.testclient import TestClient

from app.config import get_settings
from app.models.belief import BeliefState
from app.models.logic import Vocabulary, WorldSpace
from app.services.text_format import parse_tpo


@pytest.fixture(autouse=True)
def fresh_settings():
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def small_family(monkeypatch):
    """Keep the random part of the schedule family small."""
    monkeypatch.setenv("TQBC_RANDOM_SCHEDULES", "2")
    get_settings.cache_clear()


@pytest.fixture
def pq() -> Vocabulary:
    return Vocabulary(("p", "q"))


@pytest.fixture
def wxyz() -> WorldSpace:
    return WorldSpace(("w", "x", "y", "z"))


@pytest.fixture
def tpo(wxyz):
    return lambda text: parse_tpo(text, wxyz)


@pytest.fixture
def pq_state(pq):
    return lambda text: BeliefState(parse_tpo(text, pq.space), pq)


@pytest.fixture
def client():
    from app.main import app

    with TestClient(app) as test_client:
        yield test_client
