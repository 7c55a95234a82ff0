from itertools import product

import pytest

from app.errors import InvalidScheduleError, UnknownIdentifierError
from app.models.combinator import (
    LEFT_BIASED,
    RIGHT_BIASED,
    STQ,
    ASequence,
    Combinator,
    CombinatorKind,
    PropertyId,
)
from app.services.combinators import (
    check_property,
    combine,
    is_team_queue_output,
    property_holds,
    recover_a_sequence,
    right_biased_combine,
    stq_combine,
    team_queue_combine,
)
from app.services.text_format import parse_world_set
from app.services.tpo_core import enumerate_tpos


@pytest.fixture
def pair(tpo):
    return tpo("z | w | x y"), tpo("x z | y | w")


class TestSchedules:
    def test_parse_and_print(self):
        assert str(ASequence.parse("12, 2, 1")) == "12,2,1"
        assert ASequence.parse("21,1") == ASequence.parse("12,1")

    def test_trailing_repeats_fold(self):
        assert ASequence.parse("12,2,2,2") == ASequence.parse("12,2")
        assert ASequence.parse("12,2,2").at(7) == frozenset({2})

    @pytest.mark.parametrize("text", ["1,2", "2", "12,3", "12,,1", ""])
    def test_invalid_schedules(self, text):
        with pytest.raises(InvalidScheduleError):
            ASequence.parse(text)

    def test_combinator_tokens(self):
        assert Combinator.parse("stq") is STQ
        assert Combinator.parse("right-biased") is RIGHT_BIASED
        assert Combinator.parse("tq:12,1") == LEFT_BIASED
        assert Combinator.parse("tq:12,2,1").token == "tq:12,2,1"
        with pytest.raises(UnknownIdentifierError):
            Combinator.parse("fancy")


class TestTeamQueue:
    def test_scheduled_examples(self, pair, tpo):
        t1, t2 = pair
        assert team_queue_combine(t1, t2, ASequence.parse("12,2,1")) == tpo("x z | y | w")
        assert team_queue_combine(t1, t2, ASequence.parse("12,1")) == tpo("x z | w | y")
        assert right_biased_combine(t1, t2) == tpo("x z | y | w")

    def test_synchronous(self, pair, tpo):
        t1, t2 = pair
        assert stq_combine(t1, t2) == tpo("x z | w y")
        assert combine(t1, t2, STQ) == stq_combine(t1, t2)

    def test_stq_is_commutative(self):
        orders = list(enumerate_tpos(3))
        for t1, t2 in product(orders, repeat=2):
            assert stq_combine(t1, t2) == stq_combine(t2, t1)

    def test_combining_an_order_with_itself(self):
        for order in enumerate_tpos(3):
            assert stq_combine(order, order) == order
            assert right_biased_combine(order, order) == order

    def test_pair_indexed_assignment(self, pair, tpo):
        chooser = Combinator(
            CombinatorKind.TEAM_QUEUE,
            assignment=lambda left, right: ASequence.parse("12,1"),
            name="tq:always-left",
        )
        assert combine(*pair, chooser) == tpo("x z | w | y")
        assert chooser.token == "tq:always-left"


class TestRecovery:
    def test_recovers_schedule(self, pair, tpo):
        schedule = recover_a_sequence(*pair, tpo("x z | y | w"))
        assert str(schedule) == "12,2,12"
        assert team_queue_combine(*pair, schedule) == tpo("x z | y | w")

    def test_rejects_non_team_queue_candidates(self, pair, tpo):
        assert recover_a_sequence(*pair, tpo("w | x z | y")) is None
        assert not is_team_queue_output(*pair, tpo("x | z | y | w"))


class TestProperties:
    def test_stq_output_has_the_team_queue_properties(self, pair):
        t1, t2 = pair
        combined = stq_combine(t1, t2)
        for p in (PropertyId.HI, PropertyId.SPU_PLUS, PropertyId.WPU_PLUS, PropertyId.NO, PropertyId.TRI, PropertyId.PAR):
            assert check_property(p, t1, t2, combined) is None

    def test_par_counterexample(self, pair, tpo, wxyz):
        found = check_property("PAR", *pair, tpo("x z | y | w"))
        assert found.postulate == "PAR"
        assert found.worlds == (wxyz.index("y"), wxyz.index("w"))
        assert "queue 1" in found.narrative

    def test_hi_counterexample_names_the_whole_universe(self, pair, tpo, wxyz):
        found = check_property(PropertyId.HI, *pair, tpo("w | x y z"))
        assert found.sentences["S"] == wxyz.full
        assert set(found.states) == {"left", "right", "combined"}

    def test_ub_counterexample(self, pair, tpo, wxyz):
        found = check_property(PropertyId.UB, *pair, tpo("w x z | y"))
        assert found.sentences["S"] == parse_world_set("{w, z}", wxyz)

    def test_property_names_parse(self):
        assert PropertyId.parse("spu+") is PropertyId.SPU_PLUS
        with pytest.raises(UnknownIdentifierError):
            PropertyId.parse("XYZ")

    def test_ub_and_spu_plus_agree_on_three_worlds(self):
        orders = list(enumerate_tpos(3))
        for t1, t2 in product(orders[:5], repeat=2):
            for c in orders:
                assert property_holds(PropertyId.UB, t1, t2, c) == property_holds(PropertyId.SPU_PLUS, t1, t2, c)
