import json

import pytest

from app.errors import CapExceededError, InvalidVocabularyError, UnknownIdentifierError
from app.models.combinator import LEFT_BIASED, RIGHT_BIASED, STQ
from app.models.report import TheoremId
from app.services.tpo_core import enumerate_tpos
from app.services.verification import contraction_family, run_theorem, schedule_family


def test_worked_examples():
    report = run_theorem("examples")
    assert report.passed
    assert report.instances == 12
    assert report.size == 4


def test_prop3_scans_every_triple():
    report = run_theorem("prop3", 3)
    assert report.passed
    assert report.instances == 13 * 13 * 13
    assert report.domain == "all tpo pairs x all candidate outputs over 3 worlds"
    assert "13 orders over 3 worlds" in report.notes


def test_prop4_and_its_alias(small_family):
    report = run_theorem("thm1", 3)
    assert report.theorem == "prop4"
    assert report.passed
    assert report.instances == 169 * 6 + 169 * 13
    assert "169 pairs x 6 combinators" in report.notes


@pytest.mark.parametrize("theorem", ["prop5", "prop6"])
def test_variant_pair_theorems(theorem):
    report = run_theorem(theorem, 3)
    assert report.passed


@pytest.mark.slow
@pytest.mark.parametrize("theorem", ["prop4", "prop5", "prop6"])
def test_combinator_theorems_on_four_worlds(theorem):
    report = run_theorem(theorem, 4)
    assert report.passed
    assert report.violation_count == 0
    assert "75 orders over 4 worlds" in report.notes


def test_stq_uniqueness():
    report = run_theorem("thm2", 3)
    assert report.theorem == "prop9"
    assert report.passed
    assert report.instances == 13 ** 3


def test_prop10_confirms_both_facts():
    report = run_theorem("prop10", 2)
    assert report.passed
    assert report.instances == 75 * 15
    assert [finding.postulate for finding in report.findings] == ["prop10", "natural-premise"]


def test_lex_recovery():
    report = run_theorem(TheoremId.LEX_RECOVERY, 2)
    assert report.passed
    assert report.instances == 75 * 14


def test_priority_distinctness():
    report = run_theorem("priority-distinctness", 2)
    assert report.passed
    assert len(report.findings) == 4


def test_triviality_run():
    report = run_theorem("prop2")
    assert report.passed
    assert [finding.postulate for finding in report.findings] == ["EHI", "EHI", "EHI", "VAC"]
    assert "1 state(s) over p, q meet the witness clauses" in report.notes


def test_agm_suites():
    report = run_theorem("agm", 2)
    assert report.passed
    # lexicographic contraction keeps ![Psi] worlds apart, so vacuity fails
    assert "AGM/3" in {finding.postulate for finding in report.findings}


@pytest.mark.parametrize("theorem", ["prop1", "prop7", "prop8"])
def test_operator_sweeps_on_one_atom(small_family, theorem):
    report = run_theorem(theorem, 1)
    assert report.passed
    assert report.instances > 0


@pytest.mark.slow
@pytest.mark.parametrize("theorem", ["prop1", "prop7", "prop8"])
def test_operator_sweeps_on_two_atoms(small_family, theorem):
    assert run_theorem(theorem, 2).passed


class TestCaps:
    def test_world_cap(self):
        with pytest.raises(CapExceededError):
            run_theorem("prop3", 5)

    def test_atom_cap(self):
        with pytest.raises(CapExceededError):
            run_theorem("prop7", 3)

    def test_raising_the_world_cap(self, monkeypatch):
        from app.config import get_settings

        monkeypatch.setenv("TQBC_MAX_WORLDS", "8")
        get_settings.cache_clear()
        assert get_settings().max_sweep_atoms == 3

    def test_triviality_needs_two_atoms(self):
        with pytest.raises(InvalidVocabularyError):
            run_theorem("prop2", 1)

    def test_unknown_theorem(self):
        with pytest.raises(UnknownIdentifierError):
            run_theorem("prop11")


def test_reports_are_deterministic(small_family):
    first = run_theorem("prop4", 2).model_dump_json()
    second = run_theorem("prop4", 2).model_dump_json()
    assert first == second
    payload = json.loads(first)
    assert "wall_time" not in payload
    assert payload["passed"] is True


class TestFamilies:
    def test_schedule_family(self, small_family):
        family = schedule_family(3)
        assert family[:3] == [STQ, RIGHT_BIASED, LEFT_BIASED]
        assert len(family) == 6
        assert family[-1].token.startswith("tq:pair-indexed")

    def test_pair_indexed_schedules_are_stable(self, small_family):
        chooser = schedule_family(3)[-1]
        orders = list(enumerate_tpos(3))
        for left in orders[:4]:
            for right in orders[:4]:
                assert chooser.schedule_for(left, right) == chooser.schedule_for(left, right)

    def test_contraction_family_labels(self):
        labels = [op.label for op in contraction_family()]
        assert "via-combi(lex, stq)" in labels
        assert labels[-3:] == ["natural", "lex", "priority(lex)"]
