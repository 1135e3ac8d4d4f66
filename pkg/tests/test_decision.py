import pytest
from hypothesis import given

import oracles
from conftest import load
from strategies import pdfs
from argdec import (
    D,
    PS,
    SD,
    WD,
    GoalSetPreference,
    Pdf,
    comparable_goal_set,
    evaluate,
    preferred_set_decisions,
    select,
    validate_adf,
)
from argdec.errors import (
    CriterionMismatch,
    DuplicateId,
    EmptyDecisions,
    EmptyGoals,
    InvalidPreference,
    UnknownGoalInGamma,
)
from argdec.generators import all_adfs


def test_validate_london():
    adf = validate_adf(["jh", "ic", "ritz"], ["cheap", "near"],
                       {"jh": ["near"], "ic": ["cheap", "near"], "ritz": []})
    assert adf.decisions == ("jh", "ic", "ritz")
    assert adf.gamma["ic"] == {"cheap", "near"}


@pytest.mark.parametrize("args, error", [
    (([], ["g"], {}), EmptyDecisions),
    ((["d"], [], {}), EmptyGoals),
    ((["d"], ["g"], {"d": ["h"]}), UnknownGoalInGamma),
    ((["d", "d"], ["g"], {}), DuplicateId),
    ((["x"], ["x"], {}), DuplicateId),
])
def test_validate_rejects(args, error):
    with pytest.raises(error):
        validate_adf(*args)


def test_missing_gamma_entry_means_no_goals():
    adf = validate_adf(["d"], ["g"], {})
    assert adf.gamma["d"] == frozenset()


def test_worked_examples():
    assert evaluate(load("london.json"), SD) == ["ic"]
    assert evaluate(load("two_decision.json"), D) == ["jh"]
    assert evaluate(load("two_decision.json"), WD) == ["jh"]
    assert evaluate(load("clean_goal.json"), WD) == ["jh", "ic"]
    assert preferred_set_decisions(load("d1_d2.json")) == ["d1"]
    assert preferred_set_decisions(load("quiet_near.json")) == ["jh"]


def test_comparable_goal_set_of_chain():
    cg = comparable_goal_set(load("d1_d2.json"))
    assert cg == {frozenset(s) for s in (["g1"], ["g2"], ["g3"], ["g4"], ["g5"], ["g4", "g5"])}


def test_chain_direction_and_closure():
    pref = GoalSetPreference.chain(["a"], ["b"], ["c"])
    assert pref.prefers(["c"], ["a"])
    assert not pref.prefers(["a"], ["c"])
    assert pref.at_least_as_preferred(["b"], ["b"])


def test_cyclic_preference_rejected():
    with pytest.raises(InvalidPreference):
        GoalSetPreference(frozenset({(frozenset("a"), frozenset("b")), (frozenset("b"), frozenset("a"))}))


def test_preferred_set_needs_pdf():
    with pytest.raises(CriterionMismatch):
        evaluate(load("london.json"), PS)
    with pytest.raises(CriterionMismatch):
        select(load("london.json"), PS)


def test_empty_preference_unique_weakly_dominant():
    adf = load("two_decision.json")
    assert preferred_set_decisions(Pdf(adf, GoalSetPreference(frozenset()))) == ["jh"]


def test_output_in_declaration_order():
    adf = validate_adf(["z", "a", "m"], ["g"], {})
    assert evaluate(adf, D) == ["z", "a", "m"]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_criteria_match_oracle_exhaustively(n):
    for adf in all_adfs(n, 3 if n < 3 else 2):
        assert evaluate(adf, SD) == oracles.strongly_dominant(adf)
        assert evaluate(adf, D) == oracles.dominant(adf)
        assert evaluate(adf, WD) == oracles.weakly_dominant(adf)


def test_lattice_properties_on_all_3x3():
    for adf in all_adfs(3, 3):
        sd, dom, wd = evaluate(adf, SD), evaluate(adf, D), evaluate(adf, WD)
        assert set(sd) <= set(dom) <= set(wd)
        if dom:
            assert dom == wd
            assert len({adf.gamma[d] for d in dom}) == 1
        if not dom and wd:
            assert len({adf.gamma[d] for d in wd}) > 1
        assert wd, "some decision is always weakly dominant"


@given(pdfs())
def test_preferred_set_matches_oracle(pdf):
    got = preferred_set_decisions(pdf)
    assert got == oracles.preferred_set(pdf)
    assert set(got) <= set(evaluate(pdf.adf, WD))


@given(pdfs())
def test_comparable_goal_set_definition(pdf):
    cg = comparable_goal_set(pdf)
    pref = pdf.preference
    for s in cg:
        assert any(s != t and (pref.prefers(s, t) or pref.prefers(t, s)) for t in cg)
    for s, t in pref.pairs:
        assert s in cg and t in cg
