import random

import pytest

from conftest import load
from argdec import D, PS, SD, WD, GoalSetPreference, Pdf, evaluate, preferred_set_decisions, validate_adf
from argdec.aba import is_admissible_argument, parse_sentence
from argdec.errors import CriterionMismatch
from argdec.generators import all_adfs, random_pdf
from argdec.mappings import (
    VOCABULARY,
    core_adf_aba,
    criterion_aba,
    dominant_aba,
    goal_set_from_name,
    goal_set_name,
    preferred_set_aba,
    strongly_dominant_aba,
    weakly_dominant_aba,
)

S = parse_sentence


def admissible(mapped, d):
    return is_admissible_argument(mapped.framework, mapped.query(d)) is not None


def test_london_core():
    af = core_adf_aba(load("london.json"))
    facts = [r for r in af.rules if not r.body]
    assert len(facts) == 3 and len(af.rules) == 3
    assert {str(r.head) for r in facts} == {"met(jh,near)", "met(ic,cheap)", "met(ic,near)"}
    assert len(af.assumptions) == 6
    assert af.contrary[S("notMet(jh,cheap)")] == {S("met(jh,cheap)")}
    fact = af.argument("met(jh,near)")
    assert any(fact.claim in af.contrary[a] for a in af.argument("notMet(jh,near)", ["notMet(jh,near)"]).support)


def test_empty_gamma_core():
    af = core_adf_aba(validate_adf(["a", "b"], ["x", "y", "z"], {}))
    assert not af.rules and len(af.assumptions) == 6


def test_strongly_dominant_examples():
    m = strongly_dominant_aba(load("london.json"))
    assert [d for d in m.decisions if admissible(m, d)] == ["ic"]
    assert admissible(strongly_dominant_aba(validate_adf(["d"], ["g"], {"d": ["g"]})), "d")
    assert not admissible(strongly_dominant_aba(validate_adf(["d"], ["g"], {})), "d")


def test_dominant_examples():
    m = dominant_aba(load("two_decision.json"))
    assert admissible(m, "jh") and not admissible(m, "ritz")
    zero = dominant_aba(validate_adf(["a", "b", "c"], ["x", "y"], {}))
    assert all(admissible(zero, d) for d in "abc")
    assert m.framework.contrary[S("notMet(jh,cheap)")] == {S("met(jh,cheap)"), S("noOthers(jh,cheap)")}


def test_weakly_dominant_examples():
    m = weakly_dominant_aba(load("clean_goal.json"))
    assert admissible(m, "ic") and admissible(m, "jh") and not admissible(m, "ritz")
    assert admissible(weakly_dominant_aba(validate_adf(["d"], ["g"], {})), "d")


def test_preferred_set_examples():
    m = preferred_set_aba(load("quiet_near.json"))
    assert admissible(m, "jh") and not admissible(m, "ic")
    unique = Pdf(load("two_decision.json"), GoalSetPreference(frozenset()))
    assert admissible(preferred_set_aba(unique), "jh")
    assert preferred_set_decisions(unique) == ["jh"]


def test_pfr_direction():
    af = preferred_set_aba(load("quiet_near.json")).framework
    facts = {str(r.head) for r in af.rules if r.head.functor == "pfr"}
    assert "pfr(near,cheap)" in facts and "pfr(cheap,near)" not in facts


def test_preferred_set_needs_preferences():
    with pytest.raises(CriterionMismatch):
        criterion_aba(load("london.json"), PS)


def test_goal_set_names():
    assert goal_set_name(["b", "a"]) == "a+b"
    assert goal_set_from_name("a+b") == {"a", "b"}
    assert goal_set_from_name(goal_set_name([])) == frozenset()


def test_bare_preferred_set_encoding_admits_dominated_decision():
    # b is outside every comparable set, so nothing in the bare encoding
    # notices that d2 meets strictly more than d1
    pdf = Pdf(validate_adf(["d1", "d2"], ["a", "b", "c"], {"d1": ["a"], "d2": ["a", "b"]}),
              GoalSetPreference.chain(["c"], ["a"]))
    assert preferred_set_decisions(pdf) == ["d2"]
    assert admissible(preferred_set_aba(pdf, weak_dominance_guard=False), "d1")
    assert not admissible(preferred_set_aba(pdf), "d1")


def test_theorems_on_all_2x2():
    for adf in all_adfs(2, 2):
        for c in (SD, D, WD):
            m = criterion_aba(adf, c)
            assert [d for d in adf.decisions if admissible(m, d)] == evaluate(adf, c)


def test_preferred_set_theorem_sample():
    rng = random.Random(7)
    for _ in range(40):
        pdf = random_pdf(rng)
        m = preferred_set_aba(pdf)
        assert [d for d in pdf.decisions if admissible(m, d)] == preferred_set_decisions(pdf)


def test_frameworks_flat_acyclic_and_in_vocabulary():
    rng = random.Random(3)
    contexts = list(all_adfs(2, 2)) + [random_pdf(rng) for _ in range(20)]
    for ctx in contexts:
        for c in ((SD, D, WD, PS) if isinstance(ctx, Pdf) else (SD, D, WD)):
            af = criterion_aba(ctx, c).framework
            af.check_acyclic()
            assert {s.functor for s in af.sentences} <= VOCABULARY
