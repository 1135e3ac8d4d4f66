import random

import pytest

from conftest import FIXTURES, load
from argdec import D, SD, WD, GoalSetPreference, evaluate, preferred_set_decisions
from argdec.aba import from_text, is_admissible_argument, parse_sentence, to_text
from argdec.errors import InvalidGraph, UnknownNode
from argdec.generators import all_adfs, random_dg, random_pdg
from argdec.graphs import (
    BeliefBase,
    Edge,
    Pdg,
    adf_to_dg,
    blocked_edges,
    core_dg_aba,
    criterion_aba_dg,
    dg_to_adf,
    implication,
    make_dg,
    meets_dg,
    mp_entails,
    pdg_to_pdf,
    preferred_set_aba_pdg,
    reachable,
)

S = parse_sentence
TERM = BeliefBase((implication([], "termTime"), implication(["termTime"], "-dEdge(ic,50,1)")))


def admissible(mapped, d):
    return is_admissible_argument(mapped.framework, mapped.query(d)) is not None


def test_modus_ponens():
    assert mp_entails(TERM, "-dEdge(ic,50,1)")
    assert not mp_entails(TERM, "-dEdge(ic,inSK,1)")
    assert not mp_entails(BeliefBase(), "termTime")


def test_blocked_edges():
    dg = load("investment_dg.json")
    assert blocked_edges(dg) == {Edge("ic", "50", 1, True)}
    assert blocked_edges(load("investment_strict_dg.json")) == frozenset()
    strict_with_beliefs = make_dg(["d"], [], ["g"], [("d", "g")], [([], "-dEdge(d,g,1)")])
    assert blocked_edges(strict_with_beliefs) == frozenset()


def test_reachability():
    dg = load("investment_dg.json")
    assert reachable(dg, {"ritz"}, "cheap")
    assert reachable(dg, {"200", "discount"}, "cheap")
    assert reachable(dg, {"50"}, "cheap")
    assert not reachable(dg, {"ic"}, "cheap")
    assert reachable(dg, {"ic"}, "convenient")
    assert reachable(dg, {"near"}, "convenient") and reachable(dg, {"inSK"}, "convenient")
    assert not reachable(dg, {"200"}, "cheap")


def test_meets():
    dg = load("investment_dg.json")
    assert meets_dg(dg, "ic", "convenient") and not meets_dg(dg, "ic", "cheap")
    assert meets_dg(dg, "ritz", "cheap")
    lonely = make_dg(["d", "e"], [], ["g"], [("e", "g")])
    assert not meets_dg(lonely, "d", "g")
    with pytest.raises(UnknownNode):
        meets_dg(dg, "nowhere", "cheap")


def test_conversions():
    adf = dg_to_adf(load("investment_dg.json"))
    assert adf.gamma["ic"] == {"convenient"} and adf.gamma["ritz"] == {"cheap"}
    assert evaluate(adf, WD) == ["ic", "ritz"]
    edgeless = dg_to_adf(make_dg(["d"], [], ["g"], []))
    assert edgeless.gamma["d"] == frozenset()
    london = load("london.json")
    dg = adf_to_dg(london)
    assert len(dg.edges) == 3
    assert dg_to_adf(dg) == london
    for adf in all_adfs(2, 2):
        assert dg_to_adf(adf_to_dg(adf)) == adf
    pdf = pdg_to_pdf(load("investment_pdg.json"))
    assert preferred_set_decisions(pdf) == ["ritz"]


@pytest.mark.parametrize("edges, message", [
    ([("d", "g"), ("g", "n")], "leaves a goal"),
    ([("d", "n"), ("n", "d")], "enters a decision"),
    ([("d", "n"), ("n", "m"), ("m", "n", 2)], "cycle"),
    ([("d", "g", 0)], "tag"),
    ([("d", "g", 1), ("n", "g", 1)], "alone"),
])
def test_invalid_graphs(edges, message):
    with pytest.raises(InvalidGraph, match=message):
        make_dg(["d"], ["n", "m"], ["g"], edges)


def test_unknown_node_in_edge():
    with pytest.raises(UnknownNode):
        make_dg(["d"], [], ["g"], [("d", "h")])


def test_core_framework_listing():
    af = core_dg_aba(load("investment_dg.json"))
    text = to_text(af)
    assert "unreachableSib(discount,cheap,2,ritz) <- edge(200,cheap,2), -reach(ritz,200)" in text
    assert "edge(ic,50,1) <- dEdge(ic,50,1)" in text
    assert af.argument("-dEdge(ic,50,1)") is not None
    assert not any(a.functor == "dEdge" for a in core_dg_aba(load("investment_strict_dg.json")).assumptions)


def test_core_frameworks_match_reference_listings():
    for dg_name, listing in [("investment_strict_dg.json", "investment_strict.aba"),
                             ("investment_dg.json", "investment_defeasible.aba")]:
        expected = from_text((FIXTURES / listing).read_text())
        got = core_dg_aba(load(dg_name))
        assert got == expected
        assert to_text(got) == to_text(expected)


def test_graph_criteria_examples():
    assert not admissible(criterion_aba_dg(load("investment_dg.json"), SD), "ic")
    relay = criterion_aba_dg(load("relay_dg.json"), SD)
    assert admissible(relay, "d2") and not admissible(relay, "d1")
    assert admissible(preferred_set_aba_pdg(load("investment_pdg.json")), "ritz")
    assert not admissible(preferred_set_aba_pdg(load("investment_pdg.json")), "ic")


def test_pdg_rejects_non_goal_preferences():
    dg = load("investment_dg.json")
    with pytest.raises(UnknownNode):
        Pdg(dg, GoalSetPreference.chain(["near"], ["cheap"]))


def test_random_graphs_meets_equivalence():
    rng = random.Random(11)
    for _ in range(60):
        dg = random_dg(rng)
        adf = dg_to_adf(dg)
        for d in dg.decisions:
            for g in dg.goals:
                assert meets_dg(dg, d, g) == (g in adf.gamma[d])


def test_random_graphs_criteria_via_aba():
    rng = random.Random(12)
    for _ in range(25):
        pdg = random_pdg(rng)
        pdf = pdg_to_pdf(pdg)
        for c in (SD, D, WD):
            m = criterion_aba_dg(pdg.dg, c)
            assert [d for d in pdg.decisions if admissible(m, d)] == evaluate(pdf.adf, c)
        m = preferred_set_aba_pdg(pdg)
        assert [d for d in pdg.decisions if admissible(m, d)] == preferred_set_decisions(pdf)


def test_removing_an_implication_recomputes_blocking():
    dg = load("investment_dg.json")
    fewer = make_dg(dg.decisions, dg.intermediates, dg.goals, dg.edges, dg.belief_base.implications[:1])
    assert blocked_edges(fewer) == frozenset()
    assert meets_dg(fewer, "ic", "cheap")
    assert blocked_edges(dg) == {Edge("ic", "50", 1, True)}
