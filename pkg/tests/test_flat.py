import pytest
from hypothesis import given, strategies as st

from conftest import load
from strategies import pdfs
from argdec import D, PS, SD, WD, check_flat_explanation, explain, flat_explain, flat_explain_preferred, validate_adf
from argdec.errors import CriterionMismatch, UnknownDecision
from argdec.flat import DNeg, DPos, PSNeg, PSPos, SDNeg, SDPos, WDNeg, WDPos, from_json, to_json
from argdec.generators import all_adfs

fs = frozenset


def test_london():
    adf = load("london.json")
    assert flat_explain(adf, "ic", SD) == SDPos(fs({"cheap", "near"}))
    assert flat_explain(adf, "jh", SD) == SDNeg(fs({"cheap"}))
    assert flat_explain(adf, "ritz", SD) == SDNeg(fs({"cheap", "near"}))


def test_two_decision():
    adf = load("two_decision.json")
    assert flat_explain(adf, "jh", D) == DPos(fs({"near"}), fs({"cheap"}))
    assert flat_explain(adf, "ritz", D) == DNeg(fs({("jh", "near")}))


def test_clean_goal():
    adf = load("clean_goal.json")
    assert flat_explain(adf, "ritz", WD) == WDNeg(fs({"jh", "ic"}))
    assert check_flat_explanation(adf, "jh", WDPos(fs({"clean"}), fs({("near", "ic")})))
    assert not check_flat_explanation(adf, "jh", WDPos(fs(), fs()))


def test_sd_payload_must_be_all_goals():
    assert not check_flat_explanation(load("london.json"), "ic", SDPos(fs({"near"})))


def test_preferred_set_examples():
    pdf = load("d1_d2.json")
    assert check_flat_explanation(pdf, "d1", PSPos(fs({"g2"}), fs({(fs({"g4", "g5"}), "d2")})))
    assert flat_explain_preferred(pdf, "d2") == PSNeg(fs({"d1"}))
    e = flat_explain_preferred(pdf, "d1")
    assert isinstance(e, PSPos) and check_flat_explanation(pdf, "d1", e)
    assert flat_explain_preferred(load("quiet_near.json"), "ic") == PSNeg(fs({"jh"}))


def test_single_decision_preferred():
    from argdec import GoalSetPreference, Pdf
    pdf = Pdf(validate_adf(["d"], ["a", "b"], {"d": ["a"]}), GoalSetPreference.chain(["a"], ["b"]))
    assert flat_explain_preferred(pdf, "d") == PSPos(fs({"a"}), fs())


def test_unknown_decision():
    with pytest.raises(UnknownDecision):
        flat_explain(load("london.json"), "savoy", SD)


def test_checker_rejects_wrong_variant():
    adf = load("london.json")
    assert not check_flat_explanation(adf, "jh", SDPos(fs({"cheap", "near"})))
    assert not check_flat_explanation(adf, "ic", WDNeg(fs()))
    assert not check_flat_explanation(adf, "ic", PSNeg(fs()))


def test_all_adfs_positive_iff_satisfies_and_checked():
    from argdec.decision import satisfies
    for adf in all_adfs(3, 3):
        for c in (SD, D, WD):
            for d in adf.decisions:
                e = flat_explain(adf, d, c)
                assert e.positive == satisfies(adf, c, d)
                assert check_flat_explanation(adf, d, e)


@given(pdfs())
def test_preferred_explanations_checked(pdf):
    for d in pdf.decisions:
        e = explain(pdf, d, PS)
        assert check_flat_explanation(pdf, d, e)
        assert from_json(to_json(e)) == e


@given(st.data())
def test_wd_negative_is_unique(data):
    adfs = list(all_adfs(2, 2))
    adf = data.draw(st.sampled_from(adfs))
    for d in adf.decisions:
        e = flat_explain(adf, d, WD)
        if not e.positive:
            # every other rival set is rejected
            for other in [fs(), fs(adf.decisions) - {d}, fs({adf.decisions[0]})]:
                if other != e.decisions:
                    assert not check_flat_explanation(adf, d, WDNeg(other))


def test_json_round_trip_every_variant():
    samples = [SDPos(fs("a")), SDNeg(fs()), DPos(fs("a"), fs("b")), DNeg(fs({("x", "a")})),
               WDPos(fs("a"), fs({("a", "x")})), WDNeg(fs("x")),
               PSPos(fs("a"), fs({(fs("ab"), "x")})), PSNeg(fs("y"))]
    for e in samples:
        assert from_json(to_json(e)) == e


def test_preferred_set_explanation_needs_preferences():
    with pytest.raises(CriterionMismatch):
        explain(load("london.json"), "jh", PS)
