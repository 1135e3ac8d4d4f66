import random

import pytest

from conftest import FIXTURES
from argdec import SD, WD, evaluate, preferred_set_decisions
from argdec.classical import (
    ConjunctiveFramework,
    LexFramework,
    ParetoFramework,
    adf_from_conjunctive,
    adf_from_pareto,
    conjunctive_from_adf,
    conjunctive_select,
    lex_from_pdf,
    lexicographic_select,
    pareto_efficient,
    pareto_front,
    pareto_from_adf,
    pdf_from_lex,
    read_decision_table,
    threshold_framework,
)
from argdec.errors import SchemaError
from argdec.generators import all_adfs, random_total_order_pdf

MINIMA = {"toefl": 550, "gre": 1200, "gpa": 3.0}
fs = frozenset


def admissions():
    return read_decision_table(FIXTURES / "admissions.csv", MINIMA)


def test_admissions():
    table = admissions()
    cf = table.to_conjunctive(MINIMA)
    assert conjunctive_select(cf) == ["A2", "A4", "A5"]
    assert evaluate(adf_from_conjunctive(cf), SD) == ["A2", "A4", "A5"]
    assert evaluate(table.to_adf(MINIMA), SD) == ["A2", "A4", "A5"]


def test_conjunctive_trivia():
    scores = {"x": {"r": 1}, "y": {"r": 5}}
    assert conjunctive_select(threshold_framework(["x", "y"], {"x": {}, "y": {}}, {})) == ["x", "y"]
    assert conjunctive_select(threshold_framework(["x", "y"], scores, {"r": 9})) == []


def test_pareto():
    pf = ParetoFramework(("jh", "ic", "ritz"), {"jh": fs({"near"}), "ic": fs({"cheap"}), "ritz": fs()})
    assert pareto_efficient(pf) == ["jh", "ic"]
    assert pareto_front(pf) == {fs({"near"}), fs({"cheap"})}
    same = ParetoFramework(("a", "b"), {"a": fs("x"), "b": fs("x")})
    assert pareto_efficient(same) == ["a", "b"]
    chain = ParetoFramework(("a", "b", "c"), {"a": fs(), "b": fs("x"), "c": fs("xy")})
    assert pareto_efficient(chain) == ["c"]


def test_lexicographic():
    lf = read_decision_table(FIXTURES / "lexicographic.csv").to_lex()
    assert lf.attributes == ("g1", "g2", "g3", "g4", "g5")
    assert lexicographic_select(lf) == ["d2"]
    assert preferred_set_decisions(pdf_from_lex(lf)) == ["d2"]
    assert lexicographic_select(LexFramework(("a",), ("x",), {"a": fs()})) == ["a"]
    assert lexicographic_select(LexFramework(("a", "b"), ("x", "y"), {"a": fs(), "b": fs()})) == ["a", "b"]


def test_lex_round_trip():
    lf = read_decision_table(FIXTURES / "lexicographic.csv").to_lex()
    back = lex_from_pdf(pdf_from_lex(lf))
    assert back.attributes == lf.attributes


def test_conjunctive_iff_strongly_dominant_both_directions():
    for adf in all_adfs(3, 3):
        cf = conjunctive_from_adf(adf)
        assert conjunctive_select(cf) == evaluate(adf, SD)
        assert adf_from_conjunctive(cf) == adf


def test_pareto_iff_weakly_dominant_both_directions():
    for adf in all_adfs(3, 3):
        pf = pareto_from_adf(adf)
        assert pareto_efficient(pf) == evaluate(adf, WD)
        back = adf_from_pareto(pf, adf.goals)
        assert back == adf and pareto_efficient(pareto_from_adf(back)) == evaluate(back, WD)


def test_lexicographic_iff_preferred_set():
    rng = random.Random(5)
    for _ in range(100):
        pdf = random_total_order_pdf(rng)
        lf = lex_from_pdf(pdf)
        assert lexicographic_select(lf) == preferred_set_decisions(pdf)
        assert preferred_set_decisions(pdf_from_lex(lf)) == lexicographic_select(lf)


@pytest.mark.parametrize("body, line, column", [
    ("a,x\nd,1,2\n", 2, None),
    ("a,x\nd,yes\n", 2, 2),
    ("a,x\nd,7\n", 2, 2),
])
def test_bad_tables(tmp_path, body, line, column):
    path = tmp_path / "t.csv"
    path.write_text(body)
    with pytest.raises(SchemaError) as err:
        read_decision_table(path)
    assert err.value.line == line
    if column:
        assert err.value.column == column


def test_conjunctive_requirement_absent_counts_as_met():
    cf = ConjunctiveFramework(("a",), ("r", "s"), {"a": {"r": True}}, lambda _r, v: bool(v))
    assert adf_from_conjunctive(cf).gamma["a"] == {"r", "s"}
