import pytest
from hypothesis import given

import oracles
from conftest import FIXTURES
from strategies import aba_frameworks
from argdec.aba import (
    AbaFramework,
    Rule,
    admissible_sets,
    atom,
    attacks,
    from_text,
    is_admissible_argument,
    is_admissible_assumption_set,
    parse_sentence,
    set_attacks,
    to_text,
)
from argdec.errors import CyclicRuleDependency, InvalidFramework, NotFlat, SchemaError

S = parse_sentence


EXAMPLE = from_text((FIXTURES / "aba_arguments.aba").read_text())


def test_arguments_of_example():
    claims = {str(a) for a in EXAMPLE.arguments}
    assert "{a} |- p" in claims
    assert "{b} |- q" in claims
    assert "{} |- s" in claims
    assert "{c} |- r" in claims


def test_admissible_sets_of_example():
    got = set(admissible_sets(EXAMPLE))
    assert got == {frozenset(), frozenset({S("a")}), frozenset({S("b")})}
    assert not is_admissible_assumption_set(EXAMPLE, [S("c")])


def test_set_attacks_of_example():
    assert set_attacks(EXAMPLE, [S("a")], [S("b")])
    assert set_attacks(EXAMPLE, [S("b")], [S("a"), S("c")])
    assert set_attacks(EXAMPLE, [S("c")], [S("a"), S("c")])
    assert not set_attacks(EXAMPLE, [], [S("a"), S("b"), S("c")])


def test_argument_admissibility_of_example():
    assert is_admissible_argument(EXAMPLE, EXAMPLE.argument("p", ["a"])) == {S("a")}
    assert is_admissible_argument(EXAMPLE, EXAMPLE.argument("r", ["c"])) is None
    assert is_admissible_argument(EXAMPLE, EXAMPLE.argument("s")) is not None


def test_assumption_only_framework():
    af = AbaFramework([], [S("a")], {S("a"): [S("x")]})
    assert [str(x) for x in af.arguments] == ["{a} |- a"]


def test_attack_between_arguments():
    p = EXAMPLE.argument("p", ["a"])
    q = EXAMPLE.argument("q", ["b"])
    r = EXAMPLE.argument("r", ["c"])
    assert attacks(EXAMPLE, p, q) and attacks(EXAMPLE, q, p)
    assert attacks(EXAMPLE, r, r)
    assert not attacks(EXAMPLE, EXAMPLE.argument("s"), p)


def test_argument_lookup_error():
    with pytest.raises(KeyError):
        EXAMPLE.argument("p", ["b"])


def test_cyclic_rules_rejected():
    af = AbaFramework([Rule(S("p"), (S("p"),))], [S("a")], {S("a"): [S("p")]})
    with pytest.raises(CyclicRuleDependency):
        af.arguments


def test_not_flat_rejected():
    with pytest.raises(NotFlat):
        AbaFramework([Rule(S("a"), ())], [S("a")], {S("a"): [S("p")]})


def test_assumption_needs_contrary():
    with pytest.raises(InvalidFramework):
        AbaFramework([], [S("a")], {})


def test_text_round_trip_is_canonical():
    text = to_text(EXAMPLE)
    again = from_text(text)
    assert again == EXAMPLE
    assert to_text(again) == text


def test_bad_text_reports_line():
    with pytest.raises(SchemaError) as err:
        from_text("p <- a\nwhat is this\n")
    assert err.value.line == 2


def test_negated_sentences_parse():
    s = S("-dEdge(ic,50,1)")
    assert s.negated and s.args == ("ic", "50", "1")
    assert s.negate() == atom("dEdge", "ic", 50, 1)
    assert str(s) == "-dEdge(ic,50,1)"


@given(aba_frameworks())
def test_admissible_sets_match_brute_force(af):
    brute = oracles.BruteAba(af)
    assert set(admissible_sets(af)) == brute.admissible_sets()


@given(aba_frameworks())
def test_set_checks_match_brute_force(af):
    brute = oracles.BruteAba(af)
    for s in brute.attacked:
        assert is_admissible_assumption_set(af, s) == brute.admissible(s)


@given(aba_frameworks())
def test_argument_admissibility_matches_brute_force(af):
    brute = oracles.BruteAba(af)
    for arg in af.arguments:
        found = is_admissible_argument(af, arg)
        assert (found is not None) == brute.argument_admissible(arg.claim, arg.support)
        if found is not None:
            assert arg.support <= found and brute.admissible(found)


@given(aba_frameworks())
def test_arguments_are_minimal_derivations(af):
    for arg in af.arguments:
        assert arg.claim in oracles.closure(af, arg.support)
