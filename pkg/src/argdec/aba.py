"""Flat assumption-based argumentation: arguments, attacks, admissibility,
and a canonical text format."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Mapping

from . import _kernel
from .errors import CyclicRuleDependency, InvalidFramework, NotFlat, SchemaError


@dataclass(frozen=True, order=True)
class Sentence:
    functor: str
    args: tuple[str, ...] = ()
    negated: bool = False

    def __str__(self):
        core = f"{self.functor}({','.join(self.args)})" if self.args else self.functor
        return "-" + core if self.negated else core

    def negate(self) -> "Sentence":
        return Sentence(self.functor, self.args, not self.negated)


def atom(functor: str, *args) -> Sentence:
    return Sentence(functor, tuple(str(a) for a in args))


_SENTENCE = re.compile(r"^\s*([-¬~]?)\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\((.*)\))?\s*$")


def parse_sentence(text: str) -> Sentence:
    m = _SENTENCE.match(text)
    if not m:
        raise ValueError(f"not a sentence: {text!r}")
    neg, functor, inner = m.groups()
    args: tuple[str, ...] = ()
    if inner is not None:
        args = tuple(a.strip() for a in inner.split(","))
        if any(not a or re.search(r"[\s()]", a) for a in args):
            raise ValueError(f"bad argument list in {text!r}")
    return Sentence(functor, args, bool(neg))


@dataclass(frozen=True, order=True)
class Rule:
    head: Sentence
    body: tuple[Sentence, ...] = ()

    def __str__(self):
        return f"{self.head} <- {', '.join(map(str, self.body))}".rstrip()


@dataclass(frozen=True)
class Derivation:
    """One deduction step; a leaf with ``rule is None`` is an assumption."""

    sentence: Sentence
    rule: Rule | None
    children: tuple["Derivation", ...] = ()


@dataclass(frozen=True)
class Argument:
    claim: Sentence
    support: frozenset[Sentence]
    derivation: Derivation | None = field(default=None, compare=False, hash=False, repr=False)

    def sort_key(self):
        return (self.claim, sorted(self.support))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return "{" + ",".join(map(str, sorted(self.support))) + "} |- " + str(self.claim)


class AbaFramework:
    """A flat ABA framework. Immutable once built; analyses are cached."""

    def __init__(self, rules: Iterable[Rule], assumptions: Iterable[Sentence],
                 contrary: Mapping[Sentence, Iterable[Sentence]]):
        self.rules = frozenset(rules)
        self.assumptions = frozenset(assumptions)
        self.contrary = {a: frozenset(cs) for a, cs in contrary.items()}
        for a in self.assumptions:
            if not self.contrary.get(a):
                raise InvalidFramework(f"assumption {a} has no contrary")
        extra = set(self.contrary) - self.assumptions
        if extra:
            raise InvalidFramework(f"contraries given for non-assumptions: {sorted(map(str, extra))}")
        heads = {r.head for r in self.rules}
        if heads & self.assumptions:
            bad = sorted(map(str, heads & self.assumptions))
            raise NotFlat(f"assumptions used as rule heads: {bad}")

    def __eq__(self, other):
        return (isinstance(other, AbaFramework) and self.rules == other.rules
                and self.assumptions == other.assumptions and self.contrary == other.contrary)

    def __hash__(self):
        return hash((self.rules, self.assumptions))

    def __repr__(self):
        return f"AbaFramework({len(self.rules)} rules, {len(self.assumptions)} assumptions)"

    @cached_property
    def sentences(self) -> frozenset[Sentence]:
        out = set(self.assumptions)
        for r in self.rules:
            out.add(r.head)
            out.update(r.body)
        for cs in self.contrary.values():
            out.update(cs)
        return frozenset(out)

    @cached_property
    def _rules_by_head(self) -> dict[Sentence, list[Rule]]:
        by_head: dict[Sentence, list[Rule]] = {}
        for r in sorted(self.rules):
            by_head.setdefault(r.head, []).append(r)
        return by_head

    def check_acyclic(self) -> None:
        by_head = self._rules_by_head
        state: dict[Sentence, int] = {}
        for start in sorted(by_head):
            if start in state:
                continue
            stack = [(start, iter(b for r in by_head[start] for b in r.body))]
            state[start] = 1
            while stack:
                node, it = stack[-1]
                nxt = next(it, None)
                if nxt is None:
                    state[node] = 2
                    stack.pop()
                    continue
                mark = state.get(nxt)
                if mark == 1:
                    raise CyclicRuleDependency(f"rules for {nxt} depend on themselves")
                if mark is None:
                    state[nxt] = 1
                    stack.append((nxt, iter(b for r in by_head.get(nxt, ()) for b in r.body)))

    @cached_property
    def _derivations(self) -> dict[Sentence, dict[frozenset, Derivation]]:
        self.check_acyclic()
        memo: dict[Sentence, dict[frozenset, Derivation]] = {}

        def visit(s: Sentence) -> dict[frozenset, Derivation]:
            if s in memo:
                return memo[s]
            found: dict[frozenset, Derivation] = {}
            if s in self.assumptions:
                found[frozenset([s])] = Derivation(s, None)
            for r in self._rules_by_head.get(s, ()):
                options = [list(visit(b).items()) for b in r.body]
                for combo in product(*options):
                    support = frozenset().union(*(sup for sup, _ in combo))
                    if support not in found:
                        found[support] = Derivation(s, r, tuple(der for _, der in combo))
            memo[s] = found
            return found

        for s in sorted(self.sentences):
            visit(s)
        return memo

    @cached_property
    def arguments(self) -> tuple[Argument, ...]:
        out = [Argument(s, sup, der)
               for s, table in self._derivations.items() for sup, der in table.items()]
        return tuple(sorted(out))

    def arguments_for(self, claim: Sentence) -> list[Argument]:
        table = self._derivations.get(claim, {})
        return sorted(Argument(claim, sup, der) for sup, der in table.items())

    def argument(self, claim: Sentence | str, support: Iterable[Sentence | str] = ()) -> Argument:
        """Look up an argument by claim and support."""
        claim = parse_sentence(claim) if isinstance(claim, str) else claim
        sup = frozenset(parse_sentence(s) if isinstance(s, str) else s for s in support)
        der = self._derivations.get(claim, {}).get(sup)
        if der is None:
            raise KeyError(f"no argument {{{', '.join(sorted(map(str, sup)))}}} |- {claim}")
        return Argument(claim, sup, der)

    @cached_property
    def _attackers_of_assumption(self) -> dict[Sentence, tuple[Argument, ...]]:
        by_claim: dict[Sentence, list[Argument]] = {}
        for arg in self.arguments:
            by_claim.setdefault(arg.claim, []).append(arg)
        return {a: tuple(sorted(x for c in cs for x in by_claim.get(c, ())))
                for a, cs in self.contrary.items()}

    def attackers_of_assumption(self, a: Sentence) -> tuple[Argument, ...]:
        return self._attackers_of_assumption.get(a, ())

    def attackers(self, arg: Argument) -> list[Argument]:
        seen: dict[Argument, None] = {}
        for a in sorted(arg.support):
            for b in self._attackers_of_assumption.get(a, ()):
                seen.setdefault(b, None)
        return sorted(seen)

    def attacked_assumptions(self, attacker: Argument, target: Argument) -> frozenset[Sentence]:
        return frozenset(a for a in target.support if attacker.claim in self.contrary[a])

    def to_text(self) -> str:
        return to_text(self)


def all_arguments(af: AbaFramework) -> frozenset[Argument]:
    return frozenset(af.arguments)


def attacks(af: AbaFramework, a: Argument, b: Argument) -> bool:
    return any(a.claim in af.contrary[x] for x in b.support)


def set_attacks(af: AbaFramework, s1: Iterable[Sentence], s2: Iterable[Sentence]) -> bool:
    s1, s2 = frozenset(s1), frozenset(s2)
    for a in s2:
        for arg in af.attackers_of_assumption(a):
            if arg.support <= s1:
                return True
    return False


def is_admissible_assumption_set(af: AbaFramework, s: Iterable[Sentence]) -> bool:
    s = frozenset(s)
    if set_attacks(af, s, s):
        return False
    for a in s:
        for b in af.attackers_of_assumption(a):
            if not set_attacks(af, s, b.support):
                return False
    return True


def attack_neighbourhood(af: AbaFramework, start: Iterable[Sentence]) -> frozenset[Sentence]:
    """Assumptions that a defence of ``start`` could ever need: closed under
    taking the supports of counter-attackers of every attacker."""
    seen = set(start)
    frontier = list(seen)
    while frontier:
        a = frontier.pop()
        for b in af.attackers_of_assumption(a):
            for x in b.support:
                for c in af.attackers_of_assumption(x):
                    for y in c.support:
                        if y not in seen:
                            seen.add(y)
                            frontier.append(y)
    return frozenset(seen)


class _Encoded:
    """Arguments relevant to a closed assumption universe, as bitmasks.

    Bits cover the universe plus any extra assumptions used by attackers of
    the universe; each argument becomes (support mask, attacked mask).
    """

    def __init__(self, af: AbaFramework, universe: frozenset[Sentence]):
        self.order = sorted(universe)
        opponents = {b for a in universe for b in af.attackers_of_assumption(a)}
        self.order += sorted({x for b in opponents for x in b.support} - universe)
        self.bit = {a: 1 << i for i, a in enumerate(self.order)}
        targets_of: dict[Sentence, int] = {}
        for x, b in self.bit.items():
            for c in af.contrary[x]:
                targets_of[c] = targets_of.get(c, 0) | b
        relevant = {arg for arg in af.arguments if arg.support <= universe} | opponents
        self.sup, self.att = [], []
        for arg in sorted(relevant):
            hit = targets_of.get(arg.claim, 0)
            if hit:
                self.sup.append(self.mask(arg.support))
                self.att.append(hit)
        self.size = len(self.order)

    def mask(self, assumptions) -> int:
        m = 0
        for a in assumptions:
            m |= self.bit[a]
        return m

    def decode(self, mask: int) -> frozenset[Sentence]:
        return frozenset(a for a in self.order if mask & self.bit[a])


def find_admissible_superset(af: AbaFramework, start: Iterable[Sentence]) -> frozenset[Sentence] | None:
    start = frozenset(start)
    universe = attack_neighbourhood(af, start)
    enc = _Encoded(af, universe)
    found = _kernel.find_admissible(enc.sup, enc.att, enc.mask(start), enc.size)
    return None if found < 0 else enc.decode(found)


def is_admissible_argument(af: AbaFramework, arg: Argument) -> frozenset[Sentence] | None:
    """An admissible assumption set containing the support of ``arg``, or None."""
    return find_admissible_superset(af, arg.support)


def admissible_sets(af: AbaFramework) -> list[frozenset[Sentence]]:
    """Every admissible assumption set, by exhaustive enumeration."""
    enc = _Encoded(af, af.assumptions)
    return [enc.decode(m) for m in _kernel.enumerate_admissible(enc.sup, enc.att, enc.size)]


# canonical text -------------------------------------------------------------

def to_text(af: AbaFramework) -> str:
    lines = [str(r) for r in sorted(af.rules)]
    lines += [f"assumption: {a}" for a in sorted(af.assumptions)]
    lines += [f"contrary: {a} -> {c}" for a in sorted(af.assumptions) for c in sorted(af.contrary[a])]
    return "\n".join(lines) + "\n"


_TERM_SPLIT = re.compile(r",(?![^()]*\))")


def from_text(text: str) -> AbaFramework:
    rules, assumptions, contrary = [], [], {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            if line.startswith("assumption:"):
                assumptions.append(parse_sentence(line.split(":", 1)[1]))
            elif line.startswith("contrary:"):
                left, right = line.split(":", 1)[1].split("->")
                contrary.setdefault(parse_sentence(left), []).append(parse_sentence(right))
            elif "<-" in line:
                head, body = line.split("<-", 1)
                parts = [p for p in _TERM_SPLIT.split(body) if p.strip()]
                rules.append(Rule(parse_sentence(head), tuple(parse_sentence(p) for p in parts)))
            else:
                raise ValueError("expected a rule, assumption or contrary")
        except ValueError as exc:
            raise SchemaError(str(exc), line=lineno) from None
    return AbaFramework(rules, assumptions, contrary)
