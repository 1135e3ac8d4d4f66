"""Decision frameworks and the four selection criteria, evaluated directly.

This module never touches argumentation; it is the reference against which
the argumentative encodings are checked.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from itertools import chain
from typing import Iterable, Mapping

from .errors import (
    CriterionMismatch,
    DuplicateId,
    EmptyDecisions,
    EmptyGoals,
    InvalidFramework,
    InvalidPreference,
    UnknownDecision,
    UnknownGoalInGamma,
)

IDENTIFIER = re.compile(r"^[A-Za-z0-9_]+$")


class Criterion(enum.Enum):
    STRONGLY_DOMINANT = "sd"
    DOMINANT = "d"
    WEAKLY_DOMINANT = "wd"
    PREFERRED_SET = "ps"

    @classmethod
    def parse(cls, text: str) -> "Criterion":
        try:
            return cls(text.lower())
        except ValueError:
            raise ValueError(f"unknown criterion {text!r}; expected one of sd, d, wd, ps") from None


SD = Criterion.STRONGLY_DOMINANT
D = Criterion.DOMINANT
WD = Criterion.WEAKLY_DOMINANT
PS = Criterion.PREFERRED_SET


def check_identifier(name: str, what: str = "identifier") -> str:
    if not isinstance(name, str) or not IDENTIFIER.match(name):
        raise InvalidFramework(f"invalid {what} {name!r}: use letters, digits and underscores")
    return name


def _unique(items: Iterable[str], what: str) -> tuple[str, ...]:
    out: list[str] = []
    seen: set[str] = set()
    for item in items:
        check_identifier(item, what)
        if item in seen:
            raise DuplicateId(f"duplicate {what} {item!r}")
        seen.add(item)
        out.append(item)
    return tuple(out)


@dataclass(frozen=True, eq=False)
class Adf:
    """Decisions, goals and the goals each decision meets."""

    decisions: tuple[str, ...]
    goals: tuple[str, ...]
    gamma: Mapping[str, frozenset[str]]

    def met(self, d: str) -> frozenset[str]:
        try:
            return self.gamma[d]
        except KeyError:
            raise UnknownDecision(d) from None

    def meets(self, d: str, g: str) -> bool:
        return g in self.met(d)

    def require_decision(self, d: str) -> None:
        if d not in self.gamma:
            raise UnknownDecision(d)

    def _key(self):
        return (self.decisions, self.goals, tuple(self.gamma[d] for d in self.decisions))

    def __eq__(self, other):
        return isinstance(other, Adf) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        table = ", ".join(f"{d}: {sorted(self.gamma[d])}" for d in self.decisions)
        return f"Adf({table}; goals={list(self.goals)})"


def validate_adf(decisions: Iterable[str], goals: Iterable[str],
                 gamma: Mapping[str, Iterable[str]] | Iterable[tuple[str, str]]) -> Adf:
    """Build an Adf from raw parts.

    ``gamma`` is either a mapping decision -> goals met, or an iterable of
    (decision, goal) table entries whose cell is 1.
    """
    ds = _unique(decisions, "decision")
    gs = _unique(goals, "goal")
    if not ds:
        raise EmptyDecisions("an ADF needs at least one decision")
    if not gs:
        raise EmptyGoals("an ADF needs at least one goal")
    clash = set(ds) & set(gs)
    if clash:
        raise DuplicateId(f"identifiers used as both decision and goal: {sorted(clash)}")
    table: dict[str, set[str]] = {d: set() for d in ds}
    pairs = gamma.items() if isinstance(gamma, Mapping) else None
    if pairs is not None:
        entries = ((d, g) for d, met in pairs for g in met)
    else:
        entries = iter(gamma)
    goal_set = set(gs)
    for d, g in entries:
        if d not in table:
            raise UnknownDecision(d)
        if g not in goal_set:
            raise UnknownGoalInGamma(f"goal {g!r} of decision {d!r} is not declared")
        table[d].add(g)
    return Adf(ds, gs, {d: frozenset(table[d]) for d in ds})


def _goal_set(goals: Iterable[str]) -> frozenset[str]:
    return frozenset(goals)


@dataclass(frozen=True)
class GoalSetPreference:
    """Strict preference between goal sets; ``(a, b)`` means a is preferred to b."""

    pairs: frozenset[tuple[frozenset[str], frozenset[str]]] = frozenset()
    closure: frozenset[tuple[frozenset[str], frozenset[str]]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        pairs = frozenset((_goal_set(a), _goal_set(b)) for a, b in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        for a, b in pairs:
            if a == b:
                raise InvalidPreference(f"goal set {sorted(a)} preferred to itself")
        closure = set(pairs)
        changed = True
        while changed:
            changed = False
            for a, b in list(closure):
                for c, e in list(closure):
                    if b == c and (a, e) not in closure:
                        closure.add((a, e))
                        changed = True
        for a, b in closure:
            if a == b:
                raise InvalidPreference(f"preference cycle through {sorted(a)}")
        object.__setattr__(self, "closure", frozenset(closure))

    @classmethod
    def chain(cls, *sets: Iterable[str]) -> "GoalSetPreference":
        """Chain listed from least to most preferred."""
        ordered = [frozenset(s) for s in sets]
        return cls(frozenset((ordered[i + 1], ordered[i]) for i in range(len(ordered) - 1)))

    def prefers(self, a: Iterable[str], b: Iterable[str]) -> bool:
        return (frozenset(a), frozenset(b)) in self.closure

    def at_least_as_preferred(self, a, b) -> bool:
        return frozenset(a) == frozenset(b) or self.prefers(a, b)

    def members(self) -> frozenset[frozenset[str]]:
        return frozenset(chain.from_iterable(self.pairs))


@dataclass(frozen=True)
class Pdf:
    adf: Adf
    preference: GoalSetPreference

    def __post_init__(self):
        goals = set(self.adf.goals)
        for s in self.preference.members():
            unknown = s - goals
            if unknown:
                raise UnknownGoalInGamma(f"preference mentions undeclared goals {sorted(unknown)}")

    @property
    def decisions(self):
        return self.adf.decisions

    @property
    def goals(self):
        return self.adf.goals


def sort_goal_sets(sets: Iterable[frozenset[str]]) -> list[frozenset[str]]:
    return sorted(sets, key=lambda s: (len(s), sorted(s)))


def comparable_goal_set(pdf: Pdf) -> frozenset[frozenset[str]]:
    """Goal sets taking part in at least one preference pair."""
    return pdf.preference.members()


def _ordered(adf: Adf, chosen: set[str]) -> list[str]:
    return [d for d in adf.decisions if d in chosen]


def is_strongly_dominant(adf: Adf, d: str) -> bool:
    return adf.met(d) == frozenset(adf.goals)


def is_dominant(adf: Adf, d: str) -> bool:
    mine = adf.met(d)
    return all(adf.gamma[o] <= mine for o in adf.decisions if o != d)


def is_weakly_dominant(adf: Adf, d: str) -> bool:
    mine = adf.met(d)
    return not any(mine < adf.gamma[o] for o in adf.decisions if o != d)


_TESTS = {SD: is_strongly_dominant, D: is_dominant, WD: is_weakly_dominant}


def evaluate(adf: Adf, criterion: Criterion) -> list[str]:
    if criterion is PS:
        raise CriterionMismatch("the preferred-set criterion needs a Pdf; use preferred_set_decisions")
    test = _TESTS[criterion]
    return [d for d in adf.decisions if test(adf, d)]


def _beats(pdf: Pdf, cg, winner: str, loser: str) -> bool:
    """True if ``winner`` meets a comparable set that ``loser`` misses and
    ``loser`` cannot answer it with a more preferred set of its own."""
    gw, gl = pdf.adf.gamma[winner], pdf.adf.gamma[loser]
    for s in cg:
        if s <= gw and not s <= gl:
            answered = any(
                pdf.preference.prefers(t, s) and t <= gl and not t <= gw for t in cg
            )
            if not answered:
                return True
    return False


def is_preferred_set(pdf: Pdf, d: str) -> bool:
    adf = pdf.adf
    if not is_weakly_dominant(adf, d):
        return False
    cg = comparable_goal_set(pdf)
    return not any(
        _beats(pdf, cg, o, d) for o in adf.decisions if o != d and is_weakly_dominant(adf, o)
    )


def preferred_set_decisions(pdf: Pdf) -> list[str]:
    return [d for d in pdf.adf.decisions if is_preferred_set(pdf, d)]


def satisfies(context: Adf | Pdf, criterion: Criterion, d: str) -> bool:
    if criterion is PS:
        if not isinstance(context, Pdf):
            raise CriterionMismatch("the preferred-set criterion needs a Pdf")
        context.adf.require_decision(d)
        return is_preferred_set(context, d)
    adf = context.adf if isinstance(context, Pdf) else context
    return _TESTS[criterion](adf, d)


def select(context: Adf | Pdf, criterion: Criterion) -> list[str]:
    if criterion is PS:
        if not isinstance(context, Pdf):
            raise CriterionMismatch("the preferred-set criterion needs a Pdf")
        return preferred_set_decisions(context)
    adf = context.adf if isinstance(context, Pdf) else context
    return evaluate(adf, criterion)
