"""Encodings of decision criteria as flat ABA frameworks.

A decision satisfies a criterion exactly when its query argument (for
instance ``{sDom(d)} |- sDom(d)``) is admissible in the compiled framework.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .aba import AbaFramework, Argument, Rule, Sentence, atom
from .decision import D, PS, SD, WD, Adf, Criterion, Pdf, comparable_goal_set, sort_goal_sets
from .errors import CriterionMismatch

VOCABULARY = frozenset({
    "met", "notMet", "sDom", "notSDom", "dom", "notDom", "noOthers", "wDom", "notWDom",
    "more", "notMore", "pS", "notPS", "metSet", "notMetSet", "better", "notBetter", "pfr",
})

QUERY_FUNCTOR = {SD: "sDom", D: "dom", WD: "wDom", PS: "pS"}


def goal_set_name(goals: Iterable[str]) -> str:
    """Term naming a set of goals: sorted members joined by '+', '{}' if empty."""
    members = sorted(goals)
    return "+".join(members) if members else "{}"


def goal_set_from_name(name: str) -> frozenset[str]:
    return frozenset() if name == "{}" else frozenset(name.split("+"))


class Parts:
    """Mutable accumulator of rules, assumptions and contraries."""

    def __init__(self):
        self.rules: set[Rule] = set()
        self.assumptions: set[Sentence] = set()
        self.contrary: dict[Sentence, set[Sentence]] = {}

    def rule(self, head: Sentence, *body: Sentence) -> None:
        self.rules.add(Rule(head, tuple(body)))

    def assume(self, a: Sentence, *contraries: Sentence) -> None:
        self.assumptions.add(a)
        self.contrary.setdefault(a, set()).update(contraries)

    def build(self) -> AbaFramework:
        return AbaFramework(self.rules, self.assumptions, self.contrary)


@dataclass(frozen=True)
class MappedFramework:
    framework: AbaFramework
    criterion: Criterion
    decisions: tuple[str, ...]

    def query_claim(self, d: str) -> Sentence:
        return atom(QUERY_FUNCTOR[self.criterion], d)

    def query(self, d: str) -> Argument:
        claim = self.query_claim(d)
        return self.framework.argument(claim, [claim])

    @property
    def query_argument_for(self) -> Mapping[str, Argument]:
        return {d: self.query(d) for d in self.decisions}


def _pairs(decisions):
    return [(d, o) for d in decisions for o in decisions if d != o]


def add_core(parts: Parts, adf: Adf) -> None:
    for d in adf.decisions:
        for g in adf.goals:
            if g in adf.gamma[d]:
                parts.rule(atom("met", d, g))
            parts.assume(atom("notMet", d, g), atom("met", d, g))


def add_strongly_dominant(parts: Parts, decisions, goals) -> None:
    for d in decisions:
        for g in goals:
            parts.rule(atom("notSDom", d), atom("notMet", d, g))
        parts.assume(atom("sDom", d), atom("notSDom", d))


def add_dominant(parts: Parts, decisions, goals) -> None:
    for d in decisions:
        for g in goals:
            parts.rule(atom("notDom", d), atom("notMet", d, g))
            others = [atom("met", o, g) for o in decisions if o != d]
            # with no rival the contrary set would be empty; an underivable
            # negated met sentence keeps the contrary map total
            parts.assume(atom("noOthers", d, g), *(others or [atom("met", d, g).negate()]))
            parts.contrary.setdefault(atom("notMet", d, g), set()).add(atom("noOthers", d, g))
        parts.assume(atom("dom", d), atom("notDom", d))


def _add_goal_comparison(parts: Parts, decisions, goals, head: str) -> None:
    for d, o in _pairs(decisions):
        for g in goals:
            parts.rule(atom(head, d), atom("met", o, g), atom("notMet", d, g), atom("notMore", d, o))
            parts.rule(atom("more", d, o), atom("met", d, g), atom("notMet", o, g))
        parts.assume(atom("notMore", d, o), atom("more", d, o))


def add_weakly_dominant(parts: Parts, decisions, goals) -> None:
    _add_goal_comparison(parts, decisions, goals, "notWDom")
    for d in decisions:
        parts.assume(atom("wDom", d), atom("notWDom", d))


def add_preferred_set(parts: Parts, decisions, goals, pdf_preference, cg,
                      weak_dominance_guard: bool = True) -> None:
    sets = sort_goal_sets(cg)
    names = {s: goal_set_name(s) for s in sets}
    for t in sets:
        for s in sets:
            if pdf_preference.prefers(t, s):
                parts.rule(atom("pfr", names[t], names[s]))
    for d in decisions:
        for s in sets:
            for g in sorted(s):
                parts.rule(atom("notMetSet", d, names[s]), atom("notMet", d, g))
            parts.assume(atom("metSet", d, names[s]), atom("notMetSet", d, names[s]))
        parts.assume(atom("pS", d), atom("notPS", d))
    for d, o in _pairs(decisions):
        for s in sets:
            for t in sets:
                if t != s:
                    parts.rule(atom("better", d, o, names[s]), atom("metSet", d, names[t]),
                               atom("notMetSet", o, names[t]), atom("pfr", names[t], names[s]))
            parts.rule(atom("notPS", d), atom("metSet", o, names[s]),
                       atom("notMetSet", d, names[s]), atom("notBetter", d, o, names[s]))
            parts.assume(atom("notBetter", d, o, names[s]), atom("better", d, o, names[s]))
    if weak_dominance_guard:
        _add_goal_comparison(parts, decisions, goals, "notWDom")
        for d in decisions:
            parts.rule(atom("notPS", d), atom("notWDom", d))


def core_adf_aba(adf: Adf) -> AbaFramework:
    parts = Parts()
    add_core(parts, adf)
    return parts.build()


def _mapped(adf: Adf, criterion: Criterion, add) -> MappedFramework:
    parts = Parts()
    add_core(parts, adf)
    add(parts)
    return MappedFramework(parts.build(), criterion, adf.decisions)


def strongly_dominant_aba(adf: Adf) -> MappedFramework:
    return _mapped(adf, SD, lambda p: add_strongly_dominant(p, adf.decisions, adf.goals))


def dominant_aba(adf: Adf) -> MappedFramework:
    return _mapped(adf, D, lambda p: add_dominant(p, adf.decisions, adf.goals))


def weakly_dominant_aba(adf: Adf) -> MappedFramework:
    return _mapped(adf, WD, lambda p: add_weakly_dominant(p, adf.decisions, adf.goals))


def preferred_set_aba(pdf: Pdf, weak_dominance_guard: bool = True) -> MappedFramework:
    """``weak_dominance_guard=False`` gives the bare comparable-set encoding,
    which also admits strictly dominated decisions whose dominator's extra
    goals lie outside every comparable set."""
    adf = pdf.adf
    return _mapped(adf, PS, lambda p: add_preferred_set(
        p, adf.decisions, adf.goals, pdf.preference, comparable_goal_set(pdf), weak_dominance_guard))


def criterion_aba(context: Adf | Pdf, criterion: Criterion) -> MappedFramework:
    if criterion is PS:
        if not isinstance(context, Pdf):
            raise CriterionMismatch("the preferred-set criterion needs a Pdf")
        return preferred_set_aba(context)
    adf = context.adf if isinstance(context, Pdf) else context
    return {SD: strongly_dominant_aba, D: dominant_aba, WD: weakly_dominant_aba}[criterion](adf)
