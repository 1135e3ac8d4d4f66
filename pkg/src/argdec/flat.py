"""Flat explanations: input-level reasons why a decision does or does not
satisfy a criterion."""

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar

from .decision import (
    D,
    PS,
    SD,
    WD,
    Adf,
    Criterion,
    Pdf,
    comparable_goal_set,
    is_dominant,
    is_preferred_set,
    is_strongly_dominant,
    is_weakly_dominant,
    sort_goal_sets,
)
from .errors import CriterionMismatch


def _goals(xs) -> frozenset[str]:
    return frozenset(xs)


@dataclass(frozen=True)
class SDPos:
    goals: frozenset[str]
    positive: ClassVar[bool] = True
    criterion: ClassVar[Criterion] = SD


@dataclass(frozen=True)
class SDNeg:
    goals: frozenset[str]
    positive: ClassVar[bool] = False
    criterion: ClassVar[Criterion] = SD


@dataclass(frozen=True)
class DPos:
    met: frozenset[str]
    unmet: frozenset[str]
    positive: ClassVar[bool] = True
    criterion: ClassVar[Criterion] = D


@dataclass(frozen=True)
class DNeg:
    # (rival decision, goal the rival meets and d does not)
    pairs: frozenset[tuple[str, str]]
    positive: ClassVar[bool] = False
    criterion: ClassVar[Criterion] = D


@dataclass(frozen=True)
class WDPos:
    core: frozenset[str]
    # (goal met by d, rival that misses it)
    witnesses: frozenset[tuple[str, str]]
    positive: ClassVar[bool] = True
    criterion: ClassVar[Criterion] = WD


@dataclass(frozen=True)
class WDNeg:
    decisions: frozenset[str]
    positive: ClassVar[bool] = False
    criterion: ClassVar[Criterion] = WD


@dataclass(frozen=True)
class PSPos:
    core: frozenset[str]
    # (comparable goal set met by d, rival that misses it)
    witnesses: frozenset[tuple[frozenset[str], str]]
    positive: ClassVar[bool] = True
    criterion: ClassVar[Criterion] = PS


@dataclass(frozen=True)
class PSNeg:
    decisions: frozenset[str]
    positive: ClassVar[bool] = False
    criterion: ClassVar[Criterion] = PS


FlatExplanation = SDPos | SDNeg | DPos | DNeg | WDPos | WDNeg | PSPos | PSNeg


def _goal_key(s):
    return (len(s), sorted(s))


def _rivals(adf: Adf, d: str):
    return [o for o in adf.decisions if o != d]


def strictly_dominating_rivals(adf: Adf, d: str) -> frozenset[str]:
    mine = adf.met(d)
    return frozenset(o for o in _rivals(adf, d) if mine < adf.gamma[o])


def distinguishing_sets(pdf: Pdf, d: str, rival: str, cg=None) -> list[frozenset[str]]:
    """Comparable goal sets that ``rival`` meets and ``d`` does not."""
    cg = comparable_goal_set(pdf) if cg is None else cg
    mine, theirs = pdf.adf.gamma[d], pdf.adf.gamma[rival]
    return sort_goal_sets(s for s in cg if s <= theirs and not s <= mine)


def answers(pdf: Pdf, d: str, rival: str, s, cg=None) -> list[frozenset[str]]:
    """Comparable sets met by ``d``, missed by ``rival``, preferred to ``s``."""
    cg = comparable_goal_set(pdf) if cg is None else cg
    mine, theirs = pdf.adf.gamma[d], pdf.adf.gamma[rival]
    return sort_goal_sets(
        t for t in cg if t <= mine and not t <= theirs and pdf.preference.prefers(t, s)
    )


def ps_opponents(pdf: Pdf, d: str) -> frozenset[str]:
    """Rivals that strictly dominate ``d`` or meet a comparable set that ``d``
    cannot answer with a more preferred one."""
    adf = pdf.adf
    cg = comparable_goal_set(pdf)
    out = set(strictly_dominating_rivals(adf, d))
    for o in _rivals(adf, d):
        if any(not answers(pdf, d, o, s, cg) for s in distinguishing_sets(pdf, d, o, cg)):
            out.add(o)
    return frozenset(out)


def flat_explain(adf: Adf, d: str, criterion: Criterion) -> FlatExplanation:
    adf.require_decision(d)
    mine = adf.met(d)
    goals = frozenset(adf.goals)
    if criterion is SD:
        if is_strongly_dominant(adf, d):
            return SDPos(goals)
        return SDNeg(goals - mine)
    if criterion is D:
        if is_dominant(adf, d):
            return DPos(mine, goals - mine)
        return DNeg(frozenset((o, g) for o in _rivals(adf, d) for g in adf.gamma[o] - mine))
    if criterion is WD:
        if not is_weakly_dominant(adf, d):
            return WDNeg(strictly_dominating_rivals(adf, d))
        witnesses = set()
        for o in _rivals(adf, d):
            theirs = adf.gamma[o]
            if not theirs <= mine:
                witnesses.add((min(mine - theirs), o))
        return WDPos(mine, frozenset(witnesses))
    raise ValueError("use flat_explain_preferred for the preferred-set criterion")


def flat_explain_preferred(pdf: Pdf, d: str) -> PSPos | PSNeg:
    adf = pdf.adf
    adf.require_decision(d)
    if not is_preferred_set(pdf, d):
        return PSNeg(ps_opponents(pdf, d))
    cg = comparable_goal_set(pdf)
    witnesses = set()
    for o in _rivals(adf, d):
        for s in distinguishing_sets(pdf, d, o, cg):
            options = answers(pdf, d, o, s, cg)
            assert options, "a preferred-set decision answers every distinguishing set"
            witnesses.add((options[0], o))
    return PSPos(adf.met(d), frozenset(witnesses))


def explain(context: Adf | Pdf, d: str, criterion: Criterion) -> FlatExplanation:
    if criterion is PS:
        if not isinstance(context, Pdf):
            raise CriterionMismatch("the preferred-set criterion needs a Pdf")
        return flat_explain_preferred(context, d)
    adf = context.adf if isinstance(context, Pdf) else context
    return flat_explain(adf, d, criterion)


def check_flat_explanation(context: Adf | Pdf, d: str, explanation) -> bool:
    """True iff ``explanation`` is a correct flat explanation for ``d``."""
    pdf = context if isinstance(context, Pdf) else None
    adf = pdf.adf if pdf else context
    if d not in adf.gamma:
        return False
    mine = adf.gamma[d]
    goals = frozenset(adf.goals)
    decisions = set(adf.decisions)
    rivals = _rivals(adf, d)
    e = explanation

    if isinstance(e, SDPos):
        return is_strongly_dominant(adf, d) and e.goals == goals
    if isinstance(e, SDNeg):
        return not is_strongly_dominant(adf, d) and e.goals == goals - mine
    if isinstance(e, DPos):
        if not is_dominant(adf, d) or e.met & e.unmet or e.met | e.unmet != goals:
            return False
        if not e.met <= mine:
            return False
        return all(g not in adf.gamma[o] for g in e.unmet for o in rivals)
    if isinstance(e, DNeg):
        expected = frozenset((o, g) for o in rivals for g in adf.gamma[o] - mine)
        return not is_dominant(adf, d) and e.pairs == expected
    if isinstance(e, WDPos):
        if not is_weakly_dominant(adf, d) or not e.core <= mine:
            return False
        named = set()
        for g, o in e.witnesses:
            if o not in decisions or o == d or g not in mine or g in adf.gamma[o]:
                return False
            named.add(o)
        return all(adf.gamma[o] <= e.core or o in named for o in rivals)
    if isinstance(e, WDNeg):
        return not is_weakly_dominant(adf, d) and e.decisions == strictly_dominating_rivals(adf, d)
    if isinstance(e, (PSPos, PSNeg)):
        if pdf is None:
            return False
        if isinstance(e, PSNeg):
            return not is_preferred_set(pdf, d) and e.decisions == ps_opponents(pdf, d)
        if not is_preferred_set(pdf, d) or not e.core <= mine:
            return False
        cg = comparable_goal_set(pdf)
        for s, o in e.witnesses:
            if o not in decisions or o == d or s not in cg:
                return False
            if not s <= mine or s <= adf.gamma[o]:
                return False
        for o in rivals:
            for s in distinguishing_sets(pdf, d, o, cg):
                if not any(w == o and pdf.preference.prefers(t, s) for t, w in e.witnesses):
                    return False
        return True
    return False


def to_json(e: FlatExplanation) -> dict:
    kind = type(e).__name__
    if isinstance(e, (SDPos, SDNeg)):
        return {"type": kind, "goals": sorted(e.goals)}
    if isinstance(e, DPos):
        return {"type": kind, "met": sorted(e.met), "unmet": sorted(e.unmet)}
    if isinstance(e, DNeg):
        return {"type": kind, "pairs": [{"decision": o, "goal": g} for o, g in sorted(e.pairs)]}
    if isinstance(e, WDPos):
        return {"type": kind, "core": sorted(e.core),
                "witnesses": [{"goal": g, "decision": o} for g, o in sorted(e.witnesses)]}
    if isinstance(e, PSPos):
        ws = sorted(e.witnesses, key=lambda w: (_goal_key(w[0]), w[1]))
        return {"type": kind, "core": sorted(e.core),
                "witnesses": [{"goals": sorted(s), "decision": o} for s, o in ws]}
    return {"type": kind, "decisions": sorted(e.decisions)}


def from_json(data: dict) -> FlatExplanation:
    kind = data["type"]
    if kind in ("SDPos", "SDNeg"):
        return {"SDPos": SDPos, "SDNeg": SDNeg}[kind](_goals(data["goals"]))
    if kind == "DPos":
        return DPos(_goals(data["met"]), _goals(data["unmet"]))
    if kind == "DNeg":
        return DNeg(frozenset((p["decision"], p["goal"]) for p in data["pairs"]))
    if kind == "WDPos":
        return WDPos(_goals(data["core"]),
                     frozenset((w["goal"], w["decision"]) for w in data["witnesses"]))
    if kind == "PSPos":
        return PSPos(_goals(data["core"]),
                     frozenset((frozenset(w["goals"]), w["decision"]) for w in data["witnesses"]))
    if kind in ("WDNeg", "PSNeg"):
        return {"WDNeg": WDNeg, "PSNeg": PSNeg}[kind](frozenset(data["decisions"]))
    raise ValueError(f"unknown explanation type {kind!r}")
