"""Conjunctive screening, Pareto efficiency and lexicographic selection,
with translations to and from decision frameworks."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from .decision import Adf, GoalSetPreference, Pdf, validate_adf
from .errors import SchemaError


@dataclass(frozen=True)
class ConjunctiveFramework:
    """Each alternative carries one attribute value per requirement;
    ``passes(requirement, value)`` says whether the value is acceptable."""

    alternatives: tuple[str, ...]
    requirements: tuple[str, ...]
    attributes: Mapping[str, Mapping[str, object]]
    passes: Callable[[str, object], bool]


def conjunctive_select(cf: ConjunctiveFramework) -> list[str]:
    return [a for a in cf.alternatives
            if all(cf.passes(r, v) for r, v in cf.attributes[a].items())]


def adf_from_conjunctive(cf: ConjunctiveFramework) -> Adf:
    gamma = {a: [r for r in cf.requirements
                 if r not in cf.attributes[a] or cf.passes(r, cf.attributes[a][r])]
             for a in cf.alternatives}
    return validate_adf(cf.alternatives, cf.requirements, gamma)


def conjunctive_from_adf(adf: Adf) -> ConjunctiveFramework:
    attributes = {d: {g: g in adf.gamma[d] for g in adf.goals} for d in adf.decisions}
    return ConjunctiveFramework(adf.decisions, adf.goals, attributes, lambda _r, v: bool(v))


def threshold_framework(alternatives, scores: Mapping[str, Mapping[str, float]],
                        minima: Mapping[str, float]) -> ConjunctiveFramework:
    """Requirements of the form ``score >= minimum``."""
    return ConjunctiveFramework(tuple(alternatives), tuple(minima), scores,
                                lambda r, v: v >= minima[r])


@dataclass(frozen=True)
class ParetoFramework:
    decisions: tuple[str, ...]
    objective: Mapping[str, frozenset[str]]

    @property
    def objective_space(self) -> frozenset[frozenset[str]]:
        return frozenset(self.objective.values())


def pareto_efficient(pf: ParetoFramework) -> list[str]:
    """Decisions whose image is not a strict subset of another image."""
    return [d for d in pf.decisions
            if not any(pf.objective[d] < pf.objective[o] for o in pf.decisions)]


def pareto_front(pf: ParetoFramework) -> set[frozenset[str]]:
    return {pf.objective[d] for d in pareto_efficient(pf)}


def pareto_from_adf(adf: Adf) -> ParetoFramework:
    return ParetoFramework(adf.decisions, dict(adf.gamma))


def adf_from_pareto(pf: ParetoFramework, goals: Iterable[str] | None = None) -> Adf:
    if goals is None:
        goals = sorted(set().union(*pf.objective.values())) if pf.objective else []
    return validate_adf(pf.decisions, goals, {d: pf.objective[d] for d in pf.decisions})


@dataclass(frozen=True)
class LexFramework:
    alternatives: tuple[str, ...]
    attributes: tuple[str, ...]  # most important first
    has: Mapping[str, frozenset[str]]


def lexicographic_select(lf: LexFramework) -> list[str]:
    survivors = list(lf.alternatives)
    for x in lf.attributes:
        if len(survivors) <= 1:
            break
        holders = [a for a in survivors if x in lf.has[a]]
        if holders:
            survivors = holders
    return survivors


def pdf_from_lex(lf: LexFramework) -> Pdf:
    adf = validate_adf(lf.alternatives, lf.attributes, {a: lf.has[a] for a in lf.alternatives})
    ranking = [[x] for x in reversed(lf.attributes)]
    return Pdf(adf, GoalSetPreference.chain(*ranking))


def lex_from_pdf(pdf: Pdf) -> LexFramework:
    """Inverse of pdf_from_lex; the preference must totally order the singletons."""
    members = pdf.preference.members()
    singles = [next(iter(s)) for s in members if len(s) == 1]
    if len(pdf.adf.goals) == 1 and not members:
        singles = list(pdf.adf.goals)  # one goal is trivially totally ordered
    if len(singles) != len(pdf.adf.goals) or any(len(s) != 1 for s in members):
        raise ValueError("preference is not a total order over single goals")
    order = sorted(singles, key=lambda g: -sum(pdf.preference.prefers([g], [h]) for h in singles))
    return LexFramework(pdf.adf.decisions, tuple(order), dict(pdf.adf.gamma))


# decision tables ------------------------------------------------------------

@dataclass(frozen=True)
class DecisionTable:
    alternatives: tuple[str, ...]
    attributes: tuple[str, ...]
    values: Mapping[str, Mapping[str, float]]

    def holds(self, minima: Mapping[str, float] | None = None) -> dict[str, frozenset[str]]:
        """Attributes each alternative has: a 0/1 cell, or value >= minimum."""
        minima = minima or {}
        out = {}
        for a in self.alternatives:
            row = self.values[a]
            out[a] = frozenset(x for x in self.attributes
                               if (row[x] >= minima[x] if x in minima else row[x] == 1))
        return out

    def to_adf(self, minima=None) -> Adf:
        return validate_adf(self.alternatives, self.attributes, self.holds(minima))

    def to_conjunctive(self, minima: Mapping[str, float]) -> ConjunctiveFramework:
        return threshold_framework(self.alternatives, self.values, minima)

    def to_lex(self, minima=None) -> LexFramework:
        return LexFramework(self.alternatives, self.attributes, self.holds(minima))


def read_decision_table(path, minima: Mapping[str, float] | None = None) -> DecisionTable:
    """Header row names the attributes, first column the alternatives.

    Without a minimum for a column its cells must be 0 or 1.
    """
    minima = minima or {}
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise SchemaError("empty table", line=1)
    attributes = tuple(h.strip() for h in rows[0][1:])
    alternatives, values = [], {}
    for lineno, row in enumerate(rows[1:], 2):
        if not any(cell.strip() for cell in row):
            continue
        if len(row) != len(attributes) + 1:
            raise SchemaError(f"expected {len(attributes) + 1} cells, got {len(row)}", line=lineno)
        name = row[0].strip()
        cells = {}
        for col, (x, cell) in enumerate(zip(attributes, row[1:]), 2):
            try:
                v = float(cell)
            except ValueError:
                raise SchemaError(f"cell {cell!r} is not a number", line=lineno, column=col) from None
            if x not in minima and v not in (0, 1):
                raise SchemaError(f"cell {cell!r} must be 0 or 1 (no minimum for {x})",
                                  line=lineno, column=col)
            cells[x] = v
        alternatives.append(name)
        values[name] = cells
    return DecisionTable(tuple(alternatives), attributes, values)
