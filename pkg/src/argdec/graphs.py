"""Decision graphs: tagged, possibly defeasible edges from decisions through
intermediate nodes to goals, with a Horn belief base that can block
defeasible edges."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .aba import AbaFramework, Sentence, atom, parse_sentence
from .decision import (
    D,
    PS,
    SD,
    WD,
    Adf,
    Criterion,
    GoalSetPreference,
    Pdf,
    check_identifier,
    validate_adf,
)
from .errors import (
    CriterionMismatch,
    DuplicateId,
    EmptyDecisions,
    EmptyGoals,
    InvalidGraph,
    UnknownNode,
)
from .mappings import (
    MappedFramework,
    Parts,
    add_dominant,
    add_preferred_set,
    add_strongly_dominant,
    add_weakly_dominant,
)


@dataclass(frozen=True, order=True)
class Edge:
    source: str
    target: str
    tag: int = 1
    defeasible: bool = False

    @property
    def pair(self) -> tuple[str, str]:
        return (self.source, self.target)

    def blocker(self) -> Sentence:
        """The belief-base atom whose entailment blocks this edge."""
        return atom("dEdge", self.source, self.target, self.tag).negate()


@dataclass(frozen=True)
class Implication:
    body: tuple[Sentence, ...]
    head: Sentence

    def __str__(self):
        return f"{' & '.join(map(str, self.body))} -> {self.head}".lstrip()


def implication(body: Iterable[str | Sentence], head: str | Sentence) -> Implication:
    conv = lambda s: parse_sentence(s) if isinstance(s, str) else s  # noqa: E731
    return Implication(tuple(conv(b) for b in body), conv(head))


@dataclass(frozen=True)
class BeliefBase:
    implications: tuple[Implication, ...] = ()

    def consequences(self) -> frozenset[Sentence]:
        return forward_chain(self)


def forward_chain(bb: BeliefBase) -> frozenset[Sentence]:
    known: set[Sentence] = set()
    pending = list(bb.implications)
    changed = True
    while changed:
        changed = False
        rest = []
        for imp in pending:
            if all(b in known for b in imp.body):
                if imp.head not in known:
                    known.add(imp.head)
                changed = True
            else:
                rest.append(imp)
        pending = rest
    return frozenset(known)


def mp_entails(bb: BeliefBase, fact: Sentence | str) -> bool:
    fact = parse_sentence(fact) if isinstance(fact, str) else fact
    return fact in forward_chain(bb)


@dataclass(frozen=True)
class Dg:
    decisions: tuple[str, ...]
    intermediates: tuple[str, ...]
    goals: tuple[str, ...]
    edges: tuple[Edge, ...]
    belief_base: BeliefBase = field(default_factory=BeliefBase)

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))
        _validate(self)

    @property
    def nodes(self) -> tuple[str, ...]:
        return self.decisions + self.intermediates + self.goals

    def incoming(self, n: str) -> list[Edge]:
        return [e for e in self.edges if e.target == n]

    def outgoing(self, n: str) -> list[Edge]:
        return [e for e in self.edges if e.source == n]


def _validate(dg: Dg) -> None:
    if not dg.decisions:
        raise EmptyDecisions("a decision graph needs at least one decision node")
    if not dg.goals:
        raise EmptyGoals("a decision graph needs at least one goal node")
    seen: set[str] = set()
    for n in dg.nodes:
        check_identifier(n, "node")
        if n in seen:
            raise DuplicateId(f"node {n!r} declared twice")
        seen.add(n)
    decisions, goals = set(dg.decisions), set(dg.goals)
    pairs = set()
    for e in dg.edges:
        for n in e.pair:
            if n not in seen:
                raise UnknownNode(n)
        if e.source in goals:
            raise InvalidGraph(f"edge {e.pair} leaves a goal node")
        if e.target in decisions:
            raise InvalidGraph(f"edge {e.pair} enters a decision node")
        if not isinstance(e.tag, int) or e.tag < 1:
            raise InvalidGraph(f"edge {e.pair} has tag {e.tag!r}; tags are positive integers")
        if e.pair in pairs:
            raise InvalidGraph(f"more than one edge from {e.source} to {e.target}")
        pairs.add(e.pair)
    # a decision can only support a node on its own: the rule reach(d,n) <- edge(d,n,t)
    # ignores the other members of a tag group, while reachability from {d} can
    # never satisfy a group that also needs other nodes
    for e in dg.edges:
        if e.source in decisions:
            group = [x for x in dg.edges if x.target == e.target and x.tag == e.tag]
            if len(group) > 1:
                raise InvalidGraph(
                    f"edge {e.pair} shares tag {e.tag} into {e.target} with other edges; "
                    "edges leaving a decision must be alone in their tag group")
    order = _topological(dg)
    if order is None:
        raise InvalidGraph("the decision graph has a cycle")


def _topological(dg: Dg) -> list[str] | None:
    indeg = {n: 0 for n in dg.nodes}
    for e in dg.edges:
        indeg[e.target] += 1
    ready = [n for n in dg.nodes if indeg[n] == 0]
    out = []
    while ready:
        n = ready.pop()
        out.append(n)
        for e in dg.outgoing(n):
            indeg[e.target] -= 1
            if indeg[e.target] == 0:
                ready.append(e.target)
    return out if len(out) == len(dg.nodes) else None


def make_dg(decisions, intermediates, goals, edges, implications=()) -> Dg:
    es = [e if isinstance(e, Edge) else Edge(*e) for e in edges]
    imps = [i if isinstance(i, Implication) else implication(*i) for i in implications]
    return Dg(tuple(decisions), tuple(intermediates), tuple(goals), tuple(es), BeliefBase(tuple(imps)))


def blocked_edges(dg: Dg) -> frozenset[Edge]:
    entailed = forward_chain(dg.belief_base)
    return frozenset(e for e in dg.edges if e.defeasible and e.blocker() in entailed)


def _tag_groups(dg: Dg, blocked) -> dict[str, list[frozenset[str]]]:
    groups: dict[str, dict[int, set[str]]] = {}
    for e in dg.edges:
        if e not in blocked:
            groups.setdefault(e.target, {}).setdefault(e.tag, set()).add(e.source)
    return {n: [frozenset(s) for _, s in sorted(g.items())] for n, g in groups.items()}


def reachable_set(dg: Dg, sources: Iterable[str]) -> frozenset[str]:
    """Nodes reachable from the node set ``sources``.

    A node is reachable when the unblocked edges of some tag entering it
    come exactly from ``sources``, or all come from already reachable nodes.
    Members of ``sources`` are not reachable from it by default.
    """
    sources = frozenset(sources)
    for n in sources:
        if n not in dg.nodes:
            raise UnknownNode(n)
    groups = _tag_groups(dg, blocked_edges(dg))
    reached: set[str] = set()
    changed = True
    while changed:
        changed = False
        for n, gs in groups.items():
            if n in reached:
                continue
            if any(g == sources or g <= reached for g in gs):
                reached.add(n)
                changed = True
    return frozenset(reached)


def reachable(dg: Dg, sources: Iterable[str], n: str) -> bool:
    if n not in dg.nodes:
        raise UnknownNode(n)
    return n in reachable_set(dg, sources)


def meets_dg(dg: Dg, d: str, g: str) -> bool:
    if d not in dg.decisions:
        raise UnknownNode(d)
    if g not in dg.goals:
        raise UnknownNode(g)
    return reachable(dg, {d}, g)


def dg_to_adf(dg: Dg) -> Adf:
    gamma = {}
    for d in dg.decisions:
        reached = reachable_set(dg, {d})
        gamma[d] = [g for g in dg.goals if g in reached]
    return validate_adf(dg.decisions, dg.goals, gamma)


def adf_to_dg(adf: Adf) -> Dg:
    """Goal g gets one edge per decision meeting it, each with its own tag,
    so every decision supports g on its own."""
    edges = []
    for g in adf.goals:
        meeting = [d for d in adf.decisions if g in adf.gamma[d]]
        edges += [Edge(d, g, tag) for tag, d in enumerate(meeting, 1)]
    return Dg(adf.decisions, (), adf.goals, tuple(edges))


@dataclass(frozen=True)
class Pdg:
    dg: Dg
    preference: GoalSetPreference

    def __post_init__(self):
        goals = set(self.dg.goals)
        for s in self.preference.members():
            if not s <= goals:
                raise UnknownNode(f"preference mentions non-goal nodes {sorted(s - goals)}")

    @property
    def decisions(self):
        return self.dg.decisions


def pdg_to_pdf(pdg: Pdg) -> Pdf:
    return Pdf(dg_to_adf(pdg.dg), pdg.preference)


# ABA encoding ---------------------------------------------------------------

def _descendants(dg: Dg, n: str) -> set[str]:
    out: set[str] = set()
    stack = [n]
    while stack:
        for e in dg.outgoing(stack.pop()):
            if e.target not in out:
                out.add(e.target)
                stack.append(e.target)
    return out


def add_dg_core(parts: Parts, dg: Dg) -> None:
    decisions = set(dg.decisions)
    # a direct defeasible edge may be blocked, so it cannot stand in for a chain
    strict_pairs = {e.pair for e in dg.edges if not e.defeasible}

    def edge_atom(e: Edge) -> Sentence:
        return atom("edge", e.source, e.target, e.tag)

    for e in dg.edges:
        if e.defeasible:
            d_edge = atom("dEdge", e.source, e.target, e.tag)
            parts.assume(d_edge, d_edge.negate())
            parts.rule(edge_atom(e), d_edge)
        else:
            parts.rule(edge_atom(e))
        parts.rule(atom("reach", e.source, e.target), edge_atom(e))

    for imp in dg.belief_base.implications:
        parts.rule(imp.head, *imp.body)

    # chained reachability, grounded only where reach(n1,n3) can be derived
    for n1 in dg.decisions:
        for n3 in sorted(_descendants(dg, n1) - decisions):
            for e in dg.outgoing(n3):
                n2 = e.target
                if n2 == n1 or (n1, n2) in strict_pairs:
                    continue
                sib = atom("unreachableSib", n3, n2, e.tag, n1)
                parts.rule(atom("reach", n1, n2), atom("reach", n1, n3), edge_atom(e), sib.negate())
                parts.assume(sib.negate(), sib)
                for other in dg.incoming(n2):
                    if other.tag == e.tag and other.source != n3:
                        reach_other = atom("reach", n1, other.source)
                        parts.rule(sib, edge_atom(other), reach_other.negate())
                        parts.assume(reach_other.negate(), reach_other)

    for d in dg.decisions:
        for g in dg.goals:
            parts.rule(atom("met", d, g), atom("reach", d, g))
            parts.assume(atom("notMet", d, g), atom("met", d, g))


def core_dg_aba(dg: Dg) -> AbaFramework:
    parts = Parts()
    add_dg_core(parts, dg)
    return parts.build()


def criterion_aba_dg(dg: Dg, criterion: Criterion) -> MappedFramework:
    if criterion is PS:
        raise CriterionMismatch("the preferred-set criterion needs a Pdg; use preferred_set_aba_pdg")
    parts = Parts()
    add_dg_core(parts, dg)
    add = {SD: add_strongly_dominant, D: add_dominant, WD: add_weakly_dominant}[criterion]
    add(parts, dg.decisions, dg.goals)
    return MappedFramework(parts.build(), criterion, dg.decisions)


def preferred_set_aba_pdg(pdg: Pdg, weak_dominance_guard: bool = True) -> MappedFramework:
    parts = Parts()
    add_dg_core(parts, pdg.dg)
    add_preferred_set(parts, pdg.dg.decisions, pdg.dg.goals, pdg.preference,
                      pdg.preference.members(), weak_dominance_guard)
    return MappedFramework(parts.build(), PS, pdg.dg.decisions)
