"""Dialogical explanations: dispute trees for a decision's query argument,
the flat explanations they carry, and text/DOT renderings."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .aba import Sentence, is_admissible_argument
from .decision import D, PS, SD, WD, Adf, Criterion, Pdf
from .disputes import (
    DEFAULT_BUDGET,
    PROPONENT,
    DisputeNode,
    DisputeTree,
    best_effort_tree,
    least_assumption_tree,
)
from .errors import CriterionMismatch, UnknownDecision
from .flat import (
    DNeg,
    DPos,
    FlatExplanation,
    PSNeg,
    PSPos,
    SDNeg,
    SDPos,
    WDNeg,
    WDPos,
)
from .graphs import Dg, Pdg, criterion_aba_dg, dg_to_adf, pdg_to_pdf, preferred_set_aba_pdg
from .mappings import MappedFramework, criterion_aba, goal_set_from_name


class Verdict(enum.Enum):
    SATISFIES = "satisfies"
    VIOLATES = "violates"


@dataclass(frozen=True)
class DialogicalExplanation:
    decision: str
    criterion: Criterion
    verdict: Verdict
    tree: DisputeTree
    source: Adf | Pdf | Dg | Pdg

    @property
    def from_graph(self) -> bool:
        return isinstance(self.source, (Dg, Pdg))

    def to_json(self) -> dict:
        return {"decision": self.decision, "criterion": self.criterion.value,
                "verdict": self.verdict.value, "tree": self.tree.to_json()}


def compile_source(source, criterion: Criterion) -> MappedFramework:
    if isinstance(source, Pdg):
        if criterion is PS:
            return preferred_set_aba_pdg(source)
        return criterion_aba_dg(source.dg, criterion)
    if isinstance(source, Dg):
        return criterion_aba_dg(source, criterion)
    return criterion_aba(source, criterion)


def decision_context(source) -> Adf | Pdf:
    """The decision framework a source denotes, for checking flat explanations."""
    if isinstance(source, Pdg):
        return pdg_to_pdf(source)
    if isinstance(source, Dg):
        return dg_to_adf(source)
    return source


def dialogical_explain(source, criterion: Criterion, d: str,
                       budget: int = DEFAULT_BUDGET) -> DialogicalExplanation:
    if d not in source.decisions:
        raise UnknownDecision(d)
    if criterion is PS and not isinstance(source, (Pdf, Pdg)):
        raise CriterionMismatch("the preferred-set criterion needs preferences over goal sets")
    mapped = compile_source(source, criterion)
    query = mapped.query(d)
    if is_admissible_argument(mapped.framework, query) is not None:
        tree = least_assumption_tree(mapped.framework, query, budget)
        verdict = Verdict.SATISFIES
    else:
        tree = best_effort_tree(mapped.framework, query, budget)
        verdict = Verdict.VIOLATES
    return DialogicalExplanation(d, criterion, verdict, tree, source)


# extraction -------------------------------------------------------------------

def _is(s: Sentence, functor: str, *prefix: str) -> bool:
    return not s.negated and s.functor == functor and s.args[:len(prefix)] == prefix


def _nodes(tree: DisputeTree, label: str, functor: str, *prefix: str) -> list[DisputeNode]:
    return [n for n in tree.nodes() if n.label == label and _is(n.argument.claim, functor, *prefix)]


def _in_support(node: DisputeNode, functor: str, *prefix: str) -> list[Sentence]:
    return [a for a in node.argument.support if _is(a, functor, *prefix)]


def _feeds_opponent_leaf(tree: DisputeTree, node: DisputeNode, leaves) -> bool:
    return any(leaf is node or tree.is_ancestor(node, leaf) for leaf in leaves)


def _top_level_losses(tree: DisputeTree, leaves) -> list[DisputeNode]:
    """Attackers of the query argument that the proponent fails to answer."""
    return [o for o in tree.root.children if _feeds_opponent_leaf(tree, o, leaves)]


def flat_from_tree(expl: DialogicalExplanation) -> FlatExplanation:
    tree, d, c = expl.tree, expl.decision, expl.criterion
    positive = expl.verdict is Verdict.SATISFIES
    leaves = tree.lo()

    if expl.from_graph:
        # a node counts when it is, or is not, an ancestor of an opponent leaf
        def counts(n):
            return not _feeds_opponent_leaf(tree, n, leaves)
    else:
        def counts(n):
            return n.is_leaf

    if c is SD:
        if positive:
            return SDPos(frozenset(n.argument.claim.args[1]
                                   for n in _nodes(tree, PROPONENT, "met", d) if counts(n)))
        if expl.from_graph:
            losing = _top_level_losses(tree, leaves)
        else:
            losing = [n for n in leaves if _is(n.argument.claim, "notSDom", d)]
        return SDNeg(frozenset(a.args[1] for n in losing for a in _in_support(n, "notMet", d)))

    if c is D:
        if positive:
            met = frozenset(n.argument.claim.args[1]
                            for n in _nodes(tree, PROPONENT, "met", d) if counts(n))
            unmet = frozenset(n.argument.claim.args[1]
                              for n in _nodes(tree, PROPONENT, "noOthers", d) if counts(n))
            return DPos(met, unmet)
        if expl.from_graph:
            # the tree pins down the goals; a losing goal need not have its
            # rivals spelled out, so they are read off the graph
            losing = {a.args[1] for o in _top_level_losses(tree, leaves)
                      for a in _in_support(o, "notMet", d)}
            adf = dg_to_adf(expl.source.dg if isinstance(expl.source, Pdg) else expl.source)
            return DNeg(frozenset((o, g) for o in adf.decisions if o != d
                                  for g in losing if g in adf.gamma[o]))
        return DNeg(frozenset((n.argument.claim.args[0], n.argument.claim.args[1])
                              for n in leaves if _is(n.argument.claim, "met")))

    if c is WD:
        if positive:
            core = {n.argument.claim.args[1] for n in _nodes(tree, PROPONENT, "met", d)}
            witnesses = set()
            for n in _nodes(tree, PROPONENT, "more", d):
                rival = n.argument.claim.args[1]
                goals = [a.args[1] for a in _in_support(n, "notMet", rival)]
                core.update(goals)
                if counts(n):
                    witnesses.update((g, rival) for g in goals)
            return WDPos(frozenset(core), frozenset(witnesses))
        return WDNeg(_named_rivals(tree, d, leaves))

    if positive:
        core = frozenset(n.argument.claim.args[1] for n in _nodes(tree, PROPONENT, "met", d))
        witnesses = set()
        for n in _nodes(tree, PROPONENT, "better", d):
            rival = n.argument.claim.args[1]
            for a in _in_support(n, "metSet", d):
                witnesses.add((goal_set_from_name(a.args[1]), rival))
        return PSPos(core, frozenset(witnesses))
    return PSNeg(_named_rivals(tree, d, leaves))


def _named_rivals(tree: DisputeTree, d: str, leaves) -> frozenset[str]:
    """Rivals named by an unanswered attack on the query argument."""
    out = set()
    for o in _top_level_losses(tree, leaves):
        for a in o.argument.support:
            if _is(a, "notMore", d) or _is(a, "notBetter", d):
                out.add(a.args[1])
    return frozenset(out)


# rendering --------------------------------------------------------------------

_READINGS = {
    "sDom": "{0} is strongly dominant",
    "notSDom": "{0} is not strongly dominant",
    "dom": "{0} is dominant",
    "notDom": "{0} is not dominant",
    "wDom": "{0} is weakly dominant",
    "notWDom": "{0} is not weakly dominant",
    "pS": "{0} is a preferred-set decision",
    "notPS": "{0} is not a preferred-set decision",
    "met": "{0} meets {1}",
    "notMet": "{0} does not meet {1}",
    "noOthers": "no decision other than {0} meets {1}",
    "more": "{0} meets a goal that {1} misses",
    "notMore": "{0} meets no goal that {1} misses",
    "metSet": "{0} meets every goal in {1}",
    "notMetSet": "{0} misses some goal in {1}",
    "better": "{0} meets a goal set preferred to {2} that {1} misses",
    "notBetter": "{0} meets no goal set preferred to {2} that {1} misses",
    "pfr": "{0} is preferred to {1}",
    "edge": "there is an edge from {0} to {1} with tag {2}",
    "dEdge": "the edge from {0} to {1} with tag {2} is usable",
    "reach": "{1} is reachable from {0}",
    "unreachableSib": "another tag-{2} source of {1} is unreachable from {3}",
}


def read_sentence(s: Sentence) -> str:
    template = _READINGS.get(s.functor)
    if template is None or len(s.args) < template.count("{"):
        text = str(s.negate()) if s.negated else str(s)
    else:
        text = template.format(*s.args)
    return f"it is not the case that {text}" if s.negated else text


def _line(node: DisputeNode) -> str:
    arg = node.argument
    if arg.support:
        basis = "assume " + ", ".join(map(str, sorted(arg.support)))
    else:
        basis = "this follows from facts"
    tail = " (repeats)" if node.fold else ""
    return f"{node.label}: {read_sentence(arg.claim)}; {basis}{tail}"


def render_dialogue(expl: DialogicalExplanation | DisputeTree) -> str:
    tree = expl.tree if isinstance(expl, DialogicalExplanation) else expl
    return "\n".join(_line(n) for n in tree.nodes())


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _tree_dot(tree: DisputeTree) -> str:
    nodes = tree.nodes()
    index = {id(n): i for i, n in enumerate(nodes)}
    out = ["digraph dispute {", "  rankdir=BT;"]
    for i, n in enumerate(nodes):
        shape = "box" if n.label == PROPONENT else "ellipse"
        text = f"{n.label}: {n.argument}" + (" (repeats)" if n.fold else "")
        style = ", style=dashed" if n.fold else ""
        out.append(f"  n{i} [label={_quote(text)}, shape={shape}{style}];")
    for n in nodes:
        for ch in n.children:
            out.append(f"  n{index[id(ch)]} -> n{index[id(n)]};")
    out.append("}")
    return "\n".join(out)


def _graph_dot(dg: Dg) -> str:
    out = ["digraph decisions {", "  rankdir=LR;"]
    for n in dg.decisions:
        out.append(f"  {_quote(n)} [shape=box];")
    for n in dg.intermediates:
        out.append(f"  {_quote(n)} [shape=ellipse];")
    for n in dg.goals:
        out.append(f"  {_quote(n)} [shape=doublecircle];")
    for e in dg.edges:
        attrs = [f"label={_quote(str(e.tag))}"]
        if e.defeasible:
            attrs.append("style=dashed")
        out.append(f"  {_quote(e.source)} -> {_quote(e.target)} [{', '.join(attrs)}];")
    out.append("}")
    return "\n".join(out)


def render_dot(item: DialogicalExplanation | DisputeTree | Dg | Pdg) -> str:
    if isinstance(item, Pdg):
        return _graph_dot(item.dg)
    if isinstance(item, Dg):
        return _graph_dot(item)
    tree = item.tree if isinstance(item, DialogicalExplanation) else item
    return _tree_dot(tree)
