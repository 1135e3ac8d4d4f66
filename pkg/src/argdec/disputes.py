"""Dispute trees over flat ABA frameworks.

Infinite trees are kept finite: a proponent node whose argument already
labels a proponent ancestor is a fold-back leaf, standing for the periodic
repetition of that ancestor's subtree. Fold-back leaves are not real leaves,
so they contribute nothing to LA or LO.

Opponent leaves are identified by their root path (the sequence of labelled
arguments leading to them) when LO sets of different trees are compared.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator

from .aba import AbaFramework, Argument, Sentence, is_admissible_argument
from .errors import ExplosionBudgetExceeded, IsAdmissible, NotAdmissible

PROPONENT = "P"
OPPONENT = "O"
DEFAULT_BUDGET = 100_000


@dataclass(eq=False)
class DisputeNode:
    label: str
    argument: Argument
    children: list["DisputeNode"] = field(default_factory=list)
    fold: bool = False

    @property
    def is_leaf(self) -> bool:
        return not self.children and not self.fold

    def __repr__(self):
        tail = " (repeats)" if self.fold else ""
        return f"{self.label}: {self.argument}{tail}"


class Budget:
    def __init__(self, limit: int = DEFAULT_BUDGET):
        self.limit = limit
        self.used = 0

    def spend(self, n: int = 1) -> None:
        self.used += n
        if self.used > self.limit:
            raise ExplosionBudgetExceeded(f"dispute-tree search explored more than {self.limit} nodes")


class DisputeTree:
    def __init__(self, af: AbaFramework, root: DisputeNode, kind: str = "other"):
        self.af = af
        self.root = root
        self._parents: dict[int, DisputeNode | None] = {}
        for node, parent in self._walk_with_parent():
            self._parents[id(node)] = parent
        self.kind = kind

    # structure ------------------------------------------------------------

    def _walk_with_parent(self):
        stack = [(self.root, None)]
        while stack:
            node, parent = stack.pop()
            yield node, parent
            for child in reversed(node.children):
                stack.append((child, node))

    def nodes(self) -> list[DisputeNode]:
        """Depth-first, children in order."""
        return [n for n, _ in self._walk_with_parent()]

    def parent(self, node: DisputeNode) -> DisputeNode | None:
        return self._parents[id(node)]

    def path(self, node: DisputeNode) -> tuple:
        out = []
        cur = node
        while cur is not None:
            out.append((cur.label, cur.argument))
            cur = self._parents[id(cur)]
        return tuple(reversed(out))

    def is_ancestor(self, n1: DisputeNode, n2: DisputeNode) -> bool:
        cur = self._parents.get(id(n2))
        while cur is not None:
            if cur is n1:
                return True
            cur = self._parents[id(cur)]
        return False

    def subtree_has_opponent_leaf(self, node: DisputeNode) -> bool:
        stack = [node]
        while stack:
            n = stack.pop()
            if n.label == OPPONENT and n.is_leaf:
                return True
            stack.extend(n.children)
        return False

    def __len__(self):
        return len(self._parents)

    # dialectical sets -------------------------------------------------------

    def defence_set(self) -> frozenset[Sentence]:
        return frozenset(a for n in self.nodes() if n.label == PROPONENT for a in n.argument.support)

    def culprits(self) -> frozenset[Sentence]:
        out = set()
        for n in self.nodes():
            if n.label == OPPONENT:
                for c in n.children:
                    out |= self.af.attacked_assumptions(c.argument, n.argument)
        return frozenset(out)

    def la(self) -> frozenset[Sentence]:
        return la(self)

    def lo(self) -> list[DisputeNode]:
        return lo(self)

    def lo_paths(self) -> frozenset[tuple]:
        return frozenset(self.path(n) for n in lo(self))

    def is_admissible(self) -> bool:
        for n in self.nodes():
            if n.label == OPPONENT and len(n.children) != 1:
                return False
        return not (self.culprits() & self.defence_set())

    def is_maximal(self) -> bool:
        for n in self.nodes():
            if n.label == OPPONENT and not n.children and self.af.attackers(n.argument):
                return False
        return True

    def check_structure(self) -> bool:
        """Local P/O constraints, including fold-back placement."""
        for n in self.nodes():
            if n.label == PROPONENT:
                if n.fold:
                    anc = self._ancestor_arguments(n)
                    if n.children or n.argument not in anc:
                        return False
                    continue
                if [c.argument for c in n.children] != self.af.attackers(n.argument):
                    return False
                if any(c.label != OPPONENT for c in n.children):
                    return False
            else:
                if len(n.children) > 1:
                    return False
                for c in n.children:
                    if c.label != PROPONENT or not self.af.attacked_assumptions(c.argument, n.argument):
                        return False
        return True

    def _ancestor_arguments(self, node):
        out = set()
        cur = self._parents[id(node)]
        while cur is not None:
            if cur.label == PROPONENT:
                out.add(cur.argument)
            cur = self._parents[id(cur)]
        return out

    def unfold(self, node: DisputeNode) -> "DisputeTree":
        """Copy of the tree with one fold-back leaf replaced by a copy of
        the matching ancestor's subtree (whose own repeats stay folded)."""
        cur = self._parents[id(node)]
        while cur.argument != node.argument or cur.label != PROPONENT:
            cur = self._parents[id(cur)]
        source = cur

        def copy(n, target):
            if n is target:
                return _clone(source)
            return DisputeNode(n.label, n.argument, [copy(c, target) for c in n.children], n.fold)

        return DisputeTree(self.af, copy(self.root, node), self.kind)

    # serialisation ------------------------------------------------------

    def to_text(self) -> str:
        lines = []

        def emit(n, depth):
            tail = " (repeats)" if n.fold else ""
            lines.append(f"{'  ' * depth}{n.label}: {n.argument}{tail}")
            for c in n.children:
                emit(c, depth + 1)

        emit(self.root, 0)
        return "\n".join(lines)

    def to_json(self) -> dict:
        nodes = []

        def emit(n):
            idx = len(nodes)
            entry = {"label": n.label, "claim": str(n.argument.claim),
                     "support": sorted(map(str, n.argument.support)), "children": []}
            if n.fold:
                entry["repeats"] = True
            nodes.append(entry)
            entry["children"] = [emit(c) for c in n.children]
            return idx

        emit(self.root)
        return {"kind": self.kind, "nodes": nodes}

    def canonical(self) -> str:
        return json.dumps(self.to_json()["nodes"], sort_keys=True, separators=(",", ":"))

    def __repr__(self):
        return f"DisputeTree({self.kind}, {len(self)} nodes)"


def _clone(n: DisputeNode) -> DisputeNode:
    return DisputeNode(n.label, n.argument, [_clone(c) for c in n.children], n.fold)


def la(tree: DisputeTree) -> frozenset[Sentence]:
    return frozenset(a for n in tree.nodes() if n.is_leaf for a in n.argument.support)


def lo(tree: DisputeTree) -> list[DisputeNode]:
    return [n for n in tree.nodes() if n.label == OPPONENT and n.is_leaf]


def is_ancestor(tree: DisputeTree, n1: DisputeNode, n2: DisputeNode) -> bool:
    return tree.is_ancestor(n1, n2)


def _counters(af: AbaFramework, opponent: Argument) -> list[Argument]:
    seen: dict[Argument, None] = {}
    for a in sorted(opponent.support):
        for c in af.attackers_of_assumption(a):
            seen.setdefault(c, None)
    return sorted(seen)


# plans: lightweight immutable trees used during search --------------------
# P plan: ("P", arg, fold, (O plans...)); O plan: ("O", arg, P plan | None)

def _materialise(plan) -> DisputeNode:
    if plan[0] == PROPONENT:
        _, arg, fold, kids = plan
        return DisputeNode(PROPONENT, arg, [_materialise(k) for k in kids], fold)
    _, arg, child = plan
    return DisputeNode(OPPONENT, arg, [_materialise(child)] if child is not None else [])


def _tree(af, plan, kind) -> DisputeTree:
    return DisputeTree(af, _materialise(plan), kind)


# full enumeration -----------------------------------------------------------

def enumerate_maximal_trees(af: AbaFramework, arg: Argument,
                            budget: Budget | None = None) -> Iterator[DisputeTree]:
    """Every maximal tree (up to fold-back equivalence) for ``arg``."""
    budget = budget or Budget()

    def p_plans(a, ancestors):
        budget.spend()
        if a in ancestors:
            yield (PROPONENT, a, True, ())
            return
        inner = ancestors | {a}
        per_child = [list(o_plans(b, inner)) for b in af.attackers(a)]
        for combo in product(*per_child):
            budget.spend()
            yield (PROPONENT, a, False, combo)

    def o_plans(b, ancestors):
        budget.spend()
        counters = _counters(af, b)
        if not counters:
            yield (OPPONENT, b, None)
            return
        for c in counters:
            for sub in p_plans(c, ancestors):
                yield (OPPONENT, b, sub)

    for plan in p_plans(arg, frozenset()):
        tree = _tree(af, plan, "maximal")
        if tree.is_admissible():
            tree.kind = "admissible"
        yield tree


def maximal_dispute_trees(af: AbaFramework, arg: Argument, budget: int = DEFAULT_BUDGET) -> list[DisputeTree]:
    return list(enumerate_maximal_trees(af, arg, Budget(budget)))


def admissible_trees(af: AbaFramework, arg: Argument, budget: int = DEFAULT_BUDGET) -> list[DisputeTree]:
    return [t for t in enumerate_maximal_trees(af, arg, Budget(budget)) if t.kind == "admissible"]


# admissible tree from a winning strategy ---------------------------------

def admissible_dispute_tree(af: AbaFramework, arg: Argument) -> DisputeTree | None:
    defence = is_admissible_argument(af, arg)
    if defence is None:
        return None

    def build(a, ancestors):
        if a in ancestors:
            return (PROPONENT, a, True, ())
        inner = ancestors | {a}
        kids = []
        for b in af.attackers(a):
            choice = next(c for c in _counters(af, b) if c.support <= defence)
            kids.append((OPPONENT, b, build(choice, inner)))
        return (PROPONENT, a, False, tuple(kids))

    return _tree(af, build(arg, frozenset()), "admissible")


# least-assumption trees -------------------------------------------------------

def _dominates(x, y) -> bool:
    return x[0] <= y[0] and x[1] <= y[1] and x[2] <= y[2]


def _prune(cands: list) -> list:
    """Keep candidates whose (LA, defence, culprits) triple is minimal."""
    cands.sort(key=lambda c: (len(c[0]) + len(c[1]) + len(c[2]), _plan_key(c[3])))
    kept: list = []
    for c in cands:
        if c[1] & c[2]:
            continue
        if any(_dominates(k, c) for k in kept):
            continue
        kept.append(c)
    return kept


def _plan_key(plan) -> str:
    return repr(_plan_text(plan))


def _plan_text(plan):
    if not plan or isinstance(plan[0], tuple):
        return tuple(_plan_text(p) for p in plan)
    if plan[0] == PROPONENT:
        return ("P", str(plan[1]), plan[2], tuple(_plan_text(k) for k in plan[3]))
    return ("O", str(plan[1]), None if plan[2] is None else _plan_text(plan[2]))


def least_assumption_tree(af: AbaFramework, arg: Argument, budget: int = DEFAULT_BUDGET) -> DisputeTree:
    if is_admissible_argument(af, arg) is None:
        raise NotAdmissible(f"{arg} is not admissible")
    spent = Budget(budget)
    memo: dict = {}
    empty = frozenset()

    def p_cands(a, ancestors):
        key = (a, ancestors)
        if key in memo:
            return memo[key]
        spent.spend()
        if a in ancestors:
            result = [(empty, a.support, empty, (PROPONENT, a, True, ()))]
            memo[key] = result
            return result
        inner = ancestors | {a}
        attackers = af.attackers(a)
        if not attackers:
            result = [(a.support, a.support, empty, (PROPONENT, a, False, ()))]
            memo[key] = result
            return result
        acc = [(empty, a.support, empty, ())]
        for b in attackers:
            options = o_cands(b, inner)
            merged = []
            for la_, d_, c_, kids in acc:
                for la2, d2, c2, oplan in options:
                    spent.spend()
                    merged.append((la_ | la2, d_ | d2, c_ | c2, kids + (oplan,)))
            acc = _prune(merged)
            if not acc:
                break
        result = [(x, y, z, (PROPONENT, a, False, kids)) for x, y, z, kids in acc]
        memo[key] = result
        return result

    def o_cands(b, ancestors):
        out = []
        for c in _counters(af, b):
            hit = af.attacked_assumptions(c, b)
            for la_, d_, c_, plan in p_cands(c, ancestors):
                out.append((la_, d_, c_ | hit, (OPPONENT, b, plan)))
        return _prune(out)

    finals = p_cands(arg, frozenset())
    if not finals:
        raise NotAdmissible(f"{arg} has no admissible dispute tree")
    minimal = [f for f in finals if not any(g[0] < f[0] for g in finals)]
    best = min(minimal, key=lambda f: (len(_plan_key(f[3])), _plan_key(f[3])))
    return _tree(af, best[3], "admissible")


# best-effort trees ------------------------------------------------------------

def best_effort_tree(af: AbaFramework, arg: Argument, budget: int = DEFAULT_BUDGET) -> DisputeTree:
    """A maximal tree whose set of opponent leaves is subset-minimal.

    At every opponent node a counter-argument whose subtree can avoid
    opponent leaves altogether is preferred; when none exists every choice
    yields a minimal set (leaves below different counters are different
    nodes), and the first counter in canonical order is taken.
    """
    if is_admissible_argument(af, arg) is not None:
        raise IsAdmissible(f"{arg} is admissible")
    spent = Budget(budget)
    clean_memo: dict = {}

    def clean(a, ancestors) -> bool:
        key = (a, ancestors)
        if key in clean_memo:
            return clean_memo[key]
        spent.spend()
        if a in ancestors:
            return True
        clean_memo[key] = True  # provisional; regress through a cycle is clean
        inner = ancestors | {a}
        ok = all(any(clean(c, inner) for c in _counters(af, b)) for b in af.attackers(a))
        clean_memo[key] = ok
        return ok

    def build(a, ancestors):
        spent.spend()
        if a in ancestors:
            return (PROPONENT, a, True, ())
        inner = ancestors | {a}
        kids = []
        for b in af.attackers(a):
            counters = _counters(af, b)
            if not counters:
                kids.append((OPPONENT, b, None))
                continue
            choice = next((c for c in counters if clean(c, inner)), counters[0])
            kids.append((OPPONENT, b, build(choice, inner)))
        return (PROPONENT, a, False, tuple(kids))

    return _tree(af, build(arg, frozenset()), "maximal")
