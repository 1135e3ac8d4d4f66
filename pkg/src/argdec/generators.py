"""Seeded random instance generators used by the test suites and benchmarks."""

from __future__ import annotations

import itertools
import random

from .decision import Adf, GoalSetPreference, Pdf, validate_adf
from .graphs import Dg, Edge, Implication, BeliefBase, Pdg
from .aba import atom


def all_adfs(n_decisions: int = 3, n_goals: int = 3):
    ds = [f"d{i + 1}" for i in range(n_decisions)]
    gs = [f"g{j + 1}" for j in range(n_goals)]
    for bits in range(1 << (n_decisions * n_goals)):
        gamma = {d: [g for j, g in enumerate(gs) if bits >> (i * n_goals + j) & 1]
                 for i, d in enumerate(ds)}
        yield validate_adf(ds, gs, gamma)


def random_adf(rng: random.Random, max_decisions: int = 3, max_goals: int = 3) -> Adf:
    ds = [f"d{i + 1}" for i in range(rng.randint(1, max_decisions))]
    gs = [f"g{j + 1}" for j in range(rng.randint(1, max_goals))]
    return validate_adf(ds, gs, {d: [g for g in gs if rng.random() < 0.5] for d in ds})


def random_chain(rng: random.Random, goals, max_sets: int = 4) -> GoalSetPreference:
    subsets = [frozenset(c) for r in range(len(goals) + 1) for c in itertools.combinations(goals, r)]
    k = rng.randint(0, min(max_sets, len(subsets)))
    return GoalSetPreference.chain(*rng.sample(subsets, k))


def random_pdf(rng: random.Random, max_decisions: int = 3, max_goals: int = 3, max_sets: int = 4) -> Pdf:
    adf = random_adf(rng, max_decisions, max_goals)
    return Pdf(adf, random_chain(rng, adf.goals, max_sets))


def random_dg(rng: random.Random, max_nodes: int = 8, max_edges: int = 12,
              max_defeasible: int = 3, max_implications: int = 3) -> Dg:
    nd = rng.randint(1, 3)
    ng = rng.randint(1, 3)
    ni = rng.randint(0, max_nodes - nd - ng)
    ds = [f"d{i + 1}" for i in range(nd)]
    its = [f"n{i + 1}" for i in range(ni)]
    gs = [f"g{i + 1}" for i in range(ng)]
    order = ds + rng.sample(its, ni) + gs
    candidates = [(u, v) for i, u in enumerate(order) for v in order[i + 1:]
                  if u not in gs and v not in ds]
    chosen = rng.sample(candidates, min(len(candidates), rng.randint(0, max_edges)))
    edges: list[Edge] = []
    for u, v in sorted(chosen, key=lambda p: p[0] in ds):
        if u in ds:
            used = {e.tag for e in edges if e.target == v}
            tag = min(t for t in range(1, len(used) + 2) if t not in used)
        else:
            taken = {e.tag for e in edges if e.target == v and e.source in ds}
            tag = rng.choice([t for t in (1, 2, 3) if t not in taken])
        edges.append(Edge(u, v, tag))
    for i in rng.sample(range(len(edges)), min(len(edges), rng.randint(0, max_defeasible))):
        e = edges[i]
        edges[i] = Edge(e.source, e.target, e.tag, True)
    props = [atom(p) for p in ("p", "q", "r")]
    blockers = [e.blocker() for e in edges if e.defeasible]
    implications = []
    for _ in range(rng.randint(0, max_implications)):
        pool = props + blockers
        k = rng.randrange(len(pool))
        head = pool[k]
        earlier = props[:min(k, len(props))]
        body = tuple(rng.sample(earlier, rng.randint(0, len(earlier)))) if earlier else ()
        implications.append(Implication(body, head))
    return Dg(tuple(ds), tuple(its), tuple(gs), tuple(edges), BeliefBase(tuple(implications)))


def random_pdg(rng: random.Random, **kwargs) -> Pdg:
    dg = random_dg(rng, **kwargs)
    return Pdg(dg, random_chain(rng, dg.goals))


def random_total_order_pdf(rng: random.Random, max_decisions: int = 3, max_goals: int = 3) -> Pdf:
    adf = random_adf(rng, max_decisions, max_goals)
    ranked = rng.sample(list(adf.goals), len(adf.goals))
    return Pdf(adf, GoalSetPreference.chain(*[[g] for g in reversed(ranked)]))
