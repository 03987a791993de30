"""Exact treewidth, pathwidth and cutwidth for desk-scale graphs.

All three solvers run a subset dynamic program per connected component and
return an optimal certificate alongside the width.  Within a component the
certificate ordering is the lexicographically smallest optimal one.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Union

import numpy as np

from . import _kernels
from .certificates import (LinearOrdering, PathDecomposition, TreeDecomposition,
                           ordering_to_pathdec, prune_subsumed_leaves)
from .graph import Graph

DEFAULT_BUDGET = {"tw": 24, "pw": 24, "cw": 20}
HARD_LIMIT = 30


class BudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class SolveResult:
    width: int
    certificate: Union[TreeDecomposition, PathDecomposition, tuple]


def _budget(kind: str, budget: int | None) -> int:
    if budget is None:
        env = os.environ.get("WIDTHFORGE_BUDGET")
        budget = int(env) if env else DEFAULT_BUDGET[kind]
    return min(budget, HARD_LIMIT)


def _check(g: Graph, kind: str, budget: int | None) -> None:
    limit = _budget(kind, budget)
    if g.n > limit:
        raise BudgetExceeded(f"graph has {g.n} vertices; {kind} budget is {limit}")


def _adjacency(g: Graph, comp: list[int]) -> np.ndarray:
    index = {v: i for i, v in enumerate(comp)}
    adj = np.zeros(len(comp), dtype=np.int64)
    for v in comp:
        for w in g.neighbors(v):
            adj[index[v]] |= np.int64(1) << index[w]
    return adj


def _greedy(table, n, width, step_cost) -> list[int]:
    """Walk forward taking the smallest vertex that keeps the optimum reachable."""
    s = 0
    order = []
    for _ in range(n):
        for v in range(n):
            bit = 1 << v
            if s & bit:
                continue
            if table[s | bit] <= width and step_cost(s, v) <= width:
                order.append(v)
                s |= bit
                break
        else:  # pragma: no cover - table inconsistent
            raise RuntimeError("dynamic program table is inconsistent")
    return order


def _solve_components(g: Graph, table_fn, cost_fn):
    width = -1
    order: list[int] = []
    for comp in g.components():
        adj = _adjacency(g, comp)
        n = len(comp)
        table = table_fn(adj, n)
        w = int(table[0])
        full = (1 << n) - 1
        local = _greedy(table, n, w, lambda s, v: cost_fn(adj, s, v, full))
        order.extend(comp[i] for i in local)
        width = max(width, w)
    return width, order


def elimination_decomposition(g: Graph, order: LinearOrdering) -> TreeDecomposition:
    """Tree decomposition from an elimination ordering; width = max higher degree in the fill graph."""
    pos = {v: i for i, v in enumerate(order)}
    if len(pos) != g.n or set(pos) != g.vertices:
        raise ValueError("elimination ordering is not a permutation of the vertex set")
    if g.n == 0:
        return TreeDecomposition((frozenset(),))
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    bags = []
    parent_vertex = []
    for v in order:
        higher = adj[v]
        bags.append(frozenset(higher | {v}))
        parent_vertex.append(min(higher, key=pos.__getitem__) if higher else None)
        for a in higher:
            adj[a] |= higher
            adj[a].discard(a)
            adj[a].discard(v)
    edges = []
    roots = []
    for i, p in enumerate(parent_vertex):
        if p is None:
            roots.append(i)
        else:
            edges.append((i, pos[p]))
    edges.extend(zip(roots, roots[1:]))
    return prune_subsumed_leaves(TreeDecomposition(tuple(bags), tuple(edges)))


def _min_degree_width(adj: np.ndarray, n: int) -> int:
    """Width of a greedy min-degree elimination; an upper bound used to cap the table."""
    nbrs = [{j for j in range(n) if (int(adj[i]) >> j) & 1} for i in range(n)]
    alive = set(range(n))
    worst = 0
    while alive:
        v = min(alive, key=lambda x: (len(nbrs[x]), x))
        alive.discard(v)
        ns = nbrs[v]
        worst = max(worst, len(ns))
        for a in ns:
            nbrs[a] |= ns - {a}
            nbrs[a].discard(v)
    return worst


def exact_treewidth(g: Graph, budget: int | None = None) -> SolveResult:
    _check(g, "tw", budget)
    width, order = _solve_components(
        g, lambda adj, n: _kernels.treewidth_table(adj, n, _min_degree_width(adj, n) + 1),
        lambda adj, s, v, full: _kernels.elimination_degree(adj, np.int64(s), v))
    return SolveResult(width, elimination_decomposition(g, order))


def exact_pathwidth(g: Graph, budget: int | None = None) -> SolveResult:
    """Pathwidth as the optimal vertex separation number of an ordering."""
    _check(g, "pw", budget)
    width, order = _solve_components(
        g, _kernels.separation_table,
        lambda adj, s, v, full: _kernels.boundary_size(adj, np.int64(s | (1 << v)), np.int64(full)))
    return SolveResult(width, ordering_to_pathdec(g, order))


def exact_cutwidth(g: Graph, budget: int | None = None) -> SolveResult:
    _check(g, "cw", budget)
    width, order = _solve_components(
        g, _kernels.cutwidth_table,
        lambda adj, s, v, full: _kernels.cut_size(adj, np.int64(s | (1 << v)), np.int64(full)))
    return SolveResult(max(width, 0), tuple(order))
