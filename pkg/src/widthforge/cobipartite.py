"""Pathwidth to treewidth on co-bipartite graphs.

Each vertex v of the source gets two copies: ``v`` itself and a primed copy
``v + n``.  Both copy sets become cliques; v is joined to its own primed copy
and to the primed copies of its neighbours.  The resulting graph has
treewidth and pathwidth exactly ``n + pw(source)``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .certificates import (DecompositionError, PathDecomposition, TreeDecomposition,
                           pathify_between_cliques, verify_path_decomposition)
from .graph import Graph, ReductionTrace


@dataclass(frozen=True)
class CoBipartiteInstance:
    source: Graph
    graph: Graph
    side: frozenset
    side_prime: frozenset
    trace: ReductionTrace

    def prime(self, v: int) -> int:
        return v + self.offset

    @property
    def offset(self) -> int:
        return max(self.source.vertices, default=-1) + 1


def build_cobipartite(g: Graph) -> CoBipartiteInstance:
    """Build the doubled co-bipartite graph; primed copy of v is ``v + (max id + 1)``."""
    off = max(g.vertices, default=-1) + 1
    side = sorted(g.vertices)
    primed = [v + off for v in side]
    edges = set()
    for clique in (side, primed):
        for i, u in enumerate(clique):
            for w in clique[i + 1:]:
                edges.add((u, w))
    for v in side:
        edges.add((v, v + off))
    for u, v in g.edges:
        edges.add((u, v + off))
        edges.add((v, u + off))
    roles = {v: ("copy", v) for v in side}
    roles.update({v + off: ("prime", v) for v in side})
    graph = Graph(frozenset(side) | frozenset(primed), frozenset(edges))
    return CoBipartiteInstance(g, graph, frozenset(side), frozenset(primed), ReductionTrace(roles))


def lift_pathdec(inst: CoBipartiteInstance, pd: PathDecomposition) -> PathDecomposition:
    """Bag i keeps v if v occurs at or after position i, and v' if v occurs at or before it."""
    verify_path_decomposition(inst.source, pd)
    first = {}
    last = {}
    for i, bag in enumerate(pd.bags):
        for v in bag:
            first.setdefault(v, i)
            last[v] = i
    off = inst.offset
    bags = []
    for i in range(len(pd.bags)):
        bag = {v for v in inst.source.vertices if last[v] >= i}
        bag |= {v + off for v in inst.source.vertices if first[v] <= i}
        bags.append(frozenset(bag))
    return PathDecomposition(tuple(bags))


def project_pathdec(inst: CoBipartiteInstance, pd: PathDecomposition) -> PathDecomposition:
    """Keep v in a bag exactly when both v and its primed copy are present.

    The input must start with a bag containing the unprimed side and end with
    one containing the primed side; use :func:`project_decomposition` for an
    arbitrary tree decomposition.
    """
    verify_path_decomposition(inst.graph, pd)
    if not (inst.side <= pd.bags[0] and inst.side_prime <= pd.bags[-1]):
        raise DecompositionError("path", None,
                                 "first bag must contain the unprimed side and last bag the primed side")
    off = inst.offset
    return PathDecomposition(tuple(
        frozenset(v for v in inst.side if v in bag and v + off in bag) for bag in pd.bags))


def project_decomposition(inst: CoBipartiteInstance, td: TreeDecomposition) -> PathDecomposition:
    """Project any tree decomposition of the doubled graph, pathifying between the two cliques first."""
    pd = pathify_between_cliques(inst.graph, td, inst.side, inst.side_prime)
    return project_pathdec(inst, pd)
