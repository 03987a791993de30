"""Immutable simple graphs and the structural operations the reductions need."""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph over integer vertex ids.

    Edges are stored as sorted pairs.  Instances are treated as values: every
    operation in this package returns a new graph.
    """

    vertices: frozenset
    edges: frozenset
    _adj: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        verts = frozenset(self.vertices)
        edges = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u not in verts or v not in verts:
                raise ValueError(f"edge {e} has an endpoint outside the vertex set")
            edges.add(_norm(u, v))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", frozenset(edges))
        adj = {v: set() for v in verts}
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", {v: frozenset(ns) for v, ns in adj.items()})

    @classmethod
    def from_edges(cls, n_or_vertices, edges: Iterable = ()) -> "Graph":
        """Build from a vertex count (ids ``0..n-1``) or an explicit vertex iterable."""
        if isinstance(n_or_vertices, int):
            verts = range(n_or_vertices)
        else:
            verts = n_or_vertices
        return cls(frozenset(verts), frozenset(tuple(e) for e in edges))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def is_clique(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        for i, u in enumerate(vs):
            if u not in self._adj:
                return False
            for w in vs[i + 1:]:
                if w not in self._adj[u]:
                    return False
        return True

    @cached_property
    def max_degree(self) -> int:
        return max((len(ns) for ns in self._adj.values()), default=0)

    def induced(self, vs: Iterable[int]) -> "Graph":
        keep = frozenset(vs)
        return Graph(keep, frozenset(e for e in self.edges if e[0] in keep and e[1] in keep))

    def add_edges(self, edges: Iterable) -> "Graph":
        return Graph(self.vertices, self.edges | {_norm(*e) for e in edges})

    def add_clique(self, vs: Iterable[int]) -> "Graph":
        vs = sorted(vs)
        return self.add_edges((u, w) for i, u in enumerate(vs) for w in vs[i + 1:])

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest member."""
        seen = set()
        out = []
        for s in sorted(self.vertices):
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self._adj[u]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def relabel(self, mapping: Mapping[int, int]) -> "Graph":
        return Graph(frozenset(mapping[v] for v in self.vertices),
                     frozenset(_norm(mapping[u], mapping[v]) for u, v in self.edges))

    def relabel_dense(self) -> tuple["Graph", dict[int, int]]:
        """Relabel to ``0..n-1`` preserving id order; returns the graph and old->new map."""
        mapping = {v: i for i, v in enumerate(sorted(self.vertices))}
        return self.relabel(mapping), mapping

    def to_networkx(self):
        import networkx as nx

        h = nx.Graph()
        h.add_nodes_from(sorted(self.vertices))
        h.add_edges_from(sorted(self.edges))
        return h

    @classmethod
    def from_networkx(cls, h) -> "Graph":
        return cls.from_edges(list(h.nodes), list(h.edges))


@dataclass(frozen=True)
class ReductionTrace:
    """Constructed vertex -> role tuple, e.g. ``("copy", v)`` or ``("A", v, 1)``.

    ``merged`` maps vertices removed by contraction to the survivor that absorbed them.
    """

    roles: dict
    merged: dict = None

    def role(self, v: int):
        return self.roles[v]


def contract_into_neighbor(g: Graph, v: int) -> Graph:
    """Merge a vertex of degree 1 or 2 into its smallest-id neighbour.

    The neighbour keeps its id; parallel edges collapse.
    """
    if v not in g.vertices:
        raise KeyError(f"unknown vertex {v}")
    deg = g.degree(v)
    if deg == 0:
        raise ValueError(f"vertex {v} is isolated and has no neighbour to merge into")
    if deg > 2:
        raise ValueError(f"vertex {v} has degree {deg}; only degree 1 or 2 may be contracted")
    target = min(g.neighbors(v))
    edges = {e for e in g.edges if v not in e}
    for w in g.neighbors(v):
        if w != target:
            edges.add(_norm(target, w))
    return Graph(g.vertices - {v}, frozenset(edges))


def contract_low_degree(g: Graph, protect: Iterable[int] = ()) -> tuple[Graph, dict[int, int]]:
    """Contract degree-<=2 vertices into neighbours until none remain.

    Vertices are processed smallest id first, each merged into its smallest-id
    neighbour exactly as :func:`contract_into_neighbor` does.  Returns the
    fixpoint graph and a map from every original vertex to its survivor.
    """
    protect = set(protect)
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    parent: dict[int, int] = {}
    heap = [v for v in adj if len(adj[v]) <= 2 and v not in protect]
    heapq.heapify(heap)
    while heap:
        v = heapq.heappop(heap)
        if v not in adj or len(adj[v]) > 2 or v in protect:
            continue
        if not adj[v]:
            raise ValueError(f"contraction left vertex {v} isolated; input is malformed")
        nbrs = adj.pop(v)
        target = min(nbrs)
        parent[v] = target
        for w in nbrs:
            adj[w].discard(v)
        for w in nbrs:
            if w != target:
                adj[target].add(w)
                adj[w].add(target)
        for w in nbrs:
            if len(adj[w]) <= 2:
                heapq.heappush(heap, w)
    if not adj:
        raise ValueError("contraction emptied the graph")

    def find(x):
        root = x
        while root in parent:
            root = parent[root]
        return root

    survivor = {v: find(v) for v in g.vertices}
    edges = {_norm(u, w) for u in adj for w in adj[u]}
    return Graph(frozenset(adj), frozenset(edges)), survivor


def subdivide_edge(g: Graph, e, new_vertex: int | None = None) -> Graph:
    """Replace edge ``e`` by a path of length two through a fresh vertex (default ``max id + 1``)."""
    u, v = _norm(*e)
    if (u, v) not in g.edges:
        raise KeyError(f"edge {e} not in graph")
    x = max(g.vertices) + 1 if new_vertex is None else new_vertex
    if x in g.vertices:
        raise ValueError(f"vertex {x} already exists")
    edges = (g.edges - {(u, v)}) | {_norm(u, x), _norm(x, v)}
    return Graph(g.vertices | {x}, edges)


def check_regularity(g: Graph, d: int) -> bool:
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return all(g.degree(v) == d for v in g.vertices)


@dataclass(frozen=True)
class MinorWitness:
    """Branch sets: minor vertex -> set of host vertices."""

    branch_sets: Mapping[int, frozenset]

    def __post_init__(self):
        object.__setattr__(self, "branch_sets",
                           {k: frozenset(v) for k, v in self.branch_sets.items()})

    def compose(self, inner: "MinorWitness") -> "MinorWitness":
        """Witness for ``M2 <= H`` given ``self: M1 <= H`` and ``inner: M2 <= M1``."""
        return MinorWitness({y: frozenset().union(*(self.branch_sets[x] for x in xs))
                             for y, xs in inner.branch_sets.items()})


def verify_minor_witness(host: Graph, minor: Graph, w: MinorWitness) -> bool:
    """Check that ``w`` exhibits ``minor`` as a minor of ``host``."""
    bs = w.branch_sets
    for x, part in bs.items():
        if x not in minor.vertices:
            raise KeyError(f"witness names unknown minor vertex {x}")
        bad = part - host.vertices
        if bad:
            raise KeyError(f"witness names unknown host vertices {sorted(bad)}")
    if set(bs) != set(minor.vertices):
        return False
    owner: dict[int, int] = {}
    for x, part in bs.items():
        if not part:
            return False
        for h in part:
            if h in owner:
                return False
            owner[h] = x
    for x, part in bs.items():
        if not host.induced(part).is_connected():
            return False
    realised = set()
    for a, b in host.edges:
        oa, ob = owner.get(a), owner.get(b)
        if oa is not None and ob is not None and oa != ob:
            realised.add(_norm(oa, ob))
    return minor.edges <= realised


def quotient(host: Graph, w: MinorWitness) -> Graph:
    """Contract every branch set to its minor vertex; host vertices outside all sets are deleted."""
    owner = {h: x for x, part in w.branch_sets.items() for h in part}
    edges = set()
    for a, b in host.edges:
        oa, ob = owner.get(a), owner.get(b)
        if oa is not None and ob is not None and oa != ob:
            edges.add(_norm(oa, ob))
    return Graph(frozenset(w.branch_sets), frozenset(edges))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def grid_graph(rows: int, cols: int) -> Graph:
    def vid(r, c):
        return r * cols + c
    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((vid(r, c), vid(r, c + 1)))
            if r + 1 < rows:
                edges.append((vid(r, c), vid(r + 1, c)))
    return Graph.from_edges(rows * cols, edges)


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cube_graph() -> Graph:
    """The 3-dimensional hypercube Q3."""
    return Graph.from_edges(8, [(i, i ^ (1 << k)) for i in range(8) for k in range(3) if i < i ^ (1 << k)])
