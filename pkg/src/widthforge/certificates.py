"""Tree/path decompositions, linear orderings, their verifiers, and bag utilities."""
from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph

LinearOrdering = Sequence[int]


class DecompositionError(ValueError):
    """A decomposition violates one of the axioms.

    ``axiom`` is one of ``"tree"``, ``"vertex"``, ``"edge"``, ``"connectivity"``
    or ``"path"``; ``witness`` is the offending vertex, edge or node pair.
    """

    def __init__(self, axiom: str, witness, message: str = ""):
        self.axiom = axiom
        self.witness = witness
        super().__init__(message or f"{axiom} axiom violated: {witness!r}")


class OrderingError(ValueError):
    pass


def _width(bags) -> int:
    return max((len(b) for b in bags), default=0) - 1


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags indexed by node id ``0..len(bags)-1`` plus the tree edges between nodes."""

    bags: tuple
    edges: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "bags", tuple(frozenset(b) for b in self.bags))
        object.__setattr__(self, "edges", tuple(sorted((min(a, b), max(a, b)) for a, b in self.edges)))

    @property
    def width(self) -> int:
        return _width(self.bags)

    def neighbors(self) -> dict[int, set]:
        nb = {i: set() for i in range(len(self.bags))}
        for a, b in self.edges:
            nb[a].add(b)
            nb[b].add(a)
        return nb

    def tree_path(self, x: int, y: int) -> list[int]:
        nb = self.neighbors()
        prev = {x: None}
        queue = deque([x])
        while queue:
            u = queue.popleft()
            if u == y:
                break
            for w in sorted(nb[u]):
                if w not in prev:
                    prev[w] = u
                    queue.append(w)
        if y not in prev:
            raise DecompositionError("tree", (x, y), f"nodes {x} and {y} are not connected")
        path = [y]
        while path[-1] != x:
            path.append(prev[path[-1]])
        return path[::-1]

    def rename(self, mapping) -> "TreeDecomposition":
        """Apply a vertex map to every bag (merged vertices collapse)."""
        return TreeDecomposition(tuple(frozenset(mapping.get(v, v) for v in b) for b in self.bags), self.edges)


@dataclass(frozen=True)
class PathDecomposition:
    """Bags in path order ``p1..pr``."""

    bags: tuple

    def __post_init__(self):
        object.__setattr__(self, "bags", tuple(frozenset(b) for b in self.bags))

    @property
    def width(self) -> int:
        return _width(self.bags)

    def to_tree(self) -> TreeDecomposition:
        return TreeDecomposition(self.bags, tuple((i, i + 1) for i in range(len(self.bags) - 1)))

    @classmethod
    def from_tree(cls, td: TreeDecomposition) -> "PathDecomposition":
        """Read a path-shaped tree decomposition in path order."""
        k = len(td.bags)
        if k == 0:
            return cls(())
        nb = td.neighbors()
        if len(td.edges) != k - 1 or any(len(s) > 2 for s in nb.values()):
            raise DecompositionError("path", None, "tree is not a path")
        ends = [i for i in range(k) if len(nb[i]) <= 1]
        order = td.tree_path(min(ends), max(ends)) if k > 1 else [0]
        if len(order) != k:
            raise DecompositionError("path", None, "tree is not a path")
        return cls(tuple(td.bags[i] for i in order))


def _check_tree(td: TreeDecomposition) -> None:
    k = len(td.bags)
    for a, b in td.edges:
        if not (0 <= a < k and 0 <= b < k) or a == b:
            raise DecompositionError("tree", (a, b), f"bad tree edge {(a, b)}")
    if k == 0:
        raise DecompositionError("tree", None, "decomposition has no nodes")
    if len(set(td.edges)) != k - 1:
        raise DecompositionError("tree", None, f"{k} nodes need {k - 1} tree edges, got {len(set(td.edges))}")
    nb = td.neighbors()
    seen = {0}
    stack = [0]
    while stack:
        for w in nb[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != k:
        missing = min(set(range(k)) - seen)
        raise DecompositionError("tree", missing, f"tree is disconnected at node {missing}")


def verify_tree_decomposition(g: Graph, td: TreeDecomposition) -> int:
    """Return the width of ``td`` or raise :class:`DecompositionError` naming the broken axiom."""
    _check_tree(td)
    where = defaultdict(list)
    for i, bag in enumerate(td.bags):
        for v in bag:
            if v not in g.vertices:
                raise DecompositionError("vertex", v, f"bag {i} holds vertex {v} which is not in the graph")
            where[v].append(i)
    for v in sorted(g.vertices):
        if v not in where:
            raise DecompositionError("vertex", v, f"vertex {v} is in no bag")
    for u, v in sorted(g.edges):
        nodes_u = where[u]
        nodes_v = where[v]
        small, big = (nodes_u, nodes_v) if len(nodes_u) <= len(nodes_v) else (nodes_v, nodes_u)
        big = set(big)
        if not any(x in big for x in small):
            raise DecompositionError("edge", (u, v), f"no bag contains edge {(u, v)}")
    # a node set in a tree is connected iff it spans (count - 1) tree edges
    inner = defaultdict(int)
    for a, b in td.edges:
        for v in td.bags[a] & td.bags[b]:
            inner[v] += 1
    for v in sorted(where):
        if inner[v] != len(where[v]) - 1:
            raise DecompositionError("connectivity", v, f"bags containing {v} are not connected: {where[v]}")
    return td.width


def verify_path_decomposition(g: Graph, pd: PathDecomposition) -> int:
    return verify_tree_decomposition(g, pd.to_tree())


def _positions(g: Graph, order: LinearOrdering) -> dict[int, int]:
    order = list(order)
    if len(order) != g.n or set(order) != g.vertices:
        raise OrderingError("ordering is not a permutation of the vertex set")
    return {v: i for i, v in enumerate(order)}


def cutwidth_of_ordering(g: Graph, order: LinearOrdering) -> int:
    """Largest number of edges crossing any gap between consecutive positions."""
    pos = _positions(g, order)
    n = g.n
    diff = [0] * (n + 1)
    for u, v in g.edges:
        a, b = sorted((pos[u], pos[v]))
        diff[a] += 1
        diff[b] -= 1
    best = run = 0
    for i in range(n):
        run += diff[i]
        best = max(best, run)
    return best


def vertex_separation_of_ordering(g: Graph, order: LinearOrdering) -> int:
    pos = _positions(g, order)
    best = 0
    # vertex v is "separating" for prefixes from its earliest neighbour up to just before v
    first_nb = {v: min((pos[w] for w in g.neighbors(v)), default=None) for v in g.vertices}
    diff = [0] * (g.n + 1)
    for v, p in pos.items():
        f = first_nb[v]
        if f is not None and f < p:
            diff[f] += 1
            diff[p] -= 1
    run = 0
    for i in range(g.n):
        run += diff[i]
        best = max(best, run)
    return best


def ordering_to_pathdec(g: Graph, order: LinearOrdering) -> PathDecomposition:
    """Path decomposition whose width equals the vertex separation of ``order``.

    Bag i holds the i-th vertex and every later vertex with a neighbour among the
    first i vertices.
    """
    pos = _positions(g, order)
    order = list(order)
    bags = []
    boundary = set()
    for i, v in enumerate(order):
        boundary.discard(v)
        for w in g.neighbors(v):
            if pos[w] > i:
                boundary.add(w)
        bags.append(frozenset(boundary | {v}))
    if not bags:
        bags = [frozenset()]
    return PathDecomposition(tuple(bags))


def find_clique_bag(g: Graph, td: TreeDecomposition, clique: Iterable[int]) -> int:
    w = frozenset(clique)
    if not g.is_clique(w):
        raise ValueError("vertex set is not a clique")
    for i, bag in enumerate(td.bags):
        if w <= bag:
            return i
    raise DecompositionError("edge", tuple(sorted(w)), "no bag contains the clique; decomposition invalid")


def find_balanced_bag(g: Graph, td: TreeDecomposition, weights: Iterable[int]) -> int:
    """First node whose bag separates ``weights`` into pieces of at most half its size.

    Tries the bound ``ceil(|W|/2)`` first and falls back to ``n/2``.
    """
    w = frozenset(weights)
    counts = []
    for bag in td.bags:
        rest = g.induced(g.vertices - bag)
        counts.append(max((len(w.intersection(c)) for c in rest.components()), default=0))
    for bound in ((len(w) + 1) // 2, g.n / 2):
        for i, c in enumerate(counts):
            if c <= bound:
                return i
    raise DecompositionError("tree", None, "no balanced bag; decomposition invalid")


def _remove_node(td: TreeDecomposition, x: int) -> TreeDecomposition:
    remap = {}
    bags = []
    for i, b in enumerate(td.bags):
        if i != x:
            remap[i] = len(bags)
            bags.append(b)
    edges = tuple((remap[a], remap[b]) for a, b in td.edges if x not in (a, b))
    return TreeDecomposition(tuple(bags), edges)


def prune_subsumed_leaves(td: TreeDecomposition) -> TreeDecomposition:
    """Repeatedly drop leaves whose bag is contained in their neighbour's bag."""
    while len(td.bags) > 1:
        nb = td.neighbors()
        for x in range(len(td.bags)):
            if len(nb[x]) == 1:
                (y,) = nb[x]
                if td.bags[x] <= td.bags[y]:
                    td = _remove_node(td, x)
                    break
        else:
            break
    return td


def pathify_between_cliques(g: Graph, td: TreeDecomposition, a: Iterable[int], b: Iterable[int]) -> PathDecomposition:
    """Cut a tree decomposition down to the path joining a bag holding ``a`` to one holding ``b``.

    Off-path leaves are removed one at a time; each removal is justified because
    the leaf's bag is contained in its neighbour's bag.  For co-bipartite graphs
    with cliques ``a`` and ``b`` covering the vertex set this always holds.
    """
    x = find_clique_bag(g, td, a)
    y = find_clique_bag(g, td, b)
    keep = set(td.tree_path(x, y))
    bags = dict(enumerate(td.bags))
    nb = td.neighbors()
    while len(bags) > len(keep):
        leaf = next(z for z in sorted(bags) if z not in keep and len(nb[z]) == 1)
        (parent,) = nb[leaf]
        if not bags[leaf] <= bags[parent]:
            stray = min(bags[leaf] - bags[parent])
            raise DecompositionError("connectivity", stray,
                                     f"off-path leaf {leaf} carries vertex {stray} missing from its neighbour")
        del bags[leaf]
        nb[parent].discard(leaf)
        del nb[leaf]
    return PathDecomposition(tuple(bags[i] for i in td.tree_path(x, y)))
