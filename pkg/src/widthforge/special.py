"""Degree-raising gadgets, d-regular instances and the subcubic 3D grid embedding."""
from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .certificates import (LinearOrdering, TreeDecomposition, cutwidth_of_ordering,
                           verify_tree_decomposition)
from .cubic import (LEAF_BAG_SIZE, EXACTNESS_MIN_VERTICES, PipelineResult, _compact_leaves, build_step1,
                    build_step2, build_step3, lift_decomposition_to_step3, lift_pathdec_to_step2,
                    ordering_to_step1_pathdec, reduce_cutwidth_to_treewidth)
from .graph import Graph, ReductionTrace, _norm, check_regularity, contract_low_degree


# --------------------------------------------------------------------------- gadgets

def _degree_gadgets(g: Graph, targets, d: int):
    """Attach one degree gadget per entry of ``targets``; returns graph and new id lists."""
    if d < 3:
        raise ValueError("gadget degree must be at least 3")
    edges = set(g.edges)
    verts = set(g.vertices)
    base = max(g.vertices) + 1
    made = []
    for v in targets:
        if v not in g.vertices:
            raise KeyError(f"unknown vertex {v}")
        new = list(range(base, base + d + 1))
        base += d + 1
        x, y = new[0], new[1]
        for i, a in enumerate(new):
            for b in new[i + 1:]:
                if (a, b) != (x, y):
                    edges.add((a, b))
        edges.update({_norm(v, x), _norm(v, y)})
        verts.update(new)
        made.append((v, new))
    return Graph(frozenset(verts), frozenset(edges)), made


def attach_degree_gadget(g: Graph, v: int, d: int) -> Graph:
    """Raise the degree of ``v`` by two.

    Adds ``d + 1`` fresh vertices ``x, y, z_1..z_{d-1}`` (ids from ``max + 1``
    on) forming a clique minus the edge ``{x, y}``, and joins ``x`` and ``y``
    to ``v``.  Every new vertex ends with degree ``d``.
    """
    return _degree_gadgets(g, [v], d)[0]


def _gadget_bags(v: int, new: list[int]) -> tuple[frozenset, frozenset]:
    x, y = new[0], new[1]
    return frozenset(new), frozenset((v, x, y))


def _edge_gadgets(g: Graph, pairs):
    edges = set(g.edges)
    verts = set(g.vertices)
    base = max(g.vertices) + 1
    made = []
    for v, w in pairs:
        e = _norm(v, w)
        if e not in g.edges:
            raise KeyError(f"{e} is not an edge")
        a, b, c, d, x = five = list(range(base, base + 5))
        base += 5
        edges.discard(e)
        for i, p in enumerate(five):
            for q in five[i + 1:]:
                if (p, q) not in ((a, b), (c, d)):
                    edges.add((p, q))
        edges.update({_norm(v, a), _norm(v, c), _norm(w, b), _norm(w, d)})
        verts.update(five)
        made.append((v, w, five))
    return Graph(frozenset(verts), frozenset(edges)), made


def attach_edge_gadget(g: Graph, v: int, w: int) -> Graph:
    """Raise the degrees of adjacent ``v`` and ``w`` by one each.

    The edge ``{v, w}`` is replaced by five fresh vertices ``a, b, c, d, e``
    (ids from ``max + 1``) spanning a 5-clique minus the edges ``{a, b}`` and
    ``{c, d}``; ``v`` joins ``a`` and ``c``, ``w`` joins ``b`` and ``d``.  All
    new vertices get degree 4.  Contracting ``a`` into ``v`` and ``d`` into
    ``w`` restores the edge, and the bags ``{v, w, a, b, c, d}`` and
    ``{a, b, c, d, e}`` cover the gadget, so treewidth is unchanged once it is
    at least 5.
    """
    return _edge_gadgets(g, [(v, w)])[0]


def build_d_regular_instance(g: Graph, d: int) -> Graph:
    """Attach ``(d - 3) / 2`` gadgets to every vertex of a cubic graph (odd d)
    or ``(d - 4) / 2`` to every vertex of a 4-regular graph (even d)."""
    base = 3 if d % 2 else 4
    if d < base:
        raise ValueError(f"d must be at least {base}")
    if not check_regularity(g, base):
        raise ValueError(f"d = {d} needs a {base}-regular input graph")
    copies = (d - base) // 2
    return _degree_gadgets(g, [v for v in sorted(g.vertices) for _ in range(copies)], d)[0]


# --------------------------------------------------------------------------- regular pipelines

def _attach_with_bags(g: Graph, td: TreeDecomposition, d: int, copies: int):
    """Attach degree gadgets to every original vertex and extend the decomposition."""
    bags = list(td.bags)
    edges = list(td.edges)
    home = {}
    for i, bag in enumerate(bags):
        for v in bag:
            home.setdefault(v, i)
    out, made = _degree_gadgets(g, [v for v in sorted(g.vertices) for _ in range(copies)], d)
    for v, new in made:
        inner, link = _gadget_bags(v, new)
        bags += [link, inner]
        edges += [(home[v], len(bags) - 2), (len(bags) - 2, len(bags) - 1)]
    return out, TreeDecomposition(tuple(bags), tuple(edges))


def reduce_to_four_regular(g: Graph, order: LinearOrdering, rows: int | None = None,
                           cols: int | None = None) -> PipelineResult:
    """Grid variant of the cubic pipeline, producing a 4-regular graph.

    Walls become full grids, clique vertices become 9-vertex trees (root with
    two children of three leaves each) whose roots are paired up within each
    side, degree-<=2 vertices are contracted, and the remaining degree-3
    vertices are perfectly matched and each matched edge is replaced by
    :func:`attach_edge_gadget`.  Root pairs and the matching are chosen in id
    order.
    """
    s1 = build_step1(g)
    k = cutwidth_of_ordering(g, order)
    target = 3 * g.n + k + 2
    pd1 = ordering_to_step1_pathdec(s1, order)
    s2 = build_step2(s1, rows, cols, lattice="grid")
    pd2 = lift_pathdec_to_step2(s2, pd1)
    s3 = build_step3(s2, shape="ternary")
    pairs = []
    for side in (s1.a_side, s1.b_side):
        pairs += list(zip(side[0::2], side[1::2]))
    g3 = s3.graph.add_edges(pairs)
    td3 = lift_decomposition_to_step3(s3, pd2, strict=False)
    if pd2.width < LEAF_BAG_SIZE - 1:
        td3 = _compact_leaves(g3, td3, g.n)
    g4, survivor = contract_low_degree(g3)
    td4 = td3.rename(survivor)
    low = [v for v in sorted(g4.vertices) if g4.degree(v) == 3]
    matching = nx.max_weight_matching(g4.induced(low).to_networkx(), maxcardinality=True)
    if 2 * len(matching) != len(low):
        raise ValueError("degree-3 vertices admit no perfect matching")
    bags = list(td4.bags)
    edges = list(td4.edges)
    home = {}
    for i, bag in enumerate(bags):
        for v in bag:
            home.setdefault(v, []).append(i)
    out, made = _edge_gadgets(g4, sorted(_norm(*e) for e in matching))
    for v, w, (a, b, c, d, x) in made:
        host = next(i for i in home[v] if w in bags[i])
        bags += [frozenset((v, w, a, b, c, d)), frozenset((a, b, c, d, x))]
        edges += [(host, len(bags) - 2), (len(bags) - 2, len(bags) - 1)]
    td = TreeDecomposition(tuple(bags), tuple(edges))
    verify_tree_decomposition(out, td)
    roles = {v: s3.trace.roles.get(v, ("gadget",)) for v in out.vertices}
    trace = ReductionTrace(roles, survivor)
    valid = g.n >= EXACTNESS_MIN_VERTICES and s2.faithful_dimensions
    return PipelineResult(out, target, td, (s1.trace, s2.trace, s3.trace, trace), valid, (s1, s2, s3), k)


def reduce_to_d_regular(g: Graph, order: LinearOrdering, d: int, rows: int | None = None,
                        cols: int | None = None) -> PipelineResult:
    """Cubic (odd d) or 4-regular (even d) pipeline followed by degree gadgets."""
    if d < 3:
        raise ValueError("d must be at least 3")
    if d % 2:
        base = reduce_cutwidth_to_treewidth(g, order, rows, cols)
        copies = (d - 3) // 2
    else:
        base = reduce_to_four_regular(g, order, rows, cols)
        copies = (d - 4) // 2
    if copies == 0:
        return base
    out, td = _attach_with_bags(base.graph, base.certificate, d, copies)
    verify_tree_decomposition(out, td)
    trace = ReductionTrace({v: base.traces[-1].roles.get(v, ("gadget",)) for v in out.vertices})
    return PipelineResult(out, base.target_width, td, base.traces + (trace,), base.validity_flag,
                          base.steps, base.cutwidth)


# --------------------------------------------------------------------------- 3D grid

@dataclass(frozen=True)
class GridEmbedding:
    """Subdivision of a cubic graph drawn as an induced subgraph of a 3D grid."""

    coords: dict  # host vertex -> (x, y, z)
    dims: tuple
    host_graph: Graph
    branch: dict  # source vertex -> host vertex of degree 3
    edge_paths: dict  # source edge -> host vertices strictly inside its path


def embed_3d_grid(g: Graph) -> GridEmbedding:
    """Embed a subdivision of cubic ``g`` into the (6n-1) x (3n+1) x 3 grid.

    The i-th vertex (sorted id order) is the path ``(6i..6i+4, 0, 0)``; its
    neighbours in increasing id order use the ports ``x = 6i, 6i+2, 6i+4``.
    The k-th edge (1-based, sorted) climbs from both ports to height ``y = 2k``
    and is bridged at ``z = 2``.
    """
    if g.n == 0 or not check_regularity(g, 3):
        raise ValueError("embedding needs a cubic graph")
    verts = sorted(g.vertices)
    index = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    port = {}
    for v in verts:
        for a, w in enumerate(sorted(g.neighbors(v))):
            port[v, w] = 6 * index[v] + 2 * a
    cell_id: dict = {}

    def cell(p):
        if p not in cell_id:
            cell_id[p] = len(cell_id)
        return cell_id[p]

    edges = set()
    branch = {}
    for v in verts:
        i = index[v]
        row = [cell((x, 0, 0)) for x in range(6 * i, 6 * i + 5)]
        edges.update(zip(row, row[1:]))
        branch[v] = row[2]
    edge_paths = {}
    for k, (u, w) in enumerate(sorted(g.edges), 1):
        xu, xw = port[u, w], port[w, u]
        pts = [(xu, y, 0) for y in range(0, 2 * k + 1)]
        pts += [(xu, 2 * k, 1)]
        step = 1 if xw >= xu else -1
        pts += [(x, 2 * k, 2) for x in range(xu, xw + step, step)]
        pts += [(xw, 2 * k, 1)]
        pts += [(xw, y, 0) for y in range(2 * k, -1, -1)]
        ids = [cell(p) for p in pts]
        edges.update(zip(ids, ids[1:]))
        # inner vertices: everything off the two vertex rows plus the row cells between branch and port
        inner = [cell(p) for p in pts if p[1] > 0 or p[2] > 0]
        for v, x in ((u, xu), (w, xw)):
            b = 6 * index[v] + 2
            lo, hi = sorted((x, b))
            inner += [cell((t, 0, 0)) for t in range(lo, hi + 1) if t != b]
        edge_paths[u, w] = tuple(inner)
    host = Graph(frozenset(cell_id.values()), frozenset(_norm(a, b) for a, b in edges))
    coords = {i: p for p, i in cell_id.items()}
    return GridEmbedding(coords, (6 * n - 1, 3 * n + 1, 3), host, branch, edge_paths)


def check_grid_embedding(emb: GridEmbedding) -> list[str]:
    """Return the list of violated embedding invariants (empty when all hold)."""
    problems = []
    dims = emb.dims
    by_point = {p: v for v, p in emb.coords.items()}
    if len(by_point) != len(emb.coords):
        problems.append("two vertices share a grid point")
    for v, p in emb.coords.items():
        if not all(0 <= c < d for c, d in zip(p, dims)):
            problems.append(f"vertex {v} at {p} outside {dims}")
    h = emb.host_graph
    for a, b in h.edges:
        pa, pb = emb.coords[a], emb.coords[b]
        if sum(abs(s - t) for s, t in zip(pa, pb)) != 1:
            problems.append(f"edge {(a, b)} is not a unit grid step")
    for p, v in by_point.items():
        for axis in range(3):
            q = list(p)
            q[axis] += 1
            w = by_point.get(tuple(q))
            if w is not None and not h.has_edge(v, w):
                problems.append(f"grid neighbours {p} and {tuple(q)} are not adjacent")
    if h.max_degree > 3:
        problems.append("host graph is not subcubic")
    return problems


def suppress_to_source(emb: GridEmbedding) -> Graph:
    """Contract every degree-2 host vertex; the result is isomorphic to the source."""
    return contract_low_degree(emb.host_graph)[0]
