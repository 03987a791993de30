"""Cutwidth on cubic graphs to treewidth on cubic graphs.

The pipeline has four stages, each with its own instance type and a
certificate lift:

1. ``build_step1``: two cliques, three copies per source vertex and two per
   source edge, joined by incidence.  Treewidth = cutwidth + 3n + 2.
2. ``build_step2``: clique edges dropped, each side attached to a
   ``3n x 24n`` brick wall through a matching.
3. ``build_step3``: every clique vertex replaced by an 11-vertex tree, giving
   a subcubic graph.
4. ``build_step4``: degree-<=2 vertices contracted until the graph is cubic.

Vertex id layout (n source vertices, m = 3n/2 edges, source vertices and
edges taken in sorted order):

* step 1: copy ``a`` of the i-th vertex is ``3i + a - 1``; copy ``b`` of the
  k-th edge is ``3n + 2k + b - 1``;
* step 2: left wall cell ``(row, col)`` is ``6n + row * cols + col``, the right
  wall follows with offset ``6n + rows * cols``;
* step 3: clique vertices keep their id as the root of their tree; the ten
  other tree vertices of each root are numbered consecutively after the
  largest step-2 id, roots taken in increasing order.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .certificates import (DecompositionError, LinearOrdering, PathDecomposition,
                           TreeDecomposition, cutwidth_of_ordering, pathify_between_cliques,
                           verify_path_decomposition, verify_tree_decomposition)
from .graph import (Graph, MinorWitness, ReductionTrace, check_regularity, contract_low_degree,
                    grid_graph)

# below this many source vertices the walls are too narrow to force the reverse direction
EXACTNESS_MIN_VERTICES = 22
LEAF_BAG_SIZE = 69


# --------------------------------------------------------------------------- step 1

@dataclass(frozen=True)
class Step1Instance:
    source: Graph
    graph: Graph
    a_sets: dict
    b_sets: dict
    trace: ReductionTrace

    @property
    def a_side(self) -> list[int]:
        return [x for v in sorted(self.a_sets) for x in self.a_sets[v]]

    @property
    def b_side(self) -> list[int]:
        return [x for e in sorted(self.b_sets) for x in self.b_sets[e]]

    def incident(self, v: int) -> list[tuple]:
        return [e for e in sorted(self.b_sets) if v in e]


def build_step1(g: Graph) -> Step1Instance:
    if g.n == 0 or not check_regularity(g, 3):
        raise ValueError("source graph must be cubic")
    verts = sorted(g.vertices)
    edges = sorted(g.edges)
    n = len(verts)
    a_sets = {v: (3 * i, 3 * i + 1, 3 * i + 2) for i, v in enumerate(verts)}
    b_sets = {e: (3 * n + 2 * k, 3 * n + 2 * k + 1) for k, e in enumerate(edges)}
    roles = {}
    for v, ids in a_sets.items():
        for a, x in enumerate(ids, 1):
            roles[x] = ("A", v, a)
    for e, ids in b_sets.items():
        for b, x in enumerate(ids, 1):
            roles[x] = ("B", e, b)
    a_side = [x for v in verts for x in a_sets[v]]
    b_side = [x for e in edges for x in b_sets[e]]
    new_edges = set()
    for side in (a_side, b_side):
        for i, x in enumerate(side):
            for y in side[i + 1:]:
                new_edges.add((x, y))
    for e, bs in b_sets.items():
        for v in e:
            for x in a_sets[v]:
                for y in bs:
                    new_edges.add((x, y))
    graph = Graph(frozenset(roles), frozenset(new_edges))
    return Step1Instance(g, graph, a_sets, b_sets, ReductionTrace(roles))


def ordering_to_step1_pathdec(inst: Step1Instance, order: LinearOrdering) -> PathDecomposition:
    """One bag per position i: copies of vertices at position >= i, plus copies
    of every edge with an endpoint at position <= i."""
    cutwidth_of_ordering(inst.source, order)  # validates the permutation
    pos = {v: i for i, v in enumerate(order)}
    bags = []
    for i in range(len(order)):
        bag = set()
        for v in order[i:]:
            bag.update(inst.a_sets[v])
        for e, bs in inst.b_sets.items():
            if min(pos[e[0]], pos[e[1]]) <= i:
                bag.update(bs)
        bags.append(frozenset(bag))
    return PathDecomposition(tuple(bags))


def step1_decomposition_to_ordering(inst: Step1Instance, td) -> tuple:
    """Recover a linear ordering whose cutwidth is at most width(td) - 3n - 2.

    Each source vertex is keyed by the last bag (along the path between the two
    cliques) that still holds all three of its copies; ties break by vertex id.
    """
    if isinstance(td, PathDecomposition):
        td = td.to_tree()
    verify_tree_decomposition(inst.graph, td)
    pd = pathify_between_cliques(inst.graph, td, inst.a_side, inst.b_side)
    key = {}
    for v, copies in inst.a_sets.items():
        key[v] = max(i for i, bag in enumerate(pd.bags) if set(copies) <= bag)
    return tuple(sorted(inst.source.vertices, key=lambda v: (key[v], v)))


# --------------------------------------------------------------------------- walls

@dataclass(frozen=True)
class BrickWall:
    """Brick wall with ``rows x cols`` cells; cell ``(r, c)`` has id ``r * cols + c``.

    Horizontal edges run along every row; the vertical edge between rows r and
    r+1 exists at column c exactly when ``r + c`` is even.  With
    ``lattice="grid"`` every vertical edge is present.
    """

    graph: Graph
    rows: int
    cols: int
    lattice: str = "brick"

    def vertex(self, r: int, c: int) -> int:
        return r * self.cols + c

    def column(self, c: int) -> list[int]:
        return [self.vertex(r, c) for r in range(self.rows)]

    @property
    def coords(self) -> dict:
        return {self.vertex(r, c): (r, c) for r in range(self.rows) for c in range(self.cols)}


def build_brick_wall(rows: int, cols: int, lattice: str = "brick") -> BrickWall:
    if rows < 2 or cols < 2:
        raise ValueError("brick wall needs at least 2 rows and 2 columns")
    if lattice == "grid":
        return BrickWall(grid_graph(rows, cols), rows, cols, lattice)
    if lattice != "brick":
        raise ValueError(f"unknown lattice {lattice!r}")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows and (r + c) % 2 == 0:
                edges.append((v, v + cols))
    return BrickWall(Graph.from_edges(rows * cols, edges), rows, cols, lattice)


def _column_sweep(columns: list[list[int]]) -> list[frozenset]:
    bags = [frozenset(columns[0])]
    for cur, nxt in zip(columns, columns[1:]):
        for i in range(len(cur)):
            bags.append(frozenset(nxt[:i + 1] + cur[i:]))
        bags.append(frozenset(nxt))
    return bags


def brick_wall_pathdec(wall: BrickWall) -> PathDecomposition:
    """Column sweep: starts at the first column, ends at the last, width = rows."""
    return PathDecomposition(tuple(_column_sweep([wall.column(c) for c in range(wall.cols)])))


# --------------------------------------------------------------------------- step 2

@dataclass(frozen=True)
class Step2Instance:
    step1: Step1Instance
    graph: Graph
    trace: ReductionTrace
    rows: int
    cols: int
    left: dict  # (row, col) -> id
    right: dict
    lattice: str = "brick"

    @property
    def faithful_dimensions(self) -> bool:
        n = self.step1.source.n
        return self.rows == 3 * n and self.cols == 24 * n

    def left_column(self, c: int) -> list[int]:
        return [self.left[r, c] for r in range(self.rows)]

    def right_column(self, c: int) -> list[int]:
        return [self.right[r, c] for r in range(self.rows)]


def build_step2(inst: Step1Instance, rows: int | None = None, cols: int | None = None,
                lattice: str = "brick") -> Step2Instance:
    """Drop the two cliques and hang a wall off each side.

    Row i of the left wall's last column is matched to the i-th clique vertex
    of the first side (id order); row i of the right wall's first column to the
    i-th vertex of the second side.
    """
    n = inst.source.n
    rows = 3 * n if rows is None else rows
    cols = 24 * n if cols is None else cols
    if rows != 3 * n:
        raise ValueError(f"walls need exactly 3n = {3 * n} rows to match the clique sides")
    wall = build_brick_wall(rows, cols, lattice)
    a_side, b_side = inst.a_side, inst.b_side
    a_set, b_set = set(a_side), set(b_side)
    edges = {e for e in inst.graph.edges
             if not (e[0] in a_set and e[1] in a_set) and not (e[0] in b_set and e[1] in b_set)}
    roles = dict(inst.trace.roles)
    base = 6 * n
    left, right = {}, {}
    for name, offset, table in (("left", base, left), ("right", base + rows * cols, right)):
        for v, (r, c) in wall.coords.items():
            table[r, c] = offset + v
            roles[offset + v] = ("wall", name, r, c)
        edges.update((offset + u, offset + w) for u, w in wall.graph.edges)
    for i in range(rows):
        edges.add((a_side[i], left[i, cols - 1]))
        edges.add((b_side[i], right[i, 0]))
    graph = Graph(frozenset(roles), frozenset(edges))
    return Step2Instance(inst, graph, ReductionTrace(roles), rows, cols, left, right, lattice)


def lift_pathdec_to_step2(inst: Step2Instance, pd: PathDecomposition) -> PathDecomposition:
    """Left wall sweep, swap into the first side, the given bags, swap out of the
    second side, right wall sweep.  Width = max(width(pd), rows)."""
    s1 = inst.step1
    verify_path_decomposition(s1.graph, pd)
    a_side, b_side = s1.a_side, s1.b_side
    if not (set(a_side) <= pd.bags[0] and set(b_side) <= pd.bags[-1]):
        raise DecompositionError("path", None, "first bag must hold the first clique side and last bag the second")
    if pd.width < inst.rows:
        raise ValueError(f"decomposition width {pd.width} is below the wall height {inst.rows}")
    left_cols = [inst.left_column(c) for c in range(inst.cols)]
    right_cols = [inst.right_column(c) for c in range(inst.cols)]
    bags = _column_sweep(left_cols)
    matched = left_cols[-1]
    for i in range(inst.rows):
        bags.append(frozenset(a_side[:i + 1] + matched[i:]))
    bags.extend(pd.bags)
    matched = right_cols[0]
    for i in range(inst.rows):
        bags.append(frozenset(matched[:i + 1] + b_side[i:]))
    bags.extend(_column_sweep(right_cols))
    return PathDecomposition(tuple(bags))


def wall_row_witness(inst: Step2Instance) -> MinorWitness:
    """Each clique vertex absorbs the wall row it is matched to."""
    a_side, b_side = inst.step1.a_side, inst.step1.b_side
    bs = {}
    for i in range(inst.rows):
        bs[a_side[i]] = frozenset([a_side[i]] + [inst.left[i, c] for c in range(inst.cols)])
        bs[b_side[i]] = frozenset([b_side[i]] + [inst.right[i, c] for c in range(inst.cols)])
    return MinorWitness(bs)


# --------------------------------------------------------------------------- step 3

@dataclass(frozen=True)
class Step3Instance:
    step2: Step2Instance
    graph: Graph
    trace: ReductionTrace
    gadgets: dict  # clique vertex -> tuple of tree vertices, root first
    halves: dict = field(default_factory=dict)  # (edge copy, endpoint) -> endpoint-side subtree

    def leaf_bag(self, v: int) -> frozenset:
        """Trees of v's three copies plus, for each incident edge copy, its root and v-side subtree."""
        s1 = self.step2.step1
        bag = set()
        for x in s1.a_sets[v]:
            bag.update(self.gadgets[x])
        for e in s1.incident(v):
            for y in s1.b_sets[e]:
                bag.add(y)
                bag.update(self.halves[y, v])
        return frozenset(bag)

    def anchor(self, v: int) -> frozenset:
        s1 = self.step2.step1
        out = set(s1.a_sets[v])
        for e in s1.incident(v):
            out.update(s1.b_sets[e])
        return frozenset(out)


def _tree_shape(shape: str, ids: list[int]):
    """Return (edges, side_children) for a tree rooted at ids[0].

    ``binary``: root -> two children; each child -> a leaf and an inner vertex
    with two leaves (11 vertices, root degree 2, inner degree 3).
    ``ternary``: root -> two children with three leaves each (9 vertices).
    Each side is reported as (subtree vertices, leaves in wiring order).
    """
    root = ids[0]
    edges = []
    sides = []
    if shape == "binary":
        for k in range(2):
            c, l1, y, l2, l3 = ids[1 + 5 * k: 6 + 5 * k]
            edges += [(root, c), (c, l1), (c, y), (y, l2), (y, l3)]
            sides.append(((c, l1, y, l2, l3), (l1, l2, l3)))
    elif shape == "ternary":
        for k in range(2):
            c, l1, l2, l3 = ids[1 + 4 * k: 5 + 4 * k]
            edges += [(root, c), (c, l1), (c, l2), (c, l3)]
            sides.append(((c, l1, l2, l3), (l1, l2, l3)))
    else:
        raise ValueError(f"unknown tree shape {shape!r}")
    return edges, sides


TREE_SIZE = {"binary": 11, "ternary": 9}


def build_step3(inst: Step2Instance, shape: str = "binary") -> Step3Instance:
    """Replace every clique vertex by a tree with six leaves.

    A tree for edge copy e^b of edge {v, w} (v < w) puts the three leaves
    wired to v's copies under the first child and those wired to w's copies
    under the second.  A tree for vertex copy v^a lists its six leaves in the
    order of (incident edge, copy index); leaf-to-leaf edges replace the old
    incidence edges.
    """
    s1 = inst.step1
    g2 = inst.graph
    clique_vertices = sorted(s1.trace.roles)
    next_id = max(g2.vertices) + 1
    size = TREE_SIZE[shape]
    roles = dict(inst.trace.roles)
    edges = {e for e in g2.edges if not (e[0] in s1.trace.roles and e[1] in s1.trace.roles)}
    gadgets, halves, side_leaves = {}, {}, {}
    for x in clique_vertices:
        ids = [x] + list(range(next_id, next_id + size - 1))
        next_id += size - 1
        tree_edges, sides = _tree_shape(shape, ids)
        edges.update(tree_edges)
        gadgets[x] = tuple(ids)
        for k, y in enumerate(ids[1:], 1):
            roles[y] = ("tree", x, k)
        side_leaves[x] = [leaf for _, leaves in sides for leaf in leaves]
        kind = roles[x]
        if kind[0] == "B":
            for endpoint, (sub, _) in zip(kind[1], sides):
                halves[x, endpoint] = frozenset(sub)
    # wiring: leaf slot for (vertex copy, edge copy) on both trees
    for v, copies in s1.a_sets.items():
        slots = [(e, y) for e in s1.incident(v) for y in s1.b_sets[e]]
        for a, x in enumerate(copies):
            for k, (e, y) in enumerate(slots):
                side = 0 if v == e[0] else 1
                edges.add((side_leaves[x][k], side_leaves[y][3 * side + a]))
    graph = Graph(frozenset(roles), frozenset(edges))
    return Step3Instance(inst, graph, ReductionTrace(roles), gadgets, halves)


def gadget_witness(inst: Step3Instance) -> MinorWitness:
    """Contract every tree to its root; wall vertices stay singletons."""
    bs = {v: frozenset([v]) for v in inst.step2.graph.vertices}
    for x, ids in inst.gadgets.items():
        bs[x] = frozenset(ids)
    return MinorWitness(bs)


def lift_decomposition_to_step3(inst: Step3Instance, pd: PathDecomposition, strict: bool = True) -> TreeDecomposition:
    """Keep the bags (roots carry the old ids) and hang one leaf bag per source vertex.

    The leaf bag for v is attached to the first bag holding v's three copies and
    both copies of each incident edge.  Each leaf bag has 69 vertices for the
    binary tree shape, so the width is preserved only when it is at least 68;
    ``strict`` raises below that instead of returning a wider decomposition.
    """
    s2 = inst.step2
    width = verify_path_decomposition(s2.graph, pd)
    s1 = s2.step1
    leaf_bags = {v: inst.leaf_bag(v) for v in sorted(s1.source.vertices)}
    need = max(len(b) for b in leaf_bags.values()) - 1
    if strict and width < need:
        raise ValueError(f"width {width} is below {need}; leaf bags would widen the decomposition")
    bags = list(pd.bags)
    edges = [(i, i + 1) for i in range(len(bags) - 1)]
    for v, leaf in leaf_bags.items():
        anchor = inst.anchor(v)
        host = next((i for i, b in enumerate(pd.bags) if anchor <= b), None)
        if host is None:
            raise DecompositionError("edge", tuple(sorted(anchor)),
                                     f"no bag holds all copies around source vertex {v}")
        edges.append((host, len(bags)))
        bags.append(leaf)
    return TreeDecomposition(tuple(bags), tuple(edges))


def _min_fill_order(g: Graph, movable: set) -> list[int]:
    """Greedy min-fill over ``movable`` (ties: fewest neighbours, then smallest id)."""
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    order = []
    remaining = set(movable)
    while remaining:
        def fill(v):
            ns = list(adj[v])
            missing = sum(1 for i, a in enumerate(ns) for b in ns[i + 1:] if b not in adj[a])
            return (missing, len(ns), v)
        v = min(remaining, key=fill)
        remaining.discard(v)
        ns = adj.pop(v)
        for a in ns:
            adj[a].discard(v)
            adj[a].update(ns - {a})
        order.append(v)
    return order


def compact_leaf_bag(g: Graph, td: TreeDecomposition, node: int) -> TreeDecomposition:
    """Replace a leaf bag by a decomposition of the subgraph it covers.

    Vertices shared with the neighbouring bag stay together in one bag that is
    attached where the leaf was; the leaf's private vertices are eliminated by
    greedy min-fill.  Validity is unchanged; width may drop.
    """
    from .solvers import elimination_decomposition

    nb = td.neighbors()[node]
    if len(nb) != 1:
        raise ValueError(f"node {node} is not a leaf")
    (parent,) = nb
    bag = td.bags[node]
    shared = bag & td.bags[parent]
    local = g.induced(bag).add_clique(shared)
    order = _min_fill_order(local, set(bag - shared))
    order += sorted(shared)
    sub = elimination_decomposition(local, order)
    keep = [i for i in range(len(td.bags)) if i != node]
    remap = {old: new for new, old in enumerate(keep)}
    bags = [td.bags[i] for i in keep]
    edges = [(remap[a], remap[b]) for a, b in td.edges if node not in (a, b)]
    offset = len(bags)
    bags.extend(sub.bags)
    edges.extend((a + offset, b + offset) for a, b in sub.edges)
    joint = next(i for i, b in enumerate(sub.bags) if shared <= b)
    edges.append((remap[parent], joint + offset))
    return TreeDecomposition(tuple(bags), tuple(edges))


# --------------------------------------------------------------------------- step 4

@dataclass(frozen=True)
class Step4Instance:
    step3: Step3Instance
    graph: Graph
    trace: ReductionTrace

    def lift(self, td: TreeDecomposition) -> TreeDecomposition:
        return td.rename(self.trace.merged)

    def witness(self) -> MinorWitness:
        """Each surviving vertex with the set of vertices merged into it."""
        bs: dict = {}
        for v, s in self.trace.merged.items():
            bs.setdefault(s, set()).add(v)
        return MinorWitness(bs)


def build_step4(inst: Step3Instance) -> Step4Instance:
    g4, survivor = contract_low_degree(inst.graph)
    roles = {v: inst.trace.roles[v] for v in g4.vertices}
    return Step4Instance(inst, g4, ReductionTrace(roles, survivor))


# --------------------------------------------------------------------------- pipeline

@dataclass(frozen=True)
class PipelineResult:
    graph: Graph
    target_width: int
    certificate: TreeDecomposition
    traces: tuple
    validity_flag: bool
    steps: tuple = ()
    cutwidth: int = 0

    @property
    def g4(self) -> Graph:
        return self.graph


def _compact_leaves(g: Graph, td: TreeDecomposition, count: int) -> TreeDecomposition:
    # the last ``count`` nodes are the hung leaf bags; compact from the back so indices stay put
    for node in range(len(td.bags) - 1, len(td.bags) - 1 - count, -1):
        td = compact_leaf_bag(g, td, node)
    return td


def reduce_cutwidth_to_treewidth(g: Graph, order: LinearOrdering, rows: int | None = None,
                                 cols: int | None = None) -> PipelineResult:
    """Run all four stages and thread the ordering's certificate through them.

    Returns a cubic graph with a verified tree decomposition of width
    ``3n + cutwidth(order) + 2``.  ``validity_flag`` is set only when the walls
    have their full size and n >= 22, the regime where the width of that
    decomposition is also the exact treewidth for an optimal ordering.
    """
    s1 = build_step1(g)
    k = cutwidth_of_ordering(g, order)
    target = 3 * g.n + k + 2
    pd1 = ordering_to_step1_pathdec(s1, order)
    s2 = build_step2(s1, rows, cols)
    pd2 = lift_pathdec_to_step2(s2, pd1)
    s3 = build_step3(s2)
    td3 = lift_decomposition_to_step3(s3, pd2, strict=False)
    if pd2.width < LEAF_BAG_SIZE - 1:
        td3 = _compact_leaves(s3.graph, td3, g.n)
    s4 = build_step4(s3)
    td4 = s4.lift(td3)
    verify_tree_decomposition(s4.graph, td4)
    valid = g.n >= EXACTNESS_MIN_VERTICES and s2.faithful_dimensions
    return PipelineResult(s4.graph, target, td4, (s1.trace, s2.trace, s3.trace, s4.trace),
                          valid, (s1, s2, s3, s4), k)
