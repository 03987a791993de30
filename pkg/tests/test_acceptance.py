"""End-to-end acceptance checks, one test per criterion.

Each test records a PASS/FAIL line (shown in the terminal summary) before
asserting, so a single run reports every criterion.
"""
import random
import time
from itertools import permutations

import networkx as nx

import oracles
from widthforge.certificates import (cutwidth_of_ordering, vertex_separation_of_ordering,
                                     verify_path_decomposition, verify_tree_decomposition)
from widthforge.cobipartite import build_cobipartite
from widthforge.cubic import (brick_wall_pathdec, build_brick_wall, build_step1, gadget_witness,
                              ordering_to_step1_pathdec, reduce_cutwidth_to_treewidth,
                              step1_decomposition_to_ordering, wall_row_witness)
from widthforge.graph import (Graph, check_regularity, complete_bipartite, complete_graph, cube_graph, quotient,
                              verify_minor_witness)
from widthforge.solvers import exact_cutwidth, exact_pathwidth, exact_treewidth
from widthforge.special import attach_degree_gadget, check_grid_embedding, embed_3d_grid, suppress_to_source


def atlas_graphs(max_vertices, connected=False):
    for vs, es in oracles.atlas(max_vertices):
        g = Graph.from_edges(vs, es)
        if g.n and (not connected or g.is_connected()):
            yield g


def test_cobipartite_width_identity(record_criterion):
    start = time.perf_counter()
    bad = []
    count = 0
    for g in atlas_graphs(5, connected=True):
        f = build_cobipartite(g).graph
        want = g.n + exact_pathwidth(g).width
        got = (exact_treewidth(f).width, exact_pathwidth(f).width)
        if got != (want, want):
            bad.append((sorted(g.edges), got, want))
        count += 1
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    record_criterion(1, ok, f"{count} connected graphs, {len(bad)} mismatches, {elapsed:.1f}s")
    assert ok, bad[:3]


def test_step1_treewidth_of_k4(record_criterion):
    start = time.perf_counter()
    k4 = complete_graph(4)
    cw = exact_cutwidth(k4).width
    res = exact_treewidth(build_step1(k4).graph)
    elapsed = time.perf_counter() - start
    ok = cw == 4 and res.width == 18 == cw + 3 * 4 + 2 and elapsed <= 600
    record_criterion(2, ok, f"tw={res.width}, cw(K4)={cw}, {elapsed:.1f}s")
    assert ok


def test_step1_certificate_lifts(record_criterion):
    failures = []
    for name, g in (("K4", complete_graph(4)), ("K33", complete_bipartite(3, 3)), ("cube", cube_graph())):
        inst = build_step1(g)
        rnd = random.Random(2024)
        for trial in range(50):
            order = sorted(g.vertices)
            rnd.shuffle(order)
            k = cutwidth_of_ordering(g, order)
            width = verify_path_decomposition(inst.graph, ordering_to_step1_pathdec(inst, order))
            back = step1_decomposition_to_ordering(inst, ordering_to_step1_pathdec(inst, order))
            if width != 3 * g.n + k + 2 or cutwidth_of_ordering(g, back) > k:
                failures.append((name, trial))
    ok = not failures
    record_criterion(3, ok, f"150 orderings, {len(failures)} failures")
    assert ok, failures[:5]


def test_brick_wall_decompositions(record_criterion):
    failures = []
    for r in range(2, 7):
        for c in range(2, 7):
            wall = build_brick_wall(r, c)
            pd = brick_wall_pathdec(wall)
            width = verify_path_decomposition(wall.graph, pd)
            ends = pd.bags[0] == set(wall.column(0)) and pd.bags[-1] == set(wall.column(c - 1))
            tw_ok = r * c > 20 or exact_treewidth(wall.graph).width <= c
            if width > c or not ends or not tw_ok:
                failures.append((r, c, width))
    ok = not failures
    record_criterion(4, ok, f"25 walls, failing (rows, cols, width): {failures}")
    assert ok


def test_k4_pipeline_integrity(record_criterion):
    k4 = complete_graph(4)
    res = reduce_cutwidth_to_treewidth(k4, exact_cutwidth(k4).certificate)
    s1, s2, s3, s4 = res.steps
    regular = check_regularity(res.g4, 3)
    width = verify_tree_decomposition(res.g4, res.certificate)
    rows = wall_row_witness(s2)
    restored = quotient(s2.graph, rows).add_clique(s1.a_side).add_clique(s1.b_side)
    rows_ok = verify_minor_witness(s2.graph, quotient(s2.graph, rows), rows) and s1.graph.edges <= restored.edges
    trees = gadget_witness(s3)
    trees_ok = verify_minor_witness(s3.graph, s2.graph, trees)
    composed = trees.compose(rows)
    composed_ok = verify_minor_witness(s3.graph, quotient(s2.graph, rows), composed)
    contraction_ok = verify_minor_witness(s3.graph, res.g4, s4.witness())
    ok = regular and width == 18 and rows_ok and trees_ok and composed_ok and contraction_ok
    record_criterion(5, ok, f"3-regular={regular}, width={width}, rows={rows_ok}, trees={trees_ok}, "
                            f"composed={composed_ok}, contraction={contraction_ok}")
    assert ok


def test_degree_gadget_preserves_treewidth(record_criterion):
    checked = 0
    bad = []
    widths = {}
    for g in atlas_graphs(7):
        widths[g] = exact_treewidth(g).width
    for d in (3, 4):
        for g, tw in widths.items():
            if tw < d:
                continue
            for v in sorted(g.vertices):
                checked += 1
                if exact_treewidth(attach_degree_gadget(g, v, d)).width != tw:
                    bad.append((d, sorted(g.edges), v))
    ok = not bad and checked > 0
    record_criterion(6, ok, f"{checked} (host, vertex, d) cases, {len(bad)} changed")
    assert ok, bad[:3]


def test_grid_embeddings(record_criterion):
    start = time.perf_counter()
    notes = []
    for name, g in (("K4", complete_graph(4)), ("K33", complete_bipartite(3, 3))):
        emb = embed_3d_grid(g)
        n = g.n
        problems = check_grid_embedding(emb)
        if emb.dims != (6 * n - 1, 3 * n + 1, 3):
            problems.append(f"dims {emb.dims}")
        longest = max(len(p) for p in emb.edge_paths.values())
        if longest > 12 * n + 5:
            problems.append(f"edge subdivided {longest} times")
        if not nx.is_isomorphic(suppress_to_source(emb).to_networkx(), g.to_networkx()):
            problems.append("suppression is not isomorphic to the source")
        notes.append(f"{name}: {len(problems)} problems")
        if problems:
            notes.extend(problems)
    elapsed = time.perf_counter() - start
    ok = all(note.endswith(": 0 problems") for note in notes) and elapsed < 10
    record_criterion(7, ok, f"{'; '.join(notes)}, {elapsed:.2f}s")
    assert ok


def test_oracle_cross_validation(record_criterion):
    bad = []
    count = 0
    for g in atlas_graphs(6):
        verts = sorted(g.vertices)
        pw = exact_pathwidth(g).width
        tw = exact_treewidth(g).width
        naive_pw = min(vertex_separation_of_ordering(g, p) for p in permutations(verts))
        naive_tw = oracles.naive_treewidth(verts, g.edges)
        if pw != naive_pw or tw != naive_tw or tw > pw:
            bad.append((sorted(g.edges), tw, naive_tw, pw, naive_pw))
        count += 1
    ok = not bad
    record_criterion(8, ok, f"{count} graphs, {len(bad)} disagreements")
    assert ok, bad[:3]
