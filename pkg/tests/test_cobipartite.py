import networkx as nx
import pytest
from hypothesis import given

import oracles
from strategies import graphs
from widthforge.certificates import (DecompositionError, PathDecomposition, verify_path_decomposition)
from widthforge.cobipartite import build_cobipartite, lift_pathdec, project_decomposition, project_pathdec
from widthforge.graph import Graph, complete_graph, cycle_graph, path_graph
from widthforge.solvers import exact_pathwidth, exact_treewidth


def bags(*sets):
    return PathDecomposition(tuple(frozenset(s) for s in sets))


class TestConstruction:
    def test_k1_gives_k2(self):
        inst = build_cobipartite(Graph.from_edges(1))
        assert inst.graph == complete_graph(2)

    def test_k2_gives_k4(self):
        assert build_cobipartite(complete_graph(2)).graph == complete_graph(4)

    def test_edgeless_triple_gives_prism(self):
        inst = build_cobipartite(Graph.from_edges(3))
        prism = nx.circular_ladder_graph(3)
        assert nx.is_isomorphic(inst.graph.to_networkx(), prism)
        assert exact_treewidth(inst.graph).width == 3

    @given(graphs(max_vertices=7))
    def test_structure(self, g):
        inst = build_cobipartite(g)
        f = inst.graph
        assert f.n == 2 * g.n
        assert f.is_clique(inst.side) and f.is_clique(inst.side_prime)
        assert inst.side | inst.side_prime == f.vertices and not inst.side & inst.side_prime
        cross = {(u, v) for u, v in f.edges if (u in inst.side) != (v in inst.side)}
        assert len(cross) == g.n + 2 * g.m
        for v in g.vertices:
            assert f.has_edge(v, inst.prime(v))
        for u, v in g.edges:
            assert f.has_edge(u, inst.prime(v)) and f.has_edge(v, inst.prime(u))

    def test_sparse_ids(self):
        g = Graph.from_edges([2, 9], [(2, 9)])
        inst = build_cobipartite(g)
        assert inst.prime(2) == 12 and inst.side_prime == {12, 19}


class TestLift:
    def test_single_bag(self):
        inst = build_cobipartite(complete_graph(2))
        lifted = lift_pathdec(inst, bags({0, 1}))
        assert lifted.bags == (frozenset({0, 1, 2, 3}),)

    def test_path_on_three(self):
        inst = build_cobipartite(path_graph(3))
        lifted = lift_pathdec(inst, bags({0, 1}, {1, 2}))
        p = inst.prime
        assert lifted.bags == (frozenset({0, 1, 2, p(0), p(1)}), frozenset({1, 2, p(0), p(1), p(2)}))
        assert verify_path_decomposition(inst.graph, lifted) == 4

    def test_invalid_input_rejected(self):
        inst = build_cobipartite(path_graph(3))
        with pytest.raises(DecompositionError):
            lift_pathdec(inst, bags({0, 1}, {2}))

    @given(graphs(min_vertices=1, max_vertices=7))
    def test_width_grows_by_exactly_n_for_any_valid_pd(self, g):
        # any ordering yields a valid, usually non-optimal, path decomposition
        from widthforge.certificates import ordering_to_pathdec
        pd = ordering_to_pathdec(g, sorted(g.vertices, reverse=True))
        inst = build_cobipartite(g)
        lifted = lift_pathdec(inst, pd)
        assert verify_path_decomposition(inst.graph, lifted) == g.n + pd.width
        assert inst.side <= lifted.bags[0] and inst.side_prime <= lifted.bags[-1]


class TestProject:
    def test_k4_single_bag(self):
        inst = build_cobipartite(complete_graph(2))
        assert project_pathdec(inst, bags({0, 1, 2, 3})).bags == (frozenset({0, 1}),)

    def test_requires_endpoint_cliques(self):
        inst = build_cobipartite(path_graph(2))
        swapped = bags({2, 3, 1}, {0, 1, 3})  # primed side first
        with pytest.raises(DecompositionError):
            project_pathdec(inst, swapped)

    def test_cycle_four_from_optimal_solver_output(self):
        g = cycle_graph(4)
        inst = build_cobipartite(g)
        res = exact_treewidth(inst.graph)
        assert res.width == 6
        back = project_decomposition(inst, res.certificate)
        assert verify_path_decomposition(g, back) == 2

    def test_round_trip_all_graphs_up_to_five(self):
        for vs, es in oracles.atlas(5):
            if not vs:
                continue
            g = Graph.from_edges(vs, es)
            pd = exact_pathwidth(g).certificate
            inst = build_cobipartite(g)
            back = project_pathdec(inst, lift_pathdec(inst, pd))
            assert verify_path_decomposition(g, back) == pd.width

    @given(graphs(min_vertices=1, max_vertices=6))
    def test_projecting_an_optimal_decomposition_stays_within_bound(self, g):
        inst = build_cobipartite(g)
        res = exact_treewidth(inst.graph)
        back = project_decomposition(inst, res.certificate)
        assert verify_path_decomposition(g, back) <= res.width - g.n
