import json
from pathlib import Path

import networkx as nx
import pytest
from hypothesis import given, settings

import oracles
from strategies import graphs
from widthforge.certificates import cutwidth_of_ordering, verify_path_decomposition, verify_tree_decomposition
from widthforge.graph import Graph, complete_bipartite, complete_graph, cycle_graph, grid_graph, path_graph
from widthforge.solvers import (BudgetExceeded, elimination_decomposition, exact_cutwidth, exact_pathwidth,
                                exact_treewidth)

GOLDEN = json.loads((Path(__file__).parent / "golden" / "widths.json").read_text())


def binary_tree_height_two():
    return Graph.from_networkx(nx.balanced_tree(2, 2))


class TestKnownValues:
    @pytest.mark.parametrize("g, tw, pw", [
        (complete_graph(4), 3, 3),
        (complete_graph(5), 4, 4),
        (grid_graph(3, 3), 3, 3),
        (binary_tree_height_two(), 1, 1),
        (cycle_graph(4), 2, 2),
        (path_graph(5), 1, 1),
        (Graph.from_edges(3), 0, 0),
    ])
    def test_treewidth_and_pathwidth(self, g, tw, pw):
        assert exact_treewidth(g).width == tw
        assert exact_pathwidth(g).width == pw

    def test_cutwidth(self):
        assert exact_cutwidth(path_graph(5)).width == 1
        assert exact_cutwidth(complete_graph(4)).width == 4

    def test_empty_graph(self):
        empty = Graph.from_edges(0)
        assert exact_treewidth(empty).width == -1
        assert exact_pathwidth(empty).width == -1

    def test_k33_golden_values(self):
        g = complete_bipartite(3, 3)
        cw = exact_cutwidth(g)
        assert cw.width == GOLDEN["k33_cutwidth"] == oracles.naive_cutwidth(g.vertices, g.edges)
        assert exact_pathwidth(g).width == GOLDEN["k33_pathwidth"]
        assert exact_treewidth(g).width == GOLDEN["k33_treewidth"]

    def test_ties_break_to_smallest_ordering(self):
        # every ordering of an edgeless graph is optimal; the identity is smallest
        assert exact_cutwidth(Graph.from_edges(4)).certificate == (0, 1, 2, 3)
        assert exact_cutwidth(path_graph(4)).certificate == (0, 1, 2, 3)


class TestBudget:
    def test_budget_exceeded(self):
        with pytest.raises(BudgetExceeded):
            exact_treewidth(path_graph(10), budget=5)

    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv("WIDTHFORGE_BUDGET", "3")
        with pytest.raises(BudgetExceeded):
            exact_pathwidth(path_graph(4))
        monkeypatch.delenv("WIDTHFORGE_BUDGET")
        assert exact_pathwidth(path_graph(4)).width == 1


class TestCertificates:
    @given(graphs(max_vertices=8))
    def test_treewidth_certificate_verifies_at_reported_width(self, g):
        res = exact_treewidth(g)
        if g.n:
            assert verify_tree_decomposition(g, res.certificate) == res.width

    @given(graphs(max_vertices=8))
    def test_pathwidth_certificate_verifies_at_reported_width(self, g):
        res = exact_pathwidth(g)
        if g.n:
            assert verify_path_decomposition(g, res.certificate) == res.width

    @given(graphs(max_vertices=8))
    def test_cutwidth_certificate_achieves_width(self, g):
        res = exact_cutwidth(g)
        assert cutwidth_of_ordering(g, res.certificate) == res.width

    @given(graphs(max_vertices=8))
    def test_tw_at_most_pw(self, g):
        assert exact_treewidth(g).width <= exact_pathwidth(g).width

    def test_disconnected_graph_takes_max(self):
        g = Graph.from_edges(7, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3), (3, 5), (4, 6)])
        assert exact_treewidth(g).width == 3
        assert exact_cutwidth(g).width == 4

    def test_elimination_decomposition_rejects_partial_order(self):
        with pytest.raises(ValueError):
            elimination_decomposition(path_graph(3), [0, 1])


class TestAgainstBruteForce:
    @settings(max_examples=40)
    @given(graphs(max_vertices=6))
    def test_treewidth(self, g):
        assert exact_treewidth(g).width == oracles.naive_treewidth(g.vertices, g.edges)

    @settings(max_examples=40)
    @given(graphs(max_vertices=6))
    def test_pathwidth(self, g):
        assert exact_pathwidth(g).width == oracles.naive_pathwidth(g.vertices, g.edges)

    @settings(max_examples=40)
    @given(graphs(max_vertices=6))
    def test_cutwidth(self, g):
        assert exact_cutwidth(g).width == oracles.naive_cutwidth(g.vertices, g.edges)

    def test_all_seven_vertex_graphs_tw_le_pw(self):
        for vs, es in oracles.atlas(7):
            g = Graph.from_edges(vs, es)
            assert exact_treewidth(g).width <= exact_pathwidth(g).width
