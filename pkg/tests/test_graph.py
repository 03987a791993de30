import networkx as nx
import pytest
from hypothesis import given

from strategies import graphs
from widthforge.graph import (Graph, MinorWitness, check_regularity, complete_bipartite, complete_graph,
                              contract_into_neighbor, contract_low_degree, cube_graph, cycle_graph,
                              grid_graph, path_graph, quotient, subdivide_edge, verify_minor_witness)


class TestGraph:
    def test_edges_are_normalised(self):
        g = Graph.from_edges(3, [(2, 0), (1, 2)])
        assert g.edges == {(0, 2), (1, 2)}
        assert g.neighbors(2) == {0, 1}

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(1, 1)])

    def test_foreign_endpoint_rejected(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(0, 5)])

    def test_parallel_edges_collapse(self):
        assert Graph.from_edges(2, [(0, 1), (1, 0)]).m == 1

    def test_generators_match_networkx(self):
        pairs = [(complete_graph(5), nx.complete_graph(5)),
                 (path_graph(4), nx.path_graph(4)),
                 (cycle_graph(6), nx.cycle_graph(6)),
                 (grid_graph(3, 4), nx.grid_2d_graph(3, 4)),
                 (complete_bipartite(3, 3), nx.complete_bipartite_graph(3, 3)),
                 (cube_graph(), nx.hypercube_graph(3))]
        for ours, ref in pairs:
            assert nx.is_isomorphic(ours.to_networkx(), ref)

    def test_is_clique(self):
        g = complete_graph(4)
        assert g.is_clique([0, 1, 2, 3])
        assert not path_graph(3).is_clique([0, 1, 2])
        assert not g.is_clique([0, 1, 7])

    def test_components_sorted(self):
        g = Graph.from_edges([5, 1, 3, 9], [(9, 1)])
        assert g.components() == [[1, 9], [3], [5]]

    @given(graphs())
    def test_components_agree_with_networkx(self, g):
        ref = sorted(sorted(c) for c in nx.connected_components(g.to_networkx()))
        assert sorted(g.components()) == ref

    @given(graphs())
    def test_relabel_dense_is_isomorphic(self, g):
        h, mapping = g.relabel_dense()
        assert h.vertices == set(range(g.n))
        assert nx.is_isomorphic(g.to_networkx(), h.to_networkx())
        assert Graph.from_networkx(g.to_networkx()) == g


class TestContraction:
    def test_degree_two_contraction_keeps_target_id(self):
        g = path_graph(3)
        h = contract_into_neighbor(g, 1)
        assert h.vertices == {0, 2} and h.edges == {(0, 2)}

    def test_degree_one_contraction(self):
        h = contract_into_neighbor(path_graph(2), 1)
        assert h.vertices == {0} and h.m == 0

    def test_errors(self):
        with pytest.raises(KeyError):
            contract_into_neighbor(path_graph(2), 7)
        with pytest.raises(ValueError):
            contract_into_neighbor(Graph.from_edges(1), 0)
        with pytest.raises(ValueError):
            contract_into_neighbor(complete_graph(4), 0)

    def test_subdivided_k4_fixpoint_is_k4(self):
        g = complete_graph(4)
        for e in sorted(g.edges):
            g = subdivide_edge(g, e)
        h, survivor = contract_low_degree(g)
        assert h == complete_graph(4)
        assert set(survivor.values()) == {0, 1, 2, 3}

    def test_fixpoint_has_min_degree_three(self):
        g = cube_graph()
        g = subdivide_edge(subdivide_edge(g, (0, 1)), (2, 3))
        h, _ = contract_low_degree(g)
        assert all(h.degree(v) >= 3 for v in h.vertices)
        assert check_regularity(h, 3)

    def test_survivor_map_is_a_minor_witness(self):
        g = grid_graph(3, 3)
        h, survivor = contract_low_degree(g.add_edges([(0, 8), (2, 6), (0, 4), (4, 8)]))
        bs = {}
        for v, s in survivor.items():
            bs.setdefault(s, set()).add(v)
        host = g.add_edges([(0, 8), (2, 6), (0, 4), (4, 8)])
        assert verify_minor_witness(host, h, MinorWitness(bs))

    def test_subdivide_rejects_missing_edge(self):
        with pytest.raises(KeyError):
            subdivide_edge(path_graph(3), (0, 2))


class TestMinorWitness:
    def test_contracting_a_cycle_edge(self):
        c5 = cycle_graph(5)
        w = MinorWitness({0: {0, 1}, 2: {2}, 3: {3}, 4: {4}})
        c4 = Graph.from_edges([0, 2, 3, 4], [(0, 2), (2, 3), (3, 4), (4, 0)])
        assert verify_minor_witness(c5, c4, w)
        assert quotient(c5, w) == c4

    def test_disconnected_branch_set_rejected(self):
        w = MinorWitness({0: {0, 2}, 1: {1}})
        assert not verify_minor_witness(path_graph(3), Graph.from_edges([0, 1], [(0, 1)]), w)

    def test_missing_edge_rejected(self):
        w = MinorWitness({0: {0}, 2: {2}})
        assert not verify_minor_witness(path_graph(3), Graph.from_edges([0, 2], [(0, 2)]), w)

    def test_unknown_vertex_raises(self):
        with pytest.raises(KeyError):
            verify_minor_witness(path_graph(2), path_graph(2), MinorWitness({0: {0}, 1: {9}}))

    def test_compose(self):
        outer = MinorWitness({0: {0, 1}, 1: {2, 3}, 2: {4}})
        inner = MinorWitness({7: {0, 1}, 8: {2}})
        assert outer.compose(inner).branch_sets == {7: {0, 1, 2, 3}, 8: {4}}

    def test_k4_minor_of_cube_plus_diagonal_not_of_cycle(self):
        w = MinorWitness({0: {0}, 1: {1, 3}, 2: {2}, 3: {4, 5}})
        assert not verify_minor_witness(cycle_graph(6), complete_graph(4), w)
