import itertools

import pytest
from hypothesis import given

import oracles
from strategies import graphs

from bei_lab.closed import find_closed_labeling, is_closed_wrt_labeling
from bei_lab.edge_ideals import (
    binomial_edge_ideal,
    check_q1_q2_identities,
    cut_point_sets,
    deleted_graph,
    ini_lex_graph,
    is_cut_point_set,
    leaf_cut_vertices,
    leaf_order,
    merged_graph,
    prime_component,
    q1_q2_decomposition,
    verify_containments,
    verify_prime_decomposition,
)
from bei_lab.errors import NotClosedError, ScaleGuardError
from bei_lab.fields import QQ
from bei_lab.graph import Graph, cliques_pairwise_intersect_at_most_one, enumerate_connected_graphs, is_chordal
from bei_lab.groebner import buchberger, ideal_equal, initial_ideal
from bei_lab.poly import Ring

STAR = Graph.star(3)


def strs(polys):
    return [str(p) for p in polys]


class TestGenerators:
    def test_examples(self):
        assert strs(binomial_edge_ideal(Graph.path(2)).gens) == ["x1*y2 - x2*y1"]
        assert strs(binomial_edge_ideal(Graph.path(3)).gens) == ["x1*y2 - x2*y1", "x2*y3 - x3*y2"]

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_complete_graph_gives_all_minors(self, n):
        J = binomial_edge_ideal(Graph.complete(n))
        R = J.ring
        assert set(J.gens) == {R.f(i, j) for i, j in itertools.combinations(range(1, n + 1), 2)}

    def test_field_and_ring(self):
        J = binomial_edge_ideal(Graph.path(3), QQ)
        assert J.ring.field is QQ and J.ring.n == 3


class TestIniLexGraph:
    def test_examples(self):
        assert ini_lex_graph(Graph.path(3)).edges == ((1, 2), (2, 3))
        assert ini_lex_graph(Graph.complete(3)).edges == ((1, 2), (1, 3), (2, 3))
        assert ini_lex_graph(Graph.path(2)).edges == ((1, 2),)

    def test_bipartite_encoding(self):
        H = ini_lex_graph(Graph.path(3)).graph
        assert H.n == 6 and H.edges() == [(1, 5), (2, 6)]

    def test_rejects_non_closed_labeling(self):
        with pytest.raises(NotClosedError):
            ini_lex_graph(STAR)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_matches_groebner_initial_ideal(self, n):
        # exhaustive over closed labelings of connected graphs
        for G in enumerate_connected_graphs(n):
            for perm in itertools.permutations(G.vertices):
                H = G.relabel(perm)
                if not is_closed_wrt_labeling(H):
                    continue
                J = binomial_edge_ideal(H)
                ini = initial_ideal(buchberger(J.gens, J.ring))
                assert set(ini.gens) == set(ini_lex_graph(H).edge_ideal(J.ring).gens)


class TestCutPointSets:
    def test_examples(self):
        assert cut_point_sets(Graph.complete(4)) == [frozenset()]
        assert cut_point_sets(Graph.path(3)) == [frozenset(), frozenset({2})]
        assert cut_point_sets(Graph.path(4)) == [frozenset(), frozenset({2}), frozenset({3})]
        assert not is_cut_point_set(Graph.path(4), {2, 3})

    def test_requires_connected_graph(self):
        with pytest.raises(ValueError):
            cut_point_sets(Graph.empty(2))

    @given(graphs(max_n=7, connected=True))
    def test_against_brute_force(self, G):
        assert sorted(map(sorted, cut_point_sets(G))) == sorted(map(sorted, oracles.cut_point_sets(G)))


class TestPrimeComponents:
    def test_examples(self):
        R = Ring(3)
        P = prime_component(Graph.path(3), set())
        assert set(P.gens) == {R.f(1, 2), R.f(1, 3), R.f(2, 3)}
        P = prime_component(Graph.path(3), {2})
        assert strs(P.gens) == ["x2", "y2"]
        assert set(prime_component(Graph.complete(3), set()).gens) == set(binomial_edge_ideal(Graph.complete(3)).gens)
        assert P.to_dict()["components"] == [[1], [3]]

    def test_rejects_foreign_vertices(self):
        with pytest.raises(ValueError):
            prime_component(Graph.path(3), {4})

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_containment_for_every_subset(self, n):
        for G in enumerate_connected_graphs(n):
            assert verify_containments(G)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_decomposition_equality(self, n):
        for G in enumerate_connected_graphs(n):
            assert verify_prime_decomposition(G)

    def test_examples_equality(self):
        assert verify_prime_decomposition(Graph.path(3))
        assert verify_prime_decomposition(Graph.complete(3))
        assert cut_point_sets(Graph.complete(4)) == [frozenset()]

    def test_dropping_a_component_breaks_equality(self):
        # without P_{2}, the intersection is the strictly larger prime P_∅
        G = Graph.path(3)
        R = Ring(3)
        J = list(binomial_edge_ideal(G, ring=R).gens)
        assert not ideal_equal(J, list(prime_component(G, set(), R).gens), R)

    def test_guards(self):
        with pytest.raises(ScaleGuardError):
            verify_containments(Graph.path(7))


class TestQ1Q2:
    def test_path(self):
        d = q1_q2_decomposition(Graph.path(3), 2)
        R = d.ring
        assert ideal_equal(list(d.q1), list(binomial_edge_ideal(Graph.complete(3), ring=R).gens), R)
        assert strs(d.q2) == ["x2", "y2"]
        assert d.exact(binomial_edge_ideal(Graph.path(3), ring=R).gens)

    def test_single_edge(self):
        d = q1_q2_decomposition(Graph.path(2), 1)
        R = d.ring
        assert ideal_equal(list(d.q1), list(binomial_edge_ideal(Graph.path(2), ring=R).gens), R)
        assert buchberger(d.q2, R).is_unit()
        checks = check_q1_q2_identities(Graph.path(2), 1)
        assert checks["J=Q1∩Q2"] and checks["Q1=J_G'"]
        assert checks["Q2=(xi,yi)+J_G''"] is None

    def test_star_center(self):
        assert all(v is not False for v in check_q1_q2_identities(STAR, 1).values())
        assert all(check_q1_q2_identities(STAR, 1).values())

    def test_all_block_like_graphs(self):
        for n in range(2, 5):
            for G in enumerate_connected_graphs(n):
                if not (is_chordal(G) and cliques_pairwise_intersect_at_most_one(G)):
                    continue
                for i in leaf_cut_vertices(G) or [1]:
                    assert all(v is not False for v in check_q1_q2_identities(G, i).values()), (G, i)

    def test_rejects_non_leaf_vertex(self):
        with pytest.raises(ValueError):
            q1_q2_decomposition(STAR, 2)
        with pytest.raises(ValueError):
            q1_q2_decomposition(Graph.cycle(4), 1)

    def test_auxiliary_graphs(self):
        assert merged_graph(Graph.path(3), 2) == Graph.complete(3)
        assert deleted_graph(Graph.path(3), 2) == Graph.empty(3)

    def test_leaf_order(self):
        G = Graph.from_edges(5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])
        order = leaf_order(G)
        for k in range(1, len(order)):
            meet = order[k] & frozenset().union(*order[:k])
            assert any(meet <= F for F in order[:k])
        assert leaf_cut_vertices(G) == [3]
