import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from strategies import graphs, permutations_of

from bei_lab.closed import (
    closed_relabeling,
    closedness_certificate,
    closedness_witness,
    facets_are_intervals,
    find_closed_labeling,
    find_structural_obstruction,
    is_closed,
    is_closed_wrt_labeling,
)
from bei_lab.graph import Graph, enumerate_connected_graphs, is_chordal, is_claw_free


def test_labeling_examples():
    assert is_closed_wrt_labeling(Graph.path(3))
    star = Graph.from_edges(3, [(1, 2), (1, 3)])
    assert not is_closed_wrt_labeling(star)
    assert closedness_witness(star) == (1, 2, 3)
    for n in range(1, 6):
        assert is_closed_wrt_labeling(Graph.complete(n))


def test_interval_examples():
    assert facets_are_intervals(Graph.path(3))
    # path drawn as 1 - 3 - 2: facet {1, 3} skips 2
    assert not facets_are_intervals(Graph.from_edges(3, [(1, 3), (2, 3)]))
    assert facets_are_intervals(Graph.complete(5))


@given(graphs(max_n=7, connected=True))
def test_two_characterizations_agree(G):
    assert is_closed_wrt_labeling(G) == facets_are_intervals(G) == oracles.is_closed_labeling(G)


def test_interval_criterion_needs_connectivity():
    # closed in this labeling, but the facet {1, 3} jumps over the isolated vertex 2
    G = Graph.from_edges(3, [(1, 3)])
    assert is_closed_wrt_labeling(G) and not facets_are_intervals(G)


@given(graphs(max_n=6))
def test_witness_is_a_real_violation(G):
    w = closedness_witness(G)
    if w is None:
        return
    i, j, k = w
    assert j < k and G.has_edge(i, j) and G.has_edge(i, k) and not G.has_edge(j, k)
    assert (i < j) == (i < k)


def test_obstructions():
    assert find_closed_labeling(Graph.star(3)) is None
    assert find_closed_labeling(Graph.cycle(4)) is None
    assert find_structural_obstruction(Graph.star(3))[0] == "claw"
    kind, cyc = find_structural_obstruction(Graph.cycle(4))
    assert kind == "cycle" and sorted(cyc) == [1, 2, 3, 4]


def test_scrambled_path():
    G = Graph.path(5).relabel((3, 5, 1, 4, 2))
    lab = find_closed_labeling(G)
    assert lab is not None
    assert G.relabel(lab) in (Graph.path(5),) or is_closed_wrt_labeling(G.relabel(lab))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_search_matches_exhaustive_labelings(n):
    for G in enumerate_connected_graphs(n):
        labs = oracles.closed_labelings(G)
        got = find_closed_labeling(G)
        assert got == (min(labs) if labs else None)
        assert find_closed_labeling(G, prefilter=False) == got


@given(graphs(max_n=7), st.data())
def test_closedness_is_labeling_independent(G, data):
    perm = data.draw(permutations_of(G.n))
    assert is_closed(G) == is_closed(G.relabel(perm))


@given(graphs(max_n=7))
def test_closed_implies_chordal_and_claw_free(G):
    if is_closed(G):
        assert is_chordal(G) and is_claw_free(G)


@given(graphs(max_n=7))
def test_certificate(G):
    cert = closedness_certificate(G)
    d = cert.to_dict()
    assert d["closed"] == cert.closed
    if cert.closed:
        assert is_closed_wrt_labeling(G.relabel(cert.labeling))
        assert closed_relabeling(G) == G.relabel(cert.labeling)
    elif cert.obstruction is not None:
        kind, vs = cert.obstruction
        if kind == "claw":
            center, *leaves = vs
            assert all(G.has_edge(center, v) for v in leaves)
            assert not any(G.has_edge(a, b) for a in leaves for b in leaves if a < b)
        else:
            assert len(vs) >= 4 and oracles.induces_cycle(G, vs)
