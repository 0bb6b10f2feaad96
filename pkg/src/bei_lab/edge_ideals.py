"""Binomial edge ideals J_G, their lex initial graph, the primes P_S(G) and
the Q1/Q2 splitting at a leaf-clique cut vertex."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from bei_lab.closed import closedness_witness
from bei_lab.errors import NotClosedError, ScaleGuardError
from bei_lab.fields import GF32003, Field
from bei_lab.graph import (
    Graph,
    VertexSet,
    cliques_pairwise_intersect_at_most_one,
    count_components,
    connected_components,
    is_chordal,
    maximal_cliques,
    sort_key,
)
from bei_lab.groebner import (
    INTERSECTION_MAX_VERTICES,
    MonomialIdeal,
    buchberger,
    ideal_equal,
    ideal_membership,
    ideal_sum,
    intersect_all,
)
from bei_lab.poly import Polynomial, Ring

CONTAINMENT_MAX_VERTICES = 6


@dataclass(frozen=True)
class BinomialEdgeIdeal:
    graph: Graph
    ring: Ring
    gens: tuple[Polynomial, ...]


def binomial_edge_ideal(G: Graph, field: Field = GF32003, ring: Ring | None = None) -> BinomialEdgeIdeal:
    ring = ring or Ring(G.n, field)
    return BinomialEdgeIdeal(G, ring, tuple(ring.f(i, j) for i, j in G.edges()))


@dataclass(frozen=True)
class IniLexGraph:
    """Bipartite graph on {x_1..x_n} ∪ {y_1..y_n}; ``graph`` encodes x_i as
    vertex i and y_j as vertex n + j."""

    n: int
    edges: tuple[tuple[int, int], ...]  # (i, j): edge {x_i, y_j}

    @property
    def graph(self) -> Graph:
        return Graph.from_edges(2 * self.n, [(i, self.n + j) for i, j in self.edges])

    def edge_ideal(self, ring: Ring) -> MonomialIdeal:
        return MonomialIdeal.from_monomials(ring, [ring.x(i) + ring.y(j) for i, j in self.edges])


def ini_lex_graph(G: Graph) -> IniLexGraph:
    bad = closedness_witness(G)
    if bad is not None:
        raise NotClosedError(f"labeling is not closed: witness {bad}")
    return IniLexGraph(G.n, tuple(G.edges()))


def cut_point_sets(G: Graph) -> list[VertexSet]:
    """All S with S = ∅ or c(S ∖ {i}) < c(S) for every i ∈ S."""
    if not G.is_connected():
        raise ValueError("cut-point sets are defined here for connected graphs")
    out = []
    for k in range(G.n + 1):
        for S in itertools.combinations(G.vertices, k):
            if is_cut_point_set(G, S):
                out.append(frozenset(S))
    return out


def is_cut_point_set(G: Graph, S) -> bool:
    S = list(S)
    if not S:
        return True
    c = count_components(G, S)
    return all(count_components(G, [v for v in S if v != i]) < c for i in S)


@dataclass(frozen=True)
class PrimeComponent:
    S: VertexSet
    components: tuple[VertexSet, ...]
    gens: tuple[Polynomial, ...]

    def to_dict(self) -> dict:
        return {
            "S": sorted(self.S),
            "components": [sorted(c) for c in self.components],
            "gens": [str(g) for g in self.gens],
        }


def prime_component(G: Graph, S, ring: Ring | None = None, field: Field = GF32003) -> PrimeComponent:
    ring = ring or Ring(G.n, field)
    S = frozenset(S)
    if not S <= set(G.vertices):
        raise ValueError("S must be a subset of the vertex set")
    rest = [v for v in G.vertices if v not in S]
    comps = [frozenset(rest[u - 1] for u in c) for c in connected_components(G.induced_subgraph(rest))]
    gens = []
    for i in sorted(S):
        gens += [ring.monomial(ring.x(i)), ring.monomial(ring.y(i))]
    for comp in comps:
        gens += [ring.f(i, j) for i, j in itertools.combinations(sorted(comp), 2)]
    return PrimeComponent(S, tuple(sorted(comps, key=sort_key)), tuple(gens))


def verify_containments(G: Graph, sets=None, field: Field = GF32003) -> bool:
    """J_G ⊆ P_S(G) for every S in ``sets`` (default: all subsets)."""
    if G.n > CONTAINMENT_MAX_VERTICES:
        raise ScaleGuardError(f"containment check limited to n <= {CONTAINMENT_MAX_VERTICES}")
    ring = Ring(G.n, field)
    J = binomial_edge_ideal(G, ring=ring).gens
    if sets is None:
        sets = [S for k in range(G.n + 1) for S in itertools.combinations(G.vertices, k)]
    for S in sets:
        P = buchberger(prime_component(G, S, ring).gens, ring)
        if not P.gens:
            if J:
                return False
            continue
        if not all(ideal_membership(f, P) for f in J):
            return False
    return True


def cut_point_intersection(G: Graph, sets, ring: Ring) -> list[Polynomial]:
    return intersect_all([list(prime_component(G, S, ring).gens) for S in sets], ring)


def verify_prime_decomposition(G: Graph, field: Field = GF32003) -> bool:
    """J_G = ∩ P_S(G) over cut-point sets (n ≤ 4), or the containments
    J_G ⊆ P_S(G) for every cut-point S (5 ≤ n ≤ 6)."""
    sets = cut_point_sets(G)
    if G.n <= INTERSECTION_MAX_VERTICES:
        ring = Ring(G.n, field)
        J = list(binomial_edge_ideal(G, ring=ring).gens)
        return ideal_equal(J, cut_point_intersection(G, sets, ring), ring)
    if G.n <= CONTAINMENT_MAX_VERTICES:
        return verify_containments(G, sets, field)
    raise ScaleGuardError(f"prime decomposition check limited to n <= {CONTAINMENT_MAX_VERTICES}")


# -- leaf order and the Q1/Q2 split ------------------------------------------------

def leaf_order(G: Graph) -> list[VertexSet]:
    """Facets F_1..F_r of the clique complex such that each F_k (k ≥ 2) meets
    the union of F_1..F_{k-1} inside a single earlier facet.

    Built greedily from the end: repeatedly remove a facet whose intersection
    with the union of the others lies in one other facet, preferring the
    facet with the smallest vertex list.
    """
    facets = maximal_cliques(G)
    tail: list[VertexSet] = []
    while len(facets) > 1:
        for F in sorted(facets, key=sort_key):
            others = [H for H in facets if H != F]
            meet = F & frozenset().union(*others)
            if any(meet <= H for H in others):
                tail.append(F)
                facets = others
                break
        else:
            raise ValueError("clique complex has no leaf order (graph is not chordal)")
    return facets + tail[::-1]


def leaf_cut_vertices(G: Graph) -> list[int]:
    """Vertices i with F_r ∩ F_j = {i} for some leaf facet F_r."""
    out = set()
    facets = maximal_cliques(G)
    for F in facets:
        others = [H for H in facets if H != F]
        if not others:
            continue
        meet = F & frozenset().union(*others)
        if len(meet) == 1 and any(meet <= H for H in others):
            out.update(meet)
    return sorted(out)


@dataclass(frozen=True)
class Q1Q2:
    vertex: int
    q1_sets: tuple[VertexSet, ...]
    q2_sets: tuple[VertexSet, ...]
    q1: tuple[Polynomial, ...]
    q2: tuple[Polynomial, ...]
    ring: Ring

    def exact(self, J) -> bool:
        """J_G = Q1 ∩ Q2 (the ideal-level content of the short exact sequence)."""
        from bei_lab.groebner import ideal_intersection

        return ideal_equal(list(J), ideal_intersection(self.q1, self.q2, ring=self.ring), self.ring)

    def sum(self) -> list[Polynomial]:
        return ideal_sum(self.q1, self.q2)


def q1_q2_decomposition(G: Graph, i: int, field: Field = GF32003) -> Q1Q2:
    """Q1 = ∩ P_S over cut-point S with i ∉ S, Q2 = ∩ over those with i ∈ S
    (empty intersection = unit ideal)."""
    if G.n > INTERSECTION_MAX_VERTICES:
        raise ScaleGuardError(f"Q1/Q2 intersections limited to n <= {INTERSECTION_MAX_VERTICES}")
    if not (G.is_connected() and is_chordal(G) and cliques_pairwise_intersect_at_most_one(G)):
        raise ValueError("Q1/Q2 split needs a connected chordal graph whose cliques meet in ≤ 1 vertex")
    # a single clique has no leaf cut vertex; any vertex gives the degenerate split
    if len(maximal_cliques(G)) > 1 and i not in leaf_cut_vertices(G):
        raise ValueError(f"vertex {i} is not the cut vertex of a leaf clique")
    ring = Ring(G.n, field)
    sets = cut_point_sets(G)
    s1 = tuple(S for S in sets if i not in S)
    s2 = tuple(S for S in sets if i in S)
    q1 = cut_point_intersection(G, s1, ring)
    q2 = cut_point_intersection(G, s2, ring)
    return Q1Q2(i, s1, s2, tuple(buchberger(q1, ring).gens), tuple(buchberger(q2, ring).gens), ring)


def merged_graph(G: Graph, i: int) -> Graph:
    """G' : the cliques through i replaced by one clique on their union."""
    closed_nb = sorted(G.neighbors(i) | {i})
    return Graph.from_edges(G.n, set(G.edges()) | set(itertools.combinations(closed_nb, 2)))


def deleted_graph(G: Graph, i: int) -> Graph:
    """G with every edge at i removed (i stays as an isolated vertex)."""
    return Graph.from_edges(G.n, [e for e in G.edges() if i not in e])


def check_q1_q2_identities(G: Graph, i: int, field: Field = GF32003) -> dict[str, bool | None]:
    """Ideal identities behind the exact sequence 0 → S/J_G → S/Q1 ⊕ S/Q2 → S/(Q1+Q2) → 0.

    The identities involving Q2 are ``None`` (not applicable) when no cut-point
    set contains i, i.e. Q2 is the unit ideal.
    """
    d = q1_q2_decomposition(G, i, field)
    ring = d.ring
    J = binomial_edge_ideal(G, ring=ring).gens
    xi_yi = [ring.monomial(ring.x(i)), ring.monomial(ring.y(i))]
    J1 = list(binomial_edge_ideal(merged_graph(G, i), ring=ring).gens)
    J2 = list(binomial_edge_ideal(deleted_graph(G, i), ring=ring).gens)
    return {
        "J=Q1∩Q2": d.exact(J),
        "Q1=J_G'": ideal_equal(list(d.q1), J1, ring),
        "Q2=(xi,yi)+J_G''": ideal_equal(list(d.q2), xi_yi + J2, ring) if d.q2_sets else None,
        "Q1+Q2=(xi,yi)+J_G'": ideal_equal(d.sum(), xi_yi + J1, ring) if d.q2_sets else None,
    }
