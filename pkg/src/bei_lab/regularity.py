"""Castelnuovo-Mumford regularity of S/J_G and of S/in_lex(J_G).

Three independent routes are available:

* homological: a Schreyer resolution of the ideal itself, minimized
  (:func:`graded_betti_numbers`);
* combinatorial: Hochster's formula for squarefree monomial ideals
  (:func:`bei_lab.homology.squarefree_monomial_regularity`);
* Woodroofe's shortcut for weakly chordal graphs, reg = induced matching number.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Sequence

from bei_lab.closed import find_closed_labeling
from bei_lab.edge_ideals import binomial_edge_ideal
from bei_lab.errors import ScaleGuardError
from bei_lab.fields import GF32003, Field
from bei_lab.graph import Graph, connected_components, induced_matching_number, is_weakly_chordal
from bei_lab.groebner import GroebnerBasis, MonomialIdeal, buchberger, initial_ideal
from bei_lab.homology import hochster_betti_table
from bei_lab.poly import Polynomial, Ring
from bei_lab.resolution import BettiTable, betti_from_resolution, schreyer_resolution

MAX_RESOLUTION_VARS = 14


def graded_betti_numbers(gens: Sequence[Polynomial], ring: Ring | None = None) -> BettiTable:
    """Graded Betti numbers of S/I for homogeneous generators."""
    if ring is None:
        if not gens:
            raise ValueError("pass ring= for the zero ideal")
        ring = gens[0].ring
    if ring.nvars > MAX_RESOLUTION_VARS:
        raise ScaleGuardError(f"resolutions limited to {MAX_RESOLUTION_VARS} variables (got {ring.nvars})")
    for g in gens:
        if not g.is_homogeneous():
            raise ValueError(f"generator {g} is not homogeneous")
    return betti_of_basis(buchberger(gens, ring))


def betti_of_basis(gb: GroebnerBasis) -> BettiTable:
    return betti_from_resolution(schreyer_resolution(gb))


def tensor_betti(a: BettiTable, b: BettiTable) -> BettiTable:
    """Betti table of S1/I ⊗ S2/J over disjoint variable sets."""
    out: dict[tuple[int, int], int] = defaultdict(int)
    for (i1, j1), v1 in a.nonzero().items():
        for (i2, j2), v2 in b.nonzero().items():
            out[(i1 + i2, j1 + j2)] += v1 * v2
    return BettiTable(dict(out), a.field or b.field)


def _components(G: Graph) -> list[Graph]:
    return [G.induced_subgraph(c) for c in connected_components(G)]


def _prefer_closed(H: Graph) -> Graph:
    # Betti numbers do not depend on the labeling; a closed one keeps the basis quadratic
    lab = find_closed_labeling(H) if H.n <= 10 else None
    return H if lab is None else H.relabel(lab)


def binomial_betti_table(G: Graph, field: Field = GF32003, relabel: bool = True) -> BettiTable:
    """Betti table of S/J_G, assembled from connected components."""
    table = BettiTable({(0, 0): 1}, field.name)
    for H in _components(G):
        if H.n == 1:
            continue
        if relabel:
            H = _prefer_closed(H)
        J = binomial_edge_ideal(H, field)
        table = tensor_betti(table, graded_betti_numbers(J.gens, J.ring))
    return table


def binomial_regularity(G: Graph, field: Field = GF32003, relabel: bool = True) -> int:
    """reg(S/J_G) from minimal free resolutions; additive over components."""
    total = 0
    for H in _components(G):
        if H.n == 1:
            continue
        if relabel:
            H = _prefer_closed(H)
        J = binomial_edge_ideal(H, field)
        total += graded_betti_numbers(J.gens, J.ring).regularity
    return total


def initial_ideal_of_graph(G: Graph, field: Field = GF32003) -> MonomialIdeal:
    J = binomial_edge_ideal(G, field)
    return initial_ideal(buchberger(J.gens, J.ring))


def initial_betti_table(G: Graph, field: Field = GF32003) -> BettiTable:
    """Betti table of S/in_lex(J_G) in G's own labeling: Hochster's formula
    when the initial ideal is squarefree, otherwise a resolution."""
    I = initial_ideal_of_graph(G, field)
    if I.is_squarefree():
        return hochster_betti_table(I, field)
    return graded_betti_numbers(I.polys(), I.ring)


def initial_regularity(G: Graph, field: Field = GF32003) -> int:
    return initial_betti_table(G, field).regularity


def edge_ideal_regularity_woodroofe(H: Graph) -> int:
    """reg(K[V]/I(H)) = indmatch(H) for weakly chordal H."""
    if not is_weakly_chordal(H):
        raise ValueError("Woodroofe's formula needs a weakly chordal graph")
    return induced_matching_number(H)


def edge_ideal(H: Graph, field: Field = GF32003) -> MonomialIdeal:
    """Edge ideal of H in a ring whose first |V(H)| variables stand for its
    vertices (x_1..x_n, y_1..y_n with n = ceil(|V|/2))."""
    ring = Ring((H.n + 1) // 2, field)
    var = [ring.var_mono(v) for v in range(H.n)]
    return MonomialIdeal.from_monomials(ring, [var[i - 1] + var[j - 1] for i, j in H.edges()])
