"""Binomial edge ideals of small graphs: closedness, Gröbner bases, prime
components and regularity, with exhaustive verification campaigns."""

from bei_lab.closed import closedness_certificate, find_closed_labeling, is_closed, is_closed_wrt_labeling
from bei_lab.edge_ideals import binomial_edge_ideal, cut_point_sets, ini_lex_graph, prime_component
from bei_lab.errors import NotClosedError, ScaleGuardError
from bei_lab.fields import GF2, GF32003, QQ, PrimeField, RationalField, parse_field
from bei_lab.graph import Graph, canonical_form, canonical_id, enumerate_connected_graphs, from_text, graph_stats
from bei_lab.groebner import GroebnerBasis, MonomialIdeal, buchberger, initial_ideal, is_groebner, reduce
from bei_lab.poly import Polynomial, Ring, format_poly, parse_poly
from bei_lab.regularity import binomial_betti_table, binomial_regularity, initial_betti_table, initial_regularity
from bei_lab.resolution import BettiTable

__version__ = "0.1.0"

__all__ = [
    "BettiTable", "GF2", "GF32003", "Graph", "GroebnerBasis", "MonomialIdeal", "NotClosedError",
    "Polynomial", "PrimeField", "QQ", "RationalField", "Ring", "ScaleGuardError",
    "binomial_betti_table", "binomial_edge_ideal", "binomial_regularity", "buchberger",
    "canonical_form", "canonical_id", "closedness_certificate", "cut_point_sets",
    "enumerate_connected_graphs", "find_closed_labeling", "format_poly", "from_text", "graph_stats",
    "ini_lex_graph", "initial_betti_table", "initial_ideal", "initial_regularity", "is_closed",
    "is_closed_wrt_labeling", "is_groebner", "parse_field", "parse_poly", "prime_component", "reduce",
]
