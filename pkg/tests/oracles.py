"""Brute-force reference implementations, independent of the package's
search code, used as test oracles."""

from __future__ import annotations

import itertools
from collections import Counter
from math import comb

from bei_lab.graph import Graph


def components(G: Graph, vertices=None) -> list[set[int]]:
    left = set(G.vertices if vertices is None else vertices)
    out = []
    while left:
        stack = [min(left)]
        comp = set()
        while stack:
            v = stack.pop()
            if v in comp:
                continue
            comp.add(v)
            stack += [u for u in G.neighbors(v) if u in left and u not in comp]
        left -= comp
        out.append(comp)
    return out


def _induced_edges(G: Graph, vs) -> list[tuple[int, int]]:
    return [(a, b) for a, b in itertools.combinations(sorted(vs), 2) if G.has_edge(a, b)]


def induces_path(G: Graph, vs) -> bool:
    vs = list(vs)
    E = _induced_edges(G, vs)
    deg = Counter(v for e in E for v in e)
    return len(E) == len(vs) - 1 and len(components(G, vs)) == 1 and all(deg[v] <= 2 for v in vs)


def induces_cycle(G: Graph, vs) -> bool:
    vs = list(vs)
    E = _induced_edges(G, vs)
    deg = Counter(v for e in E for v in e)
    return len(vs) >= 3 and len(E) == len(vs) and len(components(G, vs)) == 1 and all(deg[v] == 2 for v in vs)


def longest_induced_path(G: Graph) -> int:
    best = 0
    for k in range(1, G.n + 1):
        for vs in itertools.combinations(G.vertices, k):
            if induces_path(G, vs):
                best = max(best, k - 1)
    return best


def longest_induced_cycle(G: Graph) -> int:
    best = 0
    for k in range(3, G.n + 1):
        for vs in itertools.combinations(G.vertices, k):
            if induces_cycle(G, vs):
                best = k
    return best


def induced_matching(G: Graph) -> int:
    E = G.edges()
    best = 0
    for k in range(1, len(E) + 1):
        found = False
        for M in itertools.combinations(E, k):
            vs = [v for e in M for v in e]
            if len(set(vs)) == 2 * k and len(_induced_edges(G, vs)) == k:
                found = True
                break
        if not found:
            break
        best = k
    return best


def is_closed_labeling(G: Graph) -> bool:
    for i in G.vertices:
        for j, k in itertools.combinations(sorted(G.neighbors(i)), 2):
            same_side = (i < j and i < k) or (i > j and i > k)
            if same_side and not G.has_edge(j, k):
                return False
    return True


def closed_labelings(G: Graph) -> list[tuple[int, ...]]:
    return [p for p in itertools.permutations(G.vertices) if is_closed_labeling(G.relabel(p))]


def cut_point_sets(G: Graph) -> list[frozenset]:
    def c(S):
        return len(components(G, [v for v in G.vertices if v not in S]))

    out = []
    for k in range(G.n + 1):
        for S in itertools.combinations(G.vertices, k):
            if all(c(set(S) - {i}) < c(S) for i in S):
                out.append(frozenset(S))
    return out


def standard_monomial_counts(nvars: int, gens_exps: list[tuple[int, ...]], dmax: int) -> list[int]:
    """Hilbert function of S/I for a monomial ideal, by counting monomials of
    each degree not divisible by any generator."""
    counts = []
    for d in range(dmax + 1):
        c = 0
        for combo in itertools.combinations_with_replacement(range(nvars), d):
            e = [0] * nvars
            for v in combo:
                e[v] += 1
            if not any(all(a <= b for a, b in zip(g, e)) for g in gens_exps):
                c += 1
        counts.append(c)
    return counts


def hilbert_from_betti(entries: dict[tuple[int, int], int], nvars: int, dmax: int) -> list[int]:
    """Expand Σ (-1)^i β_{i,j} t^j / (1-t)^N up to degree dmax."""
    out = []
    for d in range(dmax + 1):
        out.append(sum((-1) ** i * b * comb(d - j + nvars - 1, nvars - 1)
                       for (i, j), b in entries.items() if j <= d))
    return out
