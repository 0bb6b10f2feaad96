"""Reduced simplicial homology and Hochster's formula for squarefree monomial
ideals."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from bei_lab import _kernels
from bei_lab.fields import GF32003, Field, PrimeField
from bei_lab.groebner import MonomialIdeal
from bei_lab.linalg import bareiss_rank, rank as matrix_rank
from bei_lab.resolution import BettiTable

MAX_GROUND = 16


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on vertices 0..N-1 given by its minimal nonfaces (the
    Stanley-Reisner generators).  ``nonfaces == (0,)`` is the void complex;
    ``nonfaces`` containing every singleton is the complex {∅}."""

    N: int
    nonfaces: tuple[int, ...]

    @classmethod
    def from_facets(cls, N: int, facets) -> SimplicialComplex:
        fmasks = [sum(1 << v for v in F) for F in facets]
        faces = {s for s in range(1 << N) if any(s & f == s for f in fmasks)}
        minimal = []
        for s in sorted(range(1 << N), key=lambda s: bin(s).count("1")):
            if s in faces:
                continue
            if not any(m & s == m for m in minimal):
                minimal.append(s)
        return cls(N, tuple(minimal))

    @classmethod
    def void(cls, N: int = 0) -> SimplicialComplex:
        return cls(N, (0,))

    def is_face(self, s: int) -> bool:
        return not any(m & s == m for m in self.nonfaces)

    def faces(self, within: int | None = None) -> list[int]:
        within = (1 << self.N) - 1 if within is None else within
        verts = [v for v in range(self.N) if (within >> v) & 1]
        out = []
        for k in range(len(verts) + 1):
            for combo in itertools.combinations(verts, k):
                s = sum(1 << v for v in combo)
                if self.is_face(s):
                    out.append(s)
        return out


def reduced_homology_dims(K: SimplicialComplex, field: Field = GF32003, within: int | None = None) -> list[int]:
    """dim H̃_d(K restricted to ``within``) for d = -1, 0, ..., dim K
    (index 0 holds H̃_{-1}).  The void complex has no homology at all."""
    if K.N > MAX_GROUND:
        raise ValueError(f"ground set limited to {MAX_GROUND} vertices")
    faces = K.faces(within)
    if not faces:
        return []
    top = max(bin(f).count("1") for f in faces)
    by_size = [[f for f in faces if bin(f).count("1") == k] for k in range(top + 1)]
    ranks = [0] * (top + 2)
    for k in range(1, top + 1):
        index = {f: i for i, f in enumerate(by_size[k - 1])}
        M = [[0] * len(by_size[k]) for _ in by_size[k - 1]]
        for col, f in enumerate(by_size[k]):
            sign = 1
            for v in range(K.N):
                if (f >> v) & 1:
                    M[index[f & ~(1 << v)]][col] = sign
                    sign = -sign
        ranks[k] = matrix_rank(M, field)
    return [len(by_size[k]) - ranks[k] - ranks[k + 1] for k in range(top + 1)]


def stanley_reisner_complex(I: MonomialIdeal) -> tuple[SimplicialComplex, tuple[int, ...]]:
    """Complex on the variables that occur in I's generators, plus the map
    from its vertices to ring variable positions."""
    ring = I.ring
    if not I.is_squarefree():
        raise ValueError("Stanley-Reisner complex needs a squarefree monomial ideal")
    support = sorted({v for g in I.gens for v in ring.support(g)})
    pos = {v: k for k, v in enumerate(support)}
    masks = tuple(sum(1 << pos[v] for v in ring.support(g)) for g in I.gens)
    return SimplicialComplex(len(support), masks), tuple(support)


def hochster_betti_table(I: MonomialIdeal, field: Field = GF32003) -> BettiTable:
    """β_{i,j}(S/I) = Σ_{|σ| = j} dim H̃_{j-i-1}(Δ_σ), summed over subsets σ of
    the variables that occur in I (other variables are cone points)."""
    K, _ = stanley_reisner_complex(I)
    if K.N > MAX_GROUND:
        raise ValueError(f"Hochster evaluation limited to {MAX_GROUND} variables in the support")
    if isinstance(field, PrimeField):
        arr = _kernels.hochster_betti_mod_p(list(K.nonfaces), K.N, field.p)
    else:
        arr = _kernels.hochster_betti_py(list(K.nonfaces), K.N, bareiss_rank)
    entries = {(int(i), int(j)): int(arr[i, j]) for i in range(arr.shape[0]) for j in range(arr.shape[1]) if arr[i, j]}
    return BettiTable(entries, field.name)


def squarefree_monomial_regularity(I: MonomialIdeal, field: Field = GF32003) -> tuple[int, BettiTable]:
    table = hochster_betti_table(I, field)
    return table.regularity, table
