"""Exact matrix rank over GF(p) and Q."""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from bei_lab import _kernels
from bei_lab.fields import Field, PrimeField


def bareiss_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free Gaussian elimination."""
    A = [list(r) for r in rows if any(r)]
    if not A:
        return 0
    ncols = len(A[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(rank, len(A)) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        pr = A[rank]
        p = pr[c]
        for i in range(rank + 1, len(A)):
            row = A[i]
            a = row[c]
            # exact division by the previous pivot keeps entries integral
            A[i] = [(p * row[k] - a * pr[k]) // prev for k in range(ncols)]
        prev = p
        rank += 1
        if rank == len(A):
            break
    return rank


def rank(rows: list[list], field: Field) -> int:
    if not rows or not rows[0]:
        return 0
    if isinstance(field, PrimeField):
        return _kernels.rank_mod_p([[int(v) % field.p for v in r] for r in rows], field.p)
    ints = []
    for r in rows:
        fr = [Fraction(v) for v in r]
        d = lcm(*(v.denominator for v in fr))
        ints.append([int(v * d) for v in fr])
    return bareiss_rank(ints)
