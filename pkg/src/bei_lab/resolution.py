"""Graded free resolutions by iterated Schreyer syzygies, and graded Betti
numbers read off after minimization.

Free module F_k has basis e_0..e_{m-1}; each e_l carries

* ``M[l]``: its total monomial (the leading monomial in S of the image of e_l
  pushed all the way down to F_0 = S), so ``deg e_l = deg M[l]``;
* ``rank[l]``: its position in the Schreyer tie-break order.

A term ``u * e_l`` of an element of F_k is stored as the integer key
``((u * M[l]) << SHIFT) | rank[l]`` and elements are dicts key -> coefficient.
Comparing keys is exactly the Schreyer order: first the total monomial in lex,
then the tie-break inherited from the lower levels.  Multiplying by a monomial
``u`` adds ``u << SHIFT`` to every key.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from bei_lab.errors import ScaleGuardError
from bei_lab.groebner import GroebnerBasis
from bei_lab.linalg import rank as matrix_rank
from bei_lab.poly import Ring

SHIFT = 32
LOW = (1 << SHIFT) - 1
MAX_BASIS = 200_000


@dataclass
class FreeModule:
    M: list[int]
    rank: list[int]
    deg: list[int]
    by_rank: dict[int, int] = field(default_factory=dict)

    def __len__(self):
        return len(self.M)


@dataclass
class Resolution:
    """``modules[k]`` is F_k; ``maps[k]`` (k ≥ 1) lists the images in F_{k-1}
    of the basis of F_k, as key dicts."""

    ring: Ring
    modules: list[FreeModule]
    maps: list[list[dict] | None]

    @property
    def length(self) -> int:
        return len(self.modules) - 1

    def ranks(self) -> list[int]:
        return [len(F) for F in self.modules]


def _divide_module(ring, p, reducers, lead_T, lead_c, elems, Mk, rk, F):
    """Reduce key-dict ``p`` by ``elems``; return the quotient as an element of
    F_k (key dict) or raise if a nonzero remainder appears."""
    norm = F.norm
    inv = F.inv
    guard = ring.guard
    q: dict[int, object] = {}
    while p:
        key = max(p)
        c = p.pop(key)
        T = key >> SHIFT
        for l in reducers.get(key & LOW, ()):
            Tl = lead_T[l]
            if ((T | guard) - Tl) & guard == guard:
                u = T - Tl
                k = norm(c * inv(lead_c[l]))
                shift = u << SHIFT
                for bk, bc in elems[l].items():
                    nk = bk + shift
                    if nk == key:
                        continue
                    v = norm(p.get(nk, 0) - k * bc)
                    if v:
                        p[nk] = v
                    else:
                        p.pop(nk, None)
                qk = ((u + Mk[l]) << SHIFT) | rk[l]
                v = norm(q.get(qk, 0) + k)
                if v:
                    q[qk] = v
                else:
                    q.pop(qk, None)
                break
        else:
            raise ArithmeticError("S-vector did not reduce to zero: input is not a Gröbner basis")
    return q


def schreyer_resolution(gb: GroebnerBasis, max_basis: int = MAX_BASIS) -> Resolution:
    """Free resolution of S/I from a Gröbner basis of I (not minimal)."""
    ring = gb.ring
    F = ring.field
    norm = F.norm
    F0 = FreeModule(M=[0], rank=[0], deg=[0], by_rank={0: 0})
    modules = [F0]
    maps: list[list[dict] | None] = [None]
    elems = [{m << SHIFT: c for m, c in g.terms.items()} for g in gb.gens]
    total = 1
    while elems:
        prev = modules[-1]
        leads = [max(e) for e in elems]
        # Schreyer's trick: within one lead component, decreasing lead monomial
        order = sorted(range(len(elems)), key=lambda l: (leads[l] & LOW, -(leads[l] >> SHIFT)))
        elems = [elems[l] for l in order]
        leads = [leads[l] for l in order]
        lead_T = [k >> SHIFT for k in leads]
        lead_r = [k & LOW for k in leads]
        lead_c = [e[k] for e, k in zip(elems, leads)]
        m = len(elems)
        total += m
        if total > max_basis:
            raise ScaleGuardError(f"resolution exceeds {max_basis} basis elements")
        # ties: inherited rank of the lead component, then smaller index wins
        tie = sorted(range(m), key=lambda l: (lead_r[l], -l))
        rk = [0] * m
        for pos, l in enumerate(tie):
            rk[l] = pos
        Fk = FreeModule(M=lead_T, rank=rk, deg=[ring.deg(T) for T in lead_T],
                        by_rank={pos: l for pos, l in enumerate(tie)})
        modules.append(Fk)
        maps.append(elems)

        reducers: dict[int, list[int]] = defaultdict(list)
        for l in range(m):
            reducers[lead_r[l]].append(l)

        new_elems = []
        for l in range(m):
            cands = []
            for j in reducers[lead_r[l]]:
                if j > l:
                    L = ring.lcm(lead_T[l], lead_T[j])
                    cands.append((ring.deg(L), L - lead_T[l], j, L))
            cands.sort()
            kept: list[int] = []
            for _, ml, j, L in cands:
                if any(ring.divides(o, ml) for o in kept):
                    continue
                kept.append(ml)
                mj = L - lead_T[j]
                ratio = norm(lead_c[l] * F.inv(lead_c[j]))
                sl, sj = ml << SHIFT, mj << SHIFT
                svec = {k + sl: c for k, c in elems[l].items()}
                for k, c in elems[j].items():
                    nk = k + sj
                    v = norm(svec.get(nk, 0) - ratio * c)
                    if v:
                        svec[nk] = v
                    else:
                        svec.pop(nk, None)
                q = _divide_module(ring, svec, reducers, lead_T, lead_c, elems, lead_T, rk, F)
                syz = {k: norm(-c) for k, c in q.items()}
                k_l = ((ml + lead_T[l]) << SHIFT) | rk[l]
                k_j = ((mj + lead_T[j]) << SHIFT) | rk[j]
                for key, c in ((k_l, norm(1)), (k_j, norm(-ratio))):
                    v = norm(syz.get(key, 0) + c)
                    if v:
                        syz[key] = v
                    else:
                        syz.pop(key, None)
                new_elems.append(syz)
        elems = new_elems
    return Resolution(ring, modules, maps)


@dataclass
class BettiTable:
    """Graded Betti numbers β_{i,j} of S/I (i homological, j internal degree)."""

    entries: dict[tuple[int, int], int]
    field: str = ""

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries.get(ij, 0)

    def nonzero(self) -> dict[tuple[int, int], int]:
        return {k: v for k, v in sorted(self.entries.items()) if v}

    @property
    def regularity(self) -> int:
        return max((j - i for (i, j), v in self.entries.items() if v), default=0)

    @property
    def projective_dimension(self) -> int:
        return max((i for (i, _), v in self.entries.items() if v), default=0)

    def totals(self) -> list[int]:
        out = [0] * (self.projective_dimension + 1)
        for (i, _), v in self.entries.items():
            out[i] += v
        return out

    def hilbert_numerator(self) -> dict[int, int]:
        """K-polynomial Σ (-1)^i β_{i,j} t^j as {j: coefficient}."""
        out: dict[int, int] = defaultdict(int)
        for (i, j), v in self.entries.items():
            out[j] += (-1) ** i * v
        return {j: c for j, c in sorted(out.items()) if c}

    def to_csv(self) -> str:
        """Dense table: one row per homological degree i, columns j - i."""
        nz = self.nonzero()
        pd = self.projective_dimension
        reg = self.regularity
        lines = ["i," + ",".join(str(d) for d in range(reg + 1))]
        for i in range(pd + 1):
            lines.append(f"{i}," + ",".join(str(nz.get((i, i + d), 0)) for d in range(reg + 1)))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_csv(cls, text: str, field: str = "") -> BettiTable:
        rows = [r.split(",") for r in text.strip().splitlines()]
        shifts = [int(d) for d in rows[0][1:]]
        entries = {}
        for r in rows[1:]:
            i = int(r[0])
            for d, v in zip(shifts, r[1:]):
                if int(v):
                    entries[(i, i + d)] = int(v)
        return cls(entries, field)

    def diagram(self) -> str:
        """Macaulay2-style diagram: rows j - i, columns i."""
        nz = self.nonzero()
        pd = self.projective_dimension
        width = max([len(str(v)) for v in nz.values()] + [len(str(pd))]) + 1
        head = "      " + "".join(str(i).rjust(width) for i in range(pd + 1))
        lines = [head]
        for d in range(self.regularity + 1):
            cells = "".join((str(nz[(i, i + d)]) if (i, i + d) in nz else "-").rjust(width) for i in range(pd + 1))
            lines.append(f"{d:>4}: " + cells)
        lines.append("total:" + "".join(str(t).rjust(width) for t in self.totals()))
        return "\n".join(lines)

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.nonzero() == other.nonzero()


def betti_from_resolution(res: Resolution) -> BettiTable:
    """Minimal Betti numbers: β_{k,j} = f_{k,j} - r_{k,j} - r_{k+1,j} where
    r_{k,j} is the rank of the degree-0 (scalar) block of d_k in degree j."""
    ring = res.ring
    F = ring.field
    f = defaultdict(int)
    for k, mod in enumerate(res.modules):
        for d in mod.deg:
            f[(k, d)] += 1
    r = defaultdict(int)
    for k in range(1, len(res.modules)):
        src, dst = res.modules[k], res.modules[k - 1]
        blocks: dict[int, dict[int, dict[int, object]]] = defaultdict(dict)
        for l, img in enumerate(res.maps[k]):
            row = {}
            for key, c in img.items():
                col = dst.by_rank[key & LOW]
                if key >> SHIFT == dst.M[col]:
                    row[col] = c
            if row:
                blocks[src.deg[l]][l] = row
        for j, rows in blocks.items():
            cols = sorted({c for row in rows.values() for c in row})
            pos = {c: a for a, c in enumerate(cols)}
            mat = []
            for row in rows.values():
                line = [0] * len(cols)
                for c, v in row.items():
                    line[pos[c]] = v
                mat.append(line)
            r[(k, j)] = matrix_rank(mat, F)
    entries = {}
    for (k, j), cnt in f.items():
        b = cnt - r[(k, j)] - r[(k + 1, j)]
        if b < 0:
            raise ArithmeticError("negative Betti number: inconsistent resolution")
        if b:
            entries[(k, j)] = b
    return BettiTable(entries, F.name)
