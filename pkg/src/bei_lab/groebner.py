"""Division, Buchberger's algorithm and ideal operations over lex orders."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from bei_lab.errors import ScaleGuardError
from bei_lab.poly import Polynomial, Ring

INTERSECTION_MAX_VERTICES = 4


class MonomialOrder(enum.Enum):
    LEX = "lex"
    # lex with the auxiliary block t > x > y; eliminates the t's
    ELIMINATION = "elim"


def order_of(ring: Ring) -> MonomialOrder:
    return MonomialOrder.ELIMINATION if ring.aux else MonomialOrder.LEX


def lex_compare(a: Sequence[int], b: Sequence[int]) -> int:
    """Compare exponent vectors (x-block before y-block): -1, 0 or 1."""
    if len(a) != len(b):
        raise ValueError(f"exponent vectors of length {len(a)} and {len(b)}")
    for ea, eb in zip(a, b):
        if ea != eb:
            return 1 if ea > eb else -1
    return 0


@dataclass(frozen=True)
class GroebnerBasis:
    ring: Ring
    gens: tuple[Polynomial, ...]
    order: MonomialOrder

    def lead_monomials(self) -> list[int]:
        return [g.lead_monomial() for g in self.gens]

    def is_unit(self) -> bool:
        return any(g.lead_monomial() == 0 for g in self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def __str__(self):
        return "\n".join(str(g) for g in self.gens)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal stored by its minimal generators, descending lex."""

    ring: Ring
    gens: tuple[int, ...]

    @classmethod
    def from_monomials(cls, ring: Ring, monos) -> MonomialIdeal:
        return cls(ring, tuple(minimalize(ring, monos)))

    def is_squarefree(self) -> bool:
        return all(self.ring.is_squarefree(m) for m in self.gens)

    def contains(self, m: int) -> bool:
        return any(self.ring.divides(g, m) for g in self.gens)

    def polys(self) -> list[Polynomial]:
        return [self.ring.monomial(m) for m in self.gens]

    def __str__(self):
        return "(" + ", ".join(self.ring.mono_str(m) for m in self.gens) + ")"


def minimalize(ring: Ring, monos) -> list[int]:
    out: list[int] = []
    for m in sorted(set(monos), key=lambda m: (ring.deg(m), -m)):
        if not any(ring.divides(g, m) for g in out):
            out.append(m)
    return sorted(out, reverse=True)


# -- division ------------------------------------------------------------

def _divide(ring: Ring, terms: dict, basis: list[tuple[int, object, dict]], quotients: list[dict] | None):
    """Multivariate division of ``terms`` by ``basis`` entries ``(lm, 1/lc, terms)``.

    Returns the remainder; fills ``quotients`` (one dict per basis element)
    when given.  The first basis element whose leading monomial divides the
    current term is used.
    """
    norm = ring.field.norm
    g = ring.guard
    p = dict(terms)
    rem = {}
    while p:
        m = max(p)
        c = p.pop(m)
        for idx, (lm, lcinv, bterms) in enumerate(basis):
            if ((m | g) - lm) & g == g:
                u = m - lm
                k = norm(c * lcinv)
                for bm, bc in bterms.items():
                    if bm == lm:
                        continue
                    key = bm + u
                    v = norm(p.get(key, 0) - k * bc)
                    if v:
                        p[key] = v
                    else:
                        p.pop(key, None)
                if quotients is not None:
                    qd = quotients[idx]
                    v = norm(qd.get(u, 0) + k)
                    if v:
                        qd[u] = v
                    else:
                        qd.pop(u, None)
                break
        else:
            rem[m] = c
    return rem


def _basis_entries(B: Sequence[Polynomial]) -> list[tuple[int, object, dict]]:
    out = []
    for b in B:
        if b.is_zero():
            raise ValueError("cannot divide by the zero polynomial")
        lm = b.lead_monomial()
        out.append((lm, b.ring.field.inv(b.terms[lm]), b.terms))
    return out


def _ring_of(*groups) -> Ring:
    for grp in groups:
        for f in grp:
            return f.ring
    raise ValueError("cannot infer the ring from empty generator lists; pass ring=")


def divide(f: Polynomial, B: Sequence[Polynomial]) -> tuple[list[Polynomial], Polynomial]:
    """Return ``(q, r)`` with ``f = sum q_i B_i + r`` and no term of ``r``
    divisible by a leading monomial of ``B``."""
    if not B:
        raise ValueError("empty divisor list")
    ring = f.ring
    quotients: list[dict] = [{} for _ in B]
    r = _divide(ring, f.terms, _basis_entries(B), quotients)
    return [Polynomial._raw(ring, q) for q in quotients], Polynomial._raw(ring, r)


def reduce(f: Polynomial, B: Sequence[Polynomial] | GroebnerBasis) -> Polynomial:
    gens = B.gens if isinstance(B, GroebnerBasis) else B
    if not gens:
        raise ValueError("empty divisor list")
    return Polynomial._raw(f.ring, _divide(f.ring, f.terms, _basis_entries(gens), None))


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    ring = f.ring
    F = ring.field
    lf, lg = f.lead_monomial(), g.lead_monomial()
    L = ring.lcm(lf, lg)
    a = f.mul_monomial(L - lf, F.inv(f.terms[lf]))
    b = g.mul_monomial(L - lg, F.inv(g.terms[lg]))
    return a - b


def is_groebner(gens: Sequence[Polynomial]) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return True
    ring = gens[0].ring
    entries = _basis_entries(gens)
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if ring.coprime(entries[i][0], entries[j][0]):
                continue
            s = s_polynomial(gens[i], gens[j])
            if _divide(ring, s.terms, entries, None):
                return False
    return True


# -- Buchberger ------------------------------------------------------------

def buchberger(gens: Sequence[Polynomial], ring: Ring | None = None) -> GroebnerBasis:
    """Reduced Gröbner basis for the lex order of the generators' ring.

    Pairs are processed by the normal strategy (smallest lcm degree first,
    then smallest lcm in lex); Buchberger's coprime and chain criteria skip
    redundant pairs.  Output is monic and sorted by descending leading
    monomial, so two ideals are equal iff their bases compare equal.
    """
    ring = ring or _ring_of(gens)
    F = ring.field
    G: list[Polynomial] = []
    for f in gens:
        if f.ring != ring:
            raise ValueError("generator in a different ring")
        if not f.is_zero():
            G.append(f.monic())
    if not G:
        return GroebnerBasis(ring, (), order_of(ring))

    entries = _basis_entries(G)
    lms = [e[0] for e in entries]
    pairs = {(i, j) for j in range(len(G)) for i in range(j)}

    def pair_key(p):
        L = ring.lcm(lms[p[0]], lms[p[1]])
        return (ring.deg(L), L, p)

    while pairs:
        pair = min(pairs, key=pair_key)
        pairs.discard(pair)
        i, j = pair
        if ring.coprime(lms[i], lms[j]):
            continue
        L = ring.lcm(lms[i], lms[j])
        chain = False
        for k in range(len(G)):
            if k == i or k == j or not ring.divides(lms[k], L):
                continue
            if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
                chain = True
                break
        if chain:
            continue
        s = s_polynomial(G[i], G[j])
        h = _divide(ring, s.terms, entries, None)
        if not h:
            continue
        hp = Polynomial._raw(ring, h).monic()
        if hp.lead_monomial() == 0:
            return GroebnerBasis(ring, (ring.monomial(0, F.norm(1)),), order_of(ring))
        new = len(G)
        G.append(hp)
        entries.append((hp.lead_monomial(), F.norm(1), hp.terms))
        lms.append(hp.lead_monomial())
        pairs.update((k, new) for k in range(new))

    return GroebnerBasis(ring, tuple(_reduce_basis(ring, G)), order_of(ring))


def _reduce_basis(ring: Ring, G: list[Polynomial]) -> list[Polynomial]:
    keep: list[Polynomial] = []
    lms = [g.lead_monomial() for g in G]
    for idx, g in enumerate(G):
        lm = lms[idx]
        redundant = False
        for k, other in enumerate(lms):
            if k == idx:
                continue
            if ring.divides(other, lm) and (other != lm or k < idx):
                redundant = True
                break
        if not redundant:
            keep.append(g)
    out = []
    for idx, g in enumerate(keep):
        others = [h for k, h in enumerate(keep) if k != idx]
        lm = g.lead_monomial()
        tail = {m: c for m, c in g.terms.items() if m != lm}
        rem = _divide(ring, tail, _basis_entries(others), None) if others else tail
        rem[lm] = g.terms[lm]
        out.append(Polynomial._raw(ring, rem).monic())
    out.sort(key=lambda p: p.lead_monomial(), reverse=True)
    return out


def initial_ideal(B: GroebnerBasis) -> MonomialIdeal:
    return MonomialIdeal.from_monomials(B.ring, B.lead_monomials())


def ideal_membership(f: Polynomial, B: GroebnerBasis) -> bool:
    if f.is_zero():
        return True
    if not B.gens:
        return False
    return reduce(f, B).is_zero()


# -- ideal operations --------------------------------------------------------

def unit_ideal(ring: Ring) -> list[Polynomial]:
    return [ring.monomial(0, 1)]


def ideal_sum(I: Sequence[Polynomial], J: Sequence[Polynomial]) -> list[Polynomial]:
    return list(I) + list(J)


def ideal_equal(I: Sequence[Polynomial], J: Sequence[Polynomial], ring: Ring | None = None) -> bool:
    ring = ring or _ring_of(I, J)
    return buchberger(I, ring).gens == buchberger(J, ring).gens


def ideal_intersection(
    I: Sequence[Polynomial],
    J: Sequence[Polynomial],
    ring: Ring | None = None,
    max_vertices: int = INTERSECTION_MAX_VERTICES,
) -> list[Polynomial]:
    """Generators of I ∩ J: eliminate t from t·I + (1 - t)·J."""
    ring = ring or _ring_of(I, J)
    if ring.n > max_vertices:
        raise ScaleGuardError(f"intersection limited to n <= {max_vertices} (got n = {ring.n})")
    big = Ring(ring.n, ring.field, aux=ring.aux + 1)
    t = big.monomial(big.t(1))
    one = big.monomial(0)
    gens = [t * big.embed(f) for f in I] + [(one - t) * big.embed(g) for g in J]
    G = buchberger(gens, big)
    bound = big.t(1)
    return [Polynomial._raw(ring, g.terms) for g in G.gens if g.lead_monomial() < bound]


def intersect_all(ideals: Sequence[Sequence[Polynomial]], ring: Ring, **kw) -> list[Polynomial]:
    """Intersection of a family; the empty family gives the unit ideal."""
    if not ideals:
        return unit_ideal(ring)
    acc = list(ideals[0])
    for other in ideals[1:]:
        acc = ideal_intersection(acc, other, ring=ring, **kw)
    return acc
