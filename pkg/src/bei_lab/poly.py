"""Sparse polynomials in S = K[x_1..x_n, y_1..y_n] (optionally with auxiliary
variables placed in front for elimination).

Monomials are packed into a single Python int, 8 bits per variable, with the
first variable in the most significant field.  With this layout

* multiplication is integer addition, exact division is subtraction,
* lex comparison with ``v_0 > v_1 > ...`` is integer comparison,
* divisibility and lcm are a couple of mask operations.

Exponents must stay below 128 (the top bit of every field is a guard bit);
that is far beyond anything reached by binomial edge ideals on ≤ 8 vertices.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

from bei_lab.fields import GF32003, Field

BITS = 8
FIELD_MASK = (1 << BITS) - 1
MAX_EXP = 127


class Ring:
    """The polynomial ring over ``field`` in ``aux`` auxiliary variables
    ``t``/``t1..`` followed by ``x1..xn, y1..yn``; lex with variables in that
    order.  Auxiliary variables first makes lex an elimination order for them.
    """

    def __init__(self, n: int, field: Field = GF32003, aux: int = 0):
        if n < 0 or aux < 0:
            raise ValueError("negative variable count")
        self.n = n
        self.aux = aux
        self.field = field
        self.nvars = aux + 2 * n
        if aux == 1:
            tnames = ["t"]
        else:
            tnames = [f"t{i}" for i in range(1, aux + 1)]
        self.names = tnames + [f"x{i}" for i in range(1, n + 1)] + [f"y{i}" for i in range(1, n + 1)]
        self._index = {name: k for k, name in enumerate(self.names)}
        self.nbytes = max(1, self.nvars)
        self.guard = sum(1 << (BITS * k + BITS - 1) for k in range(self.nvars))
        self.ones = sum(1 << (BITS * k) for k in range(self.nvars))

    # -- variables -----------------------------------------------------
    def _shift(self, v: int) -> int:
        return BITS * (self.nvars - 1 - v)

    def var_mono(self, v: int) -> int:
        """Packed monomial of the variable with 0-based position ``v``."""
        return 1 << self._shift(v)

    def x(self, i: int) -> int:
        return self.var_mono(self.aux + i - 1)

    def y(self, i: int) -> int:
        return self.var_mono(self.aux + self.n + i - 1)

    def t(self, k: int = 1) -> int:
        return self.var_mono(k - 1)

    def var_index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r} in {self!r}") from None

    # -- monomials -----------------------------------------------------
    def mono(self, exps: Sequence[int]) -> int:
        if len(exps) != self.nvars:
            raise ValueError(f"expected {self.nvars} exponents, got {len(exps)}")
        m = 0
        for e in exps:
            if not 0 <= e <= MAX_EXP:
                raise ValueError(f"exponent {e} out of range")
            m = (m << BITS) | e
        return m

    def exps(self, m: int) -> tuple[int, ...]:
        return tuple(m.to_bytes(self.nbytes, "big")) if self.nvars else ()

    def deg(self, m: int) -> int:
        return sum(m.to_bytes(self.nbytes, "big"))

    def divides(self, a: int, b: int) -> bool:
        g = self.guard
        return ((b | g) - a) & g == g

    def lcm(self, a: int, b: int) -> int:
        g = self.guard
        ge = (((a | g) - b) & g) >> (BITS - 1)
        mask = ge * FIELD_MASK
        return (a & mask) | (b & ~mask)

    def gcd(self, a: int, b: int) -> int:
        return a + b - self.lcm(a, b)

    def support_mask(self, m: int) -> int:
        """Fields that are nonzero, as a guard-bit mask."""
        g = self.guard
        return ((m | g) - self.ones) & g

    def coprime(self, a: int, b: int) -> bool:
        return self.support_mask(a) & self.support_mask(b) == 0

    def is_squarefree(self, m: int) -> bool:
        return all(e <= 1 for e in self.exps(m))

    def support(self, m: int) -> tuple[int, ...]:
        """0-based positions of variables dividing ``m``."""
        return tuple(k for k, e in enumerate(self.exps(m)) if e)

    def mono_str(self, m: int) -> str:
        parts = []
        for name, e in zip(self.names, self.exps(m)):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    # -- construction --------------------------------------------------
    def poly(self, terms: dict[int, object] | None = None) -> Polynomial:
        return Polynomial(self, terms or {})

    def monomial(self, m: int, c=1) -> Polynomial:
        return Polynomial(self, {m: c})

    def f(self, i: int, j: int) -> Polynomial:
        """The 2-minor f_ij = x_i y_j - x_j y_i."""
        F = self.field
        return Polynomial(self, {self.x(i) + self.y(j): F.norm(1), self.x(j) + self.y(i): F.norm(-1)})

    def embed(self, p: Polynomial) -> Polynomial:
        """Map ``p`` from a ring with fewer auxiliary variables into this one."""
        if p.ring.n != self.n or p.ring.aux > self.aux or p.ring.field != self.field:
            raise ValueError("incompatible rings")
        return Polynomial(self, dict(p.terms))

    def parse(self, text: str) -> Polynomial:
        return parse_poly(self, text)

    def __eq__(self, other):
        return (
            isinstance(other, Ring)
            and (self.n, self.aux, self.field) == (other.n, other.aux, other.field)
        )

    def __hash__(self):
        return hash((self.n, self.aux, self.field))

    def __repr__(self):
        return f"Ring(n={self.n}, field={self.field!r}, aux={self.aux})"


class Polynomial:
    """Immutable polynomial: ``terms`` maps packed monomials to nonzero
    normalized coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict[int, object]):
        self.ring = ring
        norm = ring.field.norm
        clean = {}
        for m, c in terms.items():
            c = norm(c)
            if c:
                clean[m] = c
        self.terms = clean

    @classmethod
    def _raw(cls, ring: Ring, terms: dict[int, object]) -> Polynomial:
        # caller guarantees normalized nonzero coefficients
        p = object.__new__(cls)
        p.ring = ring
        p.terms = terms
        return p

    def is_zero(self) -> bool:
        return not self.terms

    def lead_monomial(self) -> int:
        return max(self.terms)

    def lead_coefficient(self):
        return self.terms[max(self.terms)]

    def monomials(self) -> list[int]:
        return sorted(self.terms, reverse=True)

    def degree(self) -> int:
        return max((self.ring.deg(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({self.ring.deg(m) for m in self.terms}) <= 1

    def monic(self) -> Polynomial:
        if not self.terms:
            return self
        F = self.ring.field
        inv = F.inv(self.lead_coefficient())
        return Polynomial._raw(self.ring, {m: F.norm(c * inv) for m, c in self.terms.items()})

    def scale(self, c) -> Polynomial:
        return Polynomial(self.ring, {m: v * c for m, v in self.terms.items()})

    def mul_monomial(self, u: int, c=1) -> Polynomial:
        F = self.ring.field
        return Polynomial(self.ring, {m + u: F.norm(v * c) for m, v in self.terms.items()})

    def _check(self, other: Polynomial) -> None:
        if other.ring != self.ring:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(self.ring, out)

    def __neg__(self) -> Polynomial:
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        out: dict[int, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 + m2
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(self.ring, out)

    __rmul__ = scale

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"


def format_poly(p: Polynomial) -> str:
    """Print in descending lex order, e.g. ``x1*y2 - x2*y1`` or ``3/2*x1^2 + 1``."""
    if not p.terms:
        return "0"
    F = p.ring.field
    out = []
    for m in p.monomials():
        s = F.to_str(p.terms[m])
        neg = s.startswith("-")
        if neg:
            s = s[1:]
        body = p.ring.mono_str(m)
        if body == "1":
            term = s
        elif s == "1":
            term = body
        else:
            term = f"{s}*{body}"
        if not out:
            out.append(("-" if neg else "") + term)
        else:
            out.append((" - " if neg else " + ") + term)
    return "".join(out)


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")
_COEF_RE = re.compile(r"^\d+(/\d+)?$")
_FACTOR_RE = re.compile(r"^([A-Za-z]\w*)(?:\^(\d+))?$")


def parse_poly(ring: Ring, text: str) -> Polynomial:
    """Inverse of :func:`format_poly` (also accepts any spacing)."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial")
    if text == "0":
        return ring.poly()
    pos = 0
    terms: dict[int, object] = {}
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse {text[pos:]!r}")
        sign, body = m.group(1), m.group(2).strip()
        if sign is None and not first:
            raise ValueError(f"missing operator before {body!r}")
        first = False
        pos = m.end()
        coef = Fraction(1)
        mono = 0
        for factor in body.split("*"):
            factor = factor.strip()
            if _COEF_RE.match(factor):
                coef *= Fraction(factor)
                continue
            fm = _FACTOR_RE.match(factor)
            if fm is None:
                raise ValueError(f"bad factor {factor!r}")
            e = int(fm.group(2) or 1)
            mono += e * ring.var_mono(ring.var_index(fm.group(1)))
        if sign == "-":
            coef = -coef
        terms[mono] = terms.get(mono, 0) + ring.field.coerce(coef)
    return Polynomial(ring, terms)


def poly_from_monomials(ring: Ring, monos: Iterable[int]) -> list[Polynomial]:
    return [ring.monomial(m) for m in monos]
