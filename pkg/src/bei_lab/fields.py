"""Coefficient fields: prime fields GF(p) and the rationals.

Elements are plain Python ints (GF(p), kept in ``range(p)``) or
``fractions.Fraction`` (Q).  Algorithms do arithmetic with the usual operators
and call :meth:`norm` on the result, which keeps the inner loops free of
method dispatch for the common GF(p) case.
"""

from __future__ import annotations

from fractions import Fraction

DEFAULT_PRIME = 32003


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


class PrimeField:
    __slots__ = ("p",)

    def __init__(self, p: int = DEFAULT_PRIME):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    @property
    def name(self) -> str:
        return f"p{self.p}"

    @property
    def characteristic(self) -> int:
        return self.p

    def norm(self, c):
        return c % self.p

    def inv(self, c):
        if c % self.p == 0:
            raise ZeroDivisionError("inverse of 0 in GF(%d)" % self.p)
        return pow(c, -1, self.p)

    def coerce(self, c):
        if isinstance(c, Fraction):
            return (c.numerator * self.inv(c.denominator)) % self.p
        return int(c) % self.p

    def to_str(self, c) -> str:
        # symmetric representative so that -1 prints as -1
        c %= self.p
        return str(c - self.p if c > self.p // 2 else c)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class RationalField:
    __slots__ = ()

    name = "Q"
    characteristic = 0

    def norm(self, c):
        return c if isinstance(c, Fraction) else Fraction(c)

    def inv(self, c):
        if c == 0:
            raise ZeroDivisionError("inverse of 0 in Q")
        return 1 / Fraction(c)

    def coerce(self, c):
        return Fraction(c)

    def to_str(self, c) -> str:
        return str(Fraction(c))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


GF32003 = PrimeField(DEFAULT_PRIME)
GF2 = PrimeField(2)
QQ = RationalField()

Field = PrimeField | RationalField


def parse_field(spec: str) -> Field:
    """Parse ``p32003``, ``GF(7)``, ``2`` or ``Q``/``QQ``."""
    s = spec.strip()
    if s.upper() in ("Q", "QQ"):
        return QQ
    if s.upper().startswith("GF(") and s.endswith(")"):
        s = s[3:-1]
    elif s[:1] in ("p", "P"):
        s = s[1:]
    try:
        return PrimeField(int(s))
    except ValueError as exc:
        raise ValueError(f"unknown field {spec!r}") from exc
