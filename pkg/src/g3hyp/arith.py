"""Exact scalars: rationals (``fractions.Fraction``) and elements of Q(sqrt d)."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Union

Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class PreconditionError(ValueError):
    """A mathematical precondition of an operation is violated."""


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``. Decimal and exponent notation are rejected."""
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not an exact rational: {text!r}")
    q = Fraction(text)
    return q


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _int_sqrt_exact(n: int) -> int | None:
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def rational_sqrt(q) -> Fraction | None:
    """Nonnegative square root of ``q`` if it is a square in Q, else ``None``."""
    q = Fraction(q)
    if q < 0:
        return None
    num = _int_sqrt_exact(q.numerator)
    den = _int_sqrt_exact(q.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def _squarefree_int(n: int) -> tuple[int, int]:
    """Write n > 0 as s * m**2 with s squarefree."""
    s, m = 1, 1
    p = 2
    # small primes by trial division; the cofactor is handled by factorint
    while p * p <= n and p < 10_000:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            m *= p ** (e // 2)
            if e % 2:
                s *= p
        p += 1 if p == 2 else 2
    if n > 1:
        if p * p > n:
            s *= n
        elif (r := _int_sqrt_exact(n)) is not None:
            m *= r
        else:
            from sympy import factorint

            for prime, e in factorint(n).items():
                m *= prime ** (e // 2)
                if e % 2:
                    s *= prime
    return s, m


def squarefree_part(q) -> tuple[int, Fraction]:
    """Return ``(s, r)`` with ``q == s * r**2``, ``s`` a squarefree integer, ``r > 0``."""
    q = Fraction(q)
    if q == 0:
        raise PreconditionError("squarefree_part of zero")
    sign = -1 if q < 0 else 1
    # q = n/d = n*d / d**2
    s, m = _squarefree_int(abs(q.numerator) * q.denominator)
    return sign * s, Fraction(m, q.denominator)


Scalar = Union[int, Fraction, "QuadExt"]


@dataclass(frozen=True, init=False)
class QuadExt:
    """``base + coeff*sqrt(radicand)`` with the radicand kept squarefree.

    A radicand that is a perfect square folds into the base, so every value
    has one canonical representation and equality is componentwise.
    """

    base: Fraction
    coeff: Fraction
    radicand: int

    def __init__(self, base, coeff=0, radicand=1):
        base, coeff, radicand = Fraction(base), Fraction(coeff), Fraction(radicand)
        if radicand == 0:
            raise PreconditionError("radicand must be nonzero")
        s, r = squarefree_part(radicand)
        coeff *= r
        if s == 1:
            base, coeff = base + coeff, Fraction(0)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "radicand", s)

    # -- helpers -----------------------------------------------------------
    def _coerce(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            if other.coeff == 0:
                return QuadExt._raw(other.base, Fraction(0), self.radicand)
            if self.coeff != 0 and other.radicand != self.radicand:
                raise PreconditionError(
                    f"radicand mismatch: {self.radicand} vs {other.radicand}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt._raw(Fraction(other), Fraction(0), self.radicand)
        return NotImplemented

    @classmethod
    def _raw(cls, base: Fraction, coeff: Fraction, radicand: int) -> "QuadExt":
        obj = object.__new__(cls)
        object.__setattr__(obj, "base", base)
        object.__setattr__(obj, "coeff", coeff)
        object.__setattr__(obj, "radicand", radicand)
        return obj

    def _radicand_with(self, other: "QuadExt") -> int:
        return self.radicand if self.coeff != 0 or other.coeff == 0 else other.radicand

    @property
    def is_rational(self) -> bool:
        return self.coeff == 0

    def conjugate(self) -> "QuadExt":
        return QuadExt._raw(self.base, -self.coeff, self.radicand)

    def norm(self) -> Fraction:
        return self.base * self.base - self.radicand * self.coeff * self.coeff

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt._raw(self.base + o.base, self.coeff + o.coeff, self._radicand_with(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadExt._raw(-self.base, -self.coeff, self.radicand)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt._raw(self.base - o.base, self.coeff - o.coeff, self._radicand_with(o))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = self._radicand_with(o)
        return QuadExt._raw(
            self.base * o.base + d * self.coeff * o.coeff,
            self.base * o.coeff + self.coeff * o.base,
            d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt d)")
        return QuadExt._raw(self.base / n, -self.coeff / n, self.radicand)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = QuadExt._raw(Fraction(1), Fraction(0), self.radicand)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.coeff == 0 and self.base == other
        if isinstance(other, QuadExt):
            if self.coeff == 0 and other.coeff == 0:
                return self.base == other.base
            return (self.base, self.coeff, self.radicand) == (
                other.base,
                other.coeff,
                other.radicand,
            )
        return NotImplemented

    def __hash__(self):
        if self.coeff == 0:
            return hash(self.base)
        return hash((self.base, self.coeff, self.radicand))

    def __bool__(self):
        return self.base != 0 or self.coeff != 0

    def __repr__(self):
        return f"QuadExt({format_rational(self.base)}, {format_rational(self.coeff)}, {self.radicand})"

    def to_json(self) -> dict:
        return {
            "base": format_rational(self.base),
            "coeff": format_rational(self.coeff),
            "radicand": format_rational(self.radicand),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "QuadExt":
        return cls(
            parse_rational(obj["base"]),
            parse_rational(obj["coeff"]),
            parse_rational(obj["radicand"]),
        )


def sqrt_element(d) -> Fraction | QuadExt:
    """``sqrt(d)`` as a rational when possible, otherwise as a ``QuadExt``."""
    r = rational_sqrt(d)
    if r is not None:
        return r
    return QuadExt(0, 1, d)


def quadext_arithmetic(lhs: QuadExt, rhs: QuadExt, op: str) -> QuadExt:
    ops = {
        "add": lambda x, y: x + y,
        "sub": lambda x, y: x - y,
        "mul": lambda x, y: x * y,
        "div": lambda x, y: x / y,
    }
    if op not in ops:
        raise ValueError(f"unknown operation {op!r}")
    return ops[op](lhs, rhs)


def serialize_scalar(x) -> str | dict:
    if isinstance(x, QuadExt):
        if x.coeff == 0:
            return format_rational(x.base)
        return x.to_json()
    return format_rational(x)


def deserialize_scalar(obj) -> Fraction | QuadExt:
    if isinstance(obj, dict):
        return QuadExt.from_json(obj)
    return parse_rational(obj)


def is_zero(x) -> bool:
    return not x
