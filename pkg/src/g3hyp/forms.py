"""Binary forms over Q or Q(sqrt d): GL2 action, transvectants, discriminants.

A form of degree n is stored densely; ``coeffs[i]`` multiplies X^i * Y^(n-i).
Coefficients may be ``Fraction`` or :class:`~g3hyp.arith.QuadExt`; every
routine here only uses field operations, so both work unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .arith import PreconditionError, deserialize_scalar, serialize_scalar


def _coerce(c):
    if isinstance(c, int):
        return Fraction(c)
    return c


def _poly_mul(a: Sequence, b: Sequence) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = out[i + j] + x * y
    return out


@dataclass(frozen=True)
class BinaryForm:
    degree: int
    coeffs: tuple

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        if len(self.coeffs) != self.degree + 1:
            raise ValueError(
                f"degree {self.degree} form needs {self.degree + 1} coefficients, "
                f"got {len(self.coeffs)}"
            )
        object.__setattr__(self, "coeffs", tuple(_coerce(c) for c in self.coeffs))

    # -- construction ------------------------------------------------------
    @classmethod
    def zero(cls, degree: int) -> "BinaryForm":
        return cls(degree, (Fraction(0),) * (degree + 1))

    @classmethod
    def from_dict(cls, degree: int, terms: dict) -> "BinaryForm":
        """Build from ``{i: c}`` meaning c * X^i * Y^(degree-i)."""
        coeffs = [Fraction(0)] * (degree + 1)
        for i, c in terms.items():
            coeffs[i] = _coerce(c)
        return cls(degree, tuple(coeffs))

    @classmethod
    def from_univariate(cls, coeffs_low_to_high: Sequence, degree: int | None = None) -> "BinaryForm":
        """Homogenize a polynomial given low-to-high up to ``degree`` (default: its length)."""
        coeffs = list(coeffs_low_to_high)
        if degree is None:
            degree = len(coeffs) - 1
        if len(coeffs) > degree + 1:
            if any(coeffs[degree + 1 :]):
                raise ValueError("polynomial degree exceeds the requested form degree")
            coeffs = coeffs[: degree + 1]
        coeffs += [Fraction(0)] * (degree + 1 - len(coeffs))
        return cls(degree, tuple(coeffs))

    # -- basic algebra -----------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if self.degree != other.degree:
            raise ValueError("cannot add forms of different degree")
        return BinaryForm(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        if self.degree != other.degree:
            raise ValueError("cannot subtract forms of different degree")
        return BinaryForm(self.degree, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "BinaryForm":
        return BinaryForm(self.degree, tuple(-a for a in self.coeffs))

    def scale(self, c) -> "BinaryForm":
        return BinaryForm(self.degree, tuple(c * a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            return BinaryForm(self.degree + other.degree, tuple(_poly_mul(self.coeffs, other.coeffs)))
        return self.scale(other)

    __rmul__ = __mul__

    def constant(self):
        """The value of a degree-0 form."""
        if self.degree != 0:
            raise ValueError(f"form of degree {self.degree} is not a scalar")
        return self.coeffs[0]

    def evaluate(self, x, y):
        total = Fraction(0)
        for i, c in enumerate(self.coeffs):
            if c:
                total = total + c * x**i * y ** (self.degree - i)
        return total

    def differentiate(self, var: str) -> "BinaryForm":
        n = self.degree
        if n == 0:
            return BinaryForm.zero(0)
        if var == "X":
            return BinaryForm(n - 1, tuple(self.coeffs[i + 1] * (i + 1) for i in range(n)))
        if var == "Y":
            return BinaryForm(n - 1, tuple(self.coeffs[i] * (n - i) for i in range(n)))
        raise ValueError(f"unknown variable {var!r}")

    def _partial(self, nx: int, ny: int) -> "BinaryForm":
        f = self
        for _ in range(nx):
            f = f.differentiate("X")
        for _ in range(ny):
            f = f.differentiate("Y")
        return f

    def to_json(self) -> dict:
        return {"degree": self.degree, "coeffs": [serialize_scalar(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "BinaryForm":
        return cls(int(obj["degree"]), tuple(deserialize_scalar(c) for c in obj["coeffs"]))

    def __str__(self):
        terms = []
        n = self.degree
        for i in range(n, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mon = "*".join(
                p
                for p in (
                    f"X^{i}" if i > 1 else ("X" if i == 1 else ""),
                    f"Y^{n - i}" if n - i > 1 else ("Y" if n - i == 1 else ""),
                )
                if p
            )
            terms.append(f"({c})*{mon}" if mon else f"({c})")
        return " + ".join(terms) or "0"


def transvectant(f: BinaryForm, g: BinaryForm, r: int) -> BinaryForm:
    """r-th transvectant (f, g)^r with the factorial normalization.

    (f,g)^r = (m-r)!(n-r)!/(m!n!) * sum_i (-1)^i C(r,i) d^r f/dX^(r-i)dY^i * d^r g/dX^i dY^(r-i)
    """
    m, n = f.degree, g.degree
    if r < 0 or r > m or r > n:
        raise PreconditionError(f"transvectant order {r} exceeds degrees ({m}, {n})")
    out = [Fraction(0)] * (m + n - 2 * r + 1)
    for i in range(r + 1):
        prod = _poly_mul(f._partial(r - i, i).coeffs, g._partial(i, r - i).coeffs)
        sign = (-1) ** i * comb(r, i)
        for k, v in enumerate(prod):
            if v:
                out[k] = out[k] + sign * v
    norm = Fraction(factorial(m - r) * factorial(n - r), factorial(m) * factorial(n))
    return BinaryForm(m + n - 2 * r, tuple(norm * c for c in out))


@dataclass(frozen=True)
class MoebiusMatrix:
    """Acts on forms by X -> a X + b Y, Y -> c X + d Y."""

    a: object
    b: object
    c: object
    d: object

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, _coerce(getattr(self, name)))

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    @classmethod
    def identity(cls) -> "MoebiusMatrix":
        return cls(1, 0, 0, 1)


def moebius_act(f: BinaryForm, M: MoebiusMatrix) -> BinaryForm:
    """Coefficients of f(aX + bY, cX + dY)."""
    if not M.det:
        raise PreconditionError("singular substitution matrix")
    n = f.degree
    # linear forms low-to-high in X: [Y-coefficient, X-coefficient]
    u = [M.b, M.a]
    v = [M.d, M.c]
    u_pows = [[Fraction(1)]]
    v_pows = [[Fraction(1)]]
    for _ in range(n):
        u_pows.append(_poly_mul(u_pows[-1], u))
        v_pows.append(_poly_mul(v_pows[-1], v))
    out = [Fraction(0)] * (n + 1)
    for i, c in enumerate(f.coeffs):
        if not c:
            continue
        for k, w in enumerate(_poly_mul(u_pows[i], v_pows[n - i])):
            if w:
                out[k] = out[k] + c * w
    return BinaryForm(n, tuple(out))


def _det(rows: list[list]):
    """Determinant by fraction-exact Gaussian elimination."""
    m = [list(r) for r in rows]
    size = len(m)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        p = m[col][col]
        det = det * p
        inv = 1 / p
        for r in range(col + 1, size):
            if m[r][col]:
                factor = m[r][col] * inv
                row_r, row_c = m[r], m[col]
                for k in range(col, size):
                    if row_c[k]:
                        row_r[k] = row_r[k] - factor * row_c[k]
    return det


def resultant(f: BinaryForm, g: BinaryForm):
    """Homogeneous (Sylvester) resultant of two binary forms at their formal degrees."""
    m, n = f.degree, g.degree
    if m == 0 and n == 0:
        return Fraction(1)
    size = m + n
    fc = list(reversed(f.coeffs))  # X^m first
    gc = list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * i + fc + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + gc + [Fraction(0)] * (size - n - 1 - i))
    return _det(rows)


def discriminant(f: BinaryForm):
    """Discriminant of a binary form, covariant of weight n(n-1) under GL2.

    With a nonzero X^n coefficient this is the usual discriminant of f(x, 1).
    Otherwise it is taken from Res(df/dX, df/dY), which agrees with the former
    wherever both apply.
    """
    n = f.degree
    if f.is_zero():
        raise PreconditionError("discriminant of the zero form")
    if n < 2:
        raise PreconditionError("discriminant needs degree >= 2")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    lead = f.coeffs[n]
    if lead:
        return sign * resultant(f, f.differentiate("X")) / lead
    res = resultant(f.differentiate("X"), f.differentiate("Y"))
    return sign * res / Fraction(n) ** (n - 2)
