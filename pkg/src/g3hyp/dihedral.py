"""Dihedral invariants (s2, s3, s4) of curves Y^2 = X^8 + aX^6 + bX^4 + cX^2 + 1.

Covers the invariants themselves, the discriminant polynomial, closed forms
for J2..J7 and t1..t4, the j-invariant of the elliptic quotient, the genus-2
quotient, and reconstruction of a curve from (s2, s3, s4).

Two conventions live side by side here. Membership relations and the
discriminant polynomial use ``s2 = a*c``. The closed forms for t1..t4 and the
j-invariant are tabulated in the variable ``u = 2*s2``; callers always pass
``s2`` and the conversion happens internally.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import (
    PreconditionError,
    QuadExt,
    format_rational,
    rational_sqrt,
    serialize_scalar,
    sqrt_element,
)
from .forms import BinaryForm, discriminant, transvectant


@dataclass(frozen=True)
class ReducedCurve:
    """Y^2 = X^8 + a X^6 + b X^4 + c X^2 + 1."""

    a: object
    b: object
    c: object

    def __post_init__(self):
        for name in "abc":
            v = getattr(self, name)
            if isinstance(v, int):
                object.__setattr__(self, name, Fraction(v))

    def octavic(self) -> BinaryForm:
        return BinaryForm.from_dict(8, {0: 1, 2: self.c, 4: self.b, 6: self.a, 8: 1})

    def is_nonsingular(self) -> bool:
        return bool(discriminant(self.octavic()))

    def tau2(self) -> "ReducedCurve":
        return ReducedCurve(self.c, self.b, self.a)

    def tau1_squared(self) -> "ReducedCurve":
        return ReducedCurve(-self.a, self.b, -self.c)


def reduced_curve_of(f: BinaryForm) -> ReducedCurve | None:
    """Read an octavic as a ReducedCurve when it is monic, even, with constant term 1."""
    if f.degree != 8:
        return None
    c = f.coeffs
    if c[8] != 1 or c[0] != 1 or any(c[i] for i in (1, 3, 5, 7)):
        return None
    return ReducedCurve(c[6], c[4], c[2])


@dataclass(frozen=True)
class DihedralPoint:
    """generic: (s2, s3, s4); mixed: (s2, w, s4) with w = b^2; full: (w,)."""

    branch: str
    values: tuple

    def __post_init__(self):
        sizes = {"generic": 3, "mixed": 3, "full": 1}
        if self.branch not in sizes:
            raise ValueError(f"unknown dihedral branch {self.branch!r}")
        if len(self.values) != sizes[self.branch]:
            raise ValueError(f"{self.branch} point takes {sizes[self.branch]} values")

    def to_json(self) -> dict:
        return {"branch": self.branch, "values": [serialize_scalar(v) for v in self.values]}


def dihedral_invariants(C: ReducedCurve) -> DihedralPoint:
    a, b, c = C.a, C.b, C.c
    if not a and not c:
        return DihedralPoint("full", (b * b,))
    lam = a * a + c * c
    s2 = a * c
    s4 = a**4 + c**4
    if not lam and b:
        return DihedralPoint("mixed", (s2, b * b, s4))
    return DihedralPoint("generic", (s2, lam * b, s4))


def even_octavic_dihedral(f: BinaryForm) -> DihedralPoint:
    """Dihedral invariants of e8 X^8 + e6 X^6 + e4 X^4 + e2 X^2 + e0 (e8*e0 != 0).

    Equivalent to rescaling X by (e0/e8)^(1/8) and dividing by e0; every
    invariant is a rational function of the e's, so no root is extracted.
    """
    if f.degree != 8 or any(f.coeffs[i] for i in (1, 3, 5, 7)):
        raise PreconditionError("expected an even octavic")
    e0, e2, e4, e6, e8 = (f.coeffs[i] for i in (0, 2, 4, 6, 8))
    if not e0 or not e8:
        raise PreconditionError("even octavic needs nonzero X^8 and constant terms")
    if not e6 and not e2:
        return DihedralPoint("full", (e4 * e4 / (e8 * e0),))
    s2 = e6 * e2 / (e8 * e0)
    s4 = e6**4 / (e8**3 * e0) + e2**4 / (e8 * e0**3)
    lam_num = e6 * e6 * e0 + e2 * e2 * e8
    if not lam_num and e4:
        return DihedralPoint("mixed", (s2, e4 * e4 / (e8 * e0), s4))
    s3 = lam_num * e4 / (e8**2 * e0**2)
    return DihedralPoint("generic", (s2, s3, s4))


# ---------------------------------------------------------------------------
# closed forms in s2 = a*c

def dihedral_discriminant(s2, s3, s4):
    return (
        132 * s2**4 * s4 - 18 * s4**2 * s2 * s3 - 72 * s4 * s2**3 * s3 - s4 * s2**2 * s3**2
        + 80 * s2 * s3**2 * s4 - 576 * s3 * s2**2 * s4
        - 256 * s4**2 + 768 * s4 * s2**3 - 1024 * s4 * s2**2 + 256 * s2**2 * s3**2
        - 576 * s2**4 * s3 + 768 * s2**5 + 24 * s2**6
        - 16 * s3**4 - 1024 * s2**4 + 128 * s3**2 * s4 + 192 * s4**2 * s2 + 114 * s4**2 * s2**2
        + 4 * s4**2 * s2**3 - 144 * s4**2 * s3
        + 16 * s4 * s2**5 - 72 * s2**5 * s3 - 2 * s2**4 * s3**2 + 160 * s2**3 * s3**2
        + 4 * s3**3 * s4 + 8 * s3**3 * s2**2 + 27 * s4**3 + 16 * s2**7
    )


# measured: disc(X^8 + aX^6 + bX^4 + cX^2 + 1) == DISCRIMINANT_CONSTANT * (-256) * Delta^2 / (s4 + 2 s2^2)^4
DISCRIMINANT_CONSTANT = -1


def octavic_discriminant_from_dihedral(s2, s3, s4):
    lam2 = s4 + 2 * s2**2
    if not lam2:
        raise PreconditionError("s4 + 2*s2^2 = 0")
    return DISCRIMINANT_CONSTANT * -256 * dihedral_discriminant(s2, s3, s4) ** 2 / lam2**4


def _require_normalizable(s2, s4):
    if not s4 + 2 * s2**2:
        raise PreconditionError("degenerate normalization: s4 + 2*s2^2 = 0")


def shioda_from_dihedral(s2, s3, s4) -> tuple:
    """(J2, ..., J7) of the curve rescaled so that J_i carries the factor (a^2+c^2)^i."""
    _require_normalizable(s2, s4)
    J2 = 2 * (140 * s4 + 280 * s2**2 + 5 * s2 * s4 + 10 * s2**3 + s3**2)
    J3 = 2 * (
        6 * s3**3 + 525 * s4**2 + 2100 * s4 * s2**2 + 2100 * s2**4 - 55 * s2 * s3 * s4
        - 110 * s2**3 * s3 + 1960 * s3 * s4 + 3920 * s3 * s2**2
    )
    J4 = 2**6 * (
        s3**4 + 126 * s3 * s4**2 + 504 * s3 * s4 * s2**2 + 504 * s3 * s2**4 + 38416 * s4**2
        + 153664 * s4 * s2**2 + 153664 * s2**4
        - 784 * s2**3 * s4 - 784 * s2**5 + 4 * s4**2 * s2**2 + 16 * s4 * s2**4 + 16 * s2**6
        - 392 * s4 * s3**2 - 784 * s2**2 * s3**2 + 31 * s2 * s4 * s3**2
        - 196 * s2 * s4**2 + 62 * s2**3 * s3**2
    )
    J5 = 2**5 * (
        76832 * s3 * s4**2 + 307328 * s3 * s2**4 + 123480 * s4**2 * s2**2 + 246960 * s4 * s2**4
        + 1148 * s2**4 * s3**2 + 287 * s4**2 * s3**2
        - 1568 * s3**3 * s2**2 + 41552 * s2**5 * s3 - 26 * s2**3 * s3**3 - 1680 * s2**5 * s4
        - 208 * s3 * s2**6 - 140 * s2 * s4**3 - 840 * s2**3 * s4**2
        + 20580 * s4**3 + 2 * s3**5 - 1120 * s2**7 + 307328 * s3 * s4 * s2**2
        + 10388 * s2 * s3 * s4**2 + 41552 * s2**3 * s3 * s4
        - 52 * s3 * s4**2 * s2**2 + 164640 * s2**6 - 784 * s3**3 * s4 - 208 * s3 * s4 * s2**4
        + 1148 * s2**2 * s3**2 * s4 - 13 * s2 * s3**3 * s4
    )
    J6 = 2**9 * (
        2 * s2 * s4 + 4 * s2**3 - 196 * s4 - 392 * s2**2 + s3**2
    ) * (
        s3**4 - 378 * s3 * s4**2 - 1512 * s3 * s4 * s2**2 - 1512 * s3 * s2**4
        - 10192 * s2**3 * s4 - 10192 * s2**5 - 77 * s2 * s4 * s3**2 - 154 * s2**3 * s3**2
        + 4 * s4**2 * s2**2 + 16 * s4 * s2**4 + 16 * s2**6
        + 38416 * s4**2 + 153664 * s4 * s2**2 + 153664 * s2**4 - 392 * s4 * s3**2
        - 784 * s2**2 * s3**2 - 2548 * s2 * s4**2
    )
    # overall factor 2**8; the inner polynomial is symmetric to the other lines
    J7 = 2**8 * (
        1120 * s2**4 * s4**3 - 120472576 * s3 * s2**6 - 34300 * s2 * s4**4
        + 3360 * s2**6 * s4**2 + 4480 * s2**8 * s4 + 140 * s4**4 * s2**2
        - 203840 * s3 * s2**8 + 608 * s3 * s2**9 + 4410 * s3 * s4**4 - 39200 * s2**5 * s3**3
        - 931 * s3**4 * s4**2 - 3724 * s3**4 * s2**4
        - 90 * s3**5 * s2**3 - 1176 * s3**5 * s4 - 2352 * s3**5 * s2**2 + 161896 * s3**2 * s4**3
        + 8344 * s2**7 * s3**2 - 274400 * s2**3 * s4**3
        + 230496 * s3**3 * s4**2 + 921984 * s3**3 * s2**4 + 1295168 * s2**6 * s3**2
        + 129077760 * s2**6 * s4 - 1097600 * s2**7 * s4
        - 15059072 * s3 * s4**3 + 96808320 * s2**4 * s4**2 + 29196160 * s2**7 * s3
        + 2240 * s2**10 + 4033680 * s4**4
        + 2 * s3**7 - 90354432 * s3 * s4**2 * s2**2 - 180708864 * s3 * s4 * s2**4
        - 270480 * s3 * s2**6 * s4 - 45 * s3**5 * s2 * s4
        + 6258 * s2**3 * s3**2 * s4**2 + 912 * s3 * s2**7 * s4 + 971376 * s2**2 * s3**2 * s4**2
        - 9800 * s2 * s3**3 * s4**2 + 345 * s2**2 * s3**3 * s4**2
        + 456 * s3 * s2**5 * s4**2 - 39200 * s2**3 * s3**3 * s4 + 64538880 * s2**8
        + 1380 * s2**6 * s3**3
        - 3724 * s3**4 * s4 * s2**2 + 921984 * s3**3 * s4 * s2**2 + 1043 * s2 * s3**2 * s4**3
        + 21897120 * s2**3 * s3 * s4**2 + 76 * s3 * s2**3 * s4**3
        + 43794240 * s2**5 * s3 * s4 + 1380 * s2**4 * s3**3 * s4 + 3649520 * s2 * s3 * s4**3
        + 1942752 * s2**4 * s3**2 * s4 + 980 * s3 * s4**3 * s2**2
        + 32269440 * s4**3 * s2**2 - 99960 * s3 * s2**4 * s4**2 - 548800 * s2**9
        + 12516 * s2**5 * s3**2 * s4 - 823200 * s2**5 * s4**2
    )
    return (J2, J3, J4, J5, J6, J7)


# ---------------------------------------------------------------------------
# closed forms tabulated in u = 2*s2

def _t_tables(u, s3, s4):
    D = 560 * s4 + 280 * u**2 + 10 * u * s4 + 5 * u**3 + 4 * s3**2
    N = (
        3920 * s3 * u**2 + 2100 * s4**2 + 2100 * u**2 * s4 + 525 * u**4 + 7840 * s3 * s4
        + 24 * s3**3 - 110 * s3 * s4 * u - 55 * s3 * u**3
    )
    B = (
        38416 * u**4 + u**6 + 4 * s4**2 * u**2 + 4 * u**4 * s4 - 392 * u**3 * s4
        + 153664 * u**2 * s4 - 392 * s4**2 * u + 4 * s3**4 - 98 * u**5 + 504 * s3 * u**2 * s4
        - 1568 * s3**2 * s4 - 784 * s3**2 * u**2 + 504 * s3 * s4**2 + 126 * s3 * u**4
        + 62 * s3**2 * s4 * u + 153664 * s4**2 + 31 * s3**2 * u**3
    )
    M = (
        -123480 * s4**2 * u**2 - 61740 * u**4 * s4 - 307328 * s3 * s4**2 - 76832 * s3 * u**4
        - 5194 * s3 * u**5 + 13 * s3**3 * u**3 + 3136 * s3**3 * s4 + 1568 * s3**3 * u**2
        - 1148 * s3**2 * s4**2 + 280 * s4**3 * u + 420 * u**3 * s4**2 + 210 * u**5 * s4
        + 13 * s3 * u**6 - 287 * s3**2 * u**4 - 10290 * u**6 - 8 * s3**5 - 82320 * s4**3
        + 35 * u**7
        - 307328 * s3 * u**2 * s4 - 20776 * s3 * s4**2 * u + 52 * s3 * s4**2 * u**2
        - 20776 * s3 * u**3 * s4 + 52 * s3 * u**4 * s4 + 26 * s3**3 * s4 * u
        - 1148 * s3**2 * s4 * u**2
    )
    A = (
        -38416 * u**4 - u**6 - 4 * s4**2 * u**2 - 4 * u**4 * s4 + 5096 * u**3 * s4
        - 153664 * u**2 * s4 + 5096 * s4**2 * u - 4 * s3**4 + 1274 * u**5
        + 1512 * s3 * u**2 * s4
        + 1568 * s3**2 * s4 + 784 * s3**2 * u**2 + 1512 * s3 * s4**2 + 378 * s3 * u**4
        + 154 * s3**2 * s4 * u - 153664 * s4**2 + 77 * s3**2 * u**3
    )
    P = u**3 + 2 * u * s4 - 392 * s4 - 196 * u**2 + 2 * s3**2
    return D, N, B, M, A, P


def absolute_from_dihedral(s2, s3, s4) -> tuple:
    """(t1, t2, t3, t4) as rational functions of the dihedral invariants."""
    D, N, B, M, A, P = _t_tables(2 * s2, s3, s4)
    for name, val in (("J2-factor", D), ("J3-factor", N), ("J4-factor", B)):
        if not val:
            raise PreconditionError(f"vanishing denominator: {name}")
    t1 = 2 * N**2 / D**3
    t2 = 64 * B / D**2
    t3 = -Fraction(32) / D * M / N
    t4 = -A / B * (8 * P) / D
    return (t1, t2, t3, t4)


def elliptic_j(s2, s3, s4):
    """j-invariant of the elliptic quotient Y^2 = x^4 + a x^3 + b x^2 + c x + 1."""
    u = 2 * s2
    M = (
        66 * s4 * u**4 - 2048 * s4**2 - 512 * u**4 - 2048 * s4 * u**2 - 128 * s3**4
        + 1024 * s3**2 * s4 + 512 * s3**2 * u**2 + 228 * s4**2 * u**2
        + 768 * s4**2 * u + 216 * s4**3 + u**7 + 3 * u**6 + 4 * u**3 * s4**2 + 4 * u**5 * s4
        - s3**2 * u**4 + 768 * s4 * u**3 + 160 * s3**2 * u**3
        + 192 * u**5 - 2 * s3**2 * s4 * u**2 + 320 * s3**2 * s4 * u - 72 * s4**2 * s3 * u
        - 72 * s4 * u**3 * s3 - 1152 * s4 * u**2 * s3 + 32 * s3**3 * s4
        - 1152 * s4**2 * s3 - 288 * u**4 * s3 + 16 * s3**3 * u**2 - 18 * u**5 * s3
    )
    den = 2 * s4 + u**2
    if not M:
        raise PreconditionError("vanishing denominator: M")
    if not den:
        raise PreconditionError("vanishing denominator: 2*s4 + (2*s2)^2")
    P = -4 * s3**2 - 48 * s4 - 24 * u**2 + 3 * u**3 + 6 * s4 * u
    return Fraction(64) / M * P**3 / den


def quartic_j(a, b, c):
    """j of Y^2 = x^4 + a x^3 + b x^2 + c x + 1 from the classical quartic invariants I, J."""
    I = 12 - 3 * a * c + b * b
    J = 72 * b + 9 * a * b * c - 27 * c * c - 27 * a * a - 2 * b**3
    den = 4 * I**3 - J * J
    if not den:
        raise PreconditionError("singular quartic")
    return 6912 * I**3 / den


# ---------------------------------------------------------------------------
# genus-2 quotient

@dataclass(frozen=True)
class Genus2Quotient:
    sextic: BinaryForm
    clebsch: tuple  # (A, B, C, D), degrees 2, 4, 6, 10
    absolute: tuple
    normalizer: str  # which Clebsch invariant normalizes `absolute`

    def to_json(self) -> dict:
        return {
            "sextic": self.sextic.to_json(),
            "clebsch": [serialize_scalar(x) for x in self.clebsch],
            "absolute": [serialize_scalar(x) for x in self.absolute],
            "normalizer": self.normalizer,
        }


def clebsch_invariants(f: BinaryForm) -> tuple:
    if f.degree != 6:
        raise PreconditionError("Clebsch invariants need a sextic")
    i = transvectant(f, f, 4)
    delta = transvectant(i, i, 2)
    y1 = transvectant(f, i, 4)
    y2 = transvectant(i, y1, 2)
    y3 = transvectant(i, y2, 2)
    A = transvectant(f, f, 6).constant()
    B = transvectant(i, i, 4).constant()
    C = transvectant(i, delta, 4).constant()
    D = transvectant(y3, y1, 2).constant()
    return (A, B, C, D)


def genus2_absolute(clebsch: tuple) -> tuple[tuple, str]:
    A, B, C, D = clebsch
    if A:
        return (B / A**2, C / A**3, D / A**5), "A"
    if B:
        return (C**2 / B**3, D**2 / B**5), "B"
    if C:
        return (D**3 / C**5,), "C"
    return (), "none"


def genus2_quotient(C: ReducedCurve) -> Genus2Quotient:
    """Quotient Y^2 = X (X^4 + a X^3 + b X^2 + c X + 1), homogenized with a root at infinity."""
    sextic = BinaryForm.from_dict(6, {5: 1, 4: C.a, 3: C.b, 2: C.c, 1: 1})
    if not discriminant(BinaryForm.from_dict(5, {5: 1, 4: C.a, 3: C.b, 2: C.c, 1: 1})):
        raise PreconditionError("quintic X(X^4 + aX^3 + bX^2 + cX + 1) is not squarefree")
    cl = clebsch_invariants(sextic)
    absolute, norm = genus2_absolute(cl)
    return Genus2Quotient(sextic, cl, absolute, norm)


def igusa_from_clebsch(clebsch: tuple) -> tuple:
    """Igusa (J2, J4, J6, J10) of a sextic from its Clebsch (A, B, C, D).

    With the transvectant normalization used here J10 equals the discriminant
    of the sextic exactly.
    """
    A, B, C, D = clebsch
    J2 = -120 * A
    J4 = -720 * A**2 + 6750 * B
    J6 = 8640 * A**3 - 108000 * A * B + 202500 * C
    J10 = (
        -62208 * A**5 + 972000 * A**3 * B + 1620000 * A**2 * C
        - 3037500 * A * B**2 - 6075000 * B * C - 4556250 * D
    )
    return (J2, J4, J6, J10)


def igusa_absolute(igusa: tuple) -> tuple:
    """(i1, i2, i3) = (144 J4/J2^2, -1728 (J2 J4 - 3 J6)/J2^3, 486 J10/J2^5)."""
    J2, J4, J6, J10 = igusa
    if not J2:
        raise PreconditionError("vanishing denominator: J2")
    return (144 * J4 / J2**2, -1728 * (J2 * J4 - 3 * J6) / J2**3, 486 * J10 / J2**5)


def tabulated_symbols(s2, s3, s4) -> tuple:
    """Default substitution for :func:`genus2_tabulated`: (s4, s3, 2 s2).

    Found by exhaustive comparison; under it the tabulated i2 and i3 agree
    with :func:`igusa_absolute` of the quotient exactly.
    """
    return (s4, s3, 2 * s2)


def genus2_tabulated(s1, s2, s3) -> tuple:
    """Tabulated closed forms (i1, i2, i3) for the genus-2 quotient.

    The tables are written in three symbols whose relation to (s2, s3, s4) is
    not pinned down; the caller chooses the substitution. Kept only as a
    cross-check against :func:`genus2_quotient`.
    """
    D = -20 * s1 - 10 * s3**2 + 2 * s3**3 + 4 * s3 * s1 - 3 * s2**2
    if not D:
        raise PreconditionError("vanishing denominator D")
    w = 2 * s1 + s3**2
    i1 = 9 * w / D**2 * (
        s3**4 - 80 * s3**2 - 72 * s2**2 - 2 * s3**2 * s1 - 24 * s1 * s2 - 12 * s3**2 * s2
        + 2 * s3**3 - 160 * s1 + 4 * s3 * s1
    )
    i2 = 27 * w**2 / D**3 * (
        2 * s3**3 * s1 - 1116 * s1 * s2 + s3**5 - 2240 * s3**2 + 162 * s2**2 * s3
        + 864 * s2**2 + 216 * s1**2
        + 114 * s3**2 * s1 + 3 * s3**4 - 558 * s3**2 * s2 - 4480 * s1 + 624 * s3**3
        - 18 * s3**3 * s2 - 36 * s1 * s2 * s3 + 1248 * s3 * s1
    )
    i3 = Fraction(243, 1024) * w**3 / D**5 * (
        s3**7 - 128 * s2**4 - 2048 * s1**2 + 768 * s3**3 * s1 - 2048 * s3**2 * s1
        + 192 * s3**5 - 512 * s3**4
        + 216 * s1**3 + 3 * s3**6 - 72 * s1**2 * s3 * s2 + 320 * s1 * s2**2 * s3
        - 72 * s1 * s3**3 * s2 - 1152 * s1 * s3**2 * s2 - 2 * s2**2 * s1 * s3**2
        - 1152 * s1**2 * s2 + 1024 * s1 * s2**2 + 160 * s2**2 * s3**3 + 512 * s2**2 * s3**2
        - 18 * s3**5 * s2 - 288 * s3**4 * s2 + 768 * s3 * s1**2
        + 4 * s3**3 * s1**2 + 4 * s3**5 * s1 + 228 * s3**2 * s1**2 + 66 * s3**4 * s1
        + 16 * s2**3 * s3**2 + 32 * s2**3 * s1 - s2**2 * s3**4
    )
    return (i1, i2, i3)


# ---------------------------------------------------------------------------
# isomorphism of pairs and reconstruction

def pairs_isomorphic(p1: DihedralPoint, p2: DihedralPoint) -> tuple[bool, str]:
    if p1.branch != p2.branch:
        return False, f"branch mismatch: {p1.branch} vs {p2.branch}"
    return p1.values == p2.values, ""


@dataclass(frozen=True)
class ReconstructedModel:
    octavic: BinaryForm
    field: str  # "moduli" or "quadratic"
    d: Fraction  # discriminant s4^2 - 4 s2^4 of the quadratic for A
    A: object

    def to_json(self) -> dict:
        out = self.octavic.to_json()
        out["field"] = self.field
        if self.field == "quadratic":
            out["d"] = format_rational(self.d)
        return out


def reconstruct(s2, s3, s4, root: int = 1) -> ReconstructedModel:
    """A model Y^2 = A X^8 + ... over Q(A), A a root of A^2 - s4 A + s2^4.

    ``root`` picks the sign of the square root (+1 or -1); a zero root is
    skipped since it would drop the degree.
    """
    s2, s3, s4 = Fraction(s2), Fraction(s3), Fraction(s4)
    lam2 = s4 + 2 * s2**2
    if not lam2:
        raise PreconditionError("degenerate normalization: s4 + 2*s2^2 = 0")
    if not dihedral_discriminant(s2, s3, s4):
        raise PreconditionError("singular: Delta(s2, s3, s4) = 0")
    d = s4 * s4 - 4 * s2**4
    sq = sqrt_element(d)
    A = (s4 + root * sq) / 2
    if not A:
        A = (s4 - root * sq) / 2
    coeffs = {
        8: A,
        6: A / lam2,
        4: s3 * (A + s2**2) / lam2**3,
        2: s2 / lam2**3,
        0: 1 / lam2**4,
    }
    f = BinaryForm.from_dict(8, coeffs)
    field = "moduli" if rational_sqrt(d) is not None else "quadratic"
    if isinstance(A, QuadExt) and A.is_rational:
        A = A.base
    return ReconstructedModel(f, field, d, A)
