"""Invariants of binary octavics: covariants, J2..J10, moduli points, isomorphism."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple

from .arith import PreconditionError, deserialize_scalar, serialize_scalar
from .forms import BinaryForm, discriminant, transvectant

WEIGHTS = tuple(range(2, 11))

# J_i = constant * (full transvection)
_J_CONSTANTS = {
    2: Fraction(2**2 * 5 * 7),
    3: Fraction(2**4 * 5**2 * 7**3, 3),
    4: Fraction(2**9 * 3 * 7**4),
    5: Fraction(2**9 * 5 * 7**5),
    6: Fraction(2**14 * 3**2 * 7**6),
    7: Fraction(2**14 * 3 * 5 * 7**7),
    8: Fraction(2**17 * 3 * 5**2 * 7**9),
    9: Fraction(2**19 * 3**2 * 5 * 7**9),
    10: Fraction(2**22 * 3**2 * 5**2 * 7**11),
}


class Covariants(NamedTuple):
    g: BinaryForm
    k: BinaryForm
    h: BinaryForm
    m: BinaryForm
    n: BinaryForm
    p: BinaryForm
    q: BinaryForm


def _require_octavic(f: BinaryForm) -> None:
    if f.degree != 8:
        raise PreconditionError(f"expected a binary octavic, got degree {f.degree}")


def covariants(f: BinaryForm) -> Covariants:
    _require_octavic(f)
    g = transvectant(f, f, 4)
    k = transvectant(f, f, 6)
    h = transvectant(k, k, 2)
    return Covariants(
        g=g,
        k=k,
        h=h,
        m=transvectant(f, k, 4),
        n=transvectant(f, h, 4),
        p=transvectant(g, k, 4),
        q=transvectant(g, h, 4),
    )


@dataclass(frozen=True)
class ShiodaVector:
    """(J2, ..., J10); ``J[i]`` is the invariant of degree (and weight index) i."""

    values: tuple

    def __post_init__(self):
        if len(self.values) != len(WEIGHTS):
            raise ValueError("ShiodaVector needs exactly nine entries J2..J10")

    def __getitem__(self, i: int):
        if i not in WEIGHTS:
            raise KeyError(i)
        return self.values[i - 2]

    def items(self):
        return zip(WEIGHTS, self.values)

    def to_json(self) -> dict:
        return {f"J{i}": serialize_scalar(v) for i, v in self.items()}

    @classmethod
    def from_json(cls, obj: dict) -> "ShiodaVector":
        return cls(tuple(deserialize_scalar(obj[f"J{i}"]) for i in WEIGHTS))


def shioda_invariants(f: BinaryForm) -> ShiodaVector:
    _require_octavic(f)
    cv = covariants(f)
    raw = {
        2: transvectant(f, f, 8),
        3: transvectant(f, cv.g, 8),
        4: transvectant(cv.k, cv.k, 4),
        5: transvectant(cv.m, cv.k, 4),
        6: transvectant(cv.k, cv.h, 4),
        7: transvectant(cv.m, cv.h, 4),
        8: transvectant(cv.p, cv.h, 4),
        9: transvectant(cv.n, cv.h, 4),
        10: transvectant(cv.q, cv.h, 4),
    }
    return ShiodaVector(tuple(_J_CONSTANTS[i] * raw[i].constant() for i in WEIGHTS))


# ---------------------------------------------------------------------------
# moduli points

BRANCHES = ("T", "I", "H", "J", "K", "TAU", "X7")


@dataclass(frozen=True)
class ModuliPoint:
    branch: str
    values: tuple

    def __post_init__(self):
        if self.branch not in BRANCHES:
            raise ValueError(f"unknown branch {self.branch!r}")

    def to_json(self) -> dict:
        return {"branch": self.branch, "values": [serialize_scalar(v) for v in self.values]}

    @classmethod
    def from_json(cls, obj: dict) -> "ModuliPoint":
        return cls(obj["branch"], tuple(deserialize_scalar(v) for v in obj["values"]))


def moduli_point(J: ShiodaVector) -> ModuliPoint:
    J2, J3, J4, J5, J6, J7, J8 = (J[i] for i in range(2, 9))
    if not any((J2, J3, J4, J5, J6, J7)):
        raise PreconditionError("singular octavic: J2..J7 all vanish")
    if J2 and J3 and J4 and J5:
        return ModuliPoint(
            "T",
            (
                J3**2 / J2**3,
                J4 / J2**2,
                J5 / (J2 * J3),
                J6 / (J2 * J4),
                J7 / (J2 * J5),
                J8 / J2**4,
            ),
        )
    if J2:
        return ModuliPoint(
            "I",
            (
                J3**2 / J2**3,
                J4 / J2**2,
                J5**2 / J2**5,
                J6 / J2**3,
                J7**2 / J2**7,
                J8 / J2**4,
            ),
        )
    if J3:
        return ModuliPoint(
            "H",
            (J4**3 / J3**4, J5**3 / J3**5, J6 / J3**2, J7**3 / J3**7, J8**3 / J3**8),
        )
    if J4:
        return ModuliPoint("J", (J5**4 / J4**5, J6**2 / J4**3, J7**4 / J4**7, J8 / J4**2))
    if J5:
        return ModuliPoint("K", (J6**5 / J5**6, J7**5 / J5**7, J8**5 / J5**8))
    if J6:
        return ModuliPoint("TAU", (J7**6 / J6**7, J8**3 / J6**4))
    return ModuliPoint("X7", ())


def moduli_point_of(f: BinaryForm) -> ModuliPoint:
    return moduli_point(shioda_invariants(f))


# ---------------------------------------------------------------------------
# isomorphism

def cross_ratio_witnesses(J1: ShiodaVector, J2: ShiodaVector) -> list[dict]:
    """Per-pair checks of J_i(1)^j J_j(2)^i == J_j(1)^i J_i(2)^j, plus zero patterns."""
    out = []
    for i in WEIGHTS:
        z1, z2 = not J1[i], not J2[i]
        if z1 != z2:
            out.append({"pair": [i], "satisfied": False, "reason": "zero pattern"})
    for i, j in combinations(WEIGHTS, 2):
        if J1[i] and J1[j] and J2[i] and J2[j]:
            ok = J1[i] ** j * J2[j] ** i == J1[j] ** i * J2[i] ** j
            out.append({"pair": [i, j], "satisfied": ok})
    return out


def weighted_equal(J1: ShiodaVector, J2: ShiodaVector) -> bool:
    return all(w["satisfied"] for w in cross_ratio_witnesses(J1, J2))


def _require_nonsingular(J: ShiodaVector) -> None:
    if not any(J[i] for i in range(2, 8)):
        raise PreconditionError("singular octavic: J2..J7 all vanish")


def isomorphic(f1: BinaryForm, f2: BinaryForm) -> bool:
    """Equivalence over the algebraic closure, decided on (J2..J10) alone.

    Both octavics must be squarefree; a repeated root raises even when the
    invariants themselves do not all vanish.
    """
    for f in (f1, f2):
        _require_octavic(f)
        if f.is_zero() or discriminant(f) == 0:
            raise PreconditionError("singular input octavic: repeated root")
    J1, J2 = shioda_invariants(f1), shioda_invariants(f2)
    _require_nonsingular(J1)
    _require_nonsingular(J2)
    return weighted_equal(J1, J2)


def weight_scale(J_from: ShiodaVector, J_to: ShiodaVector):
    """The lambda with J_to[i] == lambda**i * J_from[i] for all i, if it is rational.

    Returns ``None`` when the vectors are not weighted-equal or lambda is only
    determined up to a root of unity that cannot be pinned in Q.
    """
    if not weighted_equal(J_from, J_to):
        return None
    nz = [i for i in WEIGHTS if J_from[i]]
    if not nz:
        return None
    # lambda = (J_to[j]/J_from[j]) / (J_to[i]/J_from[i]) for consecutive weights i, j=i+1
    for i in nz:
        if i + 1 in nz:
            lam = (J_to[i + 1] / J_from[i + 1]) / (J_to[i] / J_from[i])
            return lam
    return None
