"""Automorphism-group strata: family generators, locus relations, classification.

Two classification routes exist. ``classify_dihedral`` works from the
dihedral invariants of a curve already known to carry an elliptic involution
and is exact. ``classify_moduli`` works from a moduli point alone; it is exact
only where closed-form relations for the locus are available, and otherwise
reports the weakest label consistent with the point.

Coordinate conventions: t-space is ``ModuliPoint.values`` on the T branch,
i-space on the I branch, s-space is the generic dihedral triple (s2, s3, s4).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Sequence

from .arith import PreconditionError, format_rational
from .dihedral import DihedralPoint, dihedral_discriminant
from .forms import BinaryForm, discriminant
from .octavic import ModuliPoint

F = Fraction


class AutGroupLabel(str, Enum):
    Z2_generic = "Z2_generic"
    V4 = "V4"
    Z2cubed = "Z2cubed"
    Z4 = "Z4"
    Z2xZ4 = "Z2xZ4"
    Z2xD8 = "Z2xD8"
    D12 = "D12"
    Z2xS4 = "Z2xS4"
    U6 = "U6"
    V8 = "V8"
    X7special = "X7special"


class Certainty(str, Enum):
    EXACT = "exact"
    NECESSARY = "necessary_conditions_only"


# dimension of each stratum in the moduli space; smaller wins ties
STRATUM_DIMENSION = {
    AutGroupLabel.Z2_generic: 5,
    AutGroupLabel.V4: 3,
    AutGroupLabel.Z2cubed: 2,
    AutGroupLabel.Z4: 2,
    AutGroupLabel.Z2xZ4: 1,
    AutGroupLabel.Z2xD8: 1,
    AutGroupLabel.D12: 1,
    AutGroupLabel.Z2xS4: 0,
    AutGroupLabel.U6: 0,
    AutGroupLabel.V8: 0,
    AutGroupLabel.X7special: 0,
}


# ---------------------------------------------------------------------------
# relations

@dataclass(frozen=True)
class Relation:
    """``residual(values) == 0`` is the relation; ``text`` is its readable form.

    Residuals are written with denominators cleared so that they can be
    evaluated at every point of the coordinate space.
    """

    text: str
    residual: Callable[[Sequence], object] = field(compare=False)

    def holds(self, values: Sequence) -> bool:
        return not self.residual(values)


@dataclass(frozen=True)
class ParameterMap:
    """Recovers the squared family parameter t = a^2 from a moduli point."""

    text: str
    evaluate: Callable[[Sequence], object] = field(compare=False)
    undefined_at: tuple = ()


@dataclass(frozen=True)
class LocusRelations:
    label: AutGroupLabel
    space: str  # "t", "i" or "s"
    source: str
    relations: tuple
    parameter_map: ParameterMap | None = None

    def satisfied_by(self, values: Sequence) -> bool:
        return all(r.holds(values) for r in self.relations)

    def witnesses(self, values: Sequence) -> list["Witness"]:
        return [Witness(r.text, self.source, r.holds(values)) for r in self.relations]

    def to_json(self) -> dict:
        out = {
            "group": self.label.value,
            "space": self.space,
            "source": self.source,
            "relations": [r.text for r in self.relations],
        }
        if self.parameter_map is not None:
            out["parameter_map"] = self.parameter_map.text
            out["parameter_map_undefined_at"] = [format_rational(x) for x in self.parameter_map.undefined_at]
        return out


def _point(values: Sequence, names: Sequence[str]) -> tuple:
    return tuple(
        Relation(f"{n} = {format_rational(v)}", lambda p, k=k, v=v: p[k] - v)
        for k, (n, v) in enumerate(zip(names, values))
    )


_T = ("t1", "t2", "t3", "t4", "t5", "t6")
_I = ("i1", "i2", "i3", "i4", "i5", "i6")

_Z2xD8_T = LocusRelations(
    AutGroupLabel.Z2xD8,
    "t",
    "Z2xD8 family X^8 + aX^4 + 1, t = a^2",
    (
        Relation(
            "t1 = -175/288 t4^2 + 125/3456 t4^3 + 686/27",
            lambda p: p[0] - (-F(175, 288) * p[3] ** 2 + F(125, 3456) * p[3] ** 3 + F(686, 27)),
        ),
        Relation("t2 = t4^2", lambda p: p[1] - p[3] ** 2),
        Relation("t3 = -6 t4^2 / (5 t4 - 56)", lambda p: p[2] * (5 * p[3] - 56) + 6 * p[3] ** 2),
        Relation("t5 = t4", lambda p: p[4] - p[3]),
        Relation("t6 = 49/3 t4^3 + 5/12 t4^4", lambda p: p[5] - (F(49, 3) * p[3] ** 3 + F(5, 12) * p[3] ** 4)),
    ),
    ParameterMap(
        "t = -28 (5 t4 + 28) / (t4 - 4)",
        lambda p: -28 * (5 * p[3] + 28) / (p[3] - 4),
        undefined_at=(F(-140), F(-980, 3)),
    ),
)

_D12_T = LocusRelations(
    AutGroupLabel.D12,
    "t",
    "D12 family X(X^6 + aX^3 + 1), t = a^2",
    (
        Relation(
            "t1 = 686/27 + 125/54 t4^3 - 175/18 t4^2",
            lambda p: p[0] - (F(686, 27) + F(125, 54) * p[3] ** 3 - F(175, 18) * p[3] ** 2),
        ),
        Relation("t2 = t4^2", lambda p: p[1] - p[3] ** 2),
        Relation("t3 = t4^2 / (5 t4 - 14)", lambda p: p[2] * (5 * p[3] - 14) - p[3] ** 2),
        Relation("t5 = t4", lambda p: p[4] - p[3]),
        Relation("t6 = 65/9 t4^4 - 98/9 t4^3", lambda p: p[5] - (F(65, 9) * p[3] ** 4 - F(98, 9) * p[3] ** 3)),
    ),
    ParameterMap(
        "t = 7/2 (5 t4 + 7) / (t4 - 4)",
        lambda p: F(7, 2) * (5 * p[3] + 7) / (p[3] - 4),
        undefined_at=(F(-35, 2), F(-245, 4)),
    ),
)


def _z2xz4_r1(p):
    i2, i4 = p[1], p[3]
    return (
        -81462500 * i4 + 927746400 * i2 - 963780608 - 256055625 * i2**2 - 1953125 * i4**2
        + 36093750 * i2 * i4 + 15187500 * i2**3
    )


def _z2xz4_r2(p):
    i2, i6 = p[1], p[5]
    return (
        -22689450000 * i6 - 4593393436800 * i2 + 4628074479616 + 52734375 * i6**2
        + 8912109375 * i2**4 + 1371093750 * i2**2 * i6 + 5788125000 * i2 * i6
        + 1572126780000 * i2**2 - 215275375000 * i2**3
    )


def _z2xz4_t(p):
    i2, i4 = p[1], p[3]
    num = 15625 * i2 * i4 - 152500 * i4 + 24375 * i2**2 + 1215200 * i2 - 2809856
    den = -15625 * i2 * i4 + 2500 * i4 + 245625 * i2**2 - 725600 * i2 + 401408
    return 28 * num / den


_Z2xZ4_I = LocusRelations(
    AutGroupLabel.Z2xZ4,
    "i",
    "Z2xZ4 family (x^4 - 1)(x^4 + a x^2 + 1), t = a^2",
    (
        Relation("i1 = 0", lambda p: p[0]),
        Relation("i3 = 0", lambda p: p[2]),
        Relation("i5 = 0", lambda p: p[4]),
        Relation(
            "-81462500 i4 + 927746400 i2 - 963780608 - 256055625 i2^2 - 1953125 i4^2"
            " + 36093750 i2 i4 + 15187500 i2^3 = 0",
            _z2xz4_r1,
        ),
        Relation(
            "-22689450000 i6 - 4593393436800 i2 + 4628074479616 + 52734375 i6^2"
            " + 8912109375 i2^4 + 1371093750 i2^2 i6 + 5788125000 i2 i6"
            " + 1572126780000 i2^2 - 215275375000 i2^3 = 0",
            _z2xz4_r2,
        ),
    ),
    ParameterMap(
        "t = 28 (15625 i2 i4 - 152500 i4 + 24375 i2^2 + 1215200 i2 - 2809856)"
        " / (-15625 i2 i4 + 2500 i4 + 245625 i2^2 - 725600 i2 + 401408)",
        _z2xz4_t,
    ),
)

_Z4_NECESSARY = LocusRelations(
    AutGroupLabel.Z4,
    "i",
    "order-4 element forces J3 = J5 = J7 = 0",
    (
        Relation("i1 = 0", lambda p: p[0]),
        Relation("i3 = 0", lambda p: p[2]),
        Relation("i5 = 0", lambda p: p[4]),
    ),
)

U6_I = (F(0), F(49, 25), F(0), F(-343, 125), F(0), F(7203, 125))
V8_I = (F(0), F(784, 25), F(0), F(-21952, 125), F(0), F(-307328, 125))
# x^8 + 14x^4 + 1 has J4 = ... = J10 = 0, so it lives on the I branch
Z2xS4_I = (F(686, 27), F(0), F(0), F(0), F(0), F(0))
# tabulated T-branch vector for x^8 + 14x^4 + 1; no octavic reaches it (J4 = 0 forces t2 = 0)
Z2xS4_T_TABULATED = (F(15435, 8), F(784, 25), F(56, 25), F(-28, 5), F(28, 5), F(7760032, 125))

_U6 = LocusRelations(AutGroupLabel.U6, "i", "point of y^2 = x(x^6 - 1)", _point(U6_I, _I))
_V8 = LocusRelations(AutGroupLabel.V8, "i", "point of y^2 = x^8 - 1", _point(V8_I, _I))
_Z2xS4 = LocusRelations(AutGroupLabel.Z2xS4, "i", "point of y^2 = x^8 + 14x^4 + 1", _point(Z2xS4_I, _I))
_Z2xS4_TAB = LocusRelations(
    AutGroupLabel.Z2xS4,
    "t",
    "tabulated t-vector for y^2 = x^8 + 14x^4 + 1",
    _point(Z2xS4_T_TABULATED, _T),
)

# s-space (dihedral) relations
_S_RELATIONS = {
    AutGroupLabel.Z2cubed: LocusRelations(
        AutGroupLabel.Z2cubed, "s", "dihedral: Z2cubed",
        (Relation("s4 - 2 s2^2 = 0", lambda s: s[2] - 2 * s[0] ** 2),),
    ),
    AutGroupLabel.Z2xD8: LocusRelations(
        AutGroupLabel.Z2xD8, "s", "dihedral: Z2xD8",
        (Relation("s2 = 0", lambda s: s[0]), Relation("s4 = 0", lambda s: s[2])),
    ),
    AutGroupLabel.Z2xZ4: LocusRelations(
        AutGroupLabel.Z2xZ4, "s", "dihedral: Z2xZ4",
        (Relation("s4 + 2 s2^2 = 0", lambda s: s[2] + 2 * s[0] ** 2), Relation("s3 = 0", lambda s: s[1])),
    ),
    AutGroupLabel.D12: LocusRelations(
        AutGroupLabel.D12, "s", "dihedral: D12",
        (
            Relation(
                "s3 = (9 s2 - 224)(s2 - 196) / 75",
                lambda s: 75 * s[1] - (9 * s[0] - 224) * (s[0] - 196),
            ),
            Relation(
                "s4 = -9/125 s2^3 + 1962/125 s2^2 - 840448/1125 s2 + 9834496/1125",
                lambda s: 1125 * s[2] - (-81 * s[0] ** 3 + 17658 * s[0] ** 2 - 840448 * s[0] + 9834496),
            ),
        ),
    ),
}

_MODULI_RELATIONS = {
    AutGroupLabel.Z2xD8: _Z2xD8_T,
    AutGroupLabel.D12: _D12_T,
    AutGroupLabel.Z2xZ4: _Z2xZ4_I,
    AutGroupLabel.U6: _U6,
    AutGroupLabel.V8: _V8,
    AutGroupLabel.Z2xS4: _Z2xS4,
}


def locus_relations(label: AutGroupLabel | str, space: str | None = None) -> LocusRelations:
    """Closed-form relations cutting out the locus of ``label``.

    ``space`` selects "s" for dihedral relations; by default the moduli
    coordinates (t or i) are used. Labels without closed-form relations in
    the requested space raise :class:`PreconditionError`.
    """
    label = AutGroupLabel(label)
    if space == "s":
        if label not in _S_RELATIONS:
            raise PreconditionError(f"no dihedral relations available for {label.value}")
        return _S_RELATIONS[label]
    if space not in (None, "t", "i"):
        raise ValueError(f"unknown coordinate space {space!r}")
    rel = _MODULI_RELATIONS.get(label)
    if rel is None or (space is not None and rel.space != space):
        raise PreconditionError(f"no closed-form moduli relations available for {label.value}")
    return rel


# ---------------------------------------------------------------------------
# classification results

@dataclass(frozen=True)
class Witness:
    relation: str
    source: str
    satisfied: bool

    def to_json(self) -> dict:
        return {"relation": self.relation, "source": self.source, "satisfied": self.satisfied}


@dataclass(frozen=True)
class ClassificationResult:
    label: AutGroupLabel
    certainty: Certainty
    witnesses: tuple = ()
    note: str = ""

    def to_json(self) -> dict:
        out = {
            "group": self.label.value,
            "certainty": self.certainty.value,
            "witnesses": [w.to_json() for w in self.witnesses],
        }
        if self.note:
            out["note"] = self.note
        return out


def _result(label, certainty=Certainty.EXACT, witnesses=(), note=""):
    return ClassificationResult(AutGroupLabel(label), Certainty(certainty), tuple(witnesses), note)


# ---------------------------------------------------------------------------
# dihedral route

# Z2xZ4 line (s2, 0, -2 s2^2): U6 sits at s2 = 196; the curve degenerates at s2 = 4
_Z2xZ4_LINE_U6 = F(196)
_Z2xZ4_LINE_SINGULAR = F(4)
# the only mixed-branch D12 point
D12_MIXED_POINT = (F(224, 9), F(308, 9))


def mixed_discriminant(s2, w):
    """Vanishes exactly when the curve of a mixed point (a^2 + c^2 = 0, b != 0) is singular."""
    return (
        4 * s2**3 - s2**2 * w - 48 * s2**2 + 80 * s2 * w + 192 * s2
        - 16 * w**2 + 128 * w - 256
    )


def _classify_full(w) -> ClassificationResult:
    src = "dihedral: a = c = 0, curve X^8 + bX^4 + 1, w = b^2"
    if w == 4:
        raise PreconditionError("singular curve: w = b^2 = 4 gives (X^4 +- 1)^2")
    if w == 196:
        return _result("Z2xS4", witnesses=[Witness("w = 196", src, True)])
    if w == 0:
        return _result("V8", witnesses=[Witness("w = 0", src, True)],
                       note="X^8 + 1 is isomorphic to X^8 - 1")
    return _result("Z2xD8", witnesses=[Witness("a = c = 0", src, True)])


def _classify_mixed(s2, w, s4) -> ClassificationResult:
    src = "dihedral: a^2 + c^2 = 0, b != 0"
    if s4 + 2 * s2**2:
        raise PreconditionError("mixed point must satisfy s4 + 2 s2^2 = 0")
    if not s2 or not w:
        raise PreconditionError("mixed point needs s2 != 0 and w != 0")
    if not mixed_discriminant(s2, w):
        raise PreconditionError("singular curve: mixed discriminant vanishes")
    at_d12 = (s2, w) == D12_MIXED_POINT
    wit = [Witness("(s2, w) = (224/9, 308/9)", src, at_d12)]
    if at_d12:
        return _result("D12", witnesses=wit)
    return _result("V4", witnesses=wit)


def _classify_generic(s2, s3, s4) -> ClassificationResult:
    s = (s2, s3, s4)
    d12 = _S_RELATIONS[AutGroupLabel.D12]
    d8 = _S_RELATIONS[AutGroupLabel.Z2xD8]
    z4 = _S_RELATIONS[AutGroupLabel.Z2xZ4]
    z2c = _S_RELATIONS[AutGroupLabel.Z2cubed]
    wit = d12.witnesses(s) + d8.witnesses(s) + z4.witnesses(s) + z2c.witnesses(s)

    if not s4 + 2 * s2**2:
        # a^2 + c^2 = 0 and b = 0; the discriminant polynomial vanishes identically here
        if s3:
            raise PreconditionError("not realizable: s4 + 2 s2^2 = 0 forces s3 = 0")
        if not s2:
            return _result(
                "Z2xD8", Certainty.NECESSARY, wit,
                note="a = c = 0: the full-branch value w = b^2 decides between Z2xD8, Z2xS4 and V8",
            )
        if s2 == _Z2xZ4_LINE_SINGULAR:
            raise PreconditionError("singular curve: s2 = 4 on the line s4 + 2 s2^2 = s3 = 0")
        if s2 == _Z2xZ4_LINE_U6:
            return _result("U6", witnesses=wit, note="also satisfies the D12 relations")
        note = ""
        if d12.satisfied_by(s):
            note = "D12 relations hold but the curve has b = 0, which no D12 curve does at this s2"
        return _result("Z2xZ4", witnesses=wit, note=note)

    if not dihedral_discriminant(s2, s3, s4):
        raise PreconditionError("singular curve: Delta(s2, s3, s4) = 0")
    if d12.satisfied_by(s):
        if z2c.satisfied_by(s):
            return _result("Z2xS4", witnesses=wit, note="D12 and Z2cubed relations meet at this point")
        return _result("D12", witnesses=wit)
    if z2c.satisfied_by(s):
        return _result("Z2cubed", witnesses=wit)
    return _result("V4", witnesses=wit)


def classify_dihedral(p: DihedralPoint) -> ClassificationResult:
    if p.branch == "full":
        return _classify_full(*p.values)
    if p.branch == "mixed":
        return _classify_mixed(*p.values)
    return _classify_generic(*p.values)


# ---------------------------------------------------------------------------
# moduli route

def _z4_candidate(p: ModuliPoint) -> bool:
    """J3 = J5 = J7 = 0, read off whichever normalization the branch uses."""
    v = p.values
    if p.branch == "I":
        return not v[0] and not v[2] and not v[4]
    if p.branch == "J":  # J2 = J3 = 0 already
        return not v[0] and not v[2]
    if p.branch == "TAU":  # J2..J5 = 0 already
        return not v[0]
    return False


def classify_moduli(p: ModuliPoint) -> ClassificationResult:
    if p.branch == "X7":
        return _result("X7special", witnesses=[Witness("J2 = ... = J6 = 0", "moduli dispatcher", True)])

    if p.branch == "T":
        v = p.values
        if v == Z2xS4_T_TABULATED:
            return _result("Z2xS4", witnesses=_Z2xS4_TAB.witnesses(v),
                           note="matches the tabulated vector; not the computed invariants of any octavic")
        wit = _Z2xD8_T.witnesses(v) + _D12_T.witnesses(v)
        in_d8, in_d12 = _Z2xD8_T.satisfied_by(v), _D12_T.satisfied_by(v)
        if in_d8 and in_d12:
            return _result("D12", witnesses=wit, note="ambiguous: both Z2xD8 and D12 relations hold")
        if in_d12:
            return _result("D12", witnesses=wit)
        if in_d8:
            return _result("Z2xD8", witnesses=wit)
        return _result("Z2_generic", Certainty.NECESSARY, wit)

    if p.branch == "I":
        v = p.values
        for pt in (_U6, _V8, _Z2xS4):
            if pt.satisfied_by(v):
                return _result(pt.label, witnesses=pt.witnesses(v))
        if _Z2xZ4_I.satisfied_by(v):
            return _result("Z2xZ4", witnesses=_Z2xZ4_I.witnesses(v))
        wit = _Z2xZ4_I.witnesses(v)
        if _z4_candidate(p):
            return _result("Z4", Certainty.NECESSARY, wit)
        return _result("Z2_generic", Certainty.NECESSARY, wit)

    wit = [Witness("J3 = J5 = J7 = 0", "order-4 element", _z4_candidate(p))]
    if _z4_candidate(p):
        return _result("Z4", Certainty.NECESSARY, wit)
    return _result("Z2_generic", Certainty.NECESSARY, wit)


# ---------------------------------------------------------------------------
# family generators

def _expand(*factors: Sequence) -> list:
    out = [F(1)]
    for p in factors:
        r = [F(0)] * (len(out) + len(p) - 1)
        for i, x in enumerate(out):
            for j, y in enumerate(p):
                r[i + j] += x * y
        out = r
    return out


def _families():
    # each entry: (parameter count, low-to-high coefficients of y^2's right-hand side)
    return {
        AutGroupLabel.V4: (3, lambda a, b, c: [1, 0, c, 0, b, 0, a, 0, 1]),
        AutGroupLabel.Z2cubed: (2, lambda a, b: _expand([1, 0, a, 0, 1], [1, 0, b, 0, 1])),
        AutGroupLabel.Z4: (2, lambda a, b: _expand([0, 1], [-1, 0, 1], [b, 0, a, 0, 1])),
        AutGroupLabel.Z2xD8: (1, lambda a: [1, 0, 0, 0, a, 0, 0, 0, 1]),
        AutGroupLabel.D12: (1, lambda a: [0, 1, 0, 0, a, 0, 0, 1]),
        AutGroupLabel.Z2xZ4: (1, lambda a: _expand([-1, 0, 0, 0, 1], [1, 0, a, 0, 1])),
        AutGroupLabel.Z2xS4: (0, lambda: [1, 0, 0, 0, 14, 0, 0, 0, 1]),
        AutGroupLabel.U6: (0, lambda: [0, -1, 0, 0, 0, 0, 0, 1]),
        AutGroupLabel.V8: (0, lambda: [-1, 0, 0, 0, 0, 0, 0, 0, 1]),
        AutGroupLabel.X7special: (0, lambda: [-1, 0, 0, 0, 0, 0, 0, 1]),
    }


def family_dimension(label: AutGroupLabel | str) -> int:
    label = AutGroupLabel(label)
    fams = _families()
    if label not in fams:
        raise PreconditionError(f"no family generator for {label.value}")
    return fams[label][0]


def stratum_sample(label: AutGroupLabel | str, params: Sequence = ()) -> BinaryForm:
    """Homogenized octavic of the family member with the given parameters.

    Odd-degree right-hand sides gain a root at infinity. Parameters giving a
    singular curve raise :class:`PreconditionError`.
    """
    label = AutGroupLabel(label)
    fams = _families()
    if label not in fams:
        raise PreconditionError(f"no family generator for {label.value}")
    count, build = fams[label]
    if len(params) != count:
        raise PreconditionError(f"{label.value} takes {count} parameters, got {len(params)}")
    f = BinaryForm.from_univariate([F(c) for c in build(*(F(p) for p in params))], 8)
    if not discriminant(f):
        raise PreconditionError(
            f"degenerate parameters for {label.value}: "
            f"{', '.join(format_rational(F(p)) for p in params)} give a singular curve"
        )
    return f
