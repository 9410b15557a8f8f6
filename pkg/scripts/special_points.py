"""Where the dihedral loci meet, and what sits there.

Solves the D12 relations against the Z2cubed relation and against the
line s4 + 2 s2^2 = s3 = 0, then classifies each intersection point and
reports whether the curve there is singular.

    python3 scripts/special_points.py
"""

from __future__ import annotations

from dataclasses import dataclass

import sympy as sp

from g3hyp.arith import PreconditionError, format_rational
from g3hyp.dihedral import DihedralPoint
from g3hyp.strata import D12_MIXED_POINT, classify_dihedral, mixed_discriminant


@dataclass
class SpecialPointsConfig:
    # sample values along the line s4 + 2 s2^2 = s3 = 0
    line_probes: tuple = (1, 4, 196, sp.Rational(224, 9))


s2 = sp.symbols("s2")
D12_S3 = (9 * s2 - 224) * (s2 - 196) / 75
D12_S4 = (-81 * s2**3 + 17658 * s2**2 - 840448 * s2 + 9834496) / sp.Integer(1125)


def _describe(point: DihedralPoint) -> str:
    try:
        r = classify_dihedral(point)
        return f"{r.label.value} ({r.certainty.value}){'; ' + r.note if r.note else ''}"
    except PreconditionError as exc:
        return f"rejected: {exc}"


def _generic(v2) -> DihedralPoint:
    vals = (v2, D12_S3.subs(s2, v2), D12_S4.subs(s2, v2))
    return DihedralPoint("generic", tuple(sp.Rational(x) for x in vals))


def _fractions(p: DihedralPoint) -> DihedralPoint:
    from fractions import Fraction

    return DihedralPoint(p.branch, tuple(Fraction(int(x.p), int(x.q)) for x in p.values))


def main(cfg: SpecialPointsConfig) -> None:
    print("D12 relations meet s4 - 2 s2^2 = 0 at:")
    for root in sp.solve(sp.numer(sp.together(D12_S4 - 2 * s2**2)), s2):
        if root.is_rational:
            p = _fractions(_generic(root))
            print(f"  s2 = {root}: {[format_rational(x) for x in p.values]} -> {_describe(p)}")
        else:
            print(f"  s2 = {root} (irrational)")

    print("D12 relations meet s4 + 2 s2^2 = 0 at:")
    for root in sp.solve(sp.numer(sp.together(D12_S4 + 2 * s2**2)), s2):
        s3_val = D12_S3.subs(s2, root)
        print(f"  s2 = {root}, s3 there = {s3_val}")

    print("line s4 + 2 s2^2 = s3 = 0:")
    for v in cfg.line_probes:
        p = _fractions(DihedralPoint("generic", (sp.Rational(v), sp.Integer(0), -2 * sp.Rational(v) ** 2)))
        print(f"  s2 = {v}: {_describe(p)}")

    s2m, wm = D12_MIXED_POINT
    print(f"mixed branch D12 point (s2, w) = ({s2m}, {wm}); mixed discriminant there = {mixed_discriminant(s2m, wm)}")
    print(f"  -> {_describe(DihedralPoint('mixed', (s2m, wm, -2 * s2m**2)))}")


if __name__ == "__main__":
    main(SpecialPointsConfig())
