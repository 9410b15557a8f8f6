"""Compare the tabulated genus-2 quotient invariants with the transvectant route.

The tabulated (i1, i2, i3) are written in three symbols (s1, s2, s3). This
script tries every substitution from a small candidate list, reports how many
sample curves agree per invariant, and for the best substitution fits the i1
numerator exactly to show which coefficients differ.

    python3 scripts/genus2_crosscheck.py [--curves 12] [--seed 0]
"""

from __future__ import annotations

import argparse
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

import sympy as sp

from g3hyp.arith import PreconditionError
from g3hyp.dihedral import (
    ReducedCurve,
    dihedral_invariants,
    genus2_quotient,
    genus2_tabulated,
    igusa_absolute,
    igusa_from_clebsch,
)
from g3hyp.forms import discriminant


@dataclass
class CrossCheckConfig:
    curves: int = 12
    seed: int = 0
    height: int = 9
    # candidate expressions for each tabulated symbol, in terms of s2, s3, s4
    s1_candidates: tuple = ("s4", "2*s4", "s4/2", "-s4")
    s2_candidates: tuple = ("s3", "-s3", "2*s3", "s3/2")
    s3_candidates: tuple = ("s2", "2*s2", "-2*s2", "-s2")


def sample_curves(cfg: CrossCheckConfig, count: int, rng: random.Random) -> list[ReducedCurve]:
    out = []
    while len(out) < count:
        C = ReducedCurve(*(Fraction(rng.randint(-cfg.height, cfg.height), rng.randint(1, 4)) for _ in range(3)))
        if C.a and C.is_nonsingular() and genus2_quotient(C).clebsch[0]:
            out.append(C)
    return out


def substitute(exprs, s2, s3, s4):
    env = {"s2": s2, "s3": s3, "s4": s4}
    return tuple(eval(e, {}, env) for e in exprs)  # candidate strings are fixed above


def score_maps(cfg: CrossCheckConfig, curves) -> list[tuple]:
    data = []
    for C in curves:
        s = dihedral_invariants(C).values
        data.append((s, igusa_absolute(igusa_from_clebsch(genus2_quotient(C).clebsch))))
    scores = []
    for exprs in itertools.product(cfg.s1_candidates, cfg.s2_candidates, cfg.s3_candidates):
        hits = [0, 0, 0]
        for s, ours in data:
            try:
                tab = genus2_tabulated(*substitute(exprs, *s))
            except (PreconditionError, ZeroDivisionError):
                continue
            for k in range(3):
                hits[k] += tab[k] == ours[k]
        scores.append((exprs, hits))
    scores.sort(key=lambda t: -sum(t[1]))
    return scores


def fit_i1_numerator(curves, exprs) -> sp.Expr:
    """Exact fit of P in i1 = 9 (2 s1 + s3^2) / D^2 * P over monomials of weighted degree <= 8."""
    mons = [(i, j, k) for i in range(3) for j in range(3) for k in range(5) if 4 * i + 3 * j + 2 * k <= 8]
    rows, rhs = [], []
    for C in curves:
        S1, S2, S3 = substitute(exprs, *dihedral_invariants(C).values)
        D = -20 * S1 - 10 * S3**2 + 2 * S3**3 + 4 * S3 * S1 - 3 * S2**2
        w = 2 * S1 + S3**2
        if not D or not w:
            continue
        i1 = igusa_absolute(igusa_from_clebsch(genus2_quotient(C).clebsch))[0]
        rows.append([S1**i * S2**j * S3**k for i, j, k in mons])
        rhs.append(i1 * D**2 / (9 * w))
    M, b = sp.Matrix(rows), sp.Matrix(rhs)
    sol = M.solve_least_squares(b)
    if any(M * sol - b):
        raise RuntimeError("no exact polynomial fit")
    s1, s2, s3 = sp.symbols("s1 s2 s3")
    return sp.expand(sum(sp.Rational(c) * s1**i * s2**j * s3**k for c, (i, j, k) in zip(sol, mons)))


def main(cfg: CrossCheckConfig) -> None:
    rng = random.Random(cfg.seed)
    curves = sample_curves(cfg, cfg.curves, rng)

    # J10 of the Igusa conversion against the sextic discriminant: fixes the normalization
    same = all(
        igusa_from_clebsch(q.clebsch)[3] == discriminant(q.sextic) for q in map(genus2_quotient, curves)
    )
    print(f"Igusa J10 == disc(sextic) on {len(curves)} curves: {same}")

    scores = score_maps(cfg, curves)
    print("best substitutions (s1, s2, s3) -> agreements for (i1, i2, i3):")
    for exprs, hits in scores[:5]:
        print(f"  {exprs}: {hits} of {len(curves)}")

    best = scores[0][0]
    s1, s2, s3 = sp.symbols("s1 s2 s3")
    fitted = fit_i1_numerator(sample_curves(cfg, 60, rng), best)
    printed = sp.expand(
        s3**4 - 80 * s3**2 - 72 * s2**2 - 2 * s3**2 * s1 - 24 * s1 * s2 - 12 * s3**2 * s2
        + 2 * s3**3 - 160 * s1 + 4 * s3 * s1
    )
    print(f"i1 numerator fitted under {best}: {fitted}")
    print(f"fitted - tabulated: {sp.expand(fitted - printed)}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--curves", type=int, default=CrossCheckConfig.curves)
    ap.add_argument("--seed", type=int, default=CrossCheckConfig.seed)
    args = ap.parse_args()
    main(CrossCheckConfig(curves=args.curves, seed=args.seed))
