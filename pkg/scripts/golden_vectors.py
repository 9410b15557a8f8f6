"""Invariants of the special curves and how the tabulated octahedral t-vector fares.

    python3 scripts/golden_vectors.py [--json]
"""

from __future__ import annotations

import argparse
import json
from dataclasses import dataclass, field

from g3hyp.arith import format_rational
from g3hyp.forms import BinaryForm
from g3hyp.octavic import moduli_point, shioda_invariants
from g3hyp.strata import Z2xS4_T_TABULATED, locus_relations


@dataclass
class GoldenConfig:
    # name -> {exponent of x: coefficient}
    curves: dict = field(
        default_factory=lambda: {
            "x^8 + 14x^4 + 1": {8: 1, 4: 14, 0: 1},
            "x(x^6 - 1)": {7: 1, 1: -1},
            "x^8 - 1": {8: 1, 0: -1},
            "x^7 - 1": {7: 1, 0: -1},
        }
    )


def curve_report(terms: dict) -> dict:
    J = shioda_invariants(BinaryForm.from_dict(8, terms))
    return {"shioda": J.to_json(), "moduli_point": moduli_point(J).to_json()}


def tabulated_vector_report() -> dict:
    rel = locus_relations("Z2xD8")
    return {
        "vector": [format_rational(x) for x in Z2xS4_T_TABULATED],
        "z2xd8_relations": {w.relation: w.satisfied for w in rel.witnesses(Z2xS4_T_TABULATED)},
    }


def main(cfg: GoldenConfig, as_json: bool) -> None:
    out = {name: curve_report(terms) for name, terms in cfg.curves.items()}
    out["tabulated octahedral t-vector"] = tabulated_vector_report()
    if as_json:
        print(json.dumps(out, indent=2))
        return
    for name, rep in out.items():
        print(f"== {name}")
        for k, v in rep.items():
            print(f"  {k}: {v}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--json", action="store_true")
    main(GoldenConfig(), ap.parse_args().json)
