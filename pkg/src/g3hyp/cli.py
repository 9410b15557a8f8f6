"""Command-line front end. Reports are JSON on stdout; diagnostics go to stderr.

Exit codes: 0 success, 2 unparsable input, 3 violated mathematical
precondition, 4 internal invariant breach or a failing verification suite.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .arith import PreconditionError, parse_rational, serialize_scalar
from .dihedral import (
    DihedralPoint,
    ReducedCurve,
    dihedral_discriminant,
    dihedral_invariants,
    elliptic_j,
    even_octavic_dihedral,
    genus2_quotient,
    quartic_j,
    reconstruct,
)
from .forms import BinaryForm
from .octavic import cross_ratio_witnesses, isomorphic, moduli_point, shioda_invariants
from .strata import AutGroupLabel, classify_dihedral, classify_moduli, stratum_sample
from .verify import SUITE_NAMES, run as run_verify

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_INTERNAL = 0, 2, 3, 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def rational_list(text: str) -> list[Fraction]:
    return [parse_rational(x) for x in text.split(",")]


def octavic_arg(text: str) -> BinaryForm:
    """Octavic from "c8,...,c0" (nine entries), "c8,c6,c4,c2,c0" (even shorthand),
    or sparse "i:v,..." where i is the exponent of x."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if parts and all(":" in p for p in parts):
        terms = {}
        for p in parts:
            i, v = p.split(":", 1)
            i = int(i)
            if not 0 <= i <= 8:
                raise ValueError(f"exponent {i} outside 0..8")
            terms[i] = parse_rational(v)
        return BinaryForm.from_dict(8, terms)
    values = [parse_rational(p) for p in parts]
    if len(values) == 9:
        return BinaryForm(8, tuple(reversed(values)))
    if len(values) == 5:
        return BinaryForm.from_dict(8, {8 - 2 * k: v for k, v in enumerate(values)})
    raise ValueError("octavic needs 9 coefficients (x^8..1), 5 even coefficients, or i:v pairs")


def _triple(values: list, n: int = 3) -> list:
    if len(values) != n:
        raise ValueError(f"expected {n} values, got {len(values)}")
    return values


def _reduced_curve(values) -> ReducedCurve:
    C = ReducedCurve(*_triple(values))
    if not C.is_nonsingular():
        raise PreconditionError("singular curve: X^8 + aX^6 + bX^4 + cX^2 + 1 has a repeated root")
    return C


# ---------------------------------------------------------------------------
# subcommands; each returns (exit code, report)

def cmd_invariants(args):
    J = shioda_invariants(args.octavic)
    return EXIT_OK, {"shioda": J.to_json(), "moduli_point": moduli_point(J).to_json()}


def cmd_dihedral(args):
    C = _reduced_curve(args.abc)
    p = dihedral_invariants(C)
    out = {"dihedral": p.to_json()}
    if p.branch == "generic":
        out["Delta"] = serialize_scalar(dihedral_discriminant(*p.values))
    return EXIT_OK, out


def cmd_classify(args):
    given = [x for x in (args.abc, args.dihedral, args.octavic) if x is not None]
    if len(given) != 1:
        raise _UsageError("classify takes exactly one of --abc, --dihedral, --octavic")
    if args.abc is not None:
        result = classify_dihedral(dihedral_invariants(_reduced_curve(args.abc)))
    elif args.dihedral is not None:
        n = 1 if args.branch == "full" else 3
        result = classify_dihedral(DihedralPoint(args.branch, tuple(_triple(args.dihedral, n))))
    else:
        f = args.octavic
        even = not any(f.coeffs[i] for i in (1, 3, 5, 7)) and f.coeffs[0] and f.coeffs[8]
        if even:
            result = classify_dihedral(even_octavic_dihedral(f))
        else:
            result = classify_moduli(moduli_point(shioda_invariants(f)))
    return EXIT_OK, result.to_json()


def cmd_reconstruct(args):
    model = reconstruct(*_triple(args.dihedral), root=args.root)
    return EXIT_OK, model.to_json()


def cmd_isomorphic(args):
    same = isomorphic(args.octavic1, args.octavic2)
    wit = cross_ratio_witnesses(shioda_invariants(args.octavic1), shioda_invariants(args.octavic2))
    return EXIT_OK, {"isomorphic": same, "witnesses": wit}


def cmd_subcovers(args):
    C = _reduced_curve(args.abc)
    p = dihedral_invariants(C)
    j, method = None, "quartic invariants"
    if p.branch == "generic":
        try:
            j, method = elliptic_j(*p.values), "dihedral closed form"
        except PreconditionError:
            pass
    if j is None:
        j = quartic_j(C.a, C.b, C.c)
    return EXIT_OK, {
        "elliptic_j": serialize_scalar(j),
        "elliptic_j_method": method,
        "genus2": genus2_quotient(C).to_json(),
    }


def cmd_sample(args):
    f = stratum_sample(AutGroupLabel(args.group), args.params or [])
    return EXIT_OK, {"group": args.group, "octavic": f.to_json()}


def cmd_verify(args):
    report = run_verify(args.suite, args.samples, args.seed)
    return (EXIT_OK if report["passed"] else EXIT_INTERNAL), report


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="g3hyp", description="Invariants and strata of genus-3 hyperelliptic curves.")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("invariants", help="J2..J10 and the moduli point of an octavic")
    p.add_argument("--octavic", type=octavic_arg, required=True)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("dihedral", help="dihedral invariants of Y^2 = X^8 + aX^6 + bX^4 + cX^2 + 1")
    p.add_argument("--abc", type=rational_list, required=True)
    p.set_defaults(func=cmd_dihedral)

    p = sub.add_parser("classify", help="automorphism-group stratum")
    p.add_argument("--abc", type=rational_list)
    p.add_argument("--dihedral", type=rational_list)
    p.add_argument("--branch", choices=("generic", "mixed", "full"), default="generic")
    p.add_argument("--octavic", type=octavic_arg)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("reconstruct", help="curve model from (s2, s3, s4)")
    p.add_argument("--dihedral", type=rational_list, required=True)
    p.add_argument("--root", type=int, choices=(1, -1), default=1)
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("isomorphic", help="isomorphism test of two octavics")
    p.add_argument("--octavic1", type=octavic_arg, required=True)
    p.add_argument("--octavic2", type=octavic_arg, required=True)
    p.set_defaults(func=cmd_isomorphic)

    p = sub.add_parser("subcovers", help="elliptic and genus-2 quotients")
    p.add_argument("--abc", type=rational_list, required=True)
    p.set_defaults(func=cmd_subcovers)

    p = sub.add_parser("sample", help="family member of a stratum")
    p.add_argument("--group", choices=[g.value for g in AutGroupLabel], required=True)
    p.add_argument("--params", type=rational_list)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("verify", help="randomized identity suites")
    p.add_argument("--suite", choices=SUITE_NAMES, required=True)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def _text(report, prefix="") -> list[str]:
    if isinstance(report, dict):
        lines = []
        for k, v in report.items():
            lines += _text(v, f"{prefix}{k}.")
        return lines
    if isinstance(report, list):
        lines = []
        for i, v in enumerate(report):
            lines += _text(v, f"{prefix}{i}.")
        return lines
    return [f"{prefix[:-1]}: {json.dumps(report)}"]


@dataclass
class Outcome:
    code: int
    report: dict | None = None
    diagnostic: str = ""
    fmt: str = "json"


def execute(argv: list[str]) -> Outcome:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        return Outcome(EXIT_PARSE, diagnostic=f"usage error: {exc}")
    try:
        code, report = args.func(args)
        return Outcome(code, report, fmt=args.format)
    except _UsageError as exc:
        return Outcome(EXIT_PARSE, diagnostic=f"usage error: {exc}")
    except PreconditionError as exc:
        return Outcome(EXIT_PRECONDITION, diagnostic=f"precondition violated: {exc}")
    except ValueError as exc:
        return Outcome(EXIT_PARSE, diagnostic=f"invalid input: {exc}")
    except Exception as exc:  # anything else is a bug
        return Outcome(EXIT_INTERNAL, diagnostic=f"internal error: {type(exc).__name__}: {exc}")


def run(argv: list[str], stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    out = execute(argv)
    if out.diagnostic:
        print(out.diagnostic, file=stderr)
    if out.report is not None:
        if out.fmt == "text":
            print("\n".join(_text(out.report)), file=stdout)
        else:
            print(json.dumps(out.report, indent=2), file=stdout)
    return out.code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
