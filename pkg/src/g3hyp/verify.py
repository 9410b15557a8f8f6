"""Randomized identity suites.

A suite pairs a sampler with a list of identities. Each identity receives the
sample and returns ``True``/``False``, or raises :class:`Skip` when the sample
is outside its domain. Adding a relation means appending to ``SUITES``.

Sample ``i`` of suite ``name`` under seed ``S`` is drawn from
``random.Random(f"{S}:{name}:{i}")``, so reports do not depend on how samples
are spread over worker processes.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .arith import PreconditionError, QuadExt, format_rational, rational_sqrt, serialize_scalar
from .dihedral import (
    DISCRIMINANT_CONSTANT,
    ReducedCurve,
    absolute_from_dihedral,
    dihedral_discriminant,
    dihedral_invariants,
    elliptic_j,
    even_octavic_dihedral,
    octavic_discriminant_from_dihedral,
    quartic_j,
    reconstruct,
    shioda_from_dihedral,
)
from .forms import BinaryForm, MoebiusMatrix, discriminant, moebius_act
from .octavic import WEIGHTS, isomorphic, moduli_point, shioda_invariants
from .strata import (
    AutGroupLabel,
    Certainty,
    classify_dihedral,
    classify_moduli,
    locus_relations,
    stratum_sample,
)


class Skip(Exception):
    """The sample lies outside the identity's domain."""


def random_rational(rng: random.Random, height: int = 20, den: int = 6) -> Fraction:
    return Fraction(rng.randint(-height, height), rng.randint(1, den))


# ---------------------------------------------------------------------------
# samplers

def sample_reduced_curve(rng: random.Random) -> ReducedCurve:
    """(a, b, c) with a != 0, a^2 + c^2 != 0 and a squarefree octavic."""
    while True:
        a, b, c = (random_rational(rng) for _ in range(3))
        if not a:
            continue
        C = ReducedCurve(a, b, c)
        if C.is_nonsingular():
            return C


def sample_octavic_and_matrix(rng: random.Random):
    while True:
        f = BinaryForm(8, tuple(random_rational(rng, 9, 3) for _ in range(9)))
        if not discriminant(f):
            continue
        M = MoebiusMatrix(*(random_rational(rng, 5, 3) for _ in range(4)))
        if M.det:
            return f, M


def sample_dihedral_triple(rng: random.Random):
    while True:
        s2, s3, s4 = (random_rational(rng, 30, 4) for _ in range(3))
        if s4 + 2 * s2**2 and dihedral_discriminant(s2, s3, s4):
            return s2, s3, s4


# family -> (route, parameters to avoid); the avoided values give a larger group
LOCUS_FAMILIES = {
    AutGroupLabel.Z2cubed: ("dihedral", {}),
    AutGroupLabel.Z2xD8: ("moduli", {0: {0, 2, -2, 14, -14}}),
    AutGroupLabel.D12: ("moduli", {0: {0, 2, -2}}),
    AutGroupLabel.Z4: ("moduli", {}),
    AutGroupLabel.Z2xZ4: ("moduli", {0: {0, 2, -2, 14, -14}}),
}


def sample_family_member(rng: random.Random, label: AutGroupLabel):
    from .strata import family_dimension

    _, avoid = LOCUS_FAMILIES[label]
    n = family_dimension(label)
    while True:
        params = [random_rational(rng) for _ in range(n)]
        if any(params[k] in bad for k, bad in avoid.items()):
            continue
        if label is AutGroupLabel.Z2cubed and params[0] + params[1] == 0:
            continue  # x^6 coefficient vanishes: the curve drops to the a = c = 0 branch
        if label is AutGroupLabel.Z4 and params[1] in (0, 1):
            continue  # b = 1 makes x^4 + a x^2 + 1 reciprocal and the group larger
        try:
            return params, stratum_sample(label, params)
        except PreconditionError:
            continue


def sample_roundtrip(rng: random.Random) -> dict:
    return {"triple": sample_dihedral_triple(rng), "curve": sample_reduced_curve(rng)}


def sample_loci(rng: random.Random):
    return {label: sample_family_member(rng, label) for label in LOCUS_FAMILIES}


# ---------------------------------------------------------------------------
# identities

def _pipeline_t(C: ReducedCurve):
    p = moduli_point(shioda_invariants(C.octavic()))
    if p.branch != "T":
        raise Skip
    return p.values


def bridge_t(C: ReducedCurve) -> bool:
    s2, s3, s4 = dihedral_invariants(C).values
    try:
        closed = absolute_from_dihedral(s2, s3, s4)
    except PreconditionError:
        raise Skip
    return closed == _pipeline_t(C)[:4]


def bridge_j(C: ReducedCurve) -> bool:
    s2, s3, s4 = dihedral_invariants(C).values
    lam = C.a**2 + C.c**2
    J = shioda_invariants(C.octavic())
    closed = shioda_from_dihedral(s2, s3, s4)
    return all(lam**i * J[i] == v for i, v in zip(range(2, 8), closed))


def discriminant_relation(C: ReducedCurve) -> bool:
    s2, s3, s4 = dihedral_invariants(C).values
    return discriminant(C.octavic()) == octavic_discriminant_from_dihedral(s2, s3, s4)


def weight_law(sample) -> bool:
    f, M = sample
    J, JM = shioda_invariants(f), shioda_invariants(moebius_act(f, M))
    return all(JM[i] == M.det ** (4 * i) * J[i] for i in WEIGHTS)


def absolute_invariance(sample) -> bool:
    f, M = sample
    return moduli_point(shioda_invariants(f)) == moduli_point(shioda_invariants(moebius_act(f, M)))


def elliptic_j_matches_quartic(C: ReducedCurve) -> bool:
    s2, s3, s4 = dihedral_invariants(C).values
    try:
        return elliptic_j(s2, s3, s4) == quartic_j(C.a, C.b, C.c)
    except PreconditionError:
        raise Skip


def reconstruct_round_trip(triple) -> bool:
    model = reconstruct(*triple)
    return even_octavic_dihedral(model.octavic).values == tuple(triple)


def reconstruct_roots_isomorphic(triple) -> bool:
    """Both roots of A^2 - s4 A + s2^4 give isomorphic models."""
    return isomorphic(reconstruct(*triple, root=1).octavic, reconstruct(*triple, root=-1).octavic)


def reconstruct_field_tag(triple) -> bool:
    s2, _, s4 = triple
    square = rational_sqrt(s4 * s4 - 4 * s2**4) is not None
    return (reconstruct(*triple).field == "moduli") == square


def reconstruct_from_curve(C: ReducedCurve) -> bool:
    """Model rebuilt from a rational curve's invariants is rational and isomorphic to it."""
    s2, s3, s4 = dihedral_invariants(C).values
    try:
        model = reconstruct(s2, s3, s4)
    except PreconditionError:
        raise Skip
    return model.field == "moduli" and isomorphic(C.octavic(), model.octavic)


def _family_point(label, f):
    route, _ = LOCUS_FAMILIES[label]
    if route == "dihedral":
        return even_octavic_dihedral(f)
    return moduli_point(shioda_invariants(f))


def _loci_relations(label: AutGroupLabel) -> Callable:
    def check(members) -> bool:
        _, f = members[label]
        if label is AutGroupLabel.Z4:
            J = shioda_invariants(f)
            return not J[3] and not J[5] and not J[7]
        p = _family_point(label, f)
        if label is AutGroupLabel.Z2cubed:
            return p.branch == "generic" and locus_relations(label, "s").satisfied_by(p.values)
        rel = locus_relations(label)
        return p.branch.lower() == rel.space and rel.satisfied_by(p.values)

    check.__name__ = f"{label.value}_relations"
    return check


def _loci_classify(label: AutGroupLabel) -> Callable:
    expected = Certainty.NECESSARY if label is AutGroupLabel.Z4 else Certainty.EXACT

    def check(members) -> bool:
        _, f = members[label]
        p = _family_point(label, f)
        r = classify_dihedral(p) if LOCUS_FAMILIES[label][0] == "dihedral" else classify_moduli(p)
        return r.label is label and r.certainty is expected

    check.__name__ = f"{label.value}_classify"
    return check


def _parameter_recovery(label: AutGroupLabel) -> Callable:
    def check(members) -> bool:
        params, f = members[label]
        rel = locus_relations(label)
        p = _family_point(label, f)
        t = params[0] ** 2
        if t in rel.parameter_map.undefined_at:
            raise Skip
        try:
            return rel.parameter_map.evaluate(p.values) == t
        except ZeroDivisionError:
            raise Skip

    check.__name__ = f"{label.value}_parameter_map"
    return check


@dataclass(frozen=True)
class Identity:
    name: str
    check: Callable


@dataclass(frozen=True)
class Suite:
    name: str
    sampler: Callable
    identities: tuple
    constants: dict = field(default_factory=dict)


SUITES = {
    "bridge": Suite(
        "bridge",
        sample_reduced_curve,
        (Identity("t1..t4 closed form == transvectant pipeline", bridge_t),
         Identity("(a^2+c^2)^i J_i == closed form J2..J7", bridge_j)),
    ),
    "discriminant": Suite(
        "discriminant",
        sample_reduced_curve,
        (Identity("disc(octavic) == C * (-256) Delta^2 / (s4 + 2 s2^2)^4", discriminant_relation),),
        {"C": DISCRIMINANT_CONSTANT},
    ),
    "weights": Suite(
        "weights",
        sample_octavic_and_matrix,
        (Identity("J_i(f o M) == det(M)^(4i) J_i(f)", weight_law),
         Identity("moduli point unchanged under M", absolute_invariance)),
    ),
    "loci": Suite(
        "loci",
        sample_loci,
        tuple(Identity(f"{lab.value}: family satisfies relations", _loci_relations(lab)) for lab in LOCUS_FAMILIES)
        + tuple(Identity(f"{lab.value}: classify returns family label", _loci_classify(lab)) for lab in LOCUS_FAMILIES)
        + tuple(
            Identity(f"{lab.value}: parameter map recovers a^2", _parameter_recovery(lab))
            for lab in (AutGroupLabel.Z2xD8, AutGroupLabel.D12, AutGroupLabel.Z2xZ4)
        ),
    ),
    "jinv": Suite(
        "jinv",
        sample_reduced_curve,
        (Identity("elliptic_j == quartic-invariant j", elliptic_j_matches_quartic),),
    ),
    "roundtrip": Suite(
        "roundtrip",
        sample_roundtrip,
        (Identity("dihedral invariants of model == input", lambda s: reconstruct_round_trip(s["triple"])),
         Identity("models for both roots of A are isomorphic",
                  lambda s: reconstruct_roots_isomorphic(s["triple"])),
         Identity("field tag is moduli iff s4^2 - 4 s2^4 is a square",
                  lambda s: reconstruct_field_tag(s["triple"])),
         Identity("model from a rational curve is rational and isomorphic to it",
                  lambda s: reconstruct_from_curve(s["curve"]))),
    ),
}
SUITE_NAMES = tuple(SUITES) + ("all",)


# ---------------------------------------------------------------------------
# running

def describe_sample(sample) -> object:
    """JSON-friendly rendering of a sample for counterexample reports."""
    if isinstance(sample, ReducedCurve):
        return {"abc": [serialize_scalar(x) for x in (sample.a, sample.b, sample.c)]}
    if isinstance(sample, BinaryForm):
        return sample.to_json()
    if isinstance(sample, MoebiusMatrix):
        return [serialize_scalar(x) for x in (sample.a, sample.b, sample.c, sample.d)]
    if isinstance(sample, dict):
        return {getattr(k, "value", str(k)): describe_sample(v) for k, v in sample.items()}
    if isinstance(sample, (tuple, list)):
        return [describe_sample(x) for x in sample]
    if isinstance(sample, (int, Fraction, QuadExt)):
        return serialize_scalar(sample)
    return repr(sample)


def _run_sample(args) -> list[tuple[str, object]]:
    suite_name, seed, i = args
    suite = SUITES[suite_name]
    rng = random.Random(f"{seed}:{suite_name}:{i}")
    sample = suite.sampler(rng)
    out = []
    for ident in suite.identities:
        try:
            ok = bool(ident.check(sample))
            out.append(("pass" if ok else "fail", None if ok else describe_sample(sample)))
        except Skip:
            out.append(("skip", None))
        except PreconditionError as exc:
            out.append(("fail", {"sample": describe_sample(sample), "error": str(exc)}))
    return out


def worker_count() -> int:
    env = os.environ.get("G3HYP_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def run_suite(name: str, samples: int, seed: int, workers: int | None = None) -> dict:
    suite = SUITES[name]
    workers = worker_count() if workers is None else workers
    jobs = [(name, seed, i) for i in range(samples)]
    if workers <= 1 or samples < 2:
        results = [_run_sample(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=min(workers, samples)) as pool:
            results = list(pool.map(_run_sample, jobs, chunksize=max(1, samples // (4 * workers))))
    identities = []
    for k, ident in enumerate(suite.identities):
        counts = {"pass": 0, "fail": 0, "skip": 0}
        first = None
        for i, per_sample in enumerate(results):
            status, detail = per_sample[k]
            counts[status] += 1
            if status == "fail" and first is None:
                first = {"index": i, "sample": detail}
        identities.append(
            {
                "identity": ident.name,
                "passed": counts["fail"] == 0 and counts["pass"] > 0,
                "checked": counts["pass"] + counts["fail"],
                "skipped": counts["skip"],
                "first_counterexample": first,
            }
        )
    report = {
        "suite": name,
        "samples": samples,
        "seed": seed,
        "passed": all(x["passed"] for x in identities),
        "identities": identities,
    }
    if suite.constants:
        report["constants"] = {k: format_rational(v) for k, v in suite.constants.items()}
    return report


def run(name: str, samples: int, seed: int, workers: int | None = None) -> dict:
    if name == "all":
        reports = [run_suite(n, samples, seed, workers) for n in SUITES]
        return {"suite": "all", "passed": all(r["passed"] for r in reports), "suites": reports}
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return run_suite(name, samples, seed, workers)
