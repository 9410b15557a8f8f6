"""Exact invariants, dihedral coordinates and automorphism strata of genus-3 hyperelliptic curves."""

from .arith import PreconditionError, QuadExt, Rational, parse_rational, squarefree_part
from .dihedral import (
    DihedralPoint,
    ReconstructedModel,
    ReducedCurve,
    absolute_from_dihedral,
    dihedral_discriminant,
    dihedral_invariants,
    elliptic_j,
    even_octavic_dihedral,
    genus2_quotient,
    pairs_isomorphic,
    reconstruct,
    shioda_from_dihedral,
)
from .forms import BinaryForm, MoebiusMatrix, discriminant, moebius_act, resultant, transvectant
from .octavic import ModuliPoint, ShiodaVector, isomorphic, moduli_point, moduli_point_of, shioda_invariants
from .strata import (
    AutGroupLabel,
    ClassificationResult,
    classify_dihedral,
    classify_moduli,
    locus_relations,
    stratum_sample,
)

__all__ = [
    "AutGroupLabel",
    "BinaryForm",
    "ClassificationResult",
    "DihedralPoint",
    "ModuliPoint",
    "MoebiusMatrix",
    "PreconditionError",
    "QuadExt",
    "Rational",
    "ReconstructedModel",
    "ReducedCurve",
    "ShiodaVector",
    "absolute_from_dihedral",
    "classify_dihedral",
    "classify_moduli",
    "dihedral_discriminant",
    "dihedral_invariants",
    "discriminant",
    "elliptic_j",
    "even_octavic_dihedral",
    "genus2_quotient",
    "isomorphic",
    "locus_relations",
    "moduli_point",
    "moduli_point_of",
    "moebius_act",
    "pairs_isomorphic",
    "parse_rational",
    "reconstruct",
    "resultant",
    "shioda_from_dihedral",
    "shioda_invariants",
    "squarefree_part",
    "stratum_sample",
    "transvectant",
]
