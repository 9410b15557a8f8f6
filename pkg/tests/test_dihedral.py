from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import rationals
from g3hyp.arith import PreconditionError, QuadExt
from g3hyp.dihedral import (
    DihedralPoint,
    ReducedCurve,
    absolute_from_dihedral,
    dihedral_discriminant,
    dihedral_invariants,
    elliptic_j,
    even_octavic_dihedral,
    genus2_quotient,
    genus2_tabulated,
    igusa_absolute,
    igusa_from_clebsch,
    octavic_discriminant_from_dihedral,
    pairs_isomorphic,
    quartic_j,
    reconstruct,
    shioda_from_dihedral,
    tabulated_symbols,
)
from g3hyp.forms import BinaryForm, discriminant
from g3hyp.octavic import isomorphic, moduli_point_of, shioda_invariants
from g3hyp.strata import classify_dihedral

F = Fraction


def curves():
    """Nonsingular reduced curves with a(a^2 + c^2)(s4 + 2 s2^2) != 0."""
    def ok(C):
        return C.a and C.a**2 + C.c**2 and C.a**4 + C.c**4 + 2 * (C.a * C.c) ** 2 and C.is_nonsingular()
    return st.builds(ReducedCurve, rationals, rationals, rationals).filter(ok)


# -- dihedral invariants ------------------------------------------------------

@pytest.mark.parametrize(
    "abc, branch, values",
    [
        ((1, 1, 3), "generic", (3, 10, 82)),
        ((0, 14, 0), "full", (196,)),
        ((1, 3, 1), "generic", (1, 6, 2)),  # (u, v + 2, u) with u = v = 1
    ],
)
def test_dihedral_invariants_examples(abc, branch, values):
    p = dihedral_invariants(ReducedCurve(*abc))
    assert p == DihedralPoint(branch, tuple(F(v) for v in values))


def test_mixed_branch_over_gaussian_rationals():
    i = QuadExt(0, 1, -1)
    p = dihedral_invariants(ReducedCurve(i * 2, F(5), F(2)))  # a = i c
    assert p.branch == "mixed"
    assert p.values == (i * 4, F(25), F(32))


def test_dihedral_point_json_and_shape():
    assert DihedralPoint("full", (F(196),)).to_json() == {"branch": "full", "values": ["196"]}
    with pytest.raises(ValueError):
        DihedralPoint("generic", (F(1),))
    with pytest.raises(ValueError):
        DihedralPoint("odd", (F(1),))


@settings(max_examples=40, deadline=None)
@given(rationals, rationals, rationals)
def test_d4_invariance(a, b, c):
    C = ReducedCurve(a, b, c)
    p = dihedral_invariants(C)
    assert dihedral_invariants(C.tau2()) == p
    assert dihedral_invariants(C.tau1_squared()) == p


@settings(max_examples=30, deadline=None)
@given(curves(), st.sampled_from([F(1), F(2), F(-3, 5)]))
def test_even_octavic_route_matches_reduced_route(C, scale):
    # scaling the whole form leaves the invariants of the even octavic alone
    assert even_octavic_dihedral(C.octavic().scale(scale)) == dihedral_invariants(C)


# -- discriminant -------------------------------------------------------------

@pytest.mark.parametrize("triple, value", [((0, 0, 1), -229), ((0, 1, 0), -16), ((1, 0, 0), -216)])
def test_dihedral_discriminant_examples(triple, value):
    assert dihedral_discriminant(*map(F, triple)) == value


@given(rationals)
def test_dihedral_discriminant_pure_terms(x):
    assert dihedral_discriminant(0, 0, x) == 27 * x**3 - 256 * x**2
    assert dihedral_discriminant(0, x, 0) == -16 * x**4
    assert dihedral_discriminant(x, 0, 0) == 24 * x**6 + 16 * x**7 + 768 * x**5 - 1024 * x**4


@settings(max_examples=30, deadline=None)
@given(curves())
def test_octavic_discriminant_relation(C):
    s2, s3, s4 = dihedral_invariants(C).values
    assert discriminant(C.octavic()) == octavic_discriminant_from_dihedral(s2, s3, s4)


# -- bridges to the octavic invariants ----------------------------------------

def test_shioda_from_dihedral_examples():
    J = shioda_from_dihedral(F(0), F(0), F(1))
    assert (J[0], J[1]) == (280, 1050)
    with pytest.raises(PreconditionError):
        shioda_from_dihedral(F(1), F(0), F(-2))


@settings(max_examples=25, deadline=None)
@given(curves())
def test_shioda_bridge(C):
    s2, s3, s4 = dihedral_invariants(C).values
    lam = C.a**2 + C.c**2
    J = shioda_invariants(C.octavic())
    assert shioda_from_dihedral(s2, s3, s4) == tuple(lam**i * J[i] for i in range(2, 8))


@settings(max_examples=25, deadline=None)
@given(curves())
def test_absolute_bridge(C):
    s2, s3, s4 = dihedral_invariants(C).values
    try:
        closed = absolute_from_dihedral(s2, s3, s4)
    except PreconditionError:
        assume(False)
    p = moduli_point_of(C.octavic())
    assume(p.branch == "T")
    assert closed == p.values[:4]


def test_t2_on_the_pure_s4_line():
    for s4 in (F(1), F(-7, 3), F(50)):
        assert absolute_from_dihedral(F(0), F(0), s4)[1] == F(784, 25)


def test_t4_on_the_pure_s4_line_matches_curve():
    C = ReducedCurve(1, 0, 0)  # X^8 + X^6 + 1
    s2, s3, s4 = dihedral_invariants(C).values
    assert (s2, s3, s4) == (0, 0, 1)
    p = moduli_point_of(C.octavic())
    assert p.branch == "T"
    assert absolute_from_dihedral(s2, s3, s4)[3] == p.values[3]


# -- elliptic quotient --------------------------------------------------------

def test_elliptic_j_example():
    assert elliptic_j(F(0), F(0), F(1)) == F(442368, 229)


@settings(max_examples=30, deadline=None)
@given(curves())
def test_elliptic_j_matches_quartic_oracle(C):
    s2, s3, s4 = dihedral_invariants(C).values
    try:
        j = elliptic_j(s2, s3, s4)
    except PreconditionError:
        assume(False)
    assert j == quartic_j(C.a, C.b, C.c)
    assert elliptic_j(*dihedral_invariants(C.tau1_squared()).values) == j


# -- genus-2 quotient ---------------------------------------------------------

def test_genus2_quotient_of_origin():
    q = genus2_quotient(ReducedCurve(0, 0, 0))
    assert q.sextic == BinaryForm.from_dict(6, {5: 1, 1: 1})


def test_genus2_planted_double_root():
    # X^4 - 2X^3 + 2X^2 - 2X + 1 = (X - 1)^2 (X^2 + 1)
    with pytest.raises(PreconditionError):
        genus2_quotient(ReducedCurve(-2, 2, -2))


@settings(max_examples=20, deadline=None)
@given(curves())
def test_genus2_invariants_constant_on_d4_orbit(C):
    base = genus2_quotient(C)
    for other in (C.tau2(), C.tau1_squared(), C.tau2().tau1_squared()):
        q = genus2_quotient(other)
        assert (q.normalizer, q.absolute) == (base.normalizer, base.absolute)


@settings(max_examples=20, deadline=None)
@given(curves())
def test_igusa_j10_is_the_sextic_discriminant(C):
    q = genus2_quotient(C)
    assert igusa_from_clebsch(q.clebsch)[3] == discriminant(q.sextic)


@settings(max_examples=20, deadline=None)
@given(curves())
def test_tabulated_i2_i3_agree_under_default_symbols(C):
    igusa = igusa_from_clebsch(genus2_quotient(C).clebsch)
    assume(igusa[0])
    try:
        tab = genus2_tabulated(*tabulated_symbols(*dihedral_invariants(C).values))
    except PreconditionError:
        assume(False)
    assert tab[1:] == igusa_absolute(igusa)[1:]


# -- pair isomorphism -----------------------------------------------------------

def test_pairs_isomorphic_examples():
    p = DihedralPoint("generic", (F(1), F(6), F(2)))
    assert pairs_isomorphic(p, p) == (True, "")
    C = ReducedCurve(F(2), F(-1), F(5, 3))
    assert pairs_isomorphic(dihedral_invariants(C), dihedral_invariants(C.tau2()))[0]
    assert not pairs_isomorphic(p, DihedralPoint("generic", (F(1), F(6), F(3))))[0]
    same, note = pairs_isomorphic(p, DihedralPoint("full", (F(1),)))
    assert not same and "branch mismatch" in note


# -- reconstruction -----------------------------------------------------------

def test_reconstruct_rejects_singular_and_degenerate():
    # (1, 0, 2) lies on Delta = 0, so no model exists there
    assert dihedral_discriminant(F(1), F(0), F(2)) == 0
    with pytest.raises(PreconditionError, match="Delta"):
        reconstruct(1, 0, 2)
    with pytest.raises(PreconditionError, match="normalization"):
        reconstruct(1, 5, -2)


@pytest.mark.parametrize(
    "triple, coeffs_high_to_low",
    [
        ((0, 1, 1), (1, 1, 1, 0, 1)),
        ((1, 1, F(5, 2)), (2, F(4, 9), F(8, 243), F(8, 729), F(16, 6561))),
    ],
)
def test_reconstruct_model_coefficients(triple, coeffs_high_to_low):
    m = reconstruct(*triple)
    assert m.field == "moduli"
    assert tuple(m.octavic.coeffs[i] for i in (8, 6, 4, 2, 0)) == coeffs_high_to_low
    assert even_octavic_dihedral(m.octavic).values == tuple(F(x) for x in triple)


@settings(max_examples=25, deadline=None)
@given(rationals, rationals, rationals, st.sampled_from([1, -1]))
def test_reconstruct_round_trip(s2, s3, s4, root):
    assume(s4 + 2 * s2**2 and dihedral_discriminant(s2, s3, s4))
    m = reconstruct(s2, s3, s4, root=root)
    assert m.A * m.A - s4 * m.A + s2**4 == 0
    assert even_octavic_dihedral(m.octavic).values == (s2, s3, s4)
    if m.field == "quadratic":
        assert any(isinstance(c, QuadExt) for c in m.octavic.coeffs)


def test_reconstruct_quadratic_tag_and_json():
    m = reconstruct(3, 10, 82)  # d = 82^2 - 4*81 = 6400, a square
    assert m.field == "moduli"
    m = reconstruct(1, 1, 3)  # d = 5
    assert m.field == "quadratic" and m.d == 5
    obj = m.to_json()
    assert obj["field"] == "quadratic" and obj["d"] == "5"
    assert obj["coeffs"][8] == {"base": "3/2", "coeff": "1/2", "radicand": "5"}


def test_reconstruct_recovers_rational_curve():
    C = ReducedCurve(F(3), F(-2), F(1, 2))
    m = reconstruct(*dihedral_invariants(C).values)
    assert m.field == "moduli"
    assert isomorphic(C.octavic(), m.octavic)


# -- the D12 point on the mixed branch ------------------------------------------

def test_mixed_d12_point_has_a_model_over_q_sqrt_minus_77():
    # X^8 + X^6 + e X^4 + q X^2 - q^2 has a^2 + c^2 = 0 after normalizing, s2 = -1/q, w = -e^2/q^2
    q = F(-9, 224)
    e = q * QuadExt(0, F(2, 3), -77)
    f = BinaryForm.from_dict(8, {8: 1, 6: 1, 4: e, 2: q, 0: -q * q})
    p = even_octavic_dihedral(f)
    assert p.branch == "mixed"
    assert p.values[:2] == (F(224, 9), F(308, 9))
    assert classify_dihedral(p).label.value == "D12"
    # D12 family member X + a X^4 + X^7 with a = 2(1 + l)/(1 - l), 81 l^2 - 146 l + 81 = 0
    lam = QuadExt(F(73, 81), F(4, 81), -77)
    assert 81 * lam * lam - 146 * lam + 81 == 0
    a = 2 * (1 + lam) / (1 - lam)
    d12 = BinaryForm.from_dict(8, {1: 1, 4: a, 7: 1})
    assert isomorphic(f, d12)
