from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import nonzero_rationals, rationals
from g3hyp.arith import PreconditionError, QuadExt
from g3hyp.forms import BinaryForm, MoebiusMatrix, discriminant, moebius_act, resultant, transvectant


def forms(degree: int):
    return st.lists(rationals, min_size=degree + 1, max_size=degree + 1).map(
        lambda cs: BinaryForm(degree, tuple(cs))
    )


small_rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 3))
matrices = st.tuples(small_rationals, small_rationals, small_rationals, small_rationals).map(
    lambda t: MoebiusMatrix(*t)
).filter(lambda M: M.det != 0)


def X2_plus_Y2():
    return BinaryForm(2, (1, 0, 1))


# -- construction and plumbing ------------------------------------------------

def test_wrong_coefficient_count():
    with pytest.raises(ValueError):
        BinaryForm(3, (1, 2))


def test_degree_rules():
    f, g = BinaryForm(2, (1, 2, 3)), BinaryForm(3, (0, 1, 0, 1))
    assert (f * g).degree == 5
    with pytest.raises(ValueError):
        f + g


def test_differentiate_and_evaluate():
    assert BinaryForm.from_dict(8, {8: 1}).differentiate("X") == BinaryForm.from_dict(7, {7: 8})
    assert BinaryForm(0, (5,)).differentiate("X").is_zero()
    assert X2_plus_Y2().evaluate(1, 1) == 2
    with pytest.raises(ValueError):
        X2_plus_Y2().differentiate("Z")


def test_json_round_trip():
    f = BinaryForm(3, (Fraction(1, 2), 0, QuadExt(1, 1, -1), -4))
    assert BinaryForm.from_json(f.to_json()) == f
    assert BinaryForm(1, (Fraction(-1, 3), 2)).to_json() == {"degree": 1, "coeffs": ["-1/3", "2"]}


# -- transvectants ------------------------------------------------------------

def test_zeroth_transvectant_is_product():
    f = BinaryForm(4, (1, -2, 0, 3, 5))
    assert transvectant(f, f, 0) == f * f


def test_transvectant_of_x2_plus_y2():
    assert transvectant(X2_plus_Y2(), X2_plus_Y2(), 2) == BinaryForm(0, (2,))


def test_transvectant_order_too_large():
    with pytest.raises(PreconditionError):
        transvectant(BinaryForm(4, (1, 0, 0, 0, 1)), X2_plus_Y2(), 3)


@settings(max_examples=40)
@given(forms(5), forms(5), forms(4), rationals, rationals, st.integers(0, 4))
def test_transvectant_bilinear(f, g, h, alpha, beta, r):
    lhs = transvectant(f.scale(alpha) + g.scale(beta), h, r)
    rhs = transvectant(f, h, r).scale(alpha) + transvectant(g, h, r).scale(beta)
    assert lhs == rhs


@settings(max_examples=40)
@given(st.integers(1, 8), st.integers(1, 8), st.data())
def test_transvectant_symmetry(m, n, data):
    f, g = data.draw(forms(m)), data.draw(forms(n))
    r = data.draw(st.integers(0, min(m, n)))
    assert transvectant(f, g, r) == transvectant(g, f, r).scale((-1) ** r)


@settings(max_examples=25)
@given(forms(6), forms(4), matrices, st.integers(0, 4))
def test_transvectant_covariance(f, g, M, r):
    # (f o M, g o M)^r == det(M)^r * (f, g)^r o M
    lhs = transvectant(moebius_act(f, M), moebius_act(g, M), r)
    rhs = moebius_act(transvectant(f, g, r), M).scale(M.det**r)
    assert lhs == rhs


# -- Moebius action -----------------------------------------------------------

@given(forms(8))
def test_identity_action(f):
    assert moebius_act(f, MoebiusMatrix.identity()) == f


@given(rationals, rationals, rationals)
def test_swap_reverses_coefficients(a, b, c):
    f = BinaryForm.from_dict(8, {8: 1, 6: a, 4: b, 2: c, 0: 1})
    swapped = moebius_act(f, MoebiusMatrix(0, 1, 1, 0))
    assert swapped == BinaryForm.from_dict(8, {8: 1, 6: c, 4: b, 2: a, 0: 1})


def test_diagonal_scaling():
    assert moebius_act(X2_plus_Y2(), MoebiusMatrix(2, 0, 0, 1)) == BinaryForm(2, (1, 0, 4))


def test_singular_matrix_rejected():
    with pytest.raises(PreconditionError):
        moebius_act(X2_plus_Y2(), MoebiusMatrix(1, 2, 2, 4))


@settings(max_examples=25)
@given(forms(5), matrices, matrices)
def test_action_composes(f, M, N):
    # f(M(N v)) with (f o M) o N == f o (M N)
    MN = MoebiusMatrix(M.a * N.a + M.b * N.c, M.a * N.b + M.b * N.d, M.c * N.a + M.d * N.c, M.c * N.b + M.d * N.d)
    assert moebius_act(moebius_act(f, M), N) == moebius_act(f, MN)


# -- discriminant -------------------------------------------------------------

def test_discriminant_examples():
    assert discriminant(BinaryForm(2, (-1, 0, 1))) == 4
    assert discriminant(BinaryForm.from_dict(3, {2: 1})) == 0
    assert discriminant(BinaryForm.from_dict(8, {8: 1, 6: 1, 2: 1, 0: 1})) == 0


def test_discriminant_rejects_degenerate_inputs():
    with pytest.raises(PreconditionError):
        discriminant(BinaryForm.zero(4))
    with pytest.raises(PreconditionError):
        discriminant(BinaryForm(1, (1, 1)))


@pytest.mark.parametrize("n", range(2, 9))
def test_discriminant_matches_sympy(n):
    x = sp.symbols("x")
    coeffs = [Fraction((7 * i * i + 3 * i + 1) % 11 - 5, 1 + i % 3) for i in range(n + 1)]
    coeffs[n] = coeffs[n] or Fraction(1)
    expected = sp.discriminant(sum(sp.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(coeffs)), x)
    assert discriminant(BinaryForm(n, tuple(coeffs))) == Fraction(int(sp.numer(expected)), int(sp.denom(expected)))


@pytest.mark.parametrize("n", range(2, 9))
def test_root_at_infinity_route_agrees(n):
    # X^n coefficient zero: compare against the swapped form, whose X^n coefficient is not
    f = BinaryForm(n, tuple(Fraction(i * i - 2 * i + 3, i + 1) for i in range(n)) + (Fraction(0),))
    swapped = moebius_act(f, MoebiusMatrix(0, 1, 1, 0))
    assert f.coeffs[n] == 0 and swapped.coeffs[n] != 0
    assert discriminant(f) == discriminant(swapped)  # det^(n(n-1)) = 1


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 7), st.data(), matrices)
def test_discriminant_covariance(n, data, M):
    f = data.draw(forms(n).filter(lambda f: not f.is_zero()))
    assert discriminant(moebius_act(f, M)) == M.det ** (n * (n - 1)) * discriminant(f)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 7), st.data(), st.booleans())
def test_discriminant_zero_iff_repeated_factor(n, data, plant):
    x = sp.symbols("x")
    if plant:
        r = data.draw(small_rationals)
        rest = data.draw(st.lists(small_rationals, min_size=n - 1, max_size=n - 1))
        base = [Fraction(1)]
        for root in (r, r):
            base = [Fraction(0)] + base
            for i in range(len(base) - 1):
                base[i] -= root * base[i + 1]
        # multiply by the random cofactor with nonzero top coefficient
        rest = rest[:-1] + [rest[-1] or Fraction(1)] if rest else [Fraction(1)]
        coeffs = [Fraction(0)] * (len(base) + len(rest) - 1)
        for i, u in enumerate(base):
            for j, v in enumerate(rest):
                coeffs[i + j] += u * v
        coeffs = coeffs[: n + 1] + [Fraction(0)] * (n + 1 - len(coeffs))
    else:
        coeffs = data.draw(st.lists(small_rationals, min_size=n + 1, max_size=n + 1))
    if not coeffs[n]:
        coeffs[n] = Fraction(1)
    f = BinaryForm(n, tuple(coeffs))
    p = sum(sp.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(coeffs))
    shares_factor = sp.degree(sp.gcd(p, sp.diff(p, x)), x) > 0
    assert (discriminant(f) == 0) == shares_factor
    if plant:
        assert discriminant(f) == 0


def test_resultant_of_linear_forms():
    # Res(aX + bY, cX + dY) = ad - bc up to the homogeneous sign convention
    f, g = BinaryForm(1, (2, 3)), BinaryForm(1, (5, 7))
    assert abs(resultant(f, g)) == abs(3 * 5 - 2 * 7)
    assert resultant(f, BinaryForm(1, (4, 6))) == 0


@given(nonzero_rationals)
def test_discriminant_scaling(c):
    f = BinaryForm(4, (1, -3, 0, 2, 1))
    assert discriminant(f.scale(c)) == c ** (2 * 4 - 2) * discriminant(f)
