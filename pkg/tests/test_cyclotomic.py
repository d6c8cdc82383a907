from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradecs.cyclotomic import (
    CycloNum,
    CycloPoly,
    cyclo_arith,
    cyclotomic_polynomial,
    euler_phi,
    max_extractable_power,
    poly_substitute_power,
)
from gradecs.errors import NotAPowerPoly


def zeta(M, k=1):
    return CycloNum.zeta_power(M, k)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert euler_phi(36) == 12


def test_i_squared_is_minus_one():
    assert cyclo_arith(zeta(4), zeta(4), "mul") == CycloNum.from_rational(-1)


def test_primitive_cube_roots_sum():
    assert cyclo_arith(zeta(3), zeta(3, 2), "add") == CycloNum.from_rational(-1)


def test_root_of_unity_inverse_is_conjugate_power():
    assert cyclo_arith(zeta(8), zeta(8), "inv") == zeta(8, 7)


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        CycloNum.from_rational(0, 4).inverse()


def test_cross_modulus_equality():
    assert zeta(6, 2) == zeta(3, 1)
    assert zeta(2, 1) == CycloNum.from_rational(-1)


def test_from_exponent():
    assert CycloNum.from_exponent(Fraction(1, 2)) == CycloNum.from_rational(-1)
    assert CycloNum.from_exponent(Fraction(3, 4)) == zeta(4, 3)
    assert CycloNum.from_exponent(Fraction(5, 1)) == CycloNum.from_rational(1)


@st.composite
def cyclo_nums(draw):
    M = draw(st.sampled_from([1, 2, 3, 4, 6, 8, 12]))
    phi = euler_phi(M)
    coeffs = draw(
        st.lists(
            st.fractions(min_value=-3, max_value=3, max_denominator=4),
            min_size=phi,
            max_size=phi,
        )
    )
    return CycloNum(M, coeffs)


@settings(max_examples=60, deadline=None)
@given(cyclo_nums(), cyclo_nums(), cyclo_nums())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    if not a.is_zero():
        assert (a * a.inverse()).is_one()


def poly_from_ints(*cs):
    return CycloPoly.from_int_coeffs(cs)


def x_pow_minus_one(k):
    return CycloPoly.x_power_minus(k, 1)


def test_poly_arithmetic():
    x2m1 = x_pow_minus_one(2)
    sq = x2m1 * x2m1
    assert sq == poly_from_ints(1, 0, -2, 0, 1)
    assert sq.degree == 4
    assert (sq - sq).is_zero()


def test_substitute_power_even_support():
    for n in (1, 2, 3):
        R = x_pow_minus_one(2) ** n
        g = poly_substitute_power(R, 2)
        assert g == x_pow_minus_one(1) ** n


def test_substitute_power_rejects_non_divisible_exponent():
    with pytest.raises(NotAPowerPoly):
        poly_substitute_power(x_pow_minus_one(2), 4)


def test_substitute_power_derived_case():
    # Expand (x^4 - 1)^2 by brute force and extract at d = 4.
    R = x_pow_minus_one(4) * x_pow_minus_one(4)
    assert R == poly_from_ints(1, 0, 0, 0, -2, 0, 0, 0, 1)
    assert poly_substitute_power(R, 4) == poly_from_ints(1, -2, 1)


def test_resubstitution_round_trip():
    R = (x_pow_minus_one(4) ** 2) * CycloPoly.x_power_minus(4, -1)
    d = max_extractable_power(R)
    assert d == 4
    for e in (1, 2, 4):
        g = poly_substitute_power(R, e)
        back = CycloPoly([c for coeff in g.coeffs for c in ([coeff] + [CycloNum.from_rational(0)] * (e - 1))][: e * len(g.coeffs) - (e - 1)])
        assert back == R


def test_max_extractable_power_basics():
    for m in (1, 2, 5):
        assert max_extractable_power(x_pow_minus_one(1) ** m) == 1
    # (x^4-1)^((n-1)/2) for n = 5
    assert max_extractable_power(x_pow_minus_one(4) ** 2) == 4
    # (x^2-1)^(floor(n/2)+1) (x^2+1)^(floor((n-1)/2)) for n = 4: expand product
    R = (x_pow_minus_one(2) ** 3) * (CycloPoly.x_power_minus(2, -1))
    assert max_extractable_power(R) == 2


def test_max_extractable_power_scalar_invariance():
    R = x_pow_minus_one(4) ** 2
    scaled = R * CycloNum.zeta_power(3, 1)
    assert max_extractable_power(scaled) == max_extractable_power(R)


def test_monic_normalization():
    R = x_pow_minus_one(2) * CycloNum.from_rational(Fraction(3, 7))
    assert R.monic() == x_pow_minus_one(2)
    lead = CycloPoly([CycloNum.from_rational(-1), zeta(3)])
    assert lead.monic().coeffs[-1].is_one()


def test_divmod_exact():
    num = x_pow_minus_one(2) ** 3
    quo, rem = num.divmod(x_pow_minus_one(2))
    assert rem.is_zero()
    assert quo == x_pow_minus_one(2) ** 2
