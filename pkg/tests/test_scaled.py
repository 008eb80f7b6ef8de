import math
from fractions import Fraction

import pytest

from hsroots.scaled import ScaledComplex, scaled_polar


def test_roundtrip_moderate_values():
    for value in (1 + 0j, -3.5 + 2j, 1e-20 + 1e-17j, 12345.678j):
        sc = ScaledComplex(value)
        assert sc.to_complex() == pytest.approx(value, rel=1e-15)


def test_mantissa_normalization():
    for value in (0.001 + 0j, 7.25 - 3j, -1e30 + 0j):
        sc = ScaledComplex(value)
        assert 1.0 <= abs(sc.mantissa) < 2.0


def test_zero_handling():
    zero = ScaledComplex(0j)
    assert zero.is_zero
    assert zero.to_complex() == 0j
    assert zero.log2_abs() == -math.inf
    assert (zero + ScaledComplex(2.0)).to_complex() == 2.0
    assert (ScaledComplex(2.0) * zero).is_zero


def test_arithmetic_matches_complex():
    a = ScaledComplex(3 - 4j)
    b = ScaledComplex(-0.5 + 2j)
    assert (a * b).to_complex() == pytest.approx((3 - 4j) * (-0.5 + 2j), rel=1e-15)
    assert (a + b).to_complex() == pytest.approx(2.5 - 2j, rel=1e-15)
    assert (a - b).to_complex() == pytest.approx(3.5 - 6j, rel=1e-15)
    assert (a / b).to_complex() == pytest.approx((3 - 4j) / (-0.5 + 2j), rel=1e-15)


def test_huge_product_tracks_exponent():
    # 500 factors of modulus ~1e3 would overflow doubles at ~1e1500
    acc = ScaledComplex(1.0 + 0j)
    expected_log2 = 0.0
    for k in range(500):
        f = complex(900.0 + k, 400.0)
        acc = acc * ScaledComplex(f)
        expected_log2 += math.log2(abs(f))
    assert acc.log2_abs() == pytest.approx(expected_log2, rel=1e-12)
    assert abs(acc.mantissa) < 2.0


def test_addition_with_large_exponent_gap_keeps_dominant():
    big = ScaledComplex(1.5, 400)
    small = ScaledComplex(1.5, -400)
    assert (big + small).log2_abs() == pytest.approx(big.log2_abs())


def test_from_int_and_fraction():
    value = 3**200
    sc = ScaledComplex.from_int(value)
    assert sc.log2_abs() == pytest.approx(200 * math.log2(3), rel=1e-14)
    fr = Fraction(3**200, 7**150)
    sc = ScaledComplex.from_fraction(fr)
    assert sc.log2_abs() == pytest.approx(
        200 * math.log2(3) - 150 * math.log2(7), rel=1e-12
    )


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        ScaledComplex(1.0) / ScaledComplex(0j)


def test_isclose():
    a = ScaledComplex(1.0, 1000)
    b = ScaledComplex(1.0 + 1e-14, 1000)
    assert a.isclose(b, rel_tol=1e-12)
    assert not a.isclose(ScaledComplex(1.1, 1000), rel_tol=1e-12)


def test_scaled_polar():
    sc = scaled_polar(1234.5)
    assert sc.log2_abs() == pytest.approx(1234.5)
