"""Polynomial and truncated-series arithmetic."""

import random

import pytest

from qpartid.bigpoly import (
    IntPoly,
    ONE,
    TruncSeries,
    ZERO,
    coeff_at,
    format_poly,
    monomial,
    poly_add,
    poly_eval_int,
    poly_mul,
    poly_scale,
    poly_shift,
    poly_substitute_power,
    poly_truncate,
    series_geom_factor,
    series_mul,
    series_one,
)

P_1_PLUS_Q = IntPoly([1, 1])


def is_canonical(p):
    return not p.coeffs or p.coeffs[-1] != 0


def random_poly(rng, max_degree=4, bound=3):
    degree = rng.randint(0, max_degree)
    return IntPoly([rng.randint(-bound, bound) for _ in range(degree + 1)])


def test_poly_add_examples():
    assert poly_add(P_1_PLUS_Q, IntPoly([1, -1])) == IntPoly([2])
    p = IntPoly([3, 0, 2])
    assert poly_add(p, ZERO) == p
    assert poly_add(IntPoly([1, 0, 2]), IntPoly([0, 1, 1])) == IntPoly([1, 1, 3])


def test_poly_mul_examples():
    assert poly_mul(P_1_PLUS_Q, P_1_PLUS_Q) == IntPoly([1, 2, 1])
    assert poly_mul(IntPoly([5, 7]), ZERO) == ZERO
    assert poly_mul(IntPoly([1, 1, 1]), IntPoly([1, -1])) == IntPoly([1, 0, 0, -1])


def test_poly_scale_examples():
    assert poly_scale(P_1_PLUS_Q, 2) == IntPoly([2, 2])
    assert poly_scale(IntPoly([4, 5, 6]), 0) == ZERO
    assert poly_scale(IntPoly([1, -1]), -1) == IntPoly([-1, 1])


def test_poly_shift_examples():
    assert poly_shift(P_1_PLUS_Q, 2) == IntPoly([0, 0, 1, 1])
    p = IntPoly([2, 3])
    assert poly_shift(p, 0) == p
    assert poly_shift(ZERO, 5) == ZERO
    with pytest.raises(ValueError):
        poly_shift(p, -1)


def test_poly_substitute_power_examples():
    assert poly_substitute_power(IntPoly([1, 1, 1]), 2) == IntPoly([1, 0, 1, 0, 1])
    p = IntPoly([2, 0, 5])
    assert poly_substitute_power(p, 1) == p
    assert poly_substitute_power(IntPoly([1, 2]), 3) == IntPoly([1, 0, 0, 2])
    with pytest.raises(ValueError):
        poly_substitute_power(p, 0)


def test_coeff_at_examples():
    p = IntPoly([1, 0, 3])
    assert coeff_at(p, 2) == 3
    assert coeff_at(p, 7) == 0
    assert coeff_at(ZERO, 0) == 0
    with pytest.raises(ValueError):
        coeff_at(p, -1)


def test_poly_eval_int_examples():
    p = IntPoly([1, 1, 2, 1, 1])
    # sum of coefficients is the oracle for evaluation at 1
    assert poly_eval_int(p, 1) == sum(p.coeffs) == 6
    assert poly_eval_int(IntPoly([7, 1, 4]), 0) == 7
    assert poly_eval_int(IntPoly([1, -1]), -1) == 2
    assert poly_eval_int(ZERO, 12345) == 0


def test_canonical_form_and_degree():
    assert IntPoly([1, 2, 0, 0]) == IntPoly([1, 2])
    assert IntPoly([0, 0]).degree is None
    assert IntPoly([0, 0]).is_zero()
    assert IntPoly([5]).degree == 0
    assert IntPoly([0, 0, 1]).degree == 2


def test_immutability():
    p = IntPoly([1, 2])
    with pytest.raises(AttributeError):
        p.coeffs = (9,)


def test_ring_axioms_on_random_small_polys():
    rng = random.Random(20260808)
    for _ in range(300):
        a, b, c = (random_poly(rng) for _ in range(3))
        assert poly_add(a, b) == poly_add(b, a)
        assert poly_add(poly_add(a, b), c) == poly_add(a, poly_add(b, c))
        assert poly_mul(a, b) == poly_mul(b, a)
        assert poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c))
        assert poly_mul(a, poly_add(b, c)) == poly_add(poly_mul(a, b), poly_mul(a, c))
        for out in (
            poly_add(a, b),
            poly_mul(a, b),
            poly_scale(a, rng.randint(-3, 3)),
            poly_shift(a, rng.randint(0, 3)),
            poly_substitute_power(a, rng.randint(1, 3)),
        ):
            assert is_canonical(out)


def test_substitute_preserves_value_at_one():
    rng = random.Random(77)
    for _ in range(100):
        a = random_poly(rng)
        c = rng.randint(1, 4)
        assert poly_eval_int(poly_substitute_power(a, c), 1) == poly_eval_int(a, 1)


def test_format_poly():
    assert format_poly(IntPoly([1, 1, 2, 1, 1])) == "1 + q + 2q^2 + q^3 + q^4"
    assert format_poly(ZERO) == "0"
    assert format_poly(IntPoly([-1, 0, 2])) == "-1 + 2q^2"
    assert format_poly(IntPoly([0, -1])) == "-q"


def test_series_mul_two_factor_expansion():
    zq = TruncSeries(5, [ONE, monomial(1, 1)])
    zq2 = TruncSeries(5, [ONE, monomial(1, 2)])
    prod = series_mul(zq, zq2)
    assert prod.rows == (ONE, IntPoly([0, 1, 1]), monomial(1, 3))


def test_series_mul_identity_and_difference_of_squares():
    s = TruncSeries(4, [IntPoly([1, 2]), monomial(3, 1)])
    assert series_mul(s, series_one(4)) == s
    plus = TruncSeries(6, [ONE, monomial(1, 1)])
    minus = TruncSeries(6, [ONE, monomial(-1, 1)])
    prod = series_mul(plus, minus)
    assert prod.rows == (ONE, ZERO, monomial(-1, 2))


def test_series_mul_rejects_mismatched_q_order():
    with pytest.raises(ValueError):
        series_mul(series_one(3), series_one(4))


def test_series_geom_factor_examples():
    g = series_geom_factor(1, -1, 1, 3, 3)
    assert g.rows == (ONE, monomial(1, 1), monomial(1, 2), monomial(1, 3))
    f = series_geom_factor(2, 1, 1, 10, 10)
    assert f.rows == (ONE, monomial(1, 2))
    e = series_geom_factor(1, -1, 2, 4, 4)
    assert e.rows == (ONE, ZERO, monomial(1, 2), ZERO, monomial(1, 4))
    with pytest.raises(ValueError):
        series_geom_factor(0, -1, 1, 3, 3)
    with pytest.raises(ValueError):
        series_geom_factor(1, 2, 1, 3, 3)


def test_series_mul_agrees_with_poly_mul_at_z_degree_zero():
    rng = random.Random(11)
    for _ in range(50):
        a, b = random_poly(rng), random_poly(rng)
        order = 8  # large enough that no q truncation occurs
        sa = TruncSeries(order, [a])
        sb = TruncSeries(order, [b])
        assert series_mul(sa, sb).rows[0] == poly_mul(a, b)


def test_poly_truncate():
    p = IntPoly([1, 2, 3, 4])
    assert poly_truncate(p, 1) == IntPoly([1, 2])
    assert poly_truncate(p, 9) == p
    assert poly_truncate(p, 0) == IntPoly([1])
