from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from asmkit.exact import (Cyclo24, IntPolynomial, NotDivisibleError, SamplingError, cyclo_root,
                          poly_exact_div, reciprocal_free, sample_points, scalar_from_json,
                          scalar_to_json, simplify)

small = st.integers(-6, 6)
cyclo = st.builds(lambda nums, d: Cyclo24(nums, d), st.lists(small, min_size=8, max_size=8),
                  st.integers(1, 5))
polys = st.builds(lambda cs, off: IntPolynomial(cs, off), st.lists(small, max_size=6),
                  st.integers(-3, 3))


def test_roots_of_unity_have_exact_order():
    for k in (1, 2, 3, 4, 6, 8, 12, 24):
        z = cyclo_root(k)
        assert z ** k == 1
        assert all(z ** j != 1 for j in range(1, k))


def test_i_squared_and_zeta8():
    i = cyclo_root(4)
    assert i * i == -1
    z8 = cyclo_root(8)
    assert z8 * z8 == i
    # zeta_6 + zeta_6^-1 = 1, zeta_12^2 = zeta_6
    z6 = cyclo_root(6)
    assert z6 + 1 / z6 == 1
    assert cyclo_root(12) ** 2 == z6


def test_cyclo_root_rejects_non_divisors():
    with pytest.raises(ValueError):
        cyclo_root(5)


@settings(max_examples=60, deadline=None)
@given(cyclo, cyclo, cyclo)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if a:
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@settings(max_examples=40, deadline=None)
@given(cyclo)
def test_json_roundtrip(a):
    assert scalar_from_json(scalar_to_json(a)) == a


def test_rational_demotion():
    z = cyclo_root(3)
    v = z + 1 / z          # = -1
    assert simplify(v) == Fraction(-1) and isinstance(simplify(v), Fraction)
    assert scalar_to_json(Fraction(3, 4)) == "3/4"


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_exact_division_recovers_factor(p, q):
    if q.is_zero():
        return
    assert poly_exact_div(p * q, q) == p


def test_division_with_remainder_raises():
    t = IntPolynomial.monomial(1)
    with pytest.raises(NotDivisibleError):
        poly_exact_div(t * t + 1, t + 1)


def test_laurent_evaluation_and_pretty():
    p = IntPolynomial([24, 16, 2])
    assert p.eval(1) == 42 and p.eval(2) == 64
    assert p.pretty() == "24 + 16x + 2x^2"
    q = IntPolynomial.monomial(-2, 3)
    assert q.eval(Fraction(1, 2)) == 12


def test_sample_points_deterministic_and_generic():
    a = sample_points(6, 11, reciprocal_free)
    assert a == sample_points(6, 11, reciprocal_free)
    assert len(set(a)) == 6
    assert all(x * y != 1 and x + y != 0 for i, x in enumerate(a) for y in a[:i])


def test_sampling_failure_is_reported():
    with pytest.raises(SamplingError):
        sample_points(5, 0, lambda vals: len(vals) < 3, retries=10)
