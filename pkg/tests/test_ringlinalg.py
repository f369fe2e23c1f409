from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from asmkit.exact import IntPolynomial, cyclo_root
from asmkit.ringlinalg import (GenericMatrix, ShapeError, det, det_by_permutations, hafnian,
                               hafnian_by_matchings, perm, perm_direct, perm_ryser, pfaffian,
                               pfaffian_by_matchings)

from oracles import brute_perm, leibniz_det, matching_hf, matching_pf

rat = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def square(max_n=4):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(rat, min_size=n, max_size=n), min_size=n, max_size=n))


def skew(max_half=3):
    def build(m, vals):
        rows = [[Fraction(0)] * m for _ in range(m)]
        it = iter(vals)
        for i in range(m):
            for j in range(i + 1, m):
                rows[i][j] = next(it)
                rows[j][i] = -rows[i][j]
        return rows
    return st.integers(1, max_half).flatmap(
        lambda h: st.lists(rat, min_size=h * (2 * h - 1), max_size=h * (2 * h - 1)).map(
            lambda v: build(2 * h, v)))


@settings(max_examples=80, deadline=None)
@given(square())
def test_det_matches_leibniz(rows):
    assert det(rows) == leibniz_det(rows) == det_by_permutations(rows)


@settings(max_examples=60, deadline=None)
@given(square())
def test_permanent_ryser_direct_brute(rows):
    assert perm(rows) == perm_ryser(rows) == perm_direct(rows) == brute_perm(rows)


@settings(max_examples=60, deadline=None)
@given(skew())
def test_pfaffian_squared_is_det(rows):
    pf = pfaffian(rows)
    assert pf == pfaffian_by_matchings(rows) == matching_pf(rows)
    assert pf * pf == det(rows)


@settings(max_examples=40, deadline=None)
@given(skew())
def test_hafnian_matches_matchings(rows):
    sym = [[abs(v) for v in r] for r in rows]
    assert hafnian(sym) == hafnian_by_matchings(sym) == matching_hf(sym)


def test_empty_matrices_are_one():
    empty = GenericMatrix(0, 0, [])
    assert det(empty) == perm(empty) == pfaffian(empty) == hafnian(empty) == 1
    assert perm_direct(empty) == pfaffian_by_matchings(empty) == hafnian_by_matchings(empty) == 1


def test_polynomial_entries_use_fraction_free_elimination():
    t = IntPolynomial.monomial(1)
    one = IntPolynomial.constant(1)
    # Vandermonde in (1, t, t^2)
    m = GenericMatrix.from_rows([[one, one, one], [one, t, t * t], [one, t * t, t ** 4]])
    expect = (t - 1) * (t * t - 1) * (t * t - t)
    assert det(m) == expect


def test_cyclotomic_entries():
    i = cyclo_root(4)
    m = GenericMatrix.from_rows([[i, 1], [1, i]])
    assert det(m) == -2
    assert pfaffian([[0, i], [-i, 0]]) == i


def test_shape_errors():
    with pytest.raises(ShapeError):
        det(GenericMatrix(2, 3, [1] * 6))
    with pytest.raises(ShapeError):
        pfaffian([[0, 1], [1, 0]])        # not skew
    with pytest.raises(ShapeError):
        pfaffian([[0, 1, 2], [-1, 0, 3], [-2, -3, 0]])   # odd size
    with pytest.raises(ShapeError):
        hafnian([[0, 1], [2, 0]])


def test_two_by_two_values():
    assert pfaffian([[0, 5], [-5, 0]]) == 5
    assert hafnian([[9, 7], [7, 9]]) == 7
    assert perm([[1, 2], [3, 4]]) == 10
