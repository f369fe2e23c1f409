import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from asmkit import identities as ID
from asmkit.identities import (IDENTITY_IDS, PFAFFIAN_IDS, TABLE_ROWS, IdentityError, det_sum_expansion,
                               normalize_label, pf_sum_expansion, structured_matrix, table_row,
                               verify_identity, verify_table_row, w2_entry_split, w2_pair_entry_split)
from asmkit.ringlinalg import GenericMatrix, det, pfaffian
from oracles import leibniz_det, matching_pf

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def test_v_pq_example():
    a1, a2 = Fraction(3, 5), Fraction(-7, 2)
    m = structured_matrix("V_pq", x=[Fraction(2), Fraction(9)], a=[a1, a2], p=1, q=1)
    assert det(m) == a2 - a1


def test_w_n_row():
    x, a = Fraction(3, 7), Fraction(5, 2)
    m = structured_matrix("W_n", x=[x, Fraction(2)], a=[a, Fraction(1, 3)])
    assert [m[0, 0], m[0, 1]] == [1 + a * x, x + a]


@settings(max_examples=25, deadline=None)
@given(rationals, rationals, rationals, rationals)
def test_w2_split(x, y, a, b):
    if x == y or x * y == 1:
        return
    lhs, rhs = w2_entry_split(x, y, a, b)
    assert lhs == rhs


def test_w2_pair_split_and_misprint():
    rng = random.Random(5)
    vals = [Fraction(rng.randint(2, 30), rng.randint(2, 30)) for _ in range(6)]
    xi, xj, ai, aj, bi, bj = vals
    lhs, rhs = w2_pair_entry_split(xi, xj, ai, aj, bi, bj)
    assert lhs == rhs
    # the printed denominator (b_j - x_i) does not give an identity
    misprint = ((1 - xi * xj) * (xj - xi)
                * ((1 - ai * aj) / (1 - xi * xj) + (aj - ai) / (xj - xi))
                * ((1 - bi * bj) / (1 - xi * xj) + (bj - bi) / (bj - xi)))
    assert misprint != lhs


def test_structured_dimension_errors():
    with pytest.raises(IdentityError):
        structured_matrix("V_pq", x=[1, 2], a=[1, 2], p=2, q=1)
    with pytest.raises(IdentityError):
        structured_matrix("Vprime", alpha=[1, 2, 3], x=[2, 3], y=[4, 5])
    with pytest.raises(IdentityError):
        structured_matrix("V_alpha", alpha=[1], x=[2, 3])
    with pytest.raises(IdentityError):
        structured_matrix("nope", alpha=[1, 2], x=[2], y=[3])
    with pytest.raises(IdentityError):
        structured_matrix("V_alpha", alpha=[Fraction(1, 2)], x=[Fraction(2)])


def test_half_integer_exponents_on_squares():
    m = structured_matrix("V_alpha", alpha=[Fraction(1, 2), Fraction(3, 2)], x=[Fraction(4), Fraction(9, 4)])
    assert m[0, 0] == 2 and m[1, 1] == Fraction(27, 8)


@pytest.mark.parametrize("ident", IDENTITY_IDS)
def test_identity_all_sizes(ident):
    top = 3
    for size in range(1, top + 1):
        for seed in range(3):
            rep = verify_identity(ident, size, seed)
            assert rep.equal, rep.to_dict()


def test_identity_examples():
    rep = verify_identity("C1", 1, 0)
    x, y = rep.point["x"][0], rep.point["y"][0]
    assert rep.equal and rep.lhs == 1 / (x + y)
    assert verify_identity("D1", 2, 42).equal
    assert verify_identity("I1", 2, 7).equal
    assert verify_identity("D3", 4, 1).equal


def test_identity_errors():
    with pytest.raises(IdentityError):
        verify_identity("Z9", 1)
    with pytest.raises(IdentityError):
        verify_identity("P1", 4)
    with pytest.raises(IdentityError):
        verify_identity("D1", 5)
    assert verify_identity("d1", 1).target == "D1"


def test_reports_are_reproducible():
    a = verify_identity("P3", 2, 11).to_dict()
    b = verify_identity("P3", 2, 11).to_dict()
    assert a == b
    assert a["lhs"] == a["rhs"]


@settings(max_examples=15, deadline=None)
@given(st.lists(rationals, min_size=9, max_size=9), st.lists(rationals, min_size=9, max_size=9))
def test_det_sum_expansion(xs, ys):
    X = GenericMatrix.from_rows([xs[0:3], xs[3:6], xs[6:9]])
    Y = GenericMatrix.from_rows([ys[0:3], ys[3:6], ys[6:9]])
    S = [[xs[3 * i + j] + ys[3 * i + j] for j in range(3)] for i in range(3)]
    assert det_sum_expansion(X, Y) == leibniz_det(S)


def _skew(vals, n):
    rows = [[Fraction(0)] * n for _ in range(n)]
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            rows[i][j] = vals[k]
            rows[j][i] = -vals[k]
            k += 1
    return rows


@settings(max_examples=15, deadline=None)
@given(st.lists(rationals, min_size=6, max_size=6), st.lists(rationals, min_size=6, max_size=6))
def test_pf_sum_expansion(xs, ys):
    X, Y = _skew(xs, 4), _skew(ys, 4)
    S = [[X[i][j] + Y[i][j] for j in range(4)] for i in range(4)]
    got = pf_sum_expansion(GenericMatrix.from_rows(X), GenericMatrix.from_rows(Y))
    assert got == matching_pf(S) == pfaffian(GenericMatrix.from_rows(S))


# --------------------------------------------------------------------- tables

def test_table_sizes():
    counts = {}
    for r in TABLE_ROWS:
        counts[r.table] = counts.get(r.table, 0) + 1
    assert counts == {"T1": 15, "T2": 12, "T3": 9, "T4": 3}


def test_table_examples():
    r = table_row("T1", "A(n;x,y;ζ₄)")
    assert r.identity == "B1"
    assert verify_table_row("T1", "A(n;x,y;ζ4)", 2, 0).equal
    rep = verify_table_row("T2", "A_V(2n+1;x,y;ζ6)", 2, 0)
    assert rep.equal and rep.notes["identity"] == "D2"
    rep = verify_table_row("T4", "A_QT^(1)(4n;x;zeta_12)", 1, 0)
    assert rep.equal and rep.notes["identity"] == "P1"
    rep = verify_table_row("T2", "A(n;x,y;ζ6)", 2, 3)
    assert rep.notes["identity"] == "D1" and rep.equal


def test_label_normalization():
    assert normalize_label("A_{QT}^{(1)}(4n; x; \\zeta_{12})") == "A_QT^(1)(4n;x;ζ12)"
    assert normalize_label("A_VHS^(2)(4n+1;x,y;ζ₄)") == "A_VH^(2)(4n+1;x,y;ζ4)"
    with pytest.raises(IdentityError):
        table_row("T1", "A_XYZ(n)")
    with pytest.raises(IdentityError):
        table_row("T9", "A(n;x,y;ζ4)")


@pytest.mark.parametrize("row", TABLE_ROWS, ids=lambda r: f"{r.table}:{r.label}")
def test_every_table_row(row):
    for seed in range(2):
        rep = verify_table_row(row.table, row.label, 2, seed)
        assert rep.equal, rep.to_dict()


def test_pfaffian_ids_subset():
    assert set(PFAFFIAN_IDS) <= set(IDENTITY_IDS)
    assert len(IDENTITY_IDS) == 17
