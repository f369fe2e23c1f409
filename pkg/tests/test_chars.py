from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from asmkit import kuperberg as K
from asmkit.chars import (GL, PinEven, PinOdd, Sp, SingularEvaluationError, Weight, WeightError,
                          asm_product_formula, char_bialternant, dim_principal, make_delta,
                          ssyt_count, weyl_dim)
from asmkit.exact import NotDivisibleError, poly_det, poly_exact_div, IntPolynomial
from asmkit.asm import ClassTag
from oracles import asm_product, hook_content_gl, leibniz_det

rationals = st.fractions(min_value=Fraction(1, 30), max_value=50, max_denominator=30)


def partitions(total, max_len, max_part=None):
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions(total - first, max_len - 1, first):
            yield (first,) + rest


# ---------------------------------------------------------------- weights

def test_weight_parse_and_padding():
    w = Weight.parse("3/2,1/2")
    assert w.parts == (Fraction(3, 2), Fraction(1, 2))
    assert w.padded(3) == (3, 1, 1)
    assert Weight.parse("2,1").padded(4) == (4, 2, 0, 0)
    with pytest.raises(WeightError):
        Weight.parse("1,2")
    with pytest.raises(WeightError):
        Weight.parse("3/2,1")
    with pytest.raises(WeightError):
        Weight.parse("1/3")


def test_make_delta_examples():
    assert make_delta("delta", 2, 2).parts == (2, 2, 1, 1)
    assert make_delta("delta", 1, 0).parts == (1,)
    assert make_delta("delta", Fraction(3, 2), Fraction(1, 2)).parts == (Fraction(3, 2), Fraction(1, 2))
    assert make_delta("delta", Fraction(7, 2), Fraction(5, 2)).parts == tuple(
        Fraction(v, 2) for v in (7, 5, 5, 3, 3, 1))
    assert make_delta("delta2", 4).parts == (4, 2)
    assert make_delta("delta2", 3, 3).parts == (3, 3, 1, 1)
    assert make_delta("delta", 0).parts == ()
    with pytest.raises(WeightError):
        make_delta("delta", 2, Fraction(1, 2))


def test_half_weight_rejected_for_gl_and_sp():
    with pytest.raises(WeightError):
        weyl_dim(GL(2), Weight.parse("1/2,1/2"))
    with pytest.raises(WeightError):
        weyl_dim(Sp(4), Weight.parse("1/2"))


# ------------------------------------------------------------- dimensions

@pytest.mark.parametrize("g,w,expected", [
    (GL(4), "1,1", 6), (GL(6), "2,2,1,1", 189), (Sp(8), "1,1", 27), (GL(2), "1", 2),
    (Sp(4), "", 1), (PinOdd(5), "1", 5), (PinEven(4), "3/2,1/2", 12), (PinOdd(3), "1/2", 2),
    (PinEven(4), "1", 4),
])
def test_dimension_examples(g, w, expected):
    lam = Weight.parse(w)
    assert weyl_dim(g, lam) == expected
    assert dim_principal(g, lam) == expected


def test_gl_dims_match_tableaux_and_hooks():
    for n in range(1, 5):
        for size in range(0, 7):
            for shape in partitions(size, n):
                d = weyl_dim(GL(n), Weight.of(shape))
                assert d == ssyt_count(shape, n) == hook_content_gl(shape, n), (shape, n)


def test_referenced_dimensions_agree():
    pairs = K.referenced_dimensions(max_rank=5)
    assert pairs
    for g, lam in pairs:
        assert weyl_dim(g, lam) == dim_principal(g, lam), (g.label, str(lam))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["GL", "Sp", "PinOdd", "PinEven"]), st.integers(1, 4),
       st.lists(st.integers(0, 6), min_size=0, max_size=4), st.booleans())
def test_weyl_equals_principal(family, rank, raw, half):
    parts = sorted(raw[:rank], reverse=True)
    if half and family in ("PinOdd", "PinEven"):
        lam = Weight(tuple(2 * p + 1 for p in parts), True)
    else:
        lam = Weight(tuple(2 * p for p in parts))
    g = {"GL": GL(rank), "Sp": Sp(2 * rank), "PinOdd": PinOdd(2 * rank + 1),
         "PinEven": PinEven(2 * rank)}[family]
    d = weyl_dim(g, lam)
    assert d == dim_principal(g, lam)
    assert d.denominator == 1 and d >= 1


def test_class_count_formula_asm():
    for n in range(1, 9):
        assert K.class_count_formula(ClassTag.ASM, n) == asm_product_formula(n) == asm_product(n)


def test_asm_product_formula():
    assert [asm_product_formula(n) for n in (1, 3, 7)] == [1, 7, 218348]
    with pytest.raises(ValueError):
        asm_product_formula(0)


# -------------------------------------------------------------- characters

def test_character_examples():
    assert char_bialternant(GL(2), Weight.parse("0,0"), [2, 3]) == 1
    x1, x2 = Fraction(2, 3), Fraction(5, 7)
    assert char_bialternant(GL(2), Weight.parse("1"), [x1, x2]) == x1 + x2


@settings(max_examples=15, deadline=None)
@given(rationals, rationals)
def test_sp6_limit_slot(x, y):
    if x == y or x * y == 1 or 1 in (x, y):
        return
    v = char_bialternant(Sp(6), Weight.parse("1"), [x, y, 1], limit_slots=[2])
    assert v == x + 1 / x + y + 1 / y + 2


@settings(max_examples=20, deadline=None)
@given(st.lists(rationals, min_size=3, max_size=3, unique=True), st.randoms(use_true_random=False))
def test_gl_permutation_invariance(xs, rnd):
    lam = Weight.parse("2,1")
    base = char_bialternant(GL(3), lam, xs)
    p = list(xs)
    rnd.shuffle(p)
    assert char_bialternant(GL(3), lam, p) == base


@settings(max_examples=20, deadline=None)
@given(st.lists(rationals, min_size=2, max_size=2, unique=True), st.integers(0, 1),
       st.sampled_from(["Sp", "PinOdd"]))
def test_inversion_invariance(xs, k, family):
    if xs[0] * xs[1] == 1 or 1 in xs:
        return
    # squares keep the half-integer exponents of the odd orthogonal case rational
    xs = [v * v for v in xs]
    g = Sp(4) if family == "Sp" else PinOdd(5)
    lam = Weight.parse("2,1")
    flipped = list(xs)
    flipped[k] = 1 / flipped[k]
    assert char_bialternant(g, lam, xs) == char_bialternant(g, lam, flipped)


@settings(max_examples=20, deadline=None)
@given(st.lists(rationals, min_size=3, max_size=3, unique=True))
def test_trivial_weight_gives_one(xs):
    if any(a * b == 1 for a in xs for b in xs) or 1 in xs:
        return
    assert char_bialternant(GL(3), Weight(()), xs) == 1
    assert char_bialternant(Sp(6), Weight(()), xs) == 1


def test_character_at_ones_limit_is_dimension():
    lam = Weight.parse("2,1")
    for g in (GL(3), Sp(6), PinOdd(7)):
        assert char_bialternant(g, lam, [1, 1, 1], limit_slots=[0, 1, 2]) == weyl_dim(g, lam)


def test_singular_point_rejected():
    with pytest.raises(SingularEvaluationError):
        char_bialternant(GL(2), Weight.parse("1"), [3, 3])


def test_wrong_coordinate_count():
    with pytest.raises(ValueError):
        char_bialternant(GL(3), Weight.parse("1"), [2, 3])


# ------------------------------------------------ polynomial determinant path

@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.randoms(use_true_random=False))
def test_poly_det_matches_leibniz(n, rnd):
    def rp():
        return IntPolynomial([rnd.randint(-3, 3) for _ in range(rnd.randint(1, 3))], rnd.randint(-2, 2))
    rows = [[rp() for _ in range(n)] for _ in range(n)]
    d = poly_det(rows)
    for t in (Fraction(2), Fraction(-1, 3), Fraction(5, 2)):
        vals = [[e.eval(t) for e in r] for r in rows]
        assert d.eval(t) == leibniz_det(vals)


def test_exact_division_half_integer_quotient():
    den = IntPolynomial([2, 0, 2])          # 2 + 2t^2
    q = IntPolynomial([Fraction(1, 2), 3])
    assert poly_exact_div(q * den, den).coeffs == q.coeffs
    with pytest.raises(NotDivisibleError):
        poly_exact_div(IntPolynomial([1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
                       IntPolynomial([1, 1, 1]))
