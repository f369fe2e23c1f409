import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from asmkit import kuperberg as K
from asmkit.asm import AdmissibilityError, ClassTag, x_enumeration
from asmkit.exact import cyclo_root, reciprocal_free, sample_points
from asmkit.ringlinalg import perm

I = cyclo_root(4)
Z6 = cyclo_root(6)


def test_sigma():
    assert K.sigma(Fraction(2)) == Fraction(3, 2)
    assert K.sigma(I) == 2 * I
    assert K.sigma(Fraction(1)) == 0
    with pytest.raises(K.PoleError):
        K.sigma(Fraction(0))


def test_kernel_and_prefactor_small():
    x, y = Fraction(2), Fraction(5, 3)
    a = Z6
    m = K.kernel_matrix("M", [x], [y], a=a)
    assert m[0, 0] * K.sigma(a * x / y) * K.sigma(a * y / x) == 1
    assert K.prefactor("F", [x], [y], a=a) == K.sigma(a * x / y) * K.sigma(a * y / x)
    x1, x2 = Fraction(2), Fraction(7, 3)
    q = K.kernel_matrix("M_QT", [x1, x2], a=a, k=1)
    assert q[0, 1] == K.sigma(x2 / x1) / (K.sigma(a * x2 / x1) * K.sigma(a * x1 / x2))
    fqt = K.prefactor("F_QT", [x1, x2], a=a)
    assert fqt == K.sigma(a * x2 / x1) * K.sigma(a * x1 / x2) / K.sigma(x2 / x1)
    fv = K.prefactor("F_V", [x], [y], a=a)
    assert fv == (K.sigma(a * x / y) * K.sigma(a * y / x) * K.sigma(a * x * y) * K.sigma(a / (x * y))
                  / (K.sigma(1 / (x * x)) * K.sigma(y * y)))


@pytest.mark.parametrize("kind,extra", [("M_QT", {"k": 1}), ("M_QT", {"k": 2}), ("M_OD", {}),
                                        ("M_OO", {"b": Fraction(3, 7), "c": Fraction(2, 5)}),
                                        ("M_UO1", {}), ("M_UO2", {"c": I})])
def test_pfaffian_kernels_are_skew(kind, extra):
    x = sample_points(4, 3, reciprocal_free)
    m = K.kernel_matrix(kind, x, a=Z6, **extra)
    for i in range(4):
        assert m[i, i] == 0
        for j in range(4):
            assert m[i, j] == -m[j, i]


def test_pole_errors():
    with pytest.raises(K.PoleError, match=r"M\[1,1\]"):
        K.kernel_matrix("M", [Fraction(2)], [Fraction(2)], a=Fraction(1))
    case = K.PartitionFunctionCase("A", 2, a=Z6)
    with pytest.raises(K.PoleError, match="character_side"):
        K.partition_function(case, [Fraction(2), Fraction(2)], [Fraction(3), Fraction(5)])


def test_case_a_n1_is_one():
    for a in (Z6, cyclo_root(8), Fraction(5, 2)):
        case = K.PartitionFunctionCase("A", 1, a=a)
        assert K.partition_function(case, [Fraction(3, 4)], [Fraction(5, 7)]) == 1


def test_character_side_examples():
    x = [Fraction(2), Fraction(3, 5)]
    y = [Fraction(7, 4), Fraction(4, 9)]
    lhs = K.character_side("A", x, y, root=4)
    rows = [[1 / (xi * xi + yj * yj) for yj in y] for xi in x]
    expected = Fraction(1, 4)
    for v in x + y:
        expected /= v
    for xi in x:
        for yj in y:
            expected *= xi * xi + yj * yj
    assert lhs == expected * perm(rows)
    assert K.character_side("A", [Fraction(5, 3)], [Fraction(2, 7)], root=8) == 1
    assert K.character_side("QT1", [Fraction(2), Fraction(3, 7)], root=6) == 1
    with pytest.raises(K.UnsupportedCaseError):
        K.character_side("OD", [Fraction(2), Fraction(3)], root=8)


def test_od_n1_is_one():
    x = [Fraction(2, 3), Fraction(7, 5)]
    case = K.PartitionFunctionCase("OD", 1, a=Z6)
    assert K.partition_function(case, x) == 1 == K.character_side("OD", x, root=6)


@pytest.mark.parametrize("case,root", K.theorem_rows())
def test_partition_function_rows(case, root):
    for n in (1, 2):
        chk = K.verify_partition(case, root, n, seed=3)
        assert chk.equal, chk.to_dict()


@pytest.mark.parametrize("case", ["A", "HT2", "OD"])
def test_partition_function_rows_n3(case):
    for root in (4, 6, 8, 12):
        if K.supports(case, root):
            chk = K.verify_partition(case, root, 3, seed=1)
            assert chk.equal, chk.to_dict()


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_case_a_symmetric_under_simultaneous_permutation(seed):
    rng = random.Random(seed)
    pts = sample_points(6, seed, reciprocal_free)
    x, y = pts[:3], pts[3:]
    case = K.PartitionFunctionCase("A", 3, a=Z6)
    base = K.partition_function(case, x, y)
    px, py = list(x), list(y)
    rng.shuffle(px)
    rng.shuffle(py)
    assert K.partition_function(case, px, py) == base


def test_specialized_enumeration_examples():
    from math import factorial
    for n in range(1, 7):
        assert K.specialized_enumeration("ASM", 0, n) == factorial(n)
        assert K.specialized_enumeration("ASM", 2, n) == 2 ** (n * (n - 1) // 2)
    assert K.specialized_enumeration("ASM", 1, 3) == 7
    assert K.specialized_enumeration("VS", 1, 5) == 3
    assert K.specialized_enumeration("VHS", 1, 5) == 1
    assert K.specialized_enumeration("UASM", 1, 2) == 2
    with pytest.raises(K.UnsupportedCaseError):
        K.specialized_enumeration("VHS", 3, 5)
    with pytest.raises(K.UnsupportedCaseError):
        K.specialized_enumeration("HTS", 1, 5)
    with pytest.raises(K.UnsupportedCaseError):
        K.specialized_enumeration("ASM", 4, 3)
    with pytest.raises(AdmissibilityError):
        K.specialized_enumeration("VOS", 1, 13)


def test_class_count_formula_examples():
    assert K.class_count_formula("ASM", 3) == 7
    assert K.class_count_formula("HTS", 2) == 2
    assert K.class_count_formula("VS", 5) == 3
    assert K.class_count_formula("VOS", 9) > 0
    with pytest.raises(AdmissibilityError, match="8n\\+5"):
        K.class_count_formula("VOS", 13)
    with pytest.raises(K.UnsupportedCaseError):
        K.class_count_formula("TS", 5)


def test_conjectured_counts():
    assert K.is_conjectural("HTS", 5) and K.is_conjectural("DAS", 3)
    assert not K.is_conjectural("HTS", 4)
    assert [K.conjectured_count("HTS", o) for o in (1, 3, 5, 7)] == [1, 3, 25, 588]
    assert [K.conjectured_count("DAS", o) for o in (1, 3, 5, 7)] == [1, 3, 15, 126]
    with pytest.raises(K.UnsupportedCaseError):
        K.conjectured_count("HTS", 4)


@pytest.mark.parametrize("tag,order", [("ASM", 4), ("HTS", 4), ("HTS", 6), ("VS", 5), ("VS", 7),
                                       ("VHS", 7), ("QTS", 8), ("OS", 6), ("OOS", 8), ("UASM", 6),
                                       ("UUASM", 8), ("VHPASM", 10)])
def test_specializations_match_brute_force(tag, order):
    poly = x_enumeration(tag, order)
    for xv in K.coverage(tag):
        assert K.specialized_enumeration(tag, xv, order) == poly.eval(xv), (tag, order, xv)


def test_coverage():
    assert K.coverage("ASM") == (0, 1, 2, 3)
    assert 3 not in K.coverage("VHS")
    assert 3 not in K.coverage("QTS")
    assert K.coverage("TS") == ()
