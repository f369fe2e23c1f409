"""Six-vertex partition functions for ASM classes and their character forms.

Each partition function is a sigma-power times a product prefactor times a
determinant (n x n) or Pfaffian (2n x 2n) of a kernel matrix, evaluated in
Q(zeta_24).  Next to it sits the closed form at a = zeta_4, zeta_6, zeta_8,
zeta_12, written with products, permanents, Hafnians and classical group
characters.  At all-ones spectral parameters only the closed form is
regular, and it yields the x-enumerations through Kuperberg's
specialization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import chars
from .asm import ClassTag, check_admissible, is_admissible
from .chars import GL, PinEven, PinOdd, Sp, Weight, char_bialternant, make_delta, weyl_dim
from .exact import Cyclo24, as_fraction, cyclo_root, simplify
from .ringlinalg import GenericMatrix, det, hafnian, perm, pfaffian


class PoleError(ZeroDivisionError):
    pass


class UnsupportedCaseError(ValueError):
    pass


ROOTS = (4, 6, 8, 12)
XVAL_TO_ROOT = {0: 4, 1: 6, 2: 8, 3: 12}
I = cyclo_root(4)


def sigma(t):
    """sigma(t) = t - 1/t."""
    if not t:
        raise PoleError("sigma has a pole at t = 0")
    return simplify(t - 1 / t)


def _inv(v, what: str):
    if not v:
        raise PoleError(f"zero denominator: {what}")
    return 1 / v


def _to_scalar(v):
    if isinstance(v, (Cyclo24, Fraction)):
        return v
    return as_fraction(v)


# ------------------------------------------------------------------ kernels

DET_KINDS = ("M", "M_HT", "M_U", "M_UU")
PF_KINDS = ("M_QT", "M_OD", "M_OO", "M_UO1", "M_UO2")


def kernel_matrix(kind: str, x: Sequence, y: Sequence | None = None, a=None, b=None,
                  c=None, k: int | None = None) -> GenericMatrix:
    """Entry-exact kernel matrix; raises PoleError naming the entry."""
    x = [_to_scalar(v) for v in x]
    s = sigma
    if kind in DET_KINDS:
        if y is None or len(y) != len(x):
            raise ValueError(f"{kind} needs y of the same length as x")
        y = [_to_scalar(v) for v in y]
        n = len(x)

        def entry(i, j):
            xi, yj = x[i], y[j]
            where = f"{kind}[{i + 1},{j + 1}]"
            if kind == "M":
                return _inv(s(a * xi / yj) * s(a * yj / xi), f"{where} sigma(a x/y) sigma(a y/x)")
            if kind == "M_HT":
                return (_inv(s(a * xi / yj), f"{where} sigma(a x/y)")
                        + _inv(s(a * yj / xi), f"{where} sigma(a y/x)"))
            if kind == "M_U":
                return (_inv(s(a * xi / yj) * s(a * yj / xi), f"{where} sigma(a x/y) sigma(a y/x)")
                        - _inv(s(a * xi * yj) * s(a / (xi * yj)), f"{where} sigma(a x y) sigma(a/x y)"))
            # M_UU
            return (s(b / yj) * s(c * xi) * _inv(s(a * xi / yj), f"{where} sigma(a x/y)")
                    - s(b / yj) * s(c / xi) * _inv(s(a / (xi * yj)), f"{where} sigma(a/x y)")
                    - s(b * yj) * s(c * xi) * _inv(s(a * xi * yj), f"{where} sigma(a x y)")
                    + s(b * yj) * s(c / xi) * _inv(s(a * yj / xi), f"{where} sigma(a y/x)"))

        return GenericMatrix.build(n, n, entry)
    if kind not in PF_KINDS:
        raise ValueError(f"unknown kernel {kind!r}")
    if len(x) % 2:
        raise ValueError(f"{kind} needs an even number of variables")
    m = len(x)

    def pentry(i, j):
        if i == j:
            return Fraction(0)
        xi, xj = x[i], x[j]
        where = f"{kind}[{i + 1},{j + 1}]"
        if kind == "M_QT":
            return s(xj ** k / xi ** k) * _inv(s(a * xj / xi) * s(a * xi / xj),
                                                f"{where} sigma(a xj/xi) sigma(a xi/xj)")
        if kind == "M_OD":
            return s(xj / xi) * _inv(s(a * xi * xj) * s(a / (xi * xj)),
                                     f"{where} sigma(a xi xj) sigma(a/xi xj)")
        if kind == "M_OO":
            return s(xj / xi) * (c * c * _inv(s(a * xi * xj), f"{where} sigma(a xi xj)")
                                 + b * b * _inv(s(a / (xi * xj)), f"{where} sigma(a/xi xj)"))
        pre = s(xj / xi) * s(xi * xj)
        if kind == "M_UO1":
            return pre * (_inv(s(a * xi * xj) * s(a / (xi * xj)), f"{where} sigma(a xi xj) sigma(a/xi xj)")
                          - _inv(s(a * xj / xi) * s(a * xi / xj), f"{where} sigma(a xj/xi) sigma(a xi/xj)"))
        # M_UO2; the third term's denominator is sigma(a x_j/x_i), which keeps the matrix skew
        return pre * (s(c * xi) * s(c * xj) * _inv(s(a * xi * xj), f"{where} sigma(a xi xj)")
                      - s(c * xi) * s(c / xj) * _inv(s(a * xi / xj), f"{where} sigma(a xi/xj)")
                      - s(c / xi) * s(c * xj) * _inv(s(a * xj / xi), f"{where} sigma(a xj/xi)")
                      + s(c / xi) * s(c / xj) * _inv(s(a / (xi * xj)), f"{where} sigma(a/xi xj)"))

    return GenericMatrix.build(m, m, pentry)


# --------------------------------------------------------------- prefactors


def _prod(vals, start=Fraction(1)):
    out = start
    for v in vals:
        out = out * v
    return out


def prefactor(kind: str, x: Sequence, y: Sequence | None = None, a=None):
    x = [_to_scalar(v) for v in x]
    s = sigma
    if kind in ("F", "F_V"):
        y = [_to_scalar(v) for v in y]
        n = len(x)
        num = _prod(s(a * x[i] / y[j]) * s(a * y[j] / x[i]) for i in range(n) for j in range(n))
        den = _prod(s(x[j] / x[i]) * s(y[i] / y[j]) for i in range(n) for j in range(i + 1, n))
        if kind == "F_V":
            num = num * _prod(s(a * x[i] * y[j]) * s(a / (x[i] * y[j]))
                              for i in range(n) for j in range(n))
            den = den * _prod(s(1 / (x[i] * x[j])) * s(y[i] * y[j])
                              for i in range(n) for j in range(i, n))
        return simplify(num * _inv(den, f"{kind} denominator"))
    m = len(x)
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    if kind == "F_QT":
        num = _prod(s(a * x[j] / x[i]) * s(a * x[i] / x[j]) for i, j in pairs)
        den = _prod(s(x[j] / x[i]) for i, j in pairs)
    elif kind == "F_OD":
        num = _prod(s(a * x[i] * x[j]) * s(a / (x[i] * x[j])) for i, j in pairs)
        den = _prod(s(x[j] / x[i]) for i, j in pairs)
    elif kind == "F_UO":
        # first factor read as sigma(a x_i/x_j)
        num = _prod(s(a * x[i] / x[j]) * s(a * x[j] / x[i]) * s(a * x[i] * x[j]) * s(a / (x[i] * x[j]))
                    for i, j in pairs)
        den = _prod(s(x[j] / x[i]) for i, j in pairs) * _prod(
            s(x[i] * x[j]) for i in range(m) for j in range(i, m))
    else:
        raise ValueError(f"unknown prefactor {kind!r}")
    return simplify(num * _inv(den, f"{kind} denominator"))


# -------------------------------------------------------- partition functions

DET_CASES = ("A", "HT2", "V", "UU2", "VH2_4n1", "VH2_4n3", "VHP2")
PF_CASES = ("QT1", "QT2", "OD", "OO2", "UO1", "UO2", "VO2_8n1", "VO2_8n3")
CASES = DET_CASES + PF_CASES


@dataclass(frozen=True)
class PartitionFunctionCase:
    case: str
    n: int
    a: object = None
    b: object = None
    c: object = None

    def __post_init__(self):
        if self.case not in CASES:
            raise ValueError(f"unknown case {self.case!r}; expected one of {', '.join(CASES)}")
        if self.n < 0:
            raise ValueError("n must be >= 0")

    @property
    def is_pfaffian(self) -> bool:
        return self.case in PF_CASES

    def nvars(self) -> int:
        return 2 * self.n if self.is_pfaffian else self.n


def _spow(v, e: int):
    v = simplify(v)
    if e >= 0:
        return v ** e
    if not v:
        raise PoleError("negative power of zero")
    return (1 / v) ** (-e)


def partition_function(case: PartitionFunctionCase, x: Sequence, y: Sequence | None = None):
    """Assemble sigma powers, prefactor and det/Pf exactly."""
    n = case.n
    a, b, c = case.a, case.b, case.c
    if len(x) != case.nvars():
        raise ValueError(f"{case.case} at n={n} needs {case.nvars()} x-variables, got {len(x)}")
    if not case.is_pfaffian and (y is None or len(y) != n):
        raise ValueError(f"{case.case} needs y with {n} entries")
    try:
        return simplify(_assemble(case.case, n, list(x), y and list(y), a, b, c))
    except PoleError as exc:
        raise PoleError(f"{exc}; the determinant/Pfaffian form is singular here, "
                        "use character_side for such points") from None


def _a2_ratio(a, b):
    """sigma(a^2)/sigma(b/a), continued to b = a with a^2 = -1.

    There both factors vanish; the limit a -> b of the quotient is
    -(a^2 + a^-2) = 2.
    """
    num = sigma(a * a)
    den = sigma(b / a)
    if not den:
        if not num and b == a:
            return simplify(-(a * a + 1 / (a * a)))
        raise PoleError("sigma(b/a) = 0")
    return num / den


def _assemble(cs, n, x, y, a, b, c):
    s = sigma
    if cs == "A":
        return _spow(s(a), -n * n + n) * prefactor("F", x, y, a) * det(kernel_matrix("M", x, y, a))
    if cs == "HT2":
        return _spow(s(a), -n * n) * prefactor("F", x, y, a) * det(kernel_matrix("M_HT", x, y, a))
    if cs == "V":
        return _spow(s(a), -2 * n * n + 2 * n) * prefactor("F_V", x, y, a) * det(kernel_matrix("M_U", x, y, a))
    if cs in ("UU2", "VH2_4n1", "VH2_4n3", "VHP2"):
        if cs == "UU2":
            bb, cc = b, c
            pre = _spow(_a2_ratio(a, b), n) * _spow(_a2_ratio(a, c), n)
        else:
            bb, cc = {"VH2_4n1": (a, a), "VH2_4n3": (1 / a, 1 / a), "VHP2": (a, 1 / a)}[cs]
            pre = Fraction(-1) ** n if cs == "VHP2" else Fraction(1)
        return (pre * _spow(s(a), -2 * n * n - n) * prefactor("F_V", x, y, a)
                * det(kernel_matrix("M_UU", x, y, a, bb, cc)))
    if cs in ("QT1", "QT2"):
        k = 1 if cs == "QT1" else 2
        return (_spow(s(a), -2 * n * n + 2 * n) * prefactor("F_QT", x, a=a)
                * pfaffian(kernel_matrix("M_QT", x, a=a, k=k)))
    if cs == "OD":
        return _spow(s(a), -2 * n * n + 2 * n) * prefactor("F_OD", x, a=a) * pfaffian(kernel_matrix("M_OD", x, a=a))
    if cs == "OO2":
        return (_spow(c, -2 * n) * _spow(s(a), -2 * n * n + n) * prefactor("F_OD", x, a=a)
                * pfaffian(kernel_matrix("M_OO", x, a=a, b=b, c=c)))
    if cs == "UO1":
        return _spow(s(a), -4 * n * n + 4 * n) * prefactor("F_UO", x, a=a) * pfaffian(kernel_matrix("M_UO1", x, a=a))
    if cs == "UO2":
        pre = _spow(_a2_ratio(a, c), 2 * n)
        return (pre * _spow(s(a), -4 * n * n + n) * prefactor("F_UO", x, a=a)
                * pfaffian(kernel_matrix("M_UO2", x, a=a, c=c)))
    # VO2 cases
    cc = a if cs == "VO2_8n1" else 1 / a
    return (_spow(s(a), -4 * n * n + n) * prefactor("F_UO", x, a=a)
            * pfaffian(kernel_matrix("M_UO2", x, a=a, c=cc)))


# ------------------------------------------------------------ character side


_DIM_LOG: set | None = None


def _dim(g, lam):
    if _DIM_LOG is not None:
        _DIM_LOG.add((g, lam))
    return weyl_dim(g, lam)


class _Ctx:
    """Evaluation context: a point, or all ones (dimensions)."""

    def __init__(self, x, y, ones: bool):
        self.x = [as_fraction(v) for v in x]
        self.y = None if y is None else [as_fraction(v) for v in y]
        self.ones = ones

    def ch(self, g, lam: Weight, coords: Sequence, roots: Sequence | None = None,
           limit_slots: Sequence[int] = ()):
        if self.ones:
            return _dim(g, lam)
        return char_bialternant(g, lam, coords, limit_slots=limit_slots, roots=roots)


def _pw(v, e):
    return v ** e if e >= 0 else (1 / v) ** (-e)


def _mono(vs, e):
    return _prod(_pw(v, e) for v in vs)


def _two(e):
    return Fraction(2) ** e if e >= 0 else Fraction(1, 2 ** (-e))


def _three(e):
    return Fraction(3) ** e if e >= 0 else Fraction(1, 3 ** (-e))


def _sq(vs):
    return [v * v for v in vs]


def _d(r, s=None):
    return make_delta("delta", r, s)


def _d2(r, s=None):
    return make_delta("delta2", r, s)


def _cross(x, y, f):
    return _prod(f(xi, yj) for xi in x for yj in y)


def _pairs(x, f):
    return _prod(f(x[i], x[j]) for i in range(len(x)) for j in range(i + 1, len(x)))


def _xy2(xi, yj):
    return xi * xi + yj * yj


def _xy2b(xi, yj):
    return (xi * xi + yj * yj) * (1 + xi * xi * yj * yj)


def _onexy(xi, yj):
    return 1 + xi * xi * yj * yj


def _row_A(root, n, c: _Ctx):
    x, y = c.x, c.y
    if root == 4:
        mat = GenericMatrix.build(n, n, lambda i, j: 1 / _xy2(x[i], y[j]))
        return (_two(-n * n + n) * _mono(x, -n + 1) * _mono(y, -n + 1)
                * _cross(x, y, _xy2) * perm(mat))
    if root == 6:
        return (_three(-n * (n - 1) // 2) * _mono(x, -n + 1) * _mono(y, -n + 1)
                * c.ch(GL(2 * n), _d(n - 1, n - 1), _sq(x) + _sq(y)))
    if root == 8:
        return (_two(-n * (n - 1) // 2) * _mono(x, -n + 1) * _mono(y, -n + 1)
                * _pairs(x, _xy2) * _pairs(y, _xy2))
    p, q = n // 2, (n - 1) // 2
    x4 = [v ** 4 for v in x]
    return (_mono(x, -2 * n + 2) * c.ch(GL(n), _d(p, p - 1), x4)
            * c.ch(GL(n), _d(q, q), x4))


def _row_HT2(root, n, c: _Ctx):
    x, y = c.x, c.y
    if root == 4:
        return _two(-n * n + n) * _mono(x, -n) * _mono(y, -n) * _cross(x, y, _xy2)
    if root == 6:
        return (_three(-n * (n - 1) // 2) * _mono(x, -n) * _mono(y, -n)
                * c.ch(GL(2 * n), _d(n, n - 1), _sq(x) + _sq(y)))
    if root == 8:
        return (_two(-n * (n - 1) // 2 + n) * _mono(x, -2 * n)
                * c.ch(GL(n), _d2(n, n - 2), _sq(x)) * c.ch(GL(n), _d2(n - 1, n - 1), _sq(x)))
    raise UnsupportedCaseError


def _row_V(root, n, c: _Ctx):
    x, y = c.x, c.y
    if root == 4:
        mat = GenericMatrix.build(n, n, lambda i, j: 1 / _xy2b(x[i], y[j]))
        return (_two(-2 * n * n + 2 * n) * _mono(x, -2 * n + 2) * _mono(y, -2 * n + 2)
                * _cross(x, y, _xy2b) * perm(mat))
    if root == 6:
        return _three(-n * (n - 1)) * c.ch(Sp(4 * n), _d(n - 1, n - 1), _sq(x) + _sq(y))
    if root == 8:
        return (_two(-n * (n - 1)) * _mono(x, -2 * n + 2) * _mono(y, -2 * n + 2)
                * _pairs(x, _xy2b) * _pairs(y, _xy2b))
    x4 = [v ** 4 for v in x]
    x2 = _sq(x)
    lam1 = _d(Fraction(n, 2), Fraction(n, 2) - 1)
    lam2 = _d(Fraction(n - 1, 2), Fraction(n - 1, 2))
    return (1 / _prod(v * v + 1 / (v * v) for v in x)
            * c.ch(PinOdd(2 * n + 1), lam1, x4, roots=x2)
            * c.ch(PinOdd(2 * n + 1), lam2, x4, roots=x2))


def _uu_zeta4(n, c, e2):
    x, y = c.x, c.y
    return _two(e2) * _mono(x, -2 * n) * _mono(y, -2 * n) * _cross(x, y, _xy2b)


def _row_VH2_4n1(root, n, c: _Ctx):
    x, y = c.x, c.y
    if root == 4:
        return _uu_zeta4(n, c, -2 * n * n)
    if root == 6:
        return (_three(-n * n) / _prod((v + 1 / v) for v in x + y)
                * c.ch(PinEven(4 * n), _d(n + Fraction(1, 2), n - Fraction(1, 2)), _sq(x) + _sq(y),
                       roots=x + y))
    if root == 8:
        return (_two(-n * (n - 1)) / _prod((v + 1 / v) ** 2 for v in x)
                * c.ch(PinEven(2 * n), _d2(n + Fraction(1, 2), n - Fraction(3, 2)), _sq(x), roots=x)
                * c.ch(PinEven(2 * n), _d2(n - Fraction(1, 2), n - Fraction(1, 2)), _sq(x), roots=x))
    raise UnsupportedCaseError


def _row_VH2_4n3(root, n, c: _Ctx):
    x, y = c.x, c.y
    if root == 4:
        return _uu_zeta4(n, c, -2 * n * n)
    if root == 6:
        return (_three(-n * n) * c.ch(Sp(4 * n + 2), _d(n, n - 1), _sq(x) + _sq(y) + [Fraction(1)],
                                      limit_slots=(2 * n,)))
    if root == 8:
        # odd pin group, as for UU2; the even-rank reading fails at n = 1
        return (_two(-n * n + n) * c.ch(PinOdd(2 * n + 1), _d2(n, n - 2), _sq(x))
                * c.ch(PinOdd(2 * n + 1), _d2(n - 1, n - 1), _sq(x)))
    raise UnsupportedCaseError


def _row_UU2(root, n, c: _Ctx):
    x, y = c.x, c.y
    if root == 4:
        return _uu_zeta4(n, c, -2 * n * n + 2 * n)
    if root == 6:
        return _three(-n * n + n) * c.ch(PinOdd(4 * n + 1), _d(n, n - 1), _sq(x) + _sq(y))
    if root == 8:
        return (_two(-n * n + 2 * n) * c.ch(PinOdd(2 * n + 1), _d2(n, n - 2), _sq(x))
                * c.ch(PinOdd(2 * n + 1), _d2(n - 1, n - 1), _sq(x)))
    raise UnsupportedCaseError


def _row_VHP2(root, n, c: _Ctx):
    x, y = c.x, c.y
    if root == 4:
        return _uu_zeta4(n, c, -2 * n * n)
    if root == 6:
        return (_three(-n * n) * _prod(v * v + 1 + 1 / (v * v) for v in y)
                * c.ch(Sp(4 * n), _d(n - 1, n - 1), _sq(x) + _sq(y)))
    if root == 8:
        return (_two(-n * n + n)
                * c.ch(GL(2 * n), _d2(2 * n - 2, 2 * n - 2), _sq(x) + [1 / (v * v) for v in x]))
    raise UnsupportedCaseError


def _row_QT1(root, n, c: _Ctx):
    x = c.x
    m = 2 * n
    if root == 4:
        mat = GenericMatrix.build(m, m, lambda i, j: 1 / _xy2(x[i], x[j]))
        return (_two(-2 * n * n + 2 * n) * _mono(x, -2 * n + 2) * _pairs(x, _xy2)
                * hafnian(mat, check=False))
    if root == 6:
        return (_three(-n * n + n) * _mono(x, -2 * n + 2)
                * c.ch(GL(m), _d(n - 1, n - 1), _sq(x)) ** 2)
    if root == 8:
        return _two(-n * n + n) * _mono(x, -2 * n + 2) * c.ch(GL(m), _d2(2 * n - 2, 2 * n - 2), _sq(x))
    raise UnsupportedCaseError


def _row_QT2(root, n, c: _Ctx):
    x = c.x
    m = 2 * n
    if root == 4:
        return _two(-2 * n * n + 2 * n) * _mono(x, -2 * n + 1) * _pairs(x, _xy2)
    if root == 6:
        return (_three(-n * n + n) * _mono(x, -2 * n + 1) * c.ch(GL(m), _d(n - 1, n - 1), _sq(x))
                * c.ch(GL(m), _d(n, n - 1), _sq(x)))
    if root == 8:
        return _two(-n * n + n) * _mono(x, -2 * n + 1) * _pairs(x, _xy2)
    raise UnsupportedCaseError


def _row_OD(root, n, c: _Ctx):
    x = c.x
    m = 2 * n
    if root == 4:
        mat = GenericMatrix.build(m, m, lambda i, j: 1 / _onexy(x[i], x[j]))
        return (_two(-2 * n * n + 2 * n) * _mono(x, -2 * n + 2) * _pairs(x, _onexy)
                * hafnian(mat, check=False))
    if root == 6:
        return _three(-n * n + n) * c.ch(Sp(4 * n), _d(n - 1, n - 1), _sq(x))
    raise UnsupportedCaseError


def _row_OO2(root, n, c: _Ctx):
    x = c.x
    if root == 4:
        return _two(-2 * n * n + 2 * n) * _mono(x, -2 * n + 1) * _pairs(x, _onexy)
    raise UnsupportedCaseError


def _row_UO1(root, n, c: _Ctx):
    x = c.x
    m = 2 * n
    if root == 4:
        mat = GenericMatrix.build(m, m, lambda i, j: 1 / _xy2b(x[i], x[j]))
        return (_two(-4 * n * n + 4 * n) * _mono(x, -4 * n + 4) * _pairs(x, _xy2b)
                * hafnian(mat, check=False))
    if root == 6:
        return _three(-2 * n * n + 2 * n) * c.ch(Sp(4 * n), _d(n - 1, n - 1), _sq(x)) ** 2
    raise UnsupportedCaseError


def _row_UO2(root, n, c: _Ctx):
    x = c.x
    if root == 4:
        return _two(-4 * n * n + 4 * n) * _mono(x, -4 * n + 2) * _pairs(x, _xy2b)
    if root == 6:
        return (_three(-2 * n * n + 2 * n) * c.ch(Sp(4 * n), _d(n - 1, n - 1), _sq(x))
                * c.ch(PinOdd(4 * n + 1), _d(n, n - 1), _sq(x)))
    raise UnsupportedCaseError


def _row_VO2_8n1(root, n, c: _Ctx):
    x = c.x
    if root == 4:
        return _two(-4 * n * n + 2 * n) * _mono(x, -4 * n + 2) * _pairs(x, _xy2b)
    if root == 6:
        return (_three(-n * (2 * n - 1)) / _prod(v + 1 / v for v in x)
                * c.ch(Sp(4 * n), _d(n - 1, n - 1), _sq(x))
                * c.ch(PinEven(4 * n), _d(n + Fraction(1, 2), n - Fraction(1, 2)), _sq(x), roots=x))
    raise UnsupportedCaseError


def _row_VO2_8n3(root, n, c: _Ctx):
    x = c.x
    if root == 4:
        return _two(-4 * n * n + 2 * n) * _mono(x, -4 * n + 2) * _pairs(x, _xy2b)
    if root == 6:
        return (_three(-2 * n * n + n) * c.ch(Sp(4 * n), _d(n - 1, n - 1), _sq(x))
                * c.ch(Sp(4 * n + 2), _d(n, n - 1), _sq(x) + [Fraction(1)], limit_slots=(2 * n,)))
    raise UnsupportedCaseError


_ROWS: dict[str, tuple[Callable, tuple[int, ...]]] = {
    "A": (_row_A, (4, 6, 8, 12)),
    "HT2": (_row_HT2, (4, 6, 8)),
    "V": (_row_V, (4, 6, 8, 12)),
    "VH2_4n1": (_row_VH2_4n1, (4, 6, 8)),
    "VH2_4n3": (_row_VH2_4n3, (4, 6, 8)),
    "UU2": (_row_UU2, (4, 6, 8)),
    "VHP2": (_row_VHP2, (4, 6, 8)),
    "QT1": (_row_QT1, (4, 6, 8)),
    "QT2": (_row_QT2, (4, 6, 8)),
    "OD": (_row_OD, (4, 6)),
    "OO2": (_row_OO2, (4,)),
    "UO1": (_row_UO1, (4, 6)),
    "UO2": (_row_UO2, (4, 6)),
    "VO2_8n1": (_row_VO2_8n1, (4, 6)),
    "VO2_8n3": (_row_VO2_8n3, (4, 6)),
}

# rows whose closed form is stated with y equal to x
SAME_XY = {("A", 12), ("HT2", 8), ("V", 12), ("VH2_4n1", 8), ("VH2_4n3", 8),
           ("UU2", 8), ("VHP2", 8)}


def theorem_rows() -> list[tuple[str, int]]:
    """Every (case, root order) pair with a closed form."""
    return [(cs, r) for cs in CASES for r in _ROWS[cs][1]]


def case_parameters(case: str, root: int, b=None) -> dict:
    """The a, b, c values under which a closed form is stated."""
    a = cyclo_root(root)
    if case == "UU2":
        return {"a": a, "b": I, "c": I}
    if case == "UO2":
        return {"a": a, "c": I}
    if case == "OO2":
        return {"a": a, "b": b, "c": b}
    return {"a": a}


def supports(case: str, root: int) -> bool:
    return case in _ROWS and root in _ROWS[case][1]


def character_side(case: str | PartitionFunctionCase, x: Sequence | None, y: Sequence | None = None,
                   root: int = 6, n: int | None = None):
    """Closed form at a = zeta_root.  ``x=None`` means all spectral parameters 1."""
    if isinstance(case, PartitionFunctionCase):
        n = case.n
        case = case.case
    if not supports(case, root):
        raise UnsupportedCaseError(f"no closed form for case {case} at zeta_{root}")
    ones = x is None
    if ones:
        m = 2 * n if case in PF_CASES else n
        x = [Fraction(1)] * m
        y = None if case in PF_CASES else [Fraction(1)] * m
    if n is None:
        n = len(x) // 2 if case in PF_CASES else len(x)
    if (case, root) in SAME_XY and y is None and case in DET_CASES:
        y = list(x)
    fn = _ROWS[case][0]
    return simplify(fn(root, n, _Ctx(x, y, ones)))


# ---------------------------------------------------------- specializations

# class -> list of (case, size function of order, extra factor function)
def _composition(tag: ClassTag, order: int):
    if tag is ClassTag.ASM:
        return [("A", order)], Fraction(1)
    if tag is ClassTag.HTS:
        if order % 2:
            raise UnsupportedCaseError("odd-order HTSASMs are not covered by the product formulas")
        n = order // 2
        return [("A", n), ("HT2", n)], Fraction(1)
    if tag is ClassTag.VS:
        return [("V", (order - 1) // 2)], Fraction(1)
    if tag is ClassTag.VHS:
        n = (order - 1) // 4
        return [("V", n), ("VH2_4n1" if order % 4 == 1 else "VH2_4n3", n)], Fraction(1)
    if tag is ClassTag.UASM:
        n = order // 2
        return [("V", n)], Fraction(2) ** n
    if tag is ClassTag.UUASM:
        n = order // 4
        return [("V", n), ("UU2", n)], Fraction(1)
    if tag is ClassTag.VHPASM:
        n = (order - 2) // 4
        return [("V", n), ("VHP2", n)], Fraction(1)
    if tag is ClassTag.QTS:
        n = order // 4
        return [("QT1", n), ("QT2", n)], Fraction(1)
    if tag is ClassTag.OS:
        return [("OD", order // 2)], Fraction(1)
    if tag is ClassTag.OOS:
        n = order // 4
        return [("OD", n), ("OO2", n)], Fraction(1)
    if tag is ClassTag.UOSASM:
        n = order // 8
        return [("UO1", n), ("UO2", n)], Fraction(1)
    if tag is ClassTag.VOS:
        n = order // 8
        return [("UO1", n), ("VO2_8n1" if order % 8 == 1 else "VO2_8n3", n)], Fraction(1)
    raise UnsupportedCaseError(f"no product formula for class {tag.value}")


def specialized_enumeration(tag, xval: int, order: int) -> Fraction:
    """Predicted A(x) at x in {0,1,2,3} through the closed forms at all ones."""
    tag = check_admissible(tag, order)
    if xval not in XVAL_TO_ROOT:
        raise UnsupportedCaseError(f"x must be one of 0, 1, 2, 3, got {xval}")
    root = XVAL_TO_ROOT[xval]
    factors, extra = _composition(tag, order)
    value = extra
    for case, n in factors:
        if not supports(case, root):
            raise UnsupportedCaseError(
                f"{tag.value} at x={xval}: no closed form for factor {case} at zeta_{root}")
        value = value * character_side(case, None, root=root, n=n)
    return simplify(value)


def class_count_formula(tag, order: int) -> Fraction:
    """Dimension-product count (the 1-enumeration).

    Odd-order HTS and DAS get the conjectured products (see
    ``is_conjectural``); everything else is a proven formula.
    """
    tag = check_admissible(tag, order)
    if is_conjectural(tag, order):
        return conjectured_count(tag, order)
    return specialized_enumeration(tag, 1, order)


def is_conjectural(tag, order: int) -> bool:
    tag = ClassTag.parse(tag)
    return order % 2 == 1 and tag in (ClassTag.HTS, ClassTag.DAS)


def conjectured_count(tag, order: int) -> Fraction:
    """3^(-n^2) dim GL_{2n+1}(delta(n, n-1))^2 for HTS and
    3^(-n(n-1)/2) dim GL_{2n+1}(delta(n, n-1)) for DAS, order 2n+1."""
    tag = check_admissible(tag, order)
    if not is_conjectural(tag, order):
        raise UnsupportedCaseError(f"no conjectured formula for {tag.value} at order {order}")
    n = (order - 1) // 2
    d = _dim(GL(2 * n + 1), make_delta("delta", n, n - 1) if n else Weight(()))
    if tag is ClassTag.HTS:
        return d * d / 3 ** (n * n)
    return d / 3 ** (n * (n - 1) // 2)


def coverage(tag) -> tuple[int, ...]:
    """x values at which specialized_enumeration is available for the class."""
    tag = ClassTag.parse(tag)
    out = []
    for xv, root in XVAL_TO_ROOT.items():
        try:
            factors, _ = _composition(tag, _some_order(tag))
        except UnsupportedCaseError:
            return ()
        if all(supports(cs, root) for cs, _ in factors):
            out.append(xv)
    return tuple(out)


def _some_order(tag: ClassTag) -> int:
    return {ClassTag.VS: 5, ClassTag.VHS: 5, ClassTag.OS: 4, ClassTag.OOS: 8, ClassTag.UASM: 4,
            ClassTag.UUASM: 8, ClassTag.VHPASM: 6, ClassTag.QTS: 8, ClassTag.UOSASM: 8,
            ClassTag.VOS: 9, ClassTag.HTS: 4}.get(tag, 4)


def referenced_dimensions(max_rank: int = 8, max_order: int = 40) -> list:
    """Every (group, weight) whose dimension the count formulas use.

    Walks class_count_formula and specialized_enumeration over all classes
    and admissible orders up to ``max_order`` and records the weyl_dim calls
    of rank <= ``max_rank``.  x = 0 stops at order 10: its closed forms are
    permanents and Hafnians at all ones and add no new weights.
    """
    global _DIM_LOG
    _DIM_LOG = set()
    try:
        for tag in ClassTag:
            for order in range(1, max_order + 1):
                if not is_admissible(tag, order):
                    continue
                for xv in ((0, 1, 2, 3) if order <= 10 else (1, 2, 3)):
                    try:
                        specialized_enumeration(tag, xv, order)
                    except UnsupportedCaseError:
                        pass
                try:
                    class_count_formula(tag, order)
                except UnsupportedCaseError:
                    pass
        found = _DIM_LOG
    finally:
        _DIM_LOG = None
    keep = [p for p in found if p[0].rank <= max_rank]
    return sorted(keep, key=lambda p: (p[0].family, p[0].rank, p[1].doubled_parts))


# ------------------------------------------------------------ verification


@dataclass
class PartitionCheck:
    case: str
    root: int
    n: int
    seed: int
    equal: bool
    lhs: object
    rhs: object
    x: list
    y: list | None
    params: dict
    attempts: int = 1

    def to_dict(self) -> dict:
        from .exact import scalar_to_json
        return {"case": self.case, "root": self.root, "n": self.n, "seed": self.seed,
                "equal": self.equal, "lhs": scalar_to_json(self.lhs), "rhs": scalar_to_json(self.rhs),
                "x": [scalar_to_json(v) for v in self.x],
                "y": None if self.y is None else [scalar_to_json(v) for v in self.y],
                "params": {k: scalar_to_json(v) for k, v in self.params.items() if v is not None},
                "attempts": self.attempts}


def verify_partition(case: str, root: int, n: int, seed: int = 0, max_attempts: int = 20) -> PartitionCheck:
    """Partition function against its closed form at a random rational point."""
    from .exact import reciprocal_free, sample_points
    if not supports(case, root):
        raise UnsupportedCaseError(f"no closed form for case {case} at zeta_{root}")
    pf = case in PF_CASES
    m = 2 * n if pf else n
    for attempt in range(max_attempts):
        s = seed * 7919 + attempt
        pts = sample_points(m if pf else 2 * m, s, reciprocal_free)
        x = pts[:m]
        y = None if pf else pts[m:]
        if (case, root) in SAME_XY:
            y = list(x)
        b = sample_points(1, s + 104729, reciprocal_free)[0] if case == "OO2" else None
        prm = case_parameters(case, root, b=b)
        try:
            lhs = partition_function(PartitionFunctionCase(case, n, **prm), x, y)
            rhs = character_side(case, x, y, root=root)
        except ZeroDivisionError:
            continue
        return PartitionCheck(case, root, n, seed, lhs == rhs, lhs, rhs, x, y, prm, attempt + 1)
    raise PoleError(f"{case} at zeta_{root}: no regular point in {max_attempts} draws")
