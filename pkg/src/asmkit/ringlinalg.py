"""Determinant, permanent, Pfaffian and Hafnian over exact commutative rings.

Fields (Fraction, Cyclo24) use elimination; polynomial entries use
fraction-free Bareiss elimination with exact division.  The definitional
permutation and matching sums are kept alongside as oracles.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import Cyclo24, IntPolynomial, poly_exact_div, scalar_to_json


class ShapeError(ValueError):
    pass


class GenericMatrix:
    """Dense row-major matrix over an exact ring."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence):
        if len(entries) != rows * cols:
            raise ShapeError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = [Fraction(e) if isinstance(e, int) else e for e in entries]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "GenericMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged rows")
        return cls(len(rows), ncols, [e for r in rows for e in r])

    @classmethod
    def build(cls, rows: int, cols: int, f) -> "GenericMatrix":
        return cls(rows, cols, [f(i, j) for i in range(rows) for j in range(cols)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list]:
        return [self.entries[i * self.cols:(i + 1) * self.cols] for i in range(self.rows)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "GenericMatrix":
        return GenericMatrix(len(rows), len(cols), [self[i, j] for i in rows for j in cols])

    def transpose(self) -> "GenericMatrix":
        return GenericMatrix.build(self.cols, self.rows, lambda i, j: self[j, i])

    def __add__(self, other: "GenericMatrix") -> "GenericMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("shape mismatch")
        return GenericMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __matmul__(self, other: "GenericMatrix") -> "GenericMatrix":
        if self.cols != other.rows:
            raise ShapeError("shape mismatch")
        def entry(i, j):
            acc = Fraction(0)
            for k in range(self.cols):
                acc = acc + self[i, k] * other[k, j]
            return acc
        return GenericMatrix.build(self.rows, other.cols, entry)

    @property
    def ring(self) -> str:
        kinds = {type(e) for e in self.entries}
        if IntPolynomial in kinds:
            return "polynomial"
        if Cyclo24 in kinds:
            return "cyclo24"
        return "rational"

    def to_json(self) -> str:
        return json.dumps([[scalar_to_json(e) for e in row] for row in self.to_rows()])

    def __repr__(self):
        return f"GenericMatrix({self.to_rows()!r})"


def as_matrix(m) -> GenericMatrix:
    if isinstance(m, GenericMatrix):
        return m
    return GenericMatrix.from_rows(m)


def _square(m: GenericMatrix) -> int:
    if m.rows != m.cols:
        raise ShapeError(f"matrix is {m.rows}x{m.cols}, not square")
    return m.rows


def _one_like(m: GenericMatrix):
    return IntPolynomial.constant(1) if m.ring == "polynomial" else Fraction(1)


def _is_zero(v) -> bool:
    return not v


# ---------------------------------------------------------------- determinant


def det(m) -> object:
    m = as_matrix(m)
    n = _square(m)
    if n == 0:
        return _one_like(m)
    if m.ring == "polynomial":
        return _det_bareiss(m)
    return _det_field(m)


def _det_field(m: GenericMatrix):
    n = m.rows
    a = [list(r) for r in m.to_rows()]
    sign = 1
    result = Fraction(1)
    for k in range(n):
        p = next((i for i in range(k, n) if not _is_zero(a[i][k])), None)
        if p is None:
            return Fraction(0)
        if p != k:
            a[k], a[p] = a[p], a[k]
            sign = -sign
        piv = a[k][k]
        result = result * piv
        inv = 1 / piv
        rowk = a[k]
        for i in range(k + 1, n):
            if _is_zero(a[i][k]):
                continue
            f = a[i][k] * inv
            rowi = a[i]
            for j in range(k + 1, n):
                if not _is_zero(rowk[j]):
                    rowi[j] = rowi[j] - f * rowk[j]
    return result if sign > 0 else -result


def _det_bareiss(m: GenericMatrix):
    n = m.rows
    a = [[e if isinstance(e, IntPolynomial) else IntPolynomial.constant(e) for e in r] for r in m.to_rows()]
    sign = 1
    prev = IntPolynomial.constant(1)
    for k in range(n - 1):
        p = next((i for i in range(k, n) if not a[i][k].is_zero()), None)
        if p is None:
            return IntPolynomial()
        if p != k:
            a[k], a[p] = a[p], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * piv - a[i][k] * a[k][j]
                a[i][j] = poly_exact_div(num, prev)
        prev = piv
    r = a[n - 1][n - 1]
    return r if sign > 0 else -r


def det_by_permutations(m) -> object:
    """Signed permutation sum; the definition, for cross-checks."""
    m = as_matrix(m)
    n = _square(m)
    total = 0
    for perm_ in itertools.permutations(range(n)):
        term = _one_like(m)
        for i, j in enumerate(perm_):
            term = term * m[i, j]
        total = total + term if _perm_sign(perm_) > 0 else total - term
    return total if n else _one_like(m)


def _perm_sign(p: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


# ------------------------------------------------------------------ permanent


def perm(m) -> object:
    m = as_matrix(m)
    n = _square(m)
    if n >= 5:
        return perm_ryser(m)
    return perm_direct(m)


def perm_direct(m) -> object:
    m = as_matrix(m)
    n = _square(m)
    total = Fraction(0)  # the empty permutation contributes 1 at n = 0
    for p in itertools.permutations(range(n)):
        term = Fraction(1)
        for i, j in enumerate(p):
            term = term * m[i, j]
        total = total + term
    return total


def perm_ryser(m) -> object:
    """Ryser's inclusion-exclusion formula."""
    m = as_matrix(m)
    n = _square(m)
    if n == 0:
        return Fraction(1)
    total = Fraction(0)
    for r in range(1, n + 1):
        sgn = -1 if (n - r) % 2 else 1
        for cols in itertools.combinations(range(n), r):
            prod = Fraction(1)
            for i in range(n):
                s = Fraction(0)
                for j in cols:
                    s = s + m[i, j]
                prod = prod * s
                if _is_zero(prod):
                    break
            total = total + prod if sgn > 0 else total - prod
    return total


# ---------------------------------------------------------- Pfaffian, Hafnian


def _check_even_square(m: GenericMatrix) -> int:
    n = _square(m)
    if n % 2:
        raise ShapeError(f"dimension {n} is odd")
    return n


def check_skew(m: GenericMatrix) -> None:
    n = _check_even_square(m)
    for i in range(n):
        if not _is_zero(m[i, i]):
            raise ShapeError(f"nonzero diagonal entry at ({i}, {i})")
        for j in range(i + 1, n):
            if m[i, j] != -m[j, i]:
                raise ShapeError(f"not skew-symmetric at ({i}, {j})")


def check_symmetric(m: GenericMatrix) -> None:
    n = _check_even_square(m)
    for i in range(n):
        for j in range(i + 1, n):
            if m[i, j] != m[j, i]:
                raise ShapeError(f"not symmetric at ({i}, {j})")


def pfaffian(m, check: bool = True) -> object:
    m = as_matrix(m)
    if check:
        check_skew(m)
    else:
        _check_even_square(m)
    n = m.rows
    if n == 0:
        return _one_like(m)
    if m.ring == "polynomial":
        return _pf_expand(m, tuple(range(n)))
    return _pf_field(m)


def _pf_field(m: GenericMatrix):
    # skew Gaussian elimination: pivot on (k, k+1), congruence-transform the rest
    n = m.rows
    a = [list(r) for r in m.to_rows()]
    result = Fraction(1)
    for k in range(0, n, 2):
        p = next((j for j in range(k + 1, n) if not _is_zero(a[k][j])), None)
        if p is None:
            return Fraction(0)
        if p != k + 1:
            # swap index k+1 and p in rows and columns; flips the sign
            a[k + 1], a[p] = a[p], a[k + 1]
            for row in a:
                row[k + 1], row[p] = row[p], row[k + 1]
            result = -result
        piv = a[k][k + 1]
        result = result * piv
        inv = 1 / piv
        for i in range(k + 2, n):
            # row_i -= (a[k][i]/piv) row_{k+1} - (a[k+1][i]/piv) row_k (and columns alike)
            fi = a[k][i] * inv
            gi = a[k + 1][i] * inv
            for j in range(k + 2, n):
                a[i][j] = a[i][j] - fi * a[k + 1][j] + gi * a[k][j]
        for i in range(k + 2, n):
            a[i][k] = a[i][k + 1] = a[k][i] = a[k + 1][i] = Fraction(0)
    return result


def _pf_expand(m: GenericMatrix, idx: tuple[int, ...]):
    if not idx:
        return _one_like(m)
    first, rest = idx[0], idx[1:]
    total = 0
    for k, j in enumerate(rest):
        e = m[first, j]
        if _is_zero(e):
            continue
        sub = rest[:k] + rest[k + 1:]
        term = e * _pf_expand(m, sub)
        total = total + term if k % 2 == 0 else total - term
    return total if not isinstance(total, int) else Fraction(total)


def pfaffian_by_matchings(m) -> object:
    """The ordered perfect-matching sum over F_2n, for cross-checks."""
    m = as_matrix(m)
    n = _check_even_square(m)
    total = Fraction(0)
    for sigma in _ordered_matchings(n):
        term = _one_like(m)
        for k in range(0, n, 2):
            term = term * m[sigma[k], sigma[k + 1]]
        total = total + term if _perm_sign(sigma) > 0 else total - term
    return total


def _ordered_matchings(n: int) -> Iterable[list[int]]:
    # permutations with sigma(1)<sigma(3)<..., sigma(2i-1)<sigma(2i)
    def rec(remaining: list[int]):
        if not remaining:
            yield []
            return
        a = remaining[0]
        for k in range(1, len(remaining)):
            b = remaining[k]
            for tail in rec(remaining[1:k] + remaining[k + 1:]):
                yield [a, b] + tail
    yield from rec(list(range(n)))


def hafnian(m, check: bool = True) -> object:
    m = as_matrix(m)
    if check:
        check_symmetric(m)
    else:
        _check_even_square(m)
    return _hf_expand(m, tuple(range(m.rows)))


def _hf_expand(m: GenericMatrix, idx: tuple[int, ...]):
    if not idx:
        return _one_like(m)
    first, rest = idx[0], idx[1:]
    total = Fraction(0)
    for k, j in enumerate(rest):
        e = m[first, j]
        if _is_zero(e):
            continue
        total = total + e * _hf_expand(m, rest[:k] + rest[k + 1:])
    return total


def hafnian_by_matchings(m) -> object:
    m = as_matrix(m)
    n = _check_even_square(m)
    total = Fraction(0)
    for sigma in _ordered_matchings(n):
        term = _one_like(m)
        for k in range(0, n, 2):
            term = term * m[sigma[k], sigma[k + 1]]
        total = total + term
    return total
