"""Independent reference implementations used to freeze expected values.

Nothing here imports the package's enumeration or elimination code; each
function is the textbook definition written out the slow way.
"""

import itertools
from fractions import Fraction
from math import factorial, prod


def leibniz_det(rows):
    n = len(rows)
    total = Fraction(0)
    for p in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        term = Fraction(1)
        for i in range(n):
            term *= rows[i][p[i]]
        total += -term if inv % 2 else term
    return total


def brute_perm(rows):
    n = len(rows)
    return sum((prod((rows[i][p[i]] for i in range(n)), start=Fraction(1))
                for p in itertools.permutations(range(n))), Fraction(0))


def _matchings(idx):
    if not idx:
        yield 1, []
        return
    a = idx[0]
    for k in range(1, len(idx)):
        rest = idx[1:k] + idx[k + 1:]
        for sgn, m in _matchings(rest):
            # moving idx[k] next to idx[0] costs k-1 transpositions
            yield sgn * (-1) ** (k - 1), [(a, idx[k])] + m


def matching_pf(rows):
    total = Fraction(0)
    for sgn, m in _matchings(list(range(len(rows)))):
        total += sgn * prod((rows[i][j] for i, j in m), start=Fraction(1))
    return total


def matching_hf(rows):
    total = Fraction(0)
    for _, m in _matchings(list(range(len(rows)))):
        total += prod((rows[i][j] for i, j in m), start=Fraction(1))
    return total


def is_asv(vec):
    s = 0
    for v in vec:
        s += v
        if s not in (0, 1):
            return False
    return s == 1


def _asvs(n):
    return [v for v in itertools.product((-1, 0, 1), repeat=n) if is_asv(v)]


def naive_asms(n):
    """All ASMs of order n: rows are ASVs and columns stay ASV-prefixes."""
    rows = _asvs(n)
    out = []

    def rec(acc, colsum):
        if len(acc) == n:
            if all(c == 1 for c in colsum):
                out.append(tuple(acc))
            return
        for r in rows:
            nxt = [c + v for c, v in zip(colsum, r)]
            if all(c in (0, 1) for c in nxt):
                acc.append(r)
                rec(acc, nxt)
                acc.pop()

    rec([], [0] * n)
    return out


def transpose(m):
    return tuple(zip(*m))


def rot180(m):
    return tuple(tuple(reversed(r)) for r in reversed(m))


def rot90(m):
    n = len(m)
    return tuple(tuple(m[n - 1 - j][i] for j in range(n)) for i in range(n))


def vflip(m):
    return tuple(tuple(reversed(r)) for r in m)


def hflip(m):
    return tuple(reversed(m))


def antitranspose(m):
    return rot180(transpose(m))


SYMMETRY = {
    "HTS": [rot180], "QTS": [rot90], "VS": [vflip], "VHS": [vflip, hflip],
    "DS": [transpose], "DAS": [transpose, antitranspose], "TS": [rot90, transpose],
}


def naive_class(tag, n):
    asms = naive_asms(n)
    if tag == "ASM":
        return asms
    if tag in SYMMETRY:
        return [m for m in asms if all(f(m) == m for f in SYMMETRY[tag])]
    if tag == "OS":
        return [m for m in asms if transpose(m) == m and all(m[i][i] == 0 for i in range(n))]
    if tag == "OOS":
        return [m for m in asms if transpose(m) == m and antitranspose(m) == m
                and all(m[i][i] == 0 and m[i][n - 1 - i] == 0 for i in range(n))]
    raise KeyError(tag)


def naive_uasm(order):
    """2n x n matrices: columns are ASVs, row 2k followed by reversed row 2k+1 is an ASV."""
    n = order // 2
    out = []
    for flat in itertools.product((-1, 0, 1), repeat=order * n):
        m = [flat[i * n:(i + 1) * n] for i in range(order)]
        if not all(is_asv([m[i][j] for i in range(order)]) for j in range(n)):
            continue
        if all(is_asv(list(m[2 * k]) + list(reversed(m[2 * k + 1]))) for k in range(n)):
            out.append(m)
    return out


def asm_product(n):
    return prod((Fraction(factorial(3 * k + 1), factorial(n + k)) for k in range(n)), start=Fraction(1))


def hook_content_gl(shape, n):
    """dim GL_n(lambda) = prod (n + c) / h over cells."""
    shape = [p for p in shape if p]
    conj = [sum(1 for p in shape if p > c) for c in range(shape[0])] if shape else []
    num = den = 1
    for r, length in enumerate(shape):
        for c in range(length):
            num *= n + c - r
            den *= (length - c - 1) + (conj[c] - r - 1) + 1
    return Fraction(num, den)
