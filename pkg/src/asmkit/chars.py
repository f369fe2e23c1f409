"""Classical group characters and dimensions.

Weights are stored doubled (``2*lambda_i``) so half-integer parts stay
integers.  Characters are bialternants of generalized Vandermonde
determinants; dimensions come from Weyl's product over positive roots, with
a principal-specialization oracle that goes through the bialternant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import IntPolynomial, NotDivisibleError, as_fraction, poly_det, poly_exact_div
from .ringlinalg import GenericMatrix, det

FAMILIES = ("GL", "Sp", "PinOdd", "PinEven")


class WeightError(ValueError):
    pass


class SingularEvaluationError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Weight:
    doubled_parts: tuple[int, ...]
    half: bool = False

    def __post_init__(self):
        parts = self.doubled_parts
        if any(p < 0 for p in parts):
            raise WeightError("negative part")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise WeightError(f"parts not non-increasing: {self.parts}")
        want = 1 if self.half else 0
        if any(p % 2 != want for p in parts):
            raise WeightError("mixed parity")

    @classmethod
    def of(cls, parts: Iterable) -> "Weight":
        fr = [as_fraction(p) if not isinstance(p, float) else Fraction(p) for p in parts]
        doubled = []
        for f in fr:
            d = 2 * f
            if d.denominator != 1:
                raise WeightError(f"{f} is not a half-integer")
            doubled.append(int(d))
        half = bool(doubled) and doubled[0] % 2 == 1
        return cls(tuple(doubled), half)

    @classmethod
    def parse(cls, text: str) -> "Weight":
        text = text.strip()
        if not text:
            return cls(())
        return cls.of(Fraction(s) for s in text.split(","))

    @property
    def parts(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(d, 2) for d in self.doubled_parts)

    def padded(self, rank: int) -> tuple[int, ...]:
        """Doubled parts extended to ``rank``.

        Integer weights pad with 0; half-integer weights pad with 1/2, and
        surplus trailing 1/2 entries are dropped to fit the rank.
        """
        parts = self.doubled_parts
        if self.half:
            while len(parts) > rank and parts[-1] == 1:
                parts = parts[:-1]
        if len(parts) > rank:
            raise WeightError(f"weight {self} longer than rank {rank}")
        pad = 1 if self.half else 0
        return parts + (pad,) * (rank - len(parts))

    def __len__(self):
        return len(self.doubled_parts)

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class GroupSpec:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.rank < 0:
            raise ValueError("negative rank")

    @property
    def label(self) -> str:
        n = self.rank
        return {"GL": f"GL_{n}", "Sp": f"Sp_{2 * n}", "PinOdd": f"O~_{2 * n + 1}",
                "PinEven": f"O~_{2 * n}"}[self.family]


def GL(n):
    return GroupSpec("GL", n)


def Sp(N):
    """Sp_N, N even."""
    return GroupSpec("Sp", N // 2)


def PinOdd(N):
    return GroupSpec("PinOdd", (N - 1) // 2)


def PinEven(N):
    return GroupSpec("PinEven", N // 2)


# ------------------------------------------------------------- staircases


def _delta_one(kind: str, r2: int) -> list[int]:
    step = 2 if kind == "delta" else 4
    out = []
    v = r2
    while v > 0:
        out.append(v)
        v -= step
    return out


def make_delta(kind: str, r, s=None) -> Weight:
    """delta(r) / delta^2(r) and their two-argument unions.

    ``kind`` is "delta" or "delta2".  Entries are strictly positive.
    delta(n+1/2, n-1/2) follows the explicit 2n-entry listing with a single
    trailing 1/2.
    """
    if kind not in ("delta", "delta2"):
        raise ValueError(f"unknown kind {kind!r}")
    r2 = int(2 * as_fraction(r))
    if 2 * as_fraction(r) != r2:
        raise WeightError(f"{r} is not a half-integer")
    if s is None:
        parts = _delta_one(kind, r2)
        return Weight(tuple(parts), bool(parts) and r2 % 2 == 1)
    s2 = int(2 * as_fraction(s))
    if 2 * as_fraction(s) != s2:
        raise WeightError(f"{s} is not a half-integer")
    if (r2 - s2) % 2:
        raise WeightError(f"mixed parity: {r}, {s}")
    half = r2 % 2 == 1
    if kind == "delta" and half and r2 - s2 == 2 and s2 > 0:
        # (n+1/2, n-1/2, n-1/2, ..., 3/2, 3/2, 1/2)
        parts = [r2]
        v = s2
        while v >= 3:
            parts += [v, v]
            v -= 2
        parts.append(1)
        return Weight(tuple(parts), True)
    parts = sorted(_delta_one(kind, r2) + _delta_one(kind, s2), reverse=True)
    return Weight(tuple(parts), half and bool(parts))


# -------------------------------------------------------------- dimensions


def _check(g: GroupSpec, lam: Weight) -> tuple[int, ...]:
    if lam.half and g.family in ("GL", "Sp"):
        raise WeightError(f"half-integer weight not allowed for {g.family}")
    return lam.padded(g.rank)


def _rho2(g: GroupSpec) -> list[int]:
    """Doubled rho in the coordinates used by the bialternants."""
    n = g.rank
    if g.family == "GL":
        return [2 * (n - 1 - i) for i in range(n)]
    if g.family == "Sp":
        return [2 * (n - i) for i in range(n)]
    if g.family == "PinOdd":
        return [2 * (n - i) - 1 for i in range(n)]
    return [2 * (n - 1 - i) for i in range(n)]


def weyl_dim(g: GroupSpec, lam: Weight) -> Fraction:
    """Weyl's dimension formula; PinEven with lambda_n != 0 is doubled."""
    parts = _check(g, lam)
    n = g.rank
    rho = _rho2(g)
    l = [p + r for p, r in zip(parts, rho)]
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= l[i] - l[j]
            den *= rho[i] - rho[j]
            if g.family != "GL":
                num *= l[i] + l[j]
                den *= rho[i] + rho[j]
        if g.family in ("Sp", "PinOdd"):
            num *= l[i]
            den *= rho[i]
    d = Fraction(num, den)
    if g.family == "PinEven" and n and parts[-1] != 0:
        d *= 2
    return d


# -------------------------------------------------------------- bialternants


def _exponents(g: GroupSpec, parts: Sequence[int]) -> tuple[list[int], list[int]]:
    """Doubled exponent sequences for the numerator and denominator."""
    rho = _rho2(g)
    return [p + r for p, r in zip(parts, rho)], rho


def _sign_kind(g: GroupSpec) -> int:
    """0 for x^a, -1 for x^a - x^-a, +1 for x^a + x^-a."""
    return {"GL": 0, "Sp": -1, "PinOdd": -1, "PinEven": 1}[g.family]


def _power(base, root, e2: int):
    """x^(e2/2) from x (=base) or its square root."""
    if e2 % 2 == 0:
        e = e2 // 2
        return base ** e if e >= 0 else 1 / base ** (-e)
    if root is None:
        raise WeightError("half-integer exponent needs square roots of the coordinates")
    return root ** e2 if e2 >= 0 else 1 / root ** (-e2)


def _entry(kind: int, base, root, e2: int):
    if kind == 0:
        return _power(base, root, e2)
    a = _power(base, root, e2)
    b = _power(base, root, -e2)
    return a - b if kind < 0 else a + b


def _poly_entry(kind: int, m: int, e2: int) -> IntPolynomial:
    # slot variable is r = t^m with x = r^2, so x^(e2/2) = t^(m*e2)
    if kind == 0:
        return IntPolynomial.monomial(m * e2)
    return IntPolynomial.monomial(m * e2) + IntPolynomial.monomial(-m * e2, kind)


def _sqrt_exact(v):
    v = as_fraction(v)
    if v <= 0:
        return None
    p, q = math.isqrt(v.numerator), math.isqrt(v.denominator)
    if p * p == v.numerator and q * q == v.denominator:
        return Fraction(p, q)
    return None


def _bialternant_matrix(kind, exps, x, roots, limit, slot_power):
    n = len(exps)
    rows = []
    for i in range(n):
        if i in limit:
            rows.append([_poly_entry(kind, slot_power[i], e) for e in exps])
        else:
            rows.append([_entry(kind, x[i], roots[i] if roots else None, e) for e in exps])
    return GenericMatrix.from_rows(rows)


def char_bialternant(g: GroupSpec, lam: Weight, x: Sequence, limit_slots: Iterable[int] = (),
                     roots: Sequence | None = None):
    """Evaluate the irreducible character at ``x``.

    Coordinates listed in ``limit_slots`` are sent to 1 as a limit: those
    rows are built as Laurent polynomials in t (slot k gets t to a distinct
    power), numerator and denominator are divided exactly and the quotient is
    evaluated at t = 1.  ``roots`` supplies square roots of the coordinates
    when half-integer exponents occur; perfect squares are detected otherwise.
    """
    parts = _check(g, lam)
    n = g.rank
    if len(x) != n:
        raise ValueError(f"{g.label} needs {n} coordinates, got {len(x)}")
    if n == 0:
        return Fraction(1)
    num_e, den_e = _exponents(g, parts)
    kind = _sign_kind(g)
    limit = set(limit_slots)
    needs_root = any(e % 2 for e in num_e + den_e)
    if needs_root and roots is None:
        roots = []
        for i, v in enumerate(x):
            r = None if i in limit else _sqrt_exact(v)
            if r is None and i not in limit:
                raise WeightError("half-integer exponent needs square roots of the coordinates")
            roots.append(r)
    slot_power = {}
    for k, i in enumerate(sorted(limit)):
        slot_power[i] = k + 1
    num = det(_bialternant_matrix(kind, num_e, x, roots, limit, slot_power))
    den = det(_bialternant_matrix(kind, den_e, x, roots, limit, slot_power))
    if limit:
        num = num if isinstance(num, IntPolynomial) else IntPolynomial.constant(num)
        den = den if isinstance(den, IntPolynomial) else IntPolynomial.constant(den)
        if den.is_zero():
            raise SingularEvaluationError("Weyl denominator vanishes identically")
        try:
            q = poly_exact_div(num, den)
        except NotDivisibleError as exc:
            raise NotDivisibleError(f"bialternant for {g.label}{lam} not a polynomial: {exc}") from None
        value = q.eval_at_one()
    else:
        if not den:
            raise SingularEvaluationError(f"Weyl denominator of {g.label} vanishes at {list(x)}")
        value = num / den
    if g.family == "PinEven" and parts[-1] != 0:
        value = value * 2
    return value


def dim_principal(g: GroupSpec, lam: Weight) -> Fraction:
    """Dimension via the principal specialization x_i = t^i and t -> 1."""
    parts = _check(g, lam)
    n = g.rank
    if n == 0:
        return Fraction(1)
    num_e, den_e = _exponents(g, parts)
    kind = _sign_kind(g)

    def bialt(exps):
        rows = [[_poly_entry(kind, i + 1, e) for e in exps] for i in range(n)]
        return poly_det(rows)

    num = bialt(num_e)
    den = bialt(den_e)
    if den.is_zero():
        raise SingularEvaluationError("principal Weyl denominator is zero")
    try:
        q = poly_exact_div(num, den)
    except NotDivisibleError as exc:
        raise NotDivisibleError(f"principal specialization of {g.label}{lam}: {exc}") from None
    value = Fraction(q.eval_at_one())
    if g.family == "PinEven" and parts[-1] != 0:
        value *= 2
    return value


# -------------------------------------------------------------- formulas


def asm_product_formula(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    num = 1
    den = 1
    for k in range(n):
        num *= math.factorial(3 * k + 1)
        den *= math.factorial(n + k)
    q, r = divmod(num, den)
    assert r == 0
    return q


def ssyt_count(shape: Sequence[int], n: int) -> int:
    """Brute-force count of semistandard tableaux of ``shape`` with entries <= n."""
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    filling: dict[tuple[int, int], int] = {}

    def rec(k: int) -> int:
        if k == len(cells):
            return 1
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = max(lo, filling[(r, c - 1)])
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)
        total = 0
        for v in range(lo, n + 1):
            filling[(r, c)] = v
            total += rec(k + 1)
        filling.pop((r, c), None)
        return total

    return rec(0)
