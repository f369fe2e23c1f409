"""Exact scalars: rationals, the cyclotomic field Q(zeta_24), Laurent polynomials.

Rationals are plain :class:`fractions.Fraction`.  ``Cyclo24`` stores an
element as eight integer numerators over one shared positive denominator,
which keeps multiplication in integer arithmetic.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Sequence

Rational = Fraction

DEGREE = 8  # phi(24)
_DIVISORS_OF_24 = (1, 2, 3, 4, 6, 8, 12, 24)
_UNITS_MOD_24 = (1, 5, 7, 11, 13, 17, 19, 23)


class NotDivisibleError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class SamplingError(RuntimeError):
    pass


def as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"not a rational: {v!r}")


def rational_str(v: Fraction) -> str:
    v = as_fraction(v)
    return f"{v.numerator}/{v.denominator}"


def _reduce(c: list[int]) -> list[int]:
    # zeta^8 = zeta^4 - 1
    for k in range(len(c) - 1, DEGREE - 1, -1):
        v = c[k]
        if v:
            c[k - 4] += v
            c[k - 8] -= v
    del c[DEGREE:]
    while len(c) < DEGREE:
        c.append(0)
    return c


def _zeta_power_table() -> list[tuple[int, ...]]:
    table = []
    for m in range(24):
        c = [0] * (m + 1)
        c[m] = 1
        table.append(tuple(_reduce(c)))
    return table


_ZETA_POW = _zeta_power_table()


class Cyclo24:
    """Element of Q(zeta_24) as sum_k (nums[k]/den) * zeta^k, k < 8."""

    __slots__ = ("nums", "den", "_hash")

    def __init__(self, nums: Sequence[int], den: int = 1):
        nums = list(nums)
        if len(nums) > DEGREE:
            nums = _reduce(nums)
        nums += [0] * (DEGREE - len(nums))
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            den = -den
            nums = [-v for v in nums]
        g = den
        for v in nums:
            if v:
                g = gcd(g, v)
                if g == 1:
                    break
        if g > 1:
            nums = [v // g for v in nums]
            den //= g
        self.nums = tuple(nums)
        self.den = den
        self._hash = None

    @classmethod
    def from_rational(cls, v) -> "Cyclo24":
        v = as_fraction(v)
        return cls([v.numerator], v.denominator)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable) -> "Cyclo24":
        fr = [as_fraction(c) for c in coeffs]
        if len(fr) != DEGREE:
            raise ValueError("Cyclo24 needs exactly 8 coefficients")
        den = 1
        for f in fr:
            den = den * f.denominator // gcd(den, f.denominator)
        return cls([f.numerator * (den // f.denominator) for f in fr], den)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, self.den) for v in self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self.nums[0], self.den)

    def is_zero(self) -> bool:
        return not any(self.nums)

    def _lift(self, other):
        if isinstance(other, Cyclo24):
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclo24.from_rational(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        d = self.den * o.den
        return Cyclo24([a * o.den + b * self.den for a, b in zip(self.nums, o.nums)], d)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo24([-a for a in self.nums], self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return Cyclo24([a * other for a in self.nums], self.den)
        if isinstance(other, Fraction):
            return Cyclo24([a * other.numerator for a in self.nums], self.den * other.denominator)
        if not isinstance(other, Cyclo24):
            return NotImplemented
        a, b = self.nums, other.nums
        prod = [0] * (2 * DEGREE - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return Cyclo24(_reduce(prod), self.den * other.den)

    __rmul__ = __mul__

    def galois(self, k: int) -> "Cyclo24":
        """Apply the automorphism zeta -> zeta^k (k a unit mod 24)."""
        out = [0] * DEGREE
        for j, v in enumerate(self.nums):
            if v:
                for i, w in enumerate(_ZETA_POW[(j * k) % 24]):
                    if w:
                        out[i] += v * w
        return Cyclo24(out, self.den)

    def inverse(self) -> "Cyclo24":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_24)")
        if self.is_rational():
            return Cyclo24.from_rational(1 / Fraction(self.nums[0], self.den))
        conj = Cyclo24([1])
        for k in _UNITS_MOD_24[1:]:
            conj = conj * self.galois(k)
        norm = self * conj
        # the norm is rational
        return conj * (1 / norm.to_rational())

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = as_fraction(other)
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / other)
        if not isinstance(other, Cyclo24):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = Cyclo24([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.nums == o.nums and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.nums[0], self.den))
            else:
                self._hash = hash((self.nums, self.den))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        terms = []
        for k, v in enumerate(self.coeffs):
            if v:
                terms.append(f"{v}" if k == 0 else f"({v})*z^{k}")
        return "Cyclo24(" + (" + ".join(terms) or "0") + ")"

    def to_json(self) -> list[str]:
        return [rational_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "Cyclo24":
        return cls.from_coeffs(Fraction(s) for s in data)


def cyclo_root(k: int) -> Cyclo24:
    """The primitive k-th root of unity exp(2 pi i/k) inside Q(zeta_24)."""
    if k not in _DIVISORS_OF_24:
        raise ValueError(f"{k} does not divide 24")
    return Cyclo24(_ZETA_POW[(24 // k) % 24])


def scalar_to_json(v):
    """Rationals as "p/q", cyclotomic elements as 8 such strings."""
    if isinstance(v, Cyclo24):
        if v.is_rational():
            return rational_str(v.to_rational())
        return v.to_json()
    return rational_str(as_fraction(v))


def scalar_from_json(data):
    if isinstance(data, list):
        return Cyclo24.from_json(data)
    return Fraction(data)


def simplify(v):
    """Demote a rational Cyclo24 back to Fraction."""
    if isinstance(v, Cyclo24) and v.is_rational():
        return v.to_rational()
    if isinstance(v, int):
        return Fraction(v)
    return v


# --------------------------------------------------------------------------
# Laurent polynomials in one variable t


class IntPolynomial:
    """Laurent polynomial sum_k coeffs[k] * t^(offset + k).

    Coefficients are any exact field elements (usually Fraction); integer
    coefficient inputs take a Kronecker-substitution fast path in ``*`` and
    exact division.
    """

    __slots__ = ("coeffs", "offset")

    def __init__(self, coeffs: Iterable = (), offset: int = 0):
        cs = list(coeffs)
        lo = 0
        while lo < len(cs) and not cs[lo]:
            lo += 1
        hi = len(cs)
        while hi > lo and not cs[hi - 1]:
            hi -= 1
        self.coeffs = cs[lo:hi]
        self.offset = offset + lo if self.coeffs else 0

    @classmethod
    def monomial(cls, e: int, c=1) -> "IntPolynomial":
        return cls([c], e)

    @classmethod
    def constant(cls, c) -> "IntPolynomial":
        return cls([c], 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        """Highest exponent (-1 for the zero polynomial... only for offset-0 polys)."""
        if not self.coeffs:
            return -1
        return self.offset + len(self.coeffs) - 1

    @property
    def low_degree(self) -> int:
        return self.offset

    def _lift(self, other):
        if isinstance(other, IntPolynomial):
            return other
        if other == 0:
            return IntPolynomial()
        return IntPolynomial.constant(other)

    def __add__(self, other):
        o = self._lift(other)
        if not o.coeffs:
            return self
        if not self.coeffs:
            return o
        lo = min(self.offset, o.offset)
        hi = max(self.degree, o.degree)
        out = [0] * (hi - lo + 1)
        for k, c in enumerate(self.coeffs):
            out[self.offset - lo + k] += c
        for k, c in enumerate(o.coeffs):
            out[o.offset - lo + k] += c
        return IntPolynomial(out, lo)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs], self.offset)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) + (-self)

    def _all_int(self) -> bool:
        return all(isinstance(c, int) or (isinstance(c, Fraction) and c.denominator == 1)
                   for c in self.coeffs)

    def __mul__(self, other):
        if not isinstance(other, IntPolynomial):
            if other == 0:
                return IntPolynomial()
            return IntPolynomial([c * other for c in self.coeffs], self.offset)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        if self._all_int() and other._all_int() and len(self.coeffs) * len(other.coeffs) > 64:
            prod = _kron_mul([int(c) for c in self.coeffs], [int(c) for c in other.coeffs])
        else:
            prod = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return IntPolynomial(prod, self.offset + other.offset)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = IntPolynomial.constant(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._lift(other)
        return self.offset == o.offset and self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.offset, tuple(self.coeffs)))

    def __call__(self, t):
        return self.eval(t)

    def eval(self, t):
        if not self.coeffs:
            return Fraction(0)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        if self.offset >= 0:
            base = t ** self.offset if self.offset else 1
        else:
            base = 1 / (as_fraction(t) ** (-self.offset)) if isinstance(t, (int, Fraction)) else t ** self.offset
        return acc * base

    def eval_at_one(self):
        s = 0
        for c in self.coeffs:
            s = s + c
        return s

    def shift(self, k: int) -> "IntPolynomial":
        return IntPolynomial(self.coeffs, self.offset + k)

    def __repr__(self):
        return f"IntPolynomial({self.coeffs!r}, offset={self.offset})"

    def to_json(self):
        return {"offset": self.offset, "coeffs": [scalar_to_json(as_fraction(c) if isinstance(c, int) else c)
                                                   for c in self.coeffs]}

    def pretty(self, var: str = "x") -> str:
        """Render like "6 + 24x + 12x^2"."""
        terms = []
        for k, c in enumerate(self.coeffs):
            e = self.offset + k
            if not c:
                continue
            cs = str(c)
            if e == 0:
                terms.append(cs)
            else:
                mono = var if e == 1 else f"{var}^{e}"
                terms.append(mono if c == 1 else f"{cs}{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def _kron_bits(a: Sequence[int], b: Sequence[int]) -> int:
    ma = max(abs(v) for v in a)
    mb = max(abs(v) for v in b)
    return (ma * mb * min(len(a), len(b))).bit_length() + 2


def _pack(cs: Sequence[int], bits: int) -> int:
    v = 0
    for c in reversed(cs):
        v = (v << bits) + c
    return v


def _unpack(v: int, bits: int, count: int | None = None) -> list[int]:
    out = []
    base = 1 << bits
    half = base >> 1
    mask = base - 1
    while v and (count is None or len(out) < count):
        d = v & mask
        if d >= half:
            d -= base
        out.append(d)
        v = (v - d) >> bits
    if count is not None:
        out += [0] * (count - len(out))
    return out


def _kron_mul(a: list[int], b: list[int]) -> list[int]:
    bits = _kron_bits(a, b)
    return _unpack(_pack(a, bits) * _pack(b, bits), bits, len(a) + len(b) - 1)


def _long_div(num: list, den: list) -> tuple[list, list]:
    num = list(num)
    dl = len(den)
    lead = den[-1]
    q = [0] * max(len(num) - dl + 1, 0)
    for k in range(len(num) - dl, -1, -1):
        c = num[k + dl - 1]
        if c:
            if isinstance(c, int) and isinstance(lead, int) and c % lead == 0:
                f = c // lead
            else:
                f = as_fraction(c) / lead if isinstance(c, int) else c / lead
            q[k] = f
            for j in range(dl):
                num[k + j] -= f * den[j]
    return q, num[: dl - 1]


def poly_exact_div(num: IntPolynomial, den: IntPolynomial) -> IntPolynomial:
    """Quotient q with q * den == num; raises NotDivisibleError otherwise."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return IntPolynomial()
    n, d = num.coeffs, den.coeffs
    if len(n) < len(d):
        raise NotDivisibleError("not divisible: numerator span shorter than denominator")
    offset = num.offset - den.offset
    if num._all_int() and den._all_int() and len(n) > 16:
        ni = [int(c) for c in n]
        di = [int(c) for c in d]
        # dividing out the content of den keeps quotients like q/2 on the integer path
        content = math.gcd(*di)
        if di[-1] < 0:
            content = -content
        di = [c // content for c in di]
        # start from a small digit width and widen; the product check makes it exact
        width = max(max(abs(c) for c in ni).bit_length(), max(abs(c) for c in di).bit_length()) + 8
        limit = sum(abs(c) for c in ni).bit_length() + len(ni) + 2
        while True:
            qv, r = divmod(_pack(ni, width), _pack(di, width))
            if r:
                # t -> 2^W is a ring map, so an exact quotient leaves no remainder
                break
            q = _unpack(qv, width, len(ni) - len(di) + 1)
            if _kron_mul(q, di) == ni:
                if content == 1:
                    return IntPolynomial(q, offset)
                return IntPolynomial([Fraction(c, content) for c in q], offset)
            if width >= limit:
                break
            width = min(2 * width, limit)
    q, rem = _long_div(n, d)
    if any(rem):
        raise NotDivisibleError("not divisible: nonzero remainder")
    return IntPolynomial(q, offset)


def _int_det(rows: list[list[int]]) -> int:
    """Fraction-free (Bareiss) determinant of an integer matrix."""
    m = [list(r) for r in rows]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k]), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1] if n else 1


def poly_det(rows: Sequence[Sequence[IntPolynomial]]) -> IntPolynomial:
    """Determinant of a square matrix of integer Laurent polynomials.

    Kronecker substitution: every entry is evaluated at t = 2^W, one integer
    determinant is taken and its digits are read back.  W comes from the
    bound n! * prod_i max_j |a_ij|_1 on the coefficients of the result, so
    the unpacking is exact.
    """
    n = len(rows)
    if n == 0:
        return IntPolynomial.constant(1)
    if not all(e._all_int() for r in rows for e in r):
        raise TypeError("poly_det needs integer coefficients")
    lo = min((e.offset for r in rows for e in r if e.coeffs), default=0)
    bound = math.factorial(n)
    for r in rows:
        bound *= max((sum(abs(int(c)) for c in e.coeffs) for e in r), default=0)
    if bound == 0:
        return IntPolynomial()
    width = bound.bit_length() + 2
    vals = [[_pack([int(c) for c in e.coeffs], width) << (width * (e.offset - lo)) if e.coeffs else 0
             for e in r] for r in rows]
    d = _int_det(vals)
    cs = _unpack(d, width)
    return IntPolynomial(cs, n * lo)


# --------------------------------------------------------------------------
# random evaluation points


def _rand_rational(rng: random.Random, bound: int, positive: bool) -> Fraction:
    p = rng.randint(1, bound)
    q = rng.randint(1, bound)
    v = Fraction(p, q)
    if not positive and rng.random() < 0.5:
        v = -v
    return v


def generic_ok(values: Sequence[Fraction]) -> bool:
    """Distinct, nonzero, not +-1."""
    v = values[-1]
    if v == 0 or v == 1 or v == -1:
        return False
    return all(v != w for w in values[:-1])


def reciprocal_free(values: Sequence[Fraction]) -> bool:
    """generic_ok plus x_i x_j != 1 and x_i + x_j != 0 for every pair."""
    if not generic_ok(values):
        return False
    v = values[-1]
    return all(v * w != 1 and v + w != 0 for w in values)


def sample_points(count: int, seed: int,
                  constraint: Callable[[Sequence[Fraction]], bool] = generic_ok,
                  *, bound: int = 60, positive: bool = True,
                  retries: int = 1000) -> list[Fraction]:
    """Deterministic pole-avoiding rational points.

    ``constraint`` is called on the list so far with the candidate appended
    and must return True to keep it.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    rng = random.Random(seed)
    out: list[Fraction] = []
    tries = 0
    while len(out) < count:
        cand = _rand_rational(rng, bound, positive)
        if constraint(out + [cand]):
            out.append(cand)
            tries = 0
            continue
        tries += 1
        if tries > retries:
            raise SamplingError(f"could not place point {len(out) + 1} of {count} "
                                f"(seed {seed}) within {retries} draws")
    return out
