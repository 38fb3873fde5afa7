"""Exact arithmetic kernel.

Univariate polynomials over the integers and the rationals, stored with
coefficients in degree-descending order (leading coefficient first, constant
last).  The zero polynomial is the empty tuple.  Nothing in this module uses
floating point.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Integral, Rational

__all__ = [
    "IntPoly",
    "RatPoly",
    "RationalInterval",
    "totient",
    "factorize",
    "inverse_totient",
    "cyclotomic",
    "poly_gcd",
    "is_reciprocal",
    "squarefree_part",
    "sturm_sequence",
    "sturm_count",
    "refine_root",
]


class _Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [self._coerce(c) for c in coeffs]
        i = 0
        while i < len(cs) and cs[i] == 0:
            i += 1
        self.coeffs = tuple(cs[i:])

    @staticmethod
    def _coerce(c):
        raise NotImplementedError

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[0] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, _Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"{type(self).__name__}({list(self.coeffs)!r})"

    def __str__(self):
        return self.to_str()

    def to_str(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        d = self.degree
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            k = d - i
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if k == 0:
                body = str(a)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # -- ring operations ---------------------------------------------------

    def _result_type(self, other):
        if isinstance(self, RatPoly) or isinstance(other, RatPoly):
            return RatPoly
        return IntPoly

    def _lift(self, other):
        if isinstance(other, _Poly):
            return other
        if isinstance(other, int):
            return IntPoly([other])
        if isinstance(other, Rational):
            return RatPoly([other])
        return None

    def __neg__(self):
        return type(self)([-c for c in self.coeffs])

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        pad = len(a) - len(b)
        out = list(a[:pad]) + [x + y for x, y in zip(a[pad:], b)]
        return self._result_type(other)(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self._result_type(other)()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return self._result_type(other)(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = type(self)([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        """Division with remainder over the rationals."""
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = [Fraction(c) for c in self.coeffs]
        den = [Fraction(c) for c in other.coeffs]
        n, m = len(rem), len(den)
        if n < m:
            return RatPoly(), RatPoly(rem)
        lead = den[0]
        quo = []
        for i in range(n - m + 1):
            q = rem[i] / lead
            quo.append(q)
            if q:
                for j in range(1, m):
                    rem[i + j] -= q * den[j]
        return RatPoly(quo), RatPoly(rem[n - m + 1:])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other) -> bool:
        """True if self divides other over the rationals."""
        return divmod(other, self)[1].is_zero()

    # -- analysis ----------------------------------------------------------

    def __call__(self, t):
        acc = 0
        for c in self.coeffs:
            acc = acc * t + c
        return acc

    def derivative(self):
        d = self.degree
        return type(self)([c * (d - i) for i, c in enumerate(self.coeffs[:-1])])

    def reverse(self):
        """Reciprocal companion x^deg * p(1/x)."""
        return type(self)(self.coeffs[::-1])

    def sign_at(self, t) -> int:
        v = self(t)
        return (v > 0) - (v < 0)

    def monic(self) -> "RatPoly":
        if self.is_zero():
            return RatPoly()
        lead = Fraction(self.leading)
        return RatPoly([Fraction(c) / lead for c in self.coeffs])


class IntPoly(_Poly):
    """Polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        if isinstance(c, Integral):
            return int(c)
        if isinstance(c, Fraction) and c.denominator == 1:
            return c.numerator
        raise TypeError(f"non-integer coefficient {c!r}")

    def exact_quo(self, other) -> "IntPoly":
        """Quotient of an exact division with integer result; ValueError otherwise."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError(f"{other} does not divide {self}")
        if any(c.denominator != 1 for c in q.coeffs):
            raise ValueError("quotient has non-integral coefficients")
        return IntPoly(q.coeffs)

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0


class RatPoly(_Poly):
    """Polynomial with exact rational coefficients (lowest terms, positive denominators)."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        if isinstance(c, float):
            raise TypeError("floating-point coefficients are not allowed")
        return Fraction(c)

    def to_int(self) -> IntPoly:
        return IntPoly(self.coeffs)

    def primitive(self) -> IntPoly:
        """Integer polynomial with coprime coefficients and positive lead, proportional to self."""
        if self.is_zero():
            return IntPoly()
        den = math.lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = math.gcd(*ints)
        if ints[0] < 0:
            g = -g
        return IntPoly([c // g for c in ints])


X = IntPoly([1, 0])


def poly_gcd(a: _Poly, b: _Poly) -> RatPoly:
    """Monic gcd over the rationals (zero if both are zero)."""
    a, b = RatPoly(a.coeffs), RatPoly(b.coeffs)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def is_reciprocal(p: _Poly) -> bool:
    """True iff the coefficient sequence is a palindrome."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    return p.coeffs == p.coeffs[::-1]


# -- totients and cyclotomic polynomials ---------------------------------


def factorize(n: int) -> dict[int, int]:
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def totient(n: int) -> int:
    """Euler's phi, from the prime factorization of n."""
    if n < 1:
        raise ValueError(f"totient is defined for n >= 1, got {n}")
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def _is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def inverse_totient(v: int) -> list[int]:
    """All m with totient(m) == v, sorted ascending."""
    if v < 1:
        raise ValueError(f"inverse_totient needs v >= 1, got {v}")
    primes = [d + 1 for d in range(1, v + 1) if v % d == 0 and _is_prime(d + 1)]
    primes.sort(reverse=True)
    found = set()

    # m = prod p^k over a strictly decreasing choice of primes; phi multiplies.
    def walk(i, rest, m):
        if rest == 1:
            found.add(m)
        for j in range(i, len(primes)):
            p = primes[j]
            if rest % (p - 1):
                continue
            r, pk = rest // (p - 1), p
            while True:
                walk(j + 1, r, m * pk)
                if r % p:
                    break
                r //= p
                pk *= p

    walk(0, v, 1)
    return sorted(found)


@functools.lru_cache(maxsize=None)
def cyclotomic(m: int) -> IntPoly:
    """Phi_m, by exact division of x^m - 1 by Phi_d over the proper divisors d of m."""
    if m < 1:
        raise ValueError(f"cyclotomic needs m >= 1, got {m}")
    p = IntPoly([1] + [0] * (m - 1) + [-1])
    for d in range(1, m):
        if m % d == 0:
            p = p.exact_quo(cyclotomic(d))
    return p


# -- real roots ----------------------------------------------------------


@dataclass(frozen=True)
class RationalInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if not self.lo < self.hi:
            raise ValueError(f"empty interval ({self.lo}, {self.hi})")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, t) -> bool:
        return self.lo <= t <= self.hi

    def contains_interval(self, other: "RationalInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def disjoint(self, other: "RationalInterval") -> bool:
        return self.hi < other.lo or other.hi < self.lo

    def __str__(self):
        return f"({float(self.lo):.12g}, {float(self.hi):.12g})"


def squarefree_part(p: _Poly) -> RatPoly:
    if p.is_zero():
        raise ValueError("zero polynomial")
    g = poly_gcd(p, p.derivative())
    return (RatPoly(p.coeffs) // g).monic()


def sturm_sequence(p: _Poly) -> list[RatPoly]:
    seq = [RatPoly(p.coeffs), RatPoly(p.derivative().coeffs)]
    while not seq[-1].is_zero():
        seq.append(-(seq[-2] % seq[-1]))
    seq.pop()
    return seq


def _variations(signs) -> int:
    nz = [s for s in signs if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def _signs_at(seq, t):
    if t == math.inf:
        return [(q.leading > 0) - (q.leading < 0) for q in seq]
    if t == -math.inf:
        return [((q.leading > 0) - (q.leading < 0)) * (-1 if q.degree % 2 else 1) for q in seq]
    return [q.sign_at(t) for q in seq]


def sturm_count(p: _Poly, lo=None, hi=None) -> int:
    """Number of distinct real roots of p strictly inside (lo, hi).

    ``None`` for either endpoint means the corresponding infinity.  Roots at a
    finite endpoint are divided out before counting.
    """
    if p.is_zero():
        raise ValueError("sturm_count of the zero polynomial")
    q = squarefree_part(p)
    lo = -math.inf if lo is None else Fraction(lo)
    hi = math.inf if hi is None else Fraction(hi)
    if not lo < hi:
        raise ValueError(f"empty interval ({lo}, {hi})")
    for t in (lo, hi):
        if t not in (-math.inf, math.inf) and q(t) == 0:
            q = q // RatPoly([1, -t])
    if q.degree < 1:
        return 0
    seq = sturm_sequence(q)
    return _variations(_signs_at(seq, lo)) - _variations(_signs_at(seq, hi))


def refine_root(p: _Poly, isolating: RationalInterval, width) -> RationalInterval:
    """Bisect an isolating interval of a simple root down to the requested width."""
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    lo, hi = isolating.lo, isolating.hi
    slo, shi = p.sign_at(lo), p.sign_at(hi)
    if slo == 0 or shi == 0 or slo == shi:
        raise ValueError(f"no sign change of {p} on {isolating}")
    while hi - lo > width:
        mid = (lo + hi) / 2
        s = p.sign_at(mid)
        if s == 0:
            # the unique root is rational; centre a small interval on it
            delta = min(width, hi - lo) / 4
            return RationalInterval(mid - delta, mid + delta)
        if s == slo:
            lo = mid
        else:
            hi = mid
    return RationalInterval(lo, hi)
