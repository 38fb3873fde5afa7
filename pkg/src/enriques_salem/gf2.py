"""Polynomials over GF(2), bit-packed into Python ints.

Bit i of ``F2Poly.bits`` is the coefficient of x^i, so x^3 + x + 1 is
0b1011.  Addition is xor and multiplication is carry-less.  Factorization
goes squarefree decomposition -> distinct-degree -> equal-degree splitting
(Cantor-Zassenhaus with the trace map, which is the char-2 variant).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .arith import IntPoly, factorize

__all__ = [
    "F2Poly",
    "F2Factorization",
    "reduce_mod2",
    "f2_factor",
    "f2_is_irreducible",
    "unit_root_multiplicity",
    "F1", "F3", "F5", "F7", "F9", "F15",
    "F7_1", "F7_2", "F15_1", "F15_2",
]


class F2Poly:
    __slots__ = ("bits",)

    def __init__(self, bits: int = 0):
        if bits < 0:
            raise ValueError("bit pattern must be non-negative")
        self.bits = bits

    @classmethod
    def from_coeffs(cls, coeffs) -> "F2Poly":
        """Build from a degree-descending coefficient sequence (parity taken)."""
        bits = 0
        for c in coeffs:
            bits = (bits << 1) | (c & 1)
        return cls(bits)

    @classmethod
    def from_exponents(cls, *exps: int) -> "F2Poly":
        bits = 0
        for e in exps:
            bits ^= 1 << e
        return cls(bits)

    @property
    def degree(self) -> int:
        return self.bits.bit_length() - 1

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Degree-descending bits, leading 1 first; empty for zero."""
        return tuple((self.bits >> i) & 1 for i in range(self.degree, -1, -1))

    def is_zero(self) -> bool:
        return self.bits == 0

    def is_one(self) -> bool:
        return self.bits == 1

    def __eq__(self, other):
        return isinstance(other, F2Poly) and self.bits == other.bits

    def __hash__(self):
        return hash(("F2Poly", self.bits))

    def __bool__(self):
        return self.bits != 0

    def sort_key(self):
        # same degree => compare coefficient sequences leading-first
        return (self.degree, self.bits)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return f"F2Poly({self})"

    def __str__(self):
        if not self.bits:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            if (self.bits >> k) & 1:
                terms.append("1" if k == 0 else "x" if k == 1 else f"x^{k}")
        return " + ".join(terms)

    def __add__(self, other):
        return F2Poly(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other):
        a, b = self.bits, other.bits
        if a.bit_length() < b.bit_length():
            a, b = b, a
        out = 0
        while b:
            if b & 1:
                out ^= a
            a <<= 1
            b >>= 1
        return F2Poly(out)

    def __pow__(self, n: int):
        result, base = F2Poly(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        if not other.bits:
            raise ZeroDivisionError("division by the zero polynomial")
        r, d = self.bits, other.bits
        dd = d.bit_length()
        q = 0
        while r.bit_length() >= dd:
            shift = r.bit_length() - dd
            q ^= 1 << shift
            r ^= d << shift
        return F2Poly(q), F2Poly(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other) -> bool:
        return (other % self).is_zero()

    def reverse(self) -> "F2Poly":
        """x^deg * p(1/x)."""
        return F2Poly.from_coeffs(self.coeffs[::-1])

    def is_reciprocal(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def derivative(self) -> "F2Poly":
        # d/dx x^k = k x^(k-1): only odd k survive
        k = self.bits.bit_length() // 2 + 1
        odd_mask = (((1 << (2 * k)) - 1) // 3) << 1
        return F2Poly((self.bits & odd_mask) >> 1)

    def sqrt(self) -> "F2Poly":
        """Square root of a polynomial with only even exponents."""
        out = 0
        for k in range(0, self.degree + 1, 2):
            if (self.bits >> k) & 1:
                out |= 1 << (k // 2)
        if F2Poly(out) * F2Poly(out) != self:
            raise ValueError(f"{self} is not a square")
        return F2Poly(out)

    def powmod(self, n: int, mod: "F2Poly") -> "F2Poly":
        result, base = F2Poly(1), self % mod
        while n:
            if n & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            n >>= 1
        return result


ZERO = F2Poly(0)
ONE = F2Poly(1)
X = F2Poly(0b10)


def f2_gcd(a: F2Poly, b: F2Poly) -> F2Poly:
    while b:
        a, b = b, a % b
    return a


@dataclass(frozen=True)
class F2Factorization:
    """Irreducible factors with multiplicities, canonically sorted."""

    factors: tuple[tuple[F2Poly, int], ...]

    def __post_init__(self):
        merged: dict[F2Poly, int] = {}
        for g, e in self.factors:
            if e > 0:
                merged[g] = merged.get(g, 0) + e
        object.__setattr__(
            self, "factors", tuple(sorted(merged.items(), key=lambda t: t[0].sort_key()))
        )

    def product(self) -> F2Poly:
        out = ONE
        for g, e in self.factors:
            out = out * g**e
        return out

    def multiplicity(self, g: F2Poly) -> int:
        for h, e in self.factors:
            if h == g:
                return e
        return 0

    def as_dict(self) -> dict[F2Poly, int]:
        return dict(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __str__(self):
        parts = []
        for g, e in self.factors:
            s = f"({g})" if g.degree >= 1 and "+" in str(g) else str(g)
            parts.append(s if e == 1 else f"{s}^{e}")
        return "*".join(parts) if parts else "1"


def reduce_mod2(p: IntPoly) -> F2Poly:
    """Coefficient-wise parity of an integer polynomial."""
    return F2Poly.from_coeffs(p.coeffs)


def _squarefree(f: F2Poly) -> list[tuple[F2Poly, int]]:
    out = []
    df = f.derivative()
    if df.is_zero():
        return [(g, 2 * e) for g, e in _squarefree(f.sqrt())]
    c = f2_gcd(f, df)
    w = f // c
    i = 1
    while not w.is_one():
        y = f2_gcd(w, c)
        z = w // y
        if not z.is_one():
            out.append((z, i))
        i += 1
        w, c = y, c // y
    if not c.is_one():
        out.extend((g, 2 * e) for g, e in _squarefree(c.sqrt()))
    return out


def _distinct_degree(f: F2Poly) -> list[tuple[F2Poly, int]]:
    """Split squarefree f into products of irreducibles of a common degree."""
    out = []
    h = X
    d = 0
    while f.degree >= 2 * (d + 1):
        d += 1
        h = (h * h) % f
        g = f2_gcd(h + X, f)
        if not g.is_one():
            out.append((g, d))
            f = f // g
            h = h % f
    if f.degree >= 1:
        out.append((f, f.degree))
    return out


def _equal_degree(f: F2Poly, d: int, rng: random.Random) -> list[F2Poly]:
    if f.degree == d:
        return [f]
    n = f.degree
    while True:
        a = F2Poly(rng.getrandbits(n)) if n > 0 else ONE
        if a.degree < 1:
            continue
        # trace of a from GF(2^d) down to GF(2)
        t, s = a % f, a % f
        for _ in range(d - 1):
            s = (s * s) % f
            t = t + s
        g = f2_gcd(t, f)
        if not g.is_one() and g != f:
            break
    return _equal_degree(g, d, rng) + _equal_degree(f // g, d, rng)


def f2_factor(p: F2Poly) -> F2Factorization:
    """Complete factorization into irreducibles over GF(2)."""
    if p.degree < 1:
        raise ValueError(f"cannot factor the constant polynomial {p}")
    rng = random.Random(p.bits)
    factors = []
    for part, e in _squarefree(p):
        for block, d in _distinct_degree(part):
            factors.extend((g, e) for g in _equal_degree(block, d, rng))
    return F2Factorization(tuple(factors))


def f2_is_irreducible(p: F2Poly) -> bool:
    """Rabin's test."""
    n = p.degree
    if n < 1:
        raise ValueError("irreducibility of a constant is undefined")
    if X.powmod(1 << n, p) != X % p:
        return False
    for q in factorize(n):
        if not f2_gcd(X.powmod(1 << (n // q), p) + X, p).is_one():
            return False
    return True


def unit_root_multiplicity(p: F2Poly) -> int:
    """Multiplicity of x + 1 as a factor of p."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    e = 0
    while True:
        q, r = divmod(p, F1)
        if r:
            return e
        p, e = q, e + 1


F1 = F2Poly(0b11)
F3 = F2Poly(0b111)
F5 = F2Poly(0b11111)
F7 = F2Poly(0b1111111)
F9 = F2Poly.from_exponents(6, 3, 0)
F15 = F2Poly.from_exponents(8, 7, 5, 4, 3, 1, 0)
F7_1 = F2Poly.from_exponents(3, 1, 0)
F7_2 = F2Poly.from_exponents(3, 2, 0)
F15_1 = F2Poly.from_exponents(4, 1, 0)
F15_2 = F2Poly.from_exponents(4, 3, 0)
