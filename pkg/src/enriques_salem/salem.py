"""Salem polynomials: certification, exact comparison, enumeration, file I/O.

A reciprocal polynomial p of degree 2d is written as p(x) = x^d T(x + 1/x)
with T monic of degree d (the trace polynomial).  p is a Salem polynomial
exactly when T has one root in (2, oo), d - 1 roots in (-2, 2), and is
irreducible.  Everything that decides membership or order is exact; floats
only steer the enumerator's search, and its output is re-certified.
"""

from __future__ import annotations

import functools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arith import (
    IntPoly,
    RationalInterval,
    cyclotomic,
    inverse_totient,
    is_reciprocal,
    poly_gcd,
    refine_root,
    sturm_count,
)

__all__ = [
    "SalemPolynomial",
    "NotSalem",
    "SalemFileError",
    "trace_poly",
    "lift_trace",
    "certify_salem",
    "is_salem",
    "compare_lambda",
    "lambda_below",
    "truncated_lambda",
    "enumerate_salem",
    "read_salem_file",
    "write_salem_file",
    "parse_coefficients",
    "LAMBDA_MAX",
]

LAMBDA_MAX = Fraction(3)
CERTIFIED_WIDTH = Fraction(1, 10**6)


class NotSalem(ValueError):
    """Raised by certify_salem; ``reason`` is a short machine-readable code."""

    def __init__(self, reason: str, detail: str):
        super().__init__(f"{reason}: {detail}")
        self.reason = reason
        self.detail = detail


class SalemFileError(ValueError):
    pass


def _chebyshev_sums(d: int) -> list[IntPoly]:
    # S_k(y) = x^k + x^-k expressed in y = x + 1/x
    sums = [IntPoly([2]), IntPoly([1, 0])]
    y = IntPoly([1, 0])
    for _ in range(2, d + 1):
        sums.append(y * sums[-1] - sums[-2])
    return sums


def trace_poly(p: IntPoly) -> IntPoly:
    """Monic T of degree d with p(x) = x^d T(x + 1/x)."""
    if p.degree < 2 or p.degree % 2:
        raise ValueError(f"trace polynomial needs even degree >= 2, got {p.degree}")
    if not is_reciprocal(p):
        raise ValueError(f"{p} is not reciprocal")
    if not p.is_monic():
        raise ValueError(f"{p} is not monic")
    d = p.degree // 2
    sums = _chebyshev_sums(d)
    t = IntPoly([p.coeffs[d]])
    for i in range(d):
        t = t + p.coeffs[i] * sums[d - i]
    return t


def lift_trace(t: IntPoly) -> IntPoly:
    """x^d T(x + 1/x), the reciprocal polynomial of degree 2d."""
    d = t.degree
    x2p1 = IntPoly([1, 0, 1])
    out = IntPoly()
    for j, c in enumerate(t.coeffs):
        if c:
            out = out + c * x2p1 ** (d - j) * IntPoly([1] + [0] * j)
    return out


@dataclass(frozen=True)
class SalemPolynomial:
    poly: IntPoly
    trace: IntPoly
    interval: RationalInterval

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.poly.coeffs

    def __float__(self):
        return float(self.interval.mid)

    def __str__(self):
        return f"{truncated_lambda(self)}  {' '.join(map(str, self.coeffs))}"


def _cyclotomic_factor(p: IntPoly):
    """Smallest m >= 3 with Phi_m | p, or None."""
    for v in range(2, p.degree, 2):
        for m in inverse_totient(v):
            if m >= 3 and cyclotomic(m).divides(p):
                return m
    return None


def certify_salem(p: IntPoly) -> SalemPolynomial:
    """Certify p as the minimal polynomial of a Salem number, or raise NotSalem.

    With the root layout established, T can only factor by splitting off a
    monic integer factor whose roots all lie in (-2, 2); by Kronecker that
    factor lifts to a product of cyclotomic polynomials dividing p.  So
    irreducibility reduces to a finite cyclotomic-divisor check.
    """
    if p.is_zero() or not p.is_monic():
        raise NotSalem("not_monic", f"{p} is not monic")
    if not is_reciprocal(p):
        raise NotSalem("not_reciprocal", f"{p} is not reciprocal")
    if p.degree < 4 or p.degree % 2:
        raise NotSalem("wrong_degree", f"degree {p.degree}; need even degree >= 4")
    if p(1) == 0 or p(-1) == 0:
        raise NotSalem("root_at_unity", f"{p} vanishes at +1 or -1")
    t = trace_poly(p)
    d = t.degree
    if poly_gcd(t, t.derivative()).degree > 0:
        raise NotSalem("wrong_root_layout", f"trace {t.to_str('y')} has a repeated root")
    outside = sturm_count(t, 2, None)
    inside = sturm_count(t, -2, 2)
    if outside != 1 or inside != d - 1:
        raise NotSalem(
            "wrong_root_layout",
            f"trace {t.to_str('y')} has {outside} roots in (2, oo) and {inside} in (-2, 2)",
        )
    m = _cyclotomic_factor(p)
    if m is not None:
        raise NotSalem("reducible_trace", f"cyclotomic factor Phi_{m} divides {p}")
    bound = 1 + max(abs(c) for c in p.coeffs)
    lam = refine_root(p, RationalInterval(1, bound), CERTIFIED_WIDTH)
    return SalemPolynomial(poly=p, trace=t, interval=lam)


def is_salem(p: IntPoly) -> bool:
    try:
        certify_salem(p)
    except NotSalem:
        return False
    return True


def compare_lambda(a: SalemPolynomial, b: SalemPolynomial) -> int:
    """-1, 0 or 1 as the Salem root of a is below, equal to, or above that of b."""
    if a.poly == b.poly:
        return 0
    ia, ib = a.interval, b.interval
    while not ia.disjoint(ib):
        ia = refine_root(a.poly, ia, ia.width / 2)
        ib = refine_root(b.poly, ib, ib.width / 2)
    return -1 if ia.hi < ib.lo else 1


def lambda_below(s: SalemPolynomial, r, inclusive: bool = False) -> bool:
    """Whether the Salem root of s is < r (or <= r when inclusive)."""
    r = Fraction(r)
    if r <= 1:
        return False
    # p < 0 on (1, lambda) and p > 0 beyond; p(r) == 0 is impossible for irreducible p
    return s.poly(r) > 0 or (inclusive and s.poly(r) == 0)


def truncated_lambda(s: SalemPolynomial, digits: int = 5) -> str:
    """Salem root truncated (not rounded) to ``digits`` decimals."""
    scale = 10**digits
    iv = s.interval
    while math.floor(iv.lo * scale) != math.floor(iv.hi * scale):
        iv = refine_root(s.poly, iv, iv.width / 2)
    n = math.floor(iv.lo * scale)
    return f"{n // scale}.{n % scale:0{digits}d}"


# -- enumeration -----------------------------------------------------------

_SLACK = 1e-6


def _next_coefficient_range(prefix: list[int], d: int, a: float, b: float) -> range:
    """Integers c such that prefix + [c] can still start a degree-d monic
    polynomial with all roots in [a, b].

    The (d - j)-th derivative of T depends only on its first j + 1
    coefficients and, by Rolle, must also have all roots in [a, b].  The new
    coefficient enters that derivative as an additive constant, so the sign
    alternation at its critical points and at a, b cuts out an interval.
    """
    j = len(prefix)
    m = d - j
    base = np.array([c * math.perm(d - i, m) for i, c in enumerate(prefix)] + [0], dtype=float)
    weight = math.factorial(m)
    points = [a, b]
    if j >= 2:
        points += [z.real for z in np.roots(np.polyder(base))]
    points.sort()
    lo, hi = -math.inf, math.inf
    n = len(points)
    for idx, t in enumerate(points):
        val = np.polyval(base, t)
        # sign of Q_j required at t alternates down from + at b
        if (n - 1 - idx) % 2 == 0:
            lo = max(lo, -val / weight)
        else:
            hi = min(hi, -val / weight)
    if lo > hi + _SLACK * (1 + abs(hi)):
        return range(0)
    eps = _SLACK * (1 + abs(lo) + abs(hi))
    return range(math.ceil(lo - eps), math.floor(hi + eps) + 1)


def _totally_real_traces(d: int, a: float, b: float, prefix=(1,)):
    stack = [list(prefix)]
    while stack:
        c = stack.pop()
        if len(c) == d + 1:
            yield tuple(c)
            continue
        for v in reversed(_next_coefficient_range(c, d, a, b)):
            stack.append(c + [v])


def _certify_subtree(args) -> list[SalemPolynomial]:
    d, prefix, y_max = args
    out = []
    for coeffs in _totally_real_traces(d, -2.0, y_max, prefix):
        try:
            out.append(certify_salem(lift_trace(IntPoly(coeffs))))
        except NotSalem:
            pass
    return out


def _bound_lambda_float(bound) -> float:
    if isinstance(bound, SalemPolynomial):
        return float(bound.interval.hi)
    return float(Fraction(bound))


def enumerate_salem(max_degree: int, bound, inclusive: bool = False, jobs: int = 1) -> list[SalemPolynomial]:
    """All Salem numbers of degree <= max_degree below ``bound``, ascending.

    ``bound`` is either a certified SalemPolynomial (compared exactly) or a
    rational number.  Trace polynomials are searched with all roots in
    [-2, y_max], y_max = bound + 1/bound; each survivor is lifted and
    certified.
    """
    if max_degree < 4 or max_degree > 10 or max_degree % 2:
        raise ValueError(f"max_degree must be one of 4, 6, 8, 10, got {max_degree}")
    if isinstance(bound, SalemPolynomial):
        if not lambda_below(bound, LAMBDA_MAX, inclusive=True):
            raise ValueError("bound exceeds the supported envelope lambda <= 3")
    else:
        bound = Fraction(bound)
        if bound > LAMBDA_MAX:
            raise ValueError(f"bound {bound} exceeds the supported envelope lambda <= 3")
        if bound <= 1:
            return []
    lam = _bound_lambda_float(bound)
    y_max = lam + 1 / lam + 1e-9

    tasks = []
    for d in range(2, max_degree // 2 + 1):
        for c1 in _next_coefficient_range([1], d, -2.0, y_max):
            tasks.append((d, (1, c1), y_max))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_certify_subtree, tasks))
    else:
        chunks = [_certify_subtree(t) for t in tasks]

    found = []
    for chunk in chunks:
        for s in chunk:
            if _within(s, bound, inclusive):
                found.append(s)
    found.sort(key=functools.cmp_to_key(compare_lambda))
    return found


def _within(s: SalemPolynomial, bound, inclusive: bool) -> bool:
    if isinstance(bound, SalemPolynomial):
        c = compare_lambda(s, bound)
        return c < 0 or (inclusive and c == 0)
    return lambda_below(s, bound, inclusive)


# -- plain-text lists ----------------------------------------------------


def parse_coefficients(tokens, lineno: int | None = None) -> IntPoly:
    where = f"line {lineno}: " if lineno is not None else ""
    coeffs = []
    for tok in tokens:
        try:
            coeffs.append(int(tok))
        except ValueError:
            raise SalemFileError(f"{where}non-integer token {tok!r}") from None
    p = IntPoly(coeffs)
    if p.is_zero():
        raise SalemFileError(f"{where}zero polynomial")
    return p


def read_salem_file(path, reverse: bool = False) -> list[IntPoly]:
    """Read one polynomial per line, leading coefficient first.

    ``reverse=True`` accepts files written constant-term first.  Nothing is
    certified here.
    """
    polys = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            tokens = line.split()
            if reverse:
                tokens = tokens[::-1]
            polys.append(parse_coefficients(tokens, lineno))
    return polys


def write_salem_file(polys, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for p in polys:
            if isinstance(p, SalemPolynomial):
                p = p.poly
            fh.write(" ".join(str(c) for c in p.coeffs) + "\n")
