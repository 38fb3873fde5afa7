"""Independent oracles for the property suites.

Nothing here imports the package's root-finding, factoring or certification
code; polynomials are plain coefficient lists, leading coefficient first.
"""

import itertools
import math

import mpmath
import numpy as np
import sympy


def expand_product(polys):
    out = [1]
    for p in polys:
        out = list(np.convolve(out, p).astype(object))
    return [int(c) for c in out]


def numeric_roots(coeffs, dps=60):
    with mpmath.workdps(dps):
        return mpmath.polyroots(coeffs, maxsteps=400, extraprec=4 * dps)


def distinct_real_root_count(coeffs):
    """Distinct real roots via sympy's squarefree part and high-precision roots."""
    x = sympy.Symbol("x")
    p = sympy.Poly(coeffs, x)
    sq = sympy.Poly(sympy.quo(p, sympy.gcd(p, p.diff(x))), x)
    if sq.degree() < 1:
        return 0
    cs = [int(c) for c in sq.all_coeffs()]
    roots = numeric_roots(cs)
    with mpmath.workdps(60):
        return sum(1 for r in roots if abs(mpmath.im(r)) < mpmath.mpf(10) ** -25)


def root_subset_irreducible(coeffs):
    """Monic integer polynomial irreducible over Z, by trying every subset of
    its numerical roots as a candidate factor (rounded, then divided exactly)."""
    n = len(coeffs) - 1
    if n <= 1:
        return True
    roots = np.roots(np.array(coeffs, dtype=float))
    x = sympy.Symbol("x")
    p = sympy.Poly(coeffs, x)
    for k in range(1, n // 2 + 1):
        for subset in itertools.combinations(range(n), k):
            cand = np.poly(roots[list(subset)])
            if np.max(np.abs(cand.imag)) > 1e-4:
                continue
            rounded = [int(round(c)) for c in cand.real]
            if np.max(np.abs(cand.real - rounded)) > 1e-4:
                continue
            q, r = sympy.div(p, sympy.Poly(rounded, x))
            if r.is_zero:
                return False
    return True


def salem_layout(coeffs, tol_exp=20):
    """One root > 1, one in (0, 1), the rest within 10^-tol_exp of |z| = 1."""
    roots = numeric_roots(coeffs)
    tol = mpmath.mpf(10) ** -tol_exp
    with mpmath.workdps(60):
        real_out = [r for r in roots if abs(mpmath.im(r)) < tol and abs(abs(r) - 1) > tol]
        on_circle = [r for r in roots if abs(abs(r) - 1) <= tol]
        if len(real_out) != 2 or len(on_circle) != len(roots) - 2:
            return False
        big, small = sorted(mpmath.re(r) for r in real_out)[::-1]
        return big > 1 and 0 < small < 1


def salem_oracle(coeffs):
    """Accept iff coeffs is monic, reciprocal, of even degree >= 4, irreducible
    and with the Salem root layout."""
    if coeffs[0] != 1 or list(coeffs) != list(coeffs)[::-1]:
        return False
    n = len(coeffs) - 1
    if n < 4 or n % 2:
        return False
    if not root_subset_irreducible(coeffs):
        return False
    return salem_layout(coeffs)


def salem_root(coeffs):
    with mpmath.workdps(40):
        return max(mpmath.re(r) for r in numeric_roots(coeffs, 40) if abs(mpmath.im(r)) < 1e-20)


def naive_multisets(budget, phi):
    """All multisets of positive m (as sorted tuples) with sum phi(m) == budget."""
    ms = [m for m in range(1, 4 * budget * budget + 8) if phi(m) <= budget]
    out = set()

    def walk(start, left, acc):
        if left == 0:
            out.add(tuple(acc))
            return
        for i in range(start, len(ms)):
            if phi(ms[i]) <= left:
                walk(i, left - phi(ms[i]), acc + [ms[i]])

    walk(0, budget, [])
    return out


def f2_trial_irreducible(bits):
    """Irreducible over GF(2) iff no polynomial of degree 1..deg/2 divides it."""
    n = bits.bit_length() - 1
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for g in range(1 << d, 1 << (d + 1)):
            r = bits
            while r.bit_length() >= g.bit_length():
                r ^= g << (r.bit_length() - g.bit_length())
            if r == 0:
                return False
    return True


def sympy_totient(n):
    return int(sympy.totient(n))


def isqrt_square(n):
    return n >= 0 and math.isqrt(n) ** 2 == n
