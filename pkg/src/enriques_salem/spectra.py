"""Possible finite orders of the anti-invariant isometry f_N.

The characteristic polynomial of f_N is a product of cyclotomic polynomials
whose degrees sum to the rank of N (12).  A *profile* is the multiset of
cyclotomic indices.  A profile survives when

* its mod-2 reduction is divisible by (x + 1)^2,
* p(1) * p(-1) is zero or a square,
* its order (the lcm of the indices) is not 11, 22, 35 or 70,

and every index m has phi(m) <= max_phi (8 for the rank-12 lattice).  The
surviving orders, closed under taking divisors, are the admissible orders.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce

from .arith import IntPoly, cyclotomic, inverse_totient, is_reciprocal, totient
from .gf2 import (
    F1, F3, F5, F7, F9, F15, F7_1, F7_2, F15_1, F15_2,
    F2Factorization, reduce_mod2, unit_root_multiplicity,
)

__all__ = [
    "CyclotomicProfile",
    "FilterTrace",
    "OrderCatalog",
    "EXCLUDED_ORDERS",
    "FORBIDDEN_PM_REDUCTIONS",
    "enumerate_profiles",
    "lemma_a_check",
    "lemma_b_check",
    "order_exclusion_check",
    "trace_profile",
    "admissible_orders",
    "maximal_under_divisibility",
    "divisor_closure",
    "forbidden_pM_reduction",
    "pM_parity_obstructed",
    "order_divisibility",
    "ORDER_ATTRIBUTION",
]

EXCLUDED_ORDERS = frozenset({11, 22, 35, 70})

F11 = reduce_mod2(cyclotomic(11))

FORBIDDEN_PM_REDUCTIONS = (
    F5 * F7,
    F11,
    F3**5,
    F3**2 * F9,
    F3 * F5**2,
    F3 * F15,
)

# odd part of the cyclotomic index each irreducible mod-2 factor comes from
ORDER_ATTRIBUTION = {
    F1: 1,
    F3: 3,
    F5: 5,
    F9: 9,
    F7_1: 7,
    F7_2: 7,
    F15_1: 15,
    F15_2: 15,
}


@dataclass(frozen=True)
class CyclotomicProfile:
    indices: tuple[int, ...]
    rank_budget: int

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(sorted(self.indices)))
        if any(n < 1 for n in self.indices):
            raise ValueError(f"cyclotomic indices must be positive: {self.indices}")
        total = sum(totient(n) for n in self.indices)
        if total != self.rank_budget:
            raise ValueError(f"totient sum {total} != rank budget {self.rank_budget}")

    @property
    def order(self) -> int:
        return math.lcm(*self.indices)

    @property
    def char_poly(self) -> IntPoly:
        return reduce(lambda a, b: a * b, (cyclotomic(n) for n in self.indices), IntPoly([1]))

    def __str__(self):
        return "{" + ",".join(map(str, self.indices)) + "}"


@dataclass(frozen=True)
class FilterTrace:
    profile: CyclotomicProfile
    passed_a: bool
    passed_b: bool
    passed_phibound: bool
    passed_order_exclusion: bool
    order: int

    @property
    def passed(self) -> bool:
        return self.passed_a and self.passed_b and self.passed_phibound and self.passed_order_exclusion

    def __str__(self):
        flag = lambda b: "ok" if b else "FAIL"
        return (
            f"{self.profile}\torder={self.order}\ta={flag(self.passed_a)}\tb={flag(self.passed_b)}"
            f"\tphi={flag(self.passed_phibound)}\texcl={flag(self.passed_order_exclusion)}"
        )


def _indices_with_phi_at_most(max_phi: int) -> list[int]:
    out = []
    for v in range(1, max_phi + 1):
        out.extend(inverse_totient(v))
    return sorted(out)


def enumerate_profiles(rank_budget: int, max_phi: int | None = None):
    """Yield every profile with totient sum ``rank_budget`` and parts of totient <= max_phi.

    Profiles come out once each, in lexicographic order of their ascending
    index tuples.
    """
    if rank_budget < 1:
        raise ValueError(f"rank_budget must be >= 1, got {rank_budget}")
    if max_phi is None:
        max_phi = rank_budget
    ms = _indices_with_phi_at_most(min(max_phi, rank_budget))
    phis = [totient(m) for m in ms]

    def walk(start, left, acc):
        if left == 0:
            yield CyclotomicProfile(tuple(acc), rank_budget)
            return
        for i in range(start, len(ms)):
            if phis[i] <= left:
                acc.append(ms[i])
                yield from walk(i, left - phis[i], acc)
                acc.pop()

    yield from walk(0, rank_budget, [])


def lemma_a_check(profile: CyclotomicProfile) -> bool:
    """(x + 1)^2 divides the mod-2 reduction of the characteristic polynomial."""
    return unit_root_multiplicity(reduce_mod2(profile.char_poly)) >= 2


def _is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def lemma_b_check(profile: CyclotomicProfile) -> bool:
    """p(1) * p(-1) is zero or a perfect square."""
    value = 1
    for n in profile.indices:
        value *= cyclotomic(n)(1) * cyclotomic(n)(-1)
    return value == 0 or _is_square(value)


def order_exclusion_check(order: int) -> bool:
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    return order not in EXCLUDED_ORDERS


def trace_profile(profile: CyclotomicProfile, max_phi: int = 8) -> FilterTrace:
    return FilterTrace(
        profile=profile,
        passed_a=lemma_a_check(profile),
        passed_b=lemma_b_check(profile),
        passed_phibound=all(totient(n) <= max_phi for n in profile.indices),
        passed_order_exclusion=order_exclusion_check(profile.order),
        order=profile.order,
    )


def maximal_under_divisibility(values) -> tuple[int, ...]:
    """Elements not properly dividing any other element, descending."""
    vals = set(values)
    return tuple(sorted((v for v in vals if not any(w != v and w % v == 0 for w in vals)), reverse=True))


def divisor_closure(values) -> tuple[int, ...]:
    out = set()
    for v in values:
        out.update(d for d in range(1, v + 1) if v % d == 0)
    return tuple(sorted(out))


@dataclass(frozen=True)
class OrderCatalog:
    rank_budget: int
    max_phi: int
    orders: tuple[int, ...]
    maximal: tuple[int, ...]
    witnesses: dict = field(compare=False, repr=False)
    traces: tuple[FilterTrace, ...] = field(compare=False, repr=False)


def admissible_orders(rank_budget: int = 12, max_phi: int = 8) -> OrderCatalog:
    """Orders of profiles passing every filter, with one witness per order.

    All profiles of the rank are traced, so the phi bound shows up as a
    filter flag rather than silently shrinking the search.
    """
    traces = tuple(trace_profile(p, max_phi) for p in enumerate_profiles(rank_budget))
    witnesses: dict[int, CyclotomicProfile] = {}
    for t in traces:
        if t.passed and t.order not in witnesses:
            witnesses[t.order] = t.profile
    orders = tuple(sorted(witnesses))
    return OrderCatalog(
        rank_budget=rank_budget,
        max_phi=max_phi,
        orders=orders,
        maximal=maximal_under_divisibility(orders),
        witnesses=witnesses,
        traces=traces,
    )


def _check_pM_shape(p: IntPoly):
    if p.degree != 10:
        raise ValueError(f"expected a degree-10 polynomial, got degree {p.degree}")
    if not is_reciprocal(p):
        raise ValueError(f"{p} is not self-reciprocal")


def forbidden_pM_reduction(p: IntPoly) -> bool:
    """Whether p mod 2 is one of the six reductions ruled out for p_M."""
    _check_pM_shape(p)
    return reduce_mod2(p) in FORBIDDEN_PM_REDUCTIONS


def pM_parity_obstructed(p: IntPoly) -> bool:
    """a5, a0 + a2 + a4 and a6 + a8 + a10 all odd (a_i = coefficient of x^i).

    Under this parity p(1)p(-1) = 3 mod 8, which no p_M can satisfy.
    """
    _check_pM_shape(p)
    a = p.coeffs[::-1]
    return bool(a[5] % 2 and (a[0] + a[2] + a[4]) % 2 and (a[6] + a[8] + a[10]) % 2)


def order_divisibility(fact: F2Factorization) -> int:
    """Integer forced to divide ord(f_N) by the factors present in a mod-2 reduction."""
    out = 1
    for g, _ in fact:
        if g not in ORDER_ATTRIBUTION:
            raise ValueError(f"irreducible factor {g} cannot divide any admissible p_N mod 2")
        out = math.lcm(out, ORDER_ATTRIBUTION[g])
    return out
