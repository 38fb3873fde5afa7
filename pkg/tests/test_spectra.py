import itertools
import math

import pytest

from enriques_salem.arith import IntPoly, cyclotomic
from enriques_salem.gf2 import (
    F1, F3, F5, F7, F9, F15, F7_1, F7_2,
    F2Factorization,
    F2Poly,
    f2_factor,
    reduce_mod2,
)
from enriques_salem.spectra import (
    CyclotomicProfile,
    FORBIDDEN_PM_REDUCTIONS,
    admissible_orders,
    divisor_closure,
    enumerate_profiles,
    forbidden_pM_reduction,
    lemma_a_check,
    lemma_b_check,
    maximal_under_divisibility,
    order_divisibility,
    order_exclusion_check,
    pM_parity_obstructed,
    trace_profile,
)

from oracles import expand_product, naive_multisets, sympy_totient

THIRTY_ONE = {
    120, 90, 84, 72, 60, 56, 48, 45, 42, 40, 36, 30, 28, 24, 21, 20,
    18, 16, 15, 14, 12, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1,
}
MAXIMAL = (120, 90, 84, 72, 56, 48)


@pytest.fixture(scope="module")
def catalog12():
    return admissible_orders(12)


def prof(*ms, rank=None):
    return CyclotomicProfile(ms, rank if rank is not None else sum(sympy_totient(m) for m in ms))


def test_enumerate_profiles_rank2():
    got = {p.indices for p in enumerate_profiles(2, 2)}
    assert got == {(3,), (4,), (6,), (1, 1), (1, 2), (2, 2)}


def test_enumerate_profiles_rank12_examples():
    got = {p.indices for p in enumerate_profiles(12, 8)}
    assert (8, 15) in got
    assert not any(11 in t or 22 in t for t in got)
    assert len(got) == 1402
    assert sum(1 for _ in enumerate_profiles(12)) == 1420


@pytest.mark.parametrize("rank", range(1, 7))
def test_enumerate_profiles_matches_brute_force(rank):
    listed = [p.indices for p in enumerate_profiles(rank)]
    assert len(listed) == len(set(listed))
    assert listed == sorted(listed)
    assert set(listed) == naive_multisets(rank, sympy_totient)


def test_enumerate_profiles_rejects_nonpositive_rank():
    with pytest.raises(ValueError):
        list(enumerate_profiles(0))


def test_profile_validation_and_derived_fields():
    p = prof(8, 15)
    assert p.order == 120
    assert p.char_poly == cyclotomic(8) * cyclotomic(15)
    assert p.char_poly.degree == 12
    with pytest.raises(ValueError):
        CyclotomicProfile((7,), 12)


def test_char_poly_agrees_with_independent_expansion():
    for p in itertools.islice(enumerate_profiles(12, 8), 0, None, 37):
        polys = [list(cyclotomic(m).coeffs) for m in p.indices]
        assert list(p.char_poly.coeffs) == expand_product(polys)


@pytest.mark.parametrize(
    "ms, expected", [((1,) * 12, True), ((7, 7), False), ((8, 15), True)]
)
def test_lemma_a_examples(ms, expected):
    assert lemma_a_check(prof(*ms)) is expected


@pytest.mark.parametrize(
    "ms, expected", [((9, 5, 1, 2), True), ((7, 7), True), ((8, 3, 5, 4), False)]
)
def test_lemma_b_examples(ms, expected):
    assert lemma_b_check(prof(*ms)) is expected


def test_lemma_b_matches_direct_evaluation():
    for p in enumerate_profiles(8):
        cp = p.char_poly
        v = cp(1) * cp(-1)
        assert lemma_b_check(p) == (v == 0 or (v > 0 and math.isqrt(v) ** 2 == v))


@pytest.mark.parametrize("order, expected", [(35, False), (70, False), (11, False), (22, False), (120, True), (1, True)])
def test_order_exclusion_examples(order, expected):
    assert order_exclusion_check(order) is expected


def test_admissible_orders_rank12(catalog12):
    assert set(catalog12.orders) == THIRTY_ONE
    assert catalog12.maximal == MAXIMAL
    assert set(divisor_closure(MAXIMAL)) == THIRTY_ONE


def test_orders_never_include_11_13_22_26(catalog12):
    assert not {11, 13, 22, 26} & set(catalog12.orders)


def test_witnesses_and_exhaustiveness(catalog12):
    for o, w in catalog12.witnesses.items():
        t = trace_profile(w)
        assert t.passed and t.order == o
    attained = {t.order for t in catalog12.traces if t.passed}
    assert attained == set(catalog12.orders)


def test_traces_are_deterministic(catalog12):
    again = admissible_orders(12)
    assert [str(t) for t in again.traces] == [str(t) for t in catalog12.traces]


def test_rank2_against_brute_force():
    def passes(ms):
        cp = IntPoly([1])
        for m in ms:
            cp = cp * cyclotomic(m)
        red = f2_factor(reduce_mod2(cp))
        v = cp(1) * cp(-1)
        order = math.lcm(*ms)
        return (
            red.multiplicity(F1) >= 2
            and (v == 0 or (v > 0 and math.isqrt(v) ** 2 == v))
            and order not in {11, 22, 35, 70}
        )

    want = {math.lcm(*ms) for ms in naive_multisets(2, sympy_totient) if passes(ms)}
    assert set(admissible_orders(2).orders) == want == {1, 2, 4}


def test_maximal_and_closure_helpers():
    assert maximal_under_divisibility([1, 2, 3, 4, 6, 12, 5]) == (12, 5)
    assert divisor_closure([6]) == (1, 2, 3, 6)


def lift(f2):
    return IntPoly(list(f2.coeffs))


def test_forbidden_pM_examples():
    f5f7 = F5 * F7
    assert f5f7 == F2Poly.from_coeffs([1, 0, 1, 0, 1, 1, 1, 0, 1, 0, 1])
    assert forbidden_pM_reduction(lift(f5f7))
    # a different integer lift of the same reduction
    other = IntPoly([1, 2, 3, 0, -1, 5, -1, 0, 3, 2, 1])
    assert reduce_mod2(other) == f5f7 and forbidden_pM_reduction(other)
    hesse = IntPoly([1, -6, -7, -9, -6, -10, -6, -9, -7, -6, 1])
    assert not forbidden_pM_reduction(hesse)
    assert not forbidden_pM_reduction(IntPoly([1, -1]) ** 10)


def test_forbidden_pM_shape_errors():
    with pytest.raises(ValueError):
        forbidden_pM_reduction(IntPoly([1, -1, -2, -1, 1]))
    with pytest.raises(ValueError):
        forbidden_pM_reduction(IntPoly([1, 2] + [0] * 9))
    with pytest.raises(ValueError):
        pM_parity_obstructed(IntPoly([1, 0, 1]))


def test_forbidden_set_contents():
    f11 = reduce_mod2(cyclotomic(11))
    assert set(FORBIDDEN_PM_REDUCTIONS) == {F5 * F7, f11, F3**5, F3**2 * F9, F3 * F5**2, F3 * F15}
    assert all(f.degree == 10 and f.is_reciprocal() for f in FORBIDDEN_PM_REDUCTIONS)


def reciprocal_degree10():
    out = []
    for bits in range(1 << 5):
        a = [1] + [(bits >> i) & 1 for i in range(4)]
        coeffs = a + [(bits >> 4) & 1] + a[::-1]
        out.append(F2Poly.from_coeffs(coeffs))
    return out


def f_products_degree10():
    """Reciprocal degree-10 products of F_m with phi(m) <= 10."""
    pieces = [reduce_mod2(cyclotomic(m)) for m in (1, 3, 5, 7, 9, 11, 15)]
    out = set()

    def walk(start, acc, deg):
        if deg == 10:
            if acc.is_reciprocal():
                out.add(acc)
            return
        for i in range(start, len(pieces)):
            if deg + pieces[i].degree <= 10:
                walk(i, acc * pieces[i], deg + pieces[i].degree)

    walk(0, F2Poly(1), 0)
    return out


def test_parity_characterization():
    polys = reciprocal_degree10()
    assert len(set(polys)) == 32
    products = f_products_degree10()
    for f in polys:
        forbidden = forbidden_pM_reduction(lift(f))
        parity = pM_parity_obstructed(lift(f))
        if forbidden:
            assert parity, f
        if f in products:
            assert forbidden == parity, f
    # the only parity-obstructed reductions outside the forbidden list are
    # irreducible, so they are not products of F_m
    extra = {f for f in polys if pM_parity_obstructed(lift(f)) and not forbidden_pM_reduction(lift(f))}
    assert len(extra) == 2 and not extra & products
    assert all(len(f2_factor(f)) == 1 for f in extra)


@pytest.mark.parametrize(
    "fact, expected",
    [
        (F2Factorization(((F5, 1), (F3, 1), (F1, 4))), 15),
        (F2Factorization(((F3, 2), (F7_1, 1), (F7_2, 1))), 21),
        (F2Factorization(((F1, 12),)), 1),
        (F2Factorization(((F9, 1), (F1, 4))), 9),
    ],
)
def test_order_divisibility_examples(fact, expected):
    assert order_divisibility(fact) == expected


def test_order_divisibility_rejects_foreign_factor():
    with pytest.raises(ValueError):
        order_divisibility(f2_factor(reduce_mod2(cyclotomic(11))))
