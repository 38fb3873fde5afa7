import random

import pytest
from hypothesis import given, strategies as st

from enriques_salem.arith import IntPoly, cyclotomic
from enriques_salem.gf2 import (
    F1, F3, F5, F7, F9, F15, F7_1, F7_2, F15_1, F15_2,
    F2Factorization,
    F2Poly,
    f2_factor,
    f2_is_irreducible,
    reduce_mod2,
    unit_root_multiplicity,
)

from oracles import f2_trial_irreducible

P = F2Poly.from_coeffs


def test_reduce_mod2_examples():
    hesse = IntPoly([1, -6, -7, -9, -6, -10, -6, -9, -7, -6, 1])
    assert reduce_mod2(hesse) == P([1, 0, 1, 1, 0, 0, 0, 1, 1, 0, 1])
    assert reduce_mod2(hesse) == F5 * F3 * F1**4
    square_fail = IntPoly([1, -1, -1, 0, 0, 0, 0, 0, -1, -1, 1])
    assert reduce_mod2(square_fail) == P([1, 1, 1, 0, 0, 0, 0, 0, 1, 1, 1])
    assert reduce_mod2(IntPoly([2, 1, 0])) == P([1, 0])


def test_named_constants_are_cyclotomic_reductions():
    for m, f in ((1, F1), (2, F1), (3, F3), (5, F5), (7, F7), (9, F9), (15, F15)):
        assert reduce_mod2(cyclotomic(m)) == f
    assert F7 == F7_1 * F7_2 and F15 == F15_1 * F15_2
    assert str(F15) == "x^8 + x^7 + x^5 + x^4 + x^3 + x + 1"
    for half in (F7_1, F7_2, F15_1, F15_2):
        assert f2_is_irreducible(half) and not half.is_reciprocal()
    assert F7_1.reverse() == F7_2 and F15_1.reverse() == F15_2


# (m, factors as coefficient lists with multiplicities) from the table of
# mod-2 decompositions of the degree-12 cyclotomic polynomials
LEMMA_TABLE = [
    (42, {(1, 0, 1, 0, 1, 1, 1): 1, (1, 1, 1, 0, 1, 0, 1): 1}),
    (21, {(1, 0, 1, 0, 1, 1, 1): 1, (1, 1, 1, 0, 1, 0, 1): 1}),
    (36, {(1, 0, 0, 1, 0, 0, 1): 2}),
    (28, {(1, 0, 1, 1): 2, (1, 1, 0, 1): 2}),
    (26, {(1,) * 13: 1}),
    (13, {(1,) * 13: 1}),
]


@pytest.mark.parametrize("m, expected", LEMMA_TABLE)
def test_degree12_cyclotomic_reductions(m, expected):
    fact = f2_factor(reduce_mod2(cyclotomic(m)))
    assert {g.coeffs: e for g, e in fact} == expected


def test_factor_examples():
    assert f2_factor(P([1, 0, 1])).factors == ((F1, 2),)
    assert f2_factor(reduce_mod2(cyclotomic(36))).factors == ((F9, 2),)
    assert f2_factor(reduce_mod2(cyclotomic(28))).factors == ((F7_1, 2), (F7_2, 2))


def test_factor_rejects_constants():
    with pytest.raises(ValueError):
        f2_factor(F2Poly(1))
    with pytest.raises(ValueError):
        f2_factor(F2Poly(0))


@pytest.mark.parametrize(
    "poly, expected",
    [(F9, True), (F15_1, True), (P([1, 0, 1]), False), (F1, True), (F15, False), (F2Poly(0b10), True)],
)
def test_is_irreducible_examples(poly, expected):
    assert f2_is_irreducible(poly) is expected


def test_unit_root_multiplicity_examples():
    assert unit_root_multiplicity(reduce_mod2(IntPoly([1, -1]) ** 12)) == 12
    assert unit_root_multiplicity(reduce_mod2(cyclotomic(8))) == 4
    assert unit_root_multiplicity(reduce_mod2(cyclotomic(7))) == 0


def test_factorization_roundtrip_exhaustive():
    """Every polynomial of degree 1..12: product reproduces it, factors are
    irreducible by trial division, and ordering is canonical."""
    irreducible_cache = {}
    for bits in range(2, 1 << 13):
        p = F2Poly(bits)
        fact = f2_factor(p)
        assert fact.product() == p, bits
        keys = [g.sort_key() for g, _ in fact]
        assert keys == sorted(keys) and len(set(keys)) == len(keys)
        for g, e in fact:
            assert e >= 1
            if g.bits not in irreducible_cache:
                irreducible_cache[g.bits] = f2_trial_irreducible(g.bits)
            assert irreducible_cache[g.bits], (bits, g)
        assert f2_is_irreducible(p) == (len(fact) == 1 and fact.factors[0][1] == 1)


def test_factorization_is_deterministic():
    rng = random.Random(7)
    for _ in range(200):
        p = F2Poly(rng.getrandbits(40) | (1 << 40))
        assert f2_factor(p) == f2_factor(p)
        assert f2_factor(p).product() == p


int_coeffs = st.lists(st.integers(-40, 40), min_size=1, max_size=12)


@given(int_coeffs, int_coeffs)
def test_reduction_is_a_ring_homomorphism(a, b):
    pa, pb = IntPoly(a), IntPoly(b)
    assert reduce_mod2(pa * pb) == reduce_mod2(pa) * reduce_mod2(pb)
    assert reduce_mod2(pa + pb) == reduce_mod2(pa) + reduce_mod2(pb)


def test_x_plus_one_divides_reduction_iff_power_of_two():
    for m in range(1, 121):
        is_pow2 = m & (m - 1) == 0
        assert (unit_root_multiplicity(reduce_mod2(cyclotomic(m))) > 0) == is_pow2, m


def test_reduction_of_phi_2e_m_is_power_of_phi_m():
    for m in (1, 3, 5, 7, 9, 15):
        for e in (1, 2, 3):
            red = reduce_mod2(cyclotomic(2**e * m))
            fm = reduce_mod2(cyclotomic(m))
            assert red == fm ** (2 ** (e - 1)), (m, e)


def test_factorization_equality_and_str():
    a = F2Factorization(((F3, 1), (F1, 2)))
    b = F2Factorization(((F1, 1), (F3, 1), (F1, 1)))
    assert a == b
    assert str(a) == "(x + 1)^2*(x^2 + x + 1)"
    assert a.multiplicity(F5) == 0


def test_arithmetic():
    assert divmod(F7, F7_1) == (F7_2, F2Poly(0))
    assert F2Poly(0b1101).derivative() == F2Poly(0b100)
    assert F2Poly(0b1011).derivative() == F2Poly(0b101)
    assert (F3 * F3).sqrt() == F3
    with pytest.raises(ValueError):
        F3.sqrt()
