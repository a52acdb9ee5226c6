import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import SMALL_MODULI, as_set, as_tuple, ring_of
from oracle import FiniteRing
from phir import (
    Z,
    Zn,
    annihilator,
    colon,
    enumerate_ideals,
    ideal_from_generators,
    make_idealization,
    make_product,
    omega_power,
    principal,
    radical,
    zero_ideal,
)
from phir.errors import UnboundedEnumeration
from phir.ideals import ideal_span_bruteforce

ZZ = Z()
Z12 = Zn(12)


def test_generation_examples():
    assert ideal_from_generators(ZZ, [4, 6]) == principal(ZZ, 2)
    assert ideal_from_generators(Z12, [8]) == principal(Z12, 4)
    for R in (ZZ, Z12, make_product([ZZ, Zn(4)])):
        assert ideal_from_generators(R, []) == zero_ideal(R)


def test_membership_examples():
    assert 8 in principal(Z12, 4)
    assert 2 not in principal(ZZ, 4)
    R = make_product([ZZ, Zn(4)])
    assert (0, 2) in ideal_from_generators(R, [(0, 2)])


def test_power_examples():
    assert principal(ZZ, 2) ** 2 == principal(ZZ, 4)
    assert principal(Z12, 2) ** 3 == principal(Z12, 4)
    assert principal(Zn(6), 3) ** 2 == principal(Zn(6), 3)


def test_omega_examples():
    assert omega_power(principal(ZZ, 2)) == zero_ideal(ZZ)
    assert omega_power(principal(Z12, 2)) == principal(Z12, 4)
    assert omega_power(principal(Zn(6), 3)) == principal(Zn(6), 3)


def test_radical_examples():
    assert radical(principal(Z12, 4)) == principal(Z12, 2)
    assert radical(principal(ZZ, 12)) == principal(ZZ, 6)
    assert radical(zero_ideal(ZZ)) == zero_ideal(ZZ)


def test_colon_and_annihilator_examples():
    assert colon(principal(Z12, 4), 2) == principal(Z12, 2)
    assert annihilator(Z12, 2) == principal(Z12, 6)
    assert annihilator(Z12, 5) == zero_ideal(Z12)


def test_enumeration_examples():
    ideals = enumerate_ideals(Z12)
    assert [I.text() for I in ideals] == ["gen", "gen 1", "gen 2", "gen 3", "gen 4", "gen 6"]
    assert len(enumerate_ideals(make_product([Zn(2), Zn(2)]))) == 4
    partial = enumerate_ideals(ZZ, 3)
    assert [I.text() for I in partial] == ["gen", "gen 1", "gen 2", "gen 3"]
    assert partial.partial and partial.bound == 3
    with pytest.raises(UnboundedEnumeration):
        enumerate_ideals(ZZ)


@pytest.mark.parametrize("moduli", SMALL_MODULI)
def test_enumeration_matches_oracle(moduli):
    R = ring_of(moduli)
    O = FiniteRing(moduli)
    assert sorted(map(sorted, (as_set(I) for I in enumerate_ideals(R)))) == sorted(map(sorted, O.ideals))


@pytest.mark.parametrize("moduli", SMALL_MODULI)
def test_arithmetic_matches_oracle(moduli):
    R = ring_of(moduli)
    O = FiniteRing(moduli)
    ideals = enumerate_ideals(R)
    for I in ideals:
        S = as_set(I)
        assert as_set(radical(I)) == O.radical(S)
        assert as_set(omega_power(I)) == O.omega(S)
        for k in (2, 3):
            assert as_set(I**k) == O.ideal_power(S, k)
        for x in R.elements()[:: max(1, R.size // 6)]:
            assert as_set(colon(I, x)) == O.colon(S, [as_tuple(R, x)])
            assert as_set(annihilator(R, x)) == O.ann([as_tuple(R, x)])
    for I, J in itertools.product(ideals, repeat=2):
        S, T = as_set(I), as_set(J)
        assert as_set(I * J) == O.product(S, T)
        assert as_set(I & J) == S & T
        assert as_set(I + J) == O.span(list(S | T))
        assert (I <= J) == (S <= T)


@pytest.mark.parametrize("n", [2, 4, 6])
def test_table_ideals_match_span(n):
    R = make_idealization(Zn(n))
    for I in enumerate_ideals(R):
        assert frozenset(I.elements()) == ideal_span_bruteforce(R, I.generators())
    for x in R.elements():
        I = principal(R, x)
        assert frozenset(I.elements()) == ideal_span_bruteforce(R, [x])


@pytest.mark.parametrize("moduli", SMALL_MODULI)
def test_regeneration_idempotent(moduli):
    R = ring_of(moduli)
    for I in enumerate_ideals(R):
        assert ideal_from_generators(R, I.generators()) == I
        assert ideal_from_generators(R, I.elements()) == I


@pytest.mark.parametrize("moduli", [(2, 3), (4, 6), (3, 9), (2, 2), (6, 10)])
def test_product_enumeration_is_product_of_components(moduli):
    R = ring_of(moduli)
    per = [len(enumerate_ideals(Zn(n))) for n in moduli]
    ideals = enumerate_ideals(R)
    assert len(ideals) == per[0] * per[1]
    for I in ideals:
        parts = [I.component(i) for i in range(R.arity)]
        assert {tuple(R.parts(x)) for x in I.elements()} == {
            (u[0], v[0]) for u in as_set(parts[0]) for v in as_set(parts[1])
        }


z_gens = st.integers(-60, 60)


@given(st.lists(z_gens, max_size=4), st.integers(2, 3))
def test_radical_laws_on_z(gens, n):
    I = ideal_from_generators(ZZ, gens)
    r = radical(I)
    assert I <= r
    assert radical(r) == r
    assert radical(I**n) == r


@given(st.integers(0, 60), st.integers(-60, 60))
def test_colon_monotone_on_z(d, x):
    I = principal(ZZ, d)
    assert I <= colon(I, x)
    assert colon(I, 1) == I and colon(I, -1) == I


@given(st.sampled_from([m for m in SMALL_MODULI if len(m) == 1]), st.data())
def test_radical_and_colon_laws_finite(moduli, data):
    R = ring_of(moduli)
    ideals = enumerate_ideals(R)
    I = data.draw(st.sampled_from(ideals))
    x = data.draw(st.sampled_from(R.elements()))
    r = radical(I)
    assert I <= r and radical(r) == r
    assert radical(I**2) == r and radical(I**3) == r
    assert I <= colon(I, x)
    if R.is_unit(x):
        assert colon(I, x) == I
