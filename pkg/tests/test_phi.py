import pytest

from conftest import PACKAGE_PHIS, SMALL_MODULI, as_set, ring_of
from oracle import FiniteRing, phi_of
from phir import (
    EMPTY,
    PhiCustom,
    PhiEmpty,
    PhiIdentity,
    PhiLocalizationInduced,
    PhiOmega,
    PhiPower,
    PhiQuotientInduced,
    PhiZero,
    Z,
    Zn,
    enumerate_ideals,
    ideal_from_generators,
    make_localization,
    make_product,
    make_quotient,
    order_chain_check,
    phi_apply,
    phi_leq,
    principal,
    product_power,
    zero_ideal,
)
from phir.errors import MissingCustomEntry
from phir.ideals import is_idempotent
from phir.phi import is_order_preserving, subset

ZZ = Z()
Z12 = Zn(12)


def test_apply_examples():
    assert phi_apply(PhiPower(2), principal(Z12, 2)) == principal(Z12, 4)
    assert phi_apply(PhiOmega(), principal(ZZ, 2)) == zero_ideal(ZZ)
    R = make_product([ZZ, Zn(2)])
    I = ideal_from_generators(R, [(4, 1)])
    assert phi_apply(product_power(2, 2), I) == ideal_from_generators(R, [(16, 1)])
    assert phi_apply(PhiEmpty(), I) is EMPTY
    assert phi_apply(PhiZero(), I) == zero_ideal(R)
    assert phi_apply(PhiIdentity(), I) == I


def test_leq_examples():
    assert phi_leq(PhiZero(), PhiPower(2), Z12).status.value == "holds"
    # I^2 and I^3 agree on every ideal of Z/12 (<2>^2 = <2>^3 = <4>)
    assert phi_leq(PhiPower(2), PhiPower(3), Z12).status.value == "holds"
    v = phi_leq(PhiIdentity(), PhiZero(), Z12)
    assert v.failed
    (I,) = v.witness
    assert not subset(phi_apply(PhiIdentity(), I), phi_apply(PhiZero(), I))
    # the unit ideal comes before <2> in enumeration order
    assert I.text() == "gen 1"


def test_leq_pow2_pow3_oracle():
    O = FiniteRing((12,))
    bad = [S for S in O.ideals if not phi_of(O, S, "pow:2") <= phi_of(O, S, "pow:3")]
    v = phi_leq(PhiPower(2), PhiPower(3), Z12)
    assert v.failed == bool(bad)
    if bad:
        assert as_set(v.witness[0]) in bad


@pytest.mark.parametrize("R,n", [(Z12, 4), (make_product([Zn(2), Zn(2)]), 3), (Zn(6), 2)])
def test_order_chain_examples(R, n):
    assert order_chain_check(R, n).status.value == "holds"


def test_order_chain_bounded_on_z():
    v = order_chain_check(ZZ, 3, bound=20)
    assert v.status.value == "holds_up_to" and v.bound == 20


@pytest.mark.parametrize("moduli", SMALL_MODULI)
def test_phi_matches_oracle_and_normalizes(moduli):
    R = ring_of(moduli)
    O = FiniteRing(moduli)
    for I in enumerate_ideals(R):
        for name, phi in PACKAGE_PHIS.items():
            v = phi_apply(phi, I)
            want = phi_of(O, as_set(I), name)
            if want is None:
                assert v is EMPTY
            else:
                assert v <= I
                assert as_set(v) == want


@pytest.mark.parametrize("moduli", SMALL_MODULI)
def test_power_of_idempotent_is_identity(moduli):
    R = ring_of(moduli)
    for I in enumerate_ideals(R):
        if is_idempotent(I):
            for n in range(1, 6):
                assert phi_apply(PhiPower(n), I) == I


@pytest.mark.parametrize("moduli", SMALL_MODULI)
def test_omega_is_stable_power(moduli):
    R = ring_of(moduli)
    for I in enumerate_ideals(R):
        k = 1
        while I ** (k + 1) != I**k:
            k += 1
        w = phi_apply(PhiOmega(), I)
        for j in range(k, k + 4):
            assert w == phi_apply(PhiPower(j), I)


@pytest.mark.parametrize("moduli", [(12,), (8,), (2, 6), (4, 9), (36,)])
def test_quotient_induced_inside(moduli):
    R = ring_of(moduli)
    for I in enumerate_ideals(R):
        if not I.is_proper:
            continue
        q = make_quotient(R, I)
        for base in PACKAGE_PHIS.values():
            phi_I = PhiQuotientInduced(base, q)
            for K in enumerate_ideals(q.ring):
                v = phi_I(K)
                assert v is EMPTY or v <= K
                raw = phi_I.raw(K)
                if phi_apply(base, q.lift(K)) is EMPTY:
                    assert raw is EMPTY


def test_quotient_induced_formula():
    q = make_quotient(Z12, principal(Z12, 4))
    phi_I = PhiQuotientInduced(PhiPower(2), q)
    K = principal(q.ring, 2)
    # (phi(J) + I)/I with J = <2>: <4> + <4> = <4> -> zero in Z/4
    assert phi_I(K) == zero_ideal(q.ring)


def test_localization_induced():
    lm = make_localization(ZZ, [2])
    phi_S = PhiLocalizationInduced(PhiPower(2), lm)
    J = principal(lm.ring, 3)
    assert phi_S(J) == principal(lm.ring, 9)
    assert PhiLocalizationInduced(PhiEmpty(), lm)(J) is EMPTY


def test_custom_table_and_monotonicity():
    ideals = enumerate_ideals(Zn(4))
    zero, one, two = ideals
    # a non order-preserving map: <2> -> <2>, everything else -> empty
    phi = PhiCustom({zero: EMPTY, one: EMPTY, two: two}, "odd")
    assert phi_apply(phi, two) == two
    assert phi_apply(phi, zero) is EMPTY
    v = is_order_preserving(phi, Zn(4))
    assert v.failed
    assert is_order_preserving(PhiPower(2), Zn(12)).ok
    with pytest.raises(MissingCustomEntry):
        phi_apply(PhiCustom({two: two}), zero)
