import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import SMALL_MODULI, as_tuple, ring_of
from oracle import FiniteRing
from phir import (
    LocZ,
    QuotientModule,
    RegularModule,
    Z,
    Zn,
    build_ring,
    is_regular,
    is_total_quotient_ring,
    make_idealization,
    make_localization,
    make_product,
    make_quotient,
    principal,
    zero_ideal,
    zerodivisors,
)
from phir.constructions import idealization_atom
from phir.errors import EmptyProduct, InfiniteIdealizationBase, NonRegularDenominator, SemanticError
from phir.ringspec import IdealSpec, Quotient, ZAtom, ZnAtom, canonical
from phir.ideals import ideal_from_generators


def test_zn_size():
    assert Zn(6).size == 6
    assert len(Zn(6).elements()) == 6


def test_quotient_of_z_normalizes():
    assert canonical(Quotient(ZAtom(), IdealSpec((12,)))) == ZnAtom(12)
    assert make_quotient(Z(), principal(Z(), 12)).ring == Zn(12)


def test_idealization_of_z2_table():
    R = make_idealization(Zn(2), RegularModule())
    assert sorted(R.elements()) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert R.mul((0, 1), (0, 1)) == (0, 0)


@pytest.mark.parametrize("n", [2, 3, 4, 6])
def test_idealization_axioms_bruteforce(n):
    R = make_idealization(Zn(n))
    els = R.elements()
    for x in els:
        assert R.mul(x, R.one) == x
        for y in els:
            assert R.mul(x, y) == R.mul(y, x)
            for z in els[:: max(1, len(els) // 5)]:
                assert R.mul(R.mul(x, y), z) == R.mul(x, R.mul(y, z))
                assert R.mul(x, R.add(y, z)) == R.add(R.mul(x, y), R.mul(x, z))


def test_regular_examples():
    assert is_regular(Zn(12), 5)
    assert not is_regular(Zn(12), 2)
    assert is_regular(make_product([Z(), Zn(2)]), (2, 1))


def test_zerodivisor_sets():
    assert zerodivisors(Zn(6)) == frozenset({0, 2, 3, 4})
    zd = zerodivisors(Z())
    assert 0 in zd and 2 not in zd and -7 not in zd
    assert zerodivisors(make_idealization(Zn(2))) == frozenset({(0, 0), (0, 1)})


def test_total_quotient_ring():
    assert is_total_quotient_ring(Zn(12)).status.value == "holds"
    assert is_total_quotient_ring(Z()).witness == (2,)
    assert is_total_quotient_ring(make_product([Z(), Zn(4)])).witness == ((2, 1),)


def test_products():
    R = make_product([Z(), Zn(2)])
    assert R.mul((3, 1), (2, 1)) == (6, 1)
    assert make_product([Zn(2), Zn(3)]).size == 6
    nested = make_product([make_product([Z(), Zn(2)]), Zn(3)])
    assert nested.arity == 3
    with pytest.raises(EmptyProduct):
        make_product([])


def test_quotients():
    assert make_quotient(Zn(12), principal(Zn(12), 4)).ring.size == 4
    R = make_product([Z(), Zn(4)])
    q = make_quotient(R, ideal_from_generators(R, [(2, 2)]))
    assert q.ring == make_product([Zn(2), Zn(2)])


def test_idealization_sizes():
    assert make_idealization(Zn(4)).size == 16
    a = make_idealization(Zn(2), QuotientModule(zero_ideal(Zn(2))))
    b = make_idealization(Zn(2), RegularModule())
    assert a == b
    with pytest.raises(InfiniteIdealizationBase):
        make_idealization(Z())


def test_localization_examples():
    lm = make_localization(Z(), [2])
    I = principal(Z(), 3)
    assert lm.ring == LocZ([2])
    assert lm.contract(lm.extend(I)) == I
    assert make_localization(Zn(12), [5]).ring == Zn(12)
    lm6 = make_localization(Z(), [6])
    assert not lm6.extend(principal(Z(), 4)).is_proper
    with pytest.raises(NonRegularDenominator):
        make_localization(Zn(12), [2])


def test_zn_one_rejected():
    with pytest.raises(SemanticError):
        ZnAtom(1)


@pytest.mark.parametrize("moduli", SMALL_MODULI)
def test_regular_iff_unit_on_finite_rings(moduli):
    R = ring_of(moduli)
    O = FiniteRing(moduli)
    for x in R.elements():
        t = as_tuple(R, x)
        assert R.is_regular(x) == R.is_unit(x) == O.is_regular(t) == O.is_unit(t)


@given(st.integers(-50, 50), st.integers(0, 11), st.sampled_from([4, 6, 9, 12]))
def test_product_regular_componentwise(a, b, n):
    R = make_product([Z(), Zn(n)])
    assert is_regular(R, (a, b)) == (is_regular(Z(), a) and is_regular(Zn(n), b))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 8, 9, 12])
def test_idealization_zerodivisor_formula(n):
    R = make_idealization(Zn(n))
    brute = frozenset(x for x in R.elements() if any(R.mul(x, y) == R.zero for y in R.elements() if y != R.zero))
    assert brute == zerodivisors(R) == idealization_atom(R).zerodivisor_formula()


@pytest.mark.parametrize("n", range(2, 61))
def test_quotient_matches_zn(n):
    Q = make_quotient(Z(), principal(Z(), n))
    assert Q.ring == Zn(n)
    built = build_ring(Quotient(ZAtom(), IdealSpec((n,))))
    for x in range(n):
        for y in range(0, n, max(1, n // 7)):
            assert built.mul(x, y) == Zn(n).mul(x, y) == (x * y) % n
            assert built.add(x, y) == (x + y) % n


@pytest.mark.parametrize("moduli", [(12,), (2, 2), (4, 6), (9,)])
def test_localization_at_units_is_identity(moduli):
    R = ring_of(moduli)
    units = [x for x in R.elements() if R.is_unit(x)]
    lm = make_localization(R, units)
    assert lm.ring == R
    for x in R.elements():
        assert lm(x) == x
