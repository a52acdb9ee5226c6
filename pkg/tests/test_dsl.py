import pytest
from hypothesis import given
from hypothesis import strategies as st

from fixtures import BAD_RINGS, CORPUS_TEXTS, IDEAL_TEXTS, RING_TEXTS
from phir import PhiEmpty, PhiOmega, PhiPower, PhiProduct, PhiZero, Z, Zn, make_product, principal
from phir.dsl import parse_corpus, parse_ideal, parse_phi, parse_ring, parse_ring_spec, ring_from_text
from phir.errors import ParseError, PhirError, RingMismatch, SemanticError
from phir.ringspec import Idealization, Product, RegularModule, ZAtom, ZnAtom, build_ring, print_ring


def test_ring_examples():
    assert parse_ring_spec("Z/12") == ZnAtom(12)
    assert parse_ring_spec("Z x Z/4") == Product((ZAtom(), ZnAtom(4)))
    assert parse_ring_spec("idealize(Z/2)") == Idealization(ZnAtom(2), RegularModule())


def test_ideal_examples():
    R = ring_from_text("Z x Z/4")
    I = parse_ideal("gen (0,2)", R)
    assert I.component(0).is_zero and I.component(1) == principal(Zn(4), 2)
    assert parse_ideal("gen 4, 6", Z()) == principal(Z(), 2)
    assert parse_ideal("gen", Zn(12)).is_zero


@pytest.mark.parametrize("text", RING_TEXTS)
def test_ring_round_trip(text):
    spec = parse_ring_spec(text)
    printed = print_ring(spec)
    assert parse_ring_spec(printed) == spec
    assert print_ring(parse_ring_spec(printed)) == printed
    assert build_ring(parse_ring_spec(printed)) == build_ring(spec)


@pytest.mark.parametrize("ring,text", IDEAL_TEXTS)
def test_ideal_round_trip(ring, text):
    R = ring_from_text(ring)
    I = parse_ideal(text, R)
    assert parse_ideal(I.text(), R) == I


@pytest.mark.parametrize("text,count", CORPUS_TEXTS)
def test_corpus_sizes(text, count):
    assert len(parse_corpus(text)) == count


def test_corpus_filter_drops_infinite():
    assert parse_corpus("z x zn:2..3:size<=10") == []


@pytest.mark.parametrize("text", BAD_RINGS)
def test_bad_rings_raise(text):
    with pytest.raises(PhirError):
        parse_ring(text)


def test_parse_error_position():
    with pytest.raises(ParseError) as e:
        parse_ring("Z x Q")
    assert e.value.position == 4
    with pytest.raises(SemanticError):
        parse_ring("Z/1")


def test_ideal_arity_mismatch():
    with pytest.raises(RingMismatch):
        parse_ideal("gen (1,2)", Z())


def test_phi_names():
    assert parse_phi("empty") == PhiEmpty()
    assert parse_phi("zero") == PhiZero()
    assert parse_phi("pow:3") == PhiPower(3)
    assert parse_phi("omega") == PhiOmega()
    assert parse_phi("prod:[pow:2,pow:2]") == PhiProduct((PhiPower(2), PhiPower(2)))
    for bad in ("pow:", "nope", "prod:[pow:2", "pow:0"):
        with pytest.raises(PhirError):
            parse_phi(bad)


moduli = st.integers(2, 40)
z_or_zn = st.one_of(st.just("Z"), moduli.map(lambda n: f"Z/{n}"))


@given(st.lists(z_or_zn, min_size=1, max_size=4))
def test_product_round_trip(terms):
    text = " x ".join(terms)
    spec = parse_ring_spec(text)
    assert print_ring(spec) == text
    R = build_ring(spec)
    assert R == make_product([Z() if t == "Z" else Zn(int(t[2:])) for t in terms])


@given(st.integers(0, 500), st.integers(0, 500))
def test_quot_of_z_is_gcd(a, b):
    if a == b == 0:
        assert print_ring(parse_ring_spec(f"quot(Z, gen {a}, {b})")) == "Z"
        return
    from math import gcd

    g = gcd(a, b)
    if g == 1:
        with pytest.raises(SemanticError):
            parse_ring_spec(f"quot(Z, gen {a}, {b})")
    else:
        assert parse_ring_spec(f"quot(Z, gen {a}, {b})") == ZnAtom(g)
