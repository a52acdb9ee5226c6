"""Reduction maps L(R) -> L(R) u {empty} and the maps they induce.

Every evaluation goes through :func:`phi_apply`, which intersects the raw
image with the argument, so ``phi_apply(phi, I)`` is always contained in
``I``.  The empty set is the singleton :data:`EMPTY`, never an ideal.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .constructions import LocalizationMap, QuotientMap
from .errors import MissingCustomEntry, RingMismatch
from .ideals import Ideal, from_components, enumerate_ideals, omega_power, zero_ideal
from .rings import Ring
from .verdict import Verdict


class _Empty:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "EMPTY"

    def __str__(self):
        return "∅"

    def __reduce__(self):
        return (_Empty, ())


EMPTY = _Empty()


def subset(A, B) -> bool:
    """Containment where either side may be EMPTY."""
    if A is EMPTY:
        return True
    if B is EMPTY:
        return False
    return A <= B


def member(x, A) -> bool:
    return A is not EMPTY and x in A


class PhiMap:
    name: str

    def raw(self, I: Ideal):
        raise NotImplementedError

    def __call__(self, I: Ideal):
        return phi_apply(self, I)

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class PhiEmpty(PhiMap):
    name = "empty"

    def raw(self, I):
        return EMPTY


@dataclass(frozen=True)
class PhiZero(PhiMap):
    name = "zero"

    def raw(self, I):
        return zero_ideal(I.ring)


@dataclass(frozen=True)
class PhiIdentity(PhiMap):
    name = "id"

    def raw(self, I):
        return I


@dataclass(frozen=True)
class PhiPower(PhiMap):
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("power maps need n >= 1")

    @property
    def name(self):
        return f"pow:{self.n}"

    def raw(self, I):
        return I**self.n


@dataclass(frozen=True)
class PhiOmega(PhiMap):
    name = "omega"

    def raw(self, I):
        return omega_power(I)


@dataclass(frozen=True, eq=False)
class PhiCustom(PhiMap):
    """Explicit table from ideals to ideals (or EMPTY); lookups outside it are errors."""

    table: dict
    label: str = "custom"

    @property
    def name(self):
        return self.label

    def raw(self, I):
        try:
            return self.table[I]
        except KeyError:
            raise MissingCustomEntry(f"{self.label} has no entry for {I!r}") from None


@dataclass(frozen=True)
class PhiProduct(PhiMap):
    """phi^x(I_1 x ... x I_m) = phi_1(I_1) x ... x phi_m(I_m)."""

    maps: tuple

    @property
    def name(self):
        return "prod:[" + ",".join(m.name for m in self.maps) + "]"

    def raw(self, I):
        if len(self.maps) != I.ring.arity:
            raise RingMismatch(f"{self.name} has {len(self.maps)} factors but {I.ring} has {I.ring.arity}")
        comps = []
        for i, m in enumerate(self.maps):
            v = phi_apply(m, I.component(i))
            if v is EMPTY:
                return EMPTY
            comps.append(v)
        return from_components(I.ring, comps)


@dataclass(frozen=True, eq=False)
class PhiQuotientInduced(PhiMap):
    """On R/I: (J/I) -> (phi(J) + I)/I, or EMPTY when phi(J) is EMPTY."""

    base: PhiMap
    qmap: QuotientMap = field(repr=False)

    @property
    def name(self):
        return f"quot[{self.base.name}]"

    def raw(self, K):
        if K.ring != self.qmap.ring:
            raise RingMismatch(f"{K!r} is not an ideal of {self.qmap.ring}")
        v = phi_apply(self.base, self.qmap.lift(K))
        return EMPTY if v is EMPTY else self.qmap.image(v)


@dataclass(frozen=True, eq=False)
class PhiLocalizationInduced(PhiMap):
    """On S^-1 R: J -> S^-1 phi(J n R), or EMPTY when phi(J n R) is EMPTY."""

    base: PhiMap
    lmap: LocalizationMap = field(repr=False)

    @property
    def name(self):
        return f"loc[{self.base.name}]"

    def raw(self, J):
        if J.ring != self.lmap.ring:
            raise RingMismatch(f"{J!r} is not an ideal of {self.lmap.ring}")
        v = phi_apply(self.base, self.lmap.contract(J))
        return EMPTY if v is EMPTY else self.lmap.extend(v)


def phi_apply(phi: PhiMap, I: Ideal):
    """phi(I) intersected with I, or EMPTY."""
    v = phi.raw(I)
    if v is EMPTY:
        return EMPTY
    if v.ring != I.ring:
        raise RingMismatch(f"{phi.name} returned an ideal of {v.ring}, expected {I.ring}")
    return v & I


def product_power(n: int, arity: int) -> PhiProduct:
    """phi_n^x on an ``arity``-fold product."""
    return PhiProduct(tuple(PhiPower(n) for _ in range(arity)))


def phi_leq(psi1: PhiMap, psi2: PhiMap, R: Ring, bound: int | None = None) -> Verdict:
    """psi1(I) contained in psi2(I) for every ideal I."""
    ideals = enumerate_ideals(R, bound)
    for I in ideals:
        if not subset(psi1(I), psi2(I)):
            return Verdict.fails(I)
    return Verdict.holds().weaken(ideals.bound)


def named_chain(n_max: int) -> list:
    """phi_empty <= phi_0 <= phi_omega <= phi_{n_max} <= ... <= phi_2 <= phi_1."""
    return [PhiEmpty(), PhiZero(), PhiOmega()] + [PhiPower(n) for n in range(n_max, 1, -1)] + [PhiIdentity()]


def order_chain_check(R: Ring, n_max: int, bound: int | None = None) -> Verdict:
    ideals = enumerate_ideals(R, bound)
    chain = named_chain(n_max)
    for I in ideals:
        images = [phi(I) for phi in chain]
        for lo, hi, a, b in zip(chain, chain[1:], images, images[1:]):
            if not subset(a, b):
                return Verdict.fails(I, lo.name, hi.name)
    return Verdict.holds().weaken(ideals.bound)


def is_order_preserving(phi: PhiMap, R: Ring, bound: int | None = None) -> Verdict:
    """I <= J implies phi(I) <= phi(J), over enumerated ideal pairs."""
    ideals = enumerate_ideals(R, bound)
    images = [phi(I) for I in ideals]
    for I, a in zip(ideals, images):
        for J, b in zip(ideals, images):
            if I <= J and not subset(a, b):
                return Verdict.fails(I, J)
    return Verdict.holds().weaken(ideals.bound)
