"""Structural ring descriptions, their canonical forms, and materialization.

A :class:`RingSpec` value says how a ring is built; :func:`build_ring`
turns it into a :class:`~phir.rings.Ring`.  Canonical forms make equal
constructions compare equal: quotients of integer atoms collapse to
``ZnAtom``, products are flattened, localizations store the inverted primes
and ideals store the canonical generators of the ideal they denote.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Union

from sympy import primefactors

from . import atoms as _atoms
from .constructions import QuotientModule as _QuotientModule
from .constructions import make_idealization, make_quotient
from .errors import InfiniteIdealizationBase, NonRegularDenominator, SemanticError, ZeroInMultiplicativeSet
from .ideals import Ideal, ideal_from_generators
from .rings import Ring, make_product


@dataclass(frozen=True)
class ZAtom:
    pass


@dataclass(frozen=True)
class ZnAtom:
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise SemanticError(f"Z/{self.n} is not a ring with 1 != 0")


@dataclass(frozen=True)
class LocZAtom:
    """Z localized at the multiplicative set generated by ``S``."""

    S: frozenset

    def __post_init__(self):
        if any(s == 0 for s in self.S):
            raise ZeroInMultiplicativeSet("0 cannot be inverted")
        object.__setattr__(self, "S", frozenset(self.S))


@dataclass(frozen=True)
class TableRing:
    elements: tuple
    add: tuple
    mul: tuple
    zero: object
    one: object
    name: str = "T"


@dataclass(frozen=True)
class Product:
    components: tuple


@dataclass(frozen=True)
class IdealSpec:
    gens: tuple = ()


@dataclass(frozen=True)
class RegularModule:
    pass


@dataclass(frozen=True)
class QuotientModule:
    ideal: IdealSpec


@dataclass(frozen=True)
class Quotient:
    base: "RingSpec"
    ideal: IdealSpec


@dataclass(frozen=True)
class Idealization:
    base: "RingSpec"
    module: Union[RegularModule, QuotientModule] = RegularModule()


@dataclass(frozen=True)
class Localization:
    """Localization of a non-integer-atom ring; kept only when it is not the identity."""

    base: "RingSpec"
    S: frozenset


RingSpec = Union[ZAtom, ZnAtom, LocZAtom, TableRing, Product, Quotient, Idealization, Localization]


def _components(spec) -> list:
    return list(spec.components) if isinstance(spec, Product) else [spec]


def _product(comps: list):
    flat = [c for s in comps for c in _components(s)]
    if not flat:
        raise SemanticError("empty product")
    return flat[0] if len(flat) == 1 else Product(tuple(flat))


def _canon_ideal(R: Ring, ideal: IdealSpec) -> tuple[Ideal, IdealSpec]:
    try:
        I = ideal_from_generators(R, list(ideal.gens))
    except Exception as e:  # noqa: BLE001 - surface as a semantic error
        raise SemanticError(f"bad generators for {R}: {e}") from None
    gens = () if I.is_zero else tuple(I.generators())
    return I, IdealSpec(gens)


def canonical(spec) -> RingSpec:
    """Normal form of a ring description."""
    if isinstance(spec, (ZAtom, ZnAtom, TableRing)):
        return spec
    if isinstance(spec, LocZAtom):
        primes = frozenset(p for s in spec.S for p in primefactors(abs(s)))
        return LocZAtom(primes) if primes else ZAtom()
    if isinstance(spec, Product):
        return _product([canonical(c) for c in spec.components])
    if isinstance(spec, Quotient):
        return _canon_quotient(canonical(spec.base), spec.ideal)
    if isinstance(spec, Idealization):
        base = canonical(spec.base)
        if not build_ring(base).finite:
            raise InfiniteIdealizationBase(f"idealize needs a finite base ring, got {print_ring(base)}")
        module = spec.module
        if isinstance(module, QuotientModule):
            _, ideal = _canon_ideal(build_ring(base), module.ideal)
            module = RegularModule() if not ideal.gens else QuotientModule(ideal)
        return Idealization(base, module)
    if isinstance(spec, Localization):
        return _canon_loc(canonical(spec.base), spec.S)
    raise TypeError(f"not a ring spec: {spec!r}")


def _canon_quotient(base, ideal: IdealSpec):
    R = build_ring(base)
    I, ideal = _canon_ideal(R, ideal)
    if not I.is_proper:
        raise SemanticError(f"quotient of {R} by the unit ideal is the zero ring")
    comps = _components(base)
    if all(isinstance(c, (ZAtom, ZnAtom, LocZAtom)) for c in comps):
        out = []
        for c, p in zip(comps, I.parts):
            if isinstance(c, ZnAtom):
                p = gcd(p, c.n)
                if p == c.n:
                    out.append(c)
                elif p > 1:
                    out.append(ZnAtom(p))
            elif p == 0:
                out.append(c)
            elif p > 1:
                out.append(ZnAtom(p))
        return _product(out)
    return Quotient(base, ideal)


def _canon_loc(base, S):
    if any(s == 0 for s in S):
        raise ZeroInMultiplicativeSet("0 cannot be inverted")
    out = []
    for c in _components(base):
        if isinstance(c, ZAtom):
            out.append(canonical(LocZAtom(frozenset(S))))
        elif isinstance(c, LocZAtom):
            out.append(canonical(LocZAtom(c.S | frozenset(S))))
        elif isinstance(c, ZnAtom):
            bad = [s for s in S if gcd(s, c.n) != 1]
            if bad:
                raise NonRegularDenominator(f"{bad[0]} is not regular in Z/{c.n}")
            out.append(c)
        else:
            R = build_ring(c)
            for s in S:
                if not R.is_regular(R.from_int(s)):
                    raise NonRegularDenominator(f"{s} is not regular in {R}")
            # regular elements of a finite ring are units
            out.append(c)
    return _product(out)


@lru_cache(maxsize=256)
def build_ring(spec) -> Ring:
    """Materialize a ring description."""
    if isinstance(spec, ZAtom):
        return Ring((_atoms.ZAtom(),))
    if isinstance(spec, ZnAtom):
        return Ring((_atoms.ZnAtom(spec.n),))
    if isinstance(spec, LocZAtom):
        c = canonical(spec)
        return build_ring(c) if isinstance(c, ZAtom) else Ring((_atoms.LocZAtom(sorted(c.S)),))
    if isinstance(spec, TableRing):
        atom = _atoms.TableAtom(
            list(spec.elements), [list(r) for r in spec.add], [list(r) for r in spec.mul], spec.zero, spec.one, name=spec.name
        )
        return Ring((atom,))
    if isinstance(spec, Product):
        return make_product([build_ring(c) for c in spec.components])
    if isinstance(spec, Quotient):
        R = build_ring(spec.base)
        return make_quotient(R, ideal_from_generators(R, list(spec.ideal.gens))).ring
    if isinstance(spec, Idealization):
        R = build_ring(spec.base)
        module = None
        if isinstance(spec.module, QuotientModule):
            module = _QuotientModule(ideal_from_generators(R, list(spec.module.ideal.gens)))
        return make_idealization(R, module)
    if isinstance(spec, Localization):
        return build_ring(canonical(spec))
    raise TypeError(f"not a ring spec: {spec!r}")


def format_elem(x) -> str:
    if isinstance(x, tuple):
        return "(" + ",".join(format_elem(c) for c in x) + ")"
    return str(x)


def format_ideal(ideal: IdealSpec) -> str:
    return "gen" if not ideal.gens else "gen " + ", ".join(format_elem(g) for g in ideal.gens)


def print_ring(spec) -> str:
    """Surface syntax for a ring description (tables have none)."""
    if isinstance(spec, ZAtom):
        return "Z"
    if isinstance(spec, ZnAtom):
        return f"Z/{spec.n}"
    if isinstance(spec, LocZAtom):
        return "loc(Z,{" + ",".join(str(s) for s in sorted(spec.S)) + "})"
    if isinstance(spec, Product):
        return " x ".join(print_ring(c) for c in spec.components)
    if isinstance(spec, Quotient):
        return f"quot({print_ring(spec.base)}, {format_ideal(spec.ideal)})"
    if isinstance(spec, Idealization):
        if isinstance(spec.module, QuotientModule):
            return f"idealize({print_ring(spec.base)}, mod {format_ideal(spec.module.ideal)})"
        return f"idealize({print_ring(spec.base)})"
    if isinstance(spec, Localization):
        return f"loc({print_ring(spec.base)},{{" + ",".join(str(s) for s in sorted(spec.S)) + "})"
    if isinstance(spec, TableRing):
        raise ValueError("explicit table rings have no surface syntax")
    raise TypeError(f"not a ring spec: {spec!r}")
