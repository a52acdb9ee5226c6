"""Ideals of product rings, stored componentwise in canonical form."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import RingMismatch, UnboundedEnumeration
from .rings import Ring


def format_element(x) -> str:
    if isinstance(x, tuple):
        return "(" + ",".join(format_element(c) for c in x) + ")"
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return str(x)


@dataclass(frozen=True)
class Ideal:
    """An ideal ``I_1 x ... x I_m``; two ideals are equal iff their parts are."""

    ring: Ring
    parts: tuple

    def _same(self, other: Ideal):
        if not isinstance(other, Ideal) or other.ring != self.ring:
            raise RingMismatch(f"ideals live in different rings: {self.ring} vs {getattr(other, 'ring', other)}")

    def _combine(self, op, other: Ideal) -> Ideal:
        self._same(other)
        return Ideal(self.ring, tuple(getattr(a, op)(p, q) for a, p, q in zip(self.ring.atoms, self.parts, other.parts)))

    def __add__(self, other):
        return self._combine("sum", other)

    def __mul__(self, other):
        return self._combine("prod", other)

    def __and__(self, other):
        return self._combine("meet", other)

    def __pow__(self, k: int):
        if k < 1:
            raise ValueError("ideal powers start at 1")
        return Ideal(self.ring, tuple(a.power_ideal(p, k) for a, p in zip(self.ring.atoms, self.parts)))

    def __le__(self, other) -> bool:
        self._same(other)
        return all(a.le(p, q) for a, p, q in zip(self.ring.atoms, self.parts, other.parts))

    def __ge__(self, other) -> bool:
        return other <= self

    def __lt__(self, other) -> bool:
        return self <= other and self != other

    def __contains__(self, x) -> bool:
        x = self.ring(x)
        return all(a.contains(p, u) for a, p, u in zip(self.ring.atoms, self.parts, self.ring.parts(x)))

    def contains(self, x) -> bool:
        return x in self

    @property
    def is_proper(self) -> bool:
        return any(a.is_proper(p) for a, p in zip(self.ring.atoms, self.parts))

    @property
    def is_zero(self) -> bool:
        return self == zero_ideal(self.ring)

    def component(self, i: int) -> Ideal:
        return Ideal(self.ring.component(i), (self.parts[i],))

    def generators(self) -> list:
        per = [a.generators(p) for a, p in zip(self.ring.atoms, self.parts)]
        width = max(len(g) for g in per)
        out = []
        for k in range(width):
            out.append(self.ring.join(g[k] if k < len(g) else a.zero for a, g in zip(self.ring.atoms, per)))
        return out

    def elements(self) -> list:
        if not self.ring.finite:
            raise ValueError(f"{self} is infinite")
        per = [a.ideal_elements(p) for a, p in zip(self.ring.atoms, self.parts)]
        return [self.ring.join(c) for c in itertools.product(*per)]

    def vcontains(self, codes: tuple) -> np.ndarray:
        out = None
        for a, p, c in zip(self.ring.atoms, self.parts, codes):
            m = np.asarray(a.vcontains(p, c), dtype=bool)
            out = m if out is None else out & m
        return out

    def text(self) -> str:
        gens = [g for g in self.generators()]
        if all(g == self.ring.zero for g in gens):
            return "gen"
        return "gen " + ", ".join(format_element(g) for g in gens)

    def __str__(self):
        return "<" + ", ".join(format_element(g) for g in self.generators()) + ">"

    def __repr__(self):
        return f"Ideal({self} in {self.ring})"


def from_components(R: Ring, comps: list) -> Ideal:
    return Ideal(R, tuple(c.parts[0] for c in comps))


def zero_ideal(R: Ring) -> Ideal:
    return Ideal(R, tuple(a.zero_ideal() for a in R.atoms))


def unit_ideal(R: Ring) -> Ideal:
    return Ideal(R, tuple(a.unit_ideal() for a in R.atoms))


def ideal_from_generators(R: Ring, gens) -> Ideal:
    """Smallest ideal containing ``gens``."""
    gens = [R(g) for g in gens]
    return Ideal(R, tuple(a.ideal([R.parts(g)[i] for g in gens]) for i, a in enumerate(R.atoms)))


def principal(R: Ring, a) -> Ideal:
    return ideal_from_generators(R, [a])


def contains(I: Ideal, a) -> bool:
    return a in I


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    return I + J


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    return I * J


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    return I & J


def ideal_power(I: Ideal, n: int) -> Ideal:
    return I**n


def omega_power(I: Ideal) -> Ideal:
    """Intersection of all powers of ``I``."""
    return Ideal(I.ring, tuple(a.omega(p) for a, p in zip(I.ring.atoms, I.parts)))


def radical(I: Ideal) -> Ideal:
    return Ideal(I.ring, tuple(a.radical(p) for a, p in zip(I.ring.atoms, I.parts)))


def colon_set(I: Ideal, J: Ideal) -> Ideal:
    """(I : J) = {r : rJ contained in I}."""
    I._same(J)
    return Ideal(I.ring, tuple(a.colon(p, q) for a, p, q in zip(I.ring.atoms, I.parts, J.parts)))


def colon(I: Ideal, x) -> Ideal:
    return colon_set(I, principal(I.ring, x))


def annihilator(R: Ring, x) -> Ideal:
    """Ann(x) for an element, or Ann(J) for an ideal."""
    if isinstance(x, Ideal):
        return colon_set(zero_ideal(R), x)
    return colon(zero_ideal(R), x)


def is_idempotent(I: Ideal) -> bool:
    return I * I == I


class IdealList(list):
    """Ideals in enumeration order; ``partial`` marks a bounded enumeration."""

    def __init__(self, items, partial: bool = False, bound: int | None = None):
        super().__init__(items)
        self.partial = partial
        self.bound = bound


def enumerate_ideals(R: Ring, bound: int | None = None, proper_only: bool = False) -> IdealList:
    """All ideals of a finite ring, or those with generators of magnitude at most ``bound``."""
    if not R.finite and bound is None:
        raise UnboundedEnumeration(f"{R} has infinitely many ideals; supply a bound")
    per = [a.ideals(bound) for a in R.atoms]
    out = [Ideal(R, parts) for parts in itertools.product(*per)]
    if proper_only:
        out = [I for I in out if I.is_proper]
    partial = not R.finite
    return IdealList(out, partial, bound if partial else None)


def proper_ideals(R: Ring, bound: int | None = None) -> IdealList:
    return enumerate_ideals(R, bound, proper_only=True)


def ideal_span_bruteforce(R: Ring, gens) -> frozenset:
    """Element set of the ideal generated by ``gens`` on a finite ring, by saturation."""
    elems = R.elements()
    S = {R.zero}
    frontier = [R.zero]
    steps = [R.mul(r, R(g)) for r in elems for g in gens]
    while frontier:
        nxt = []
        for s in frontier:
            for t in steps:
                u = R.add(s, t)
                if u not in S:
                    S.add(u)
                    nxt.append(u)
        frontier = nxt
    return frozenset(S)
