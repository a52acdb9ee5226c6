"""Rings as finite products of atoms, plus element-level decisions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable

import numpy as np

from .atoms import Atom, LocZAtom, TableAtom, ZAtom, ZnAtom
from .errors import ElementNotInRing, EmptyProduct
from .verdict import Verdict


@dataclass(frozen=True)
class Ring:
    """A product ``R_1 x ... x R_m`` of atoms.

    Elements of a one-atom ring are bare values; elements of a product are
    tuples with one entry per atom.
    """

    atoms: tuple

    def __post_init__(self):
        if not self.atoms:
            raise EmptyProduct("a product needs at least one component")

    def __str__(self):
        return " x ".join(a.name for a in self.atoms)

    def __repr__(self):
        return f"Ring({self})"

    @property
    def arity(self) -> int:
        return len(self.atoms)

    @cached_property
    def finite(self) -> bool:
        return all(a.finite for a in self.atoms)

    @cached_property
    def size(self) -> int | None:
        if not self.finite:
            return None
        out = 1
        for a in self.atoms:
            out *= a.size
        return out

    def component(self, i: int) -> Ring:
        return Ring((self.atoms[i],))

    @property
    def atom(self) -> Atom:
        if self.arity != 1:
            raise ValueError(f"{self} has {self.arity} components")
        return self.atoms[0]

    # elements
    def parts(self, x) -> tuple:
        if self.arity == 1:
            return (x,)
        if not isinstance(x, tuple) or len(x) != self.arity:
            raise ElementNotInRing(f"{x!r} is not an element of {self}")
        return x

    def join(self, parts):
        parts = tuple(parts)
        return parts[0] if self.arity == 1 else parts

    def __call__(self, x):
        """Canonical form of ``x``; a bare integer is mapped diagonally."""
        if self.arity > 1 and isinstance(x, (int, np.integer)) and not isinstance(x, bool):
            return self.from_int(int(x))
        return self.join(a.normalize(c) for a, c in zip(self.atoms, self.parts(x)))

    def from_int(self, k: int):
        return self.join(a.normalize(k) if not isinstance(a, TableAtom) else _table_int(a, k) for a in self.atoms)

    def __contains__(self, x) -> bool:
        try:
            self(x)
        except ElementNotInRing:
            return False
        return True

    @property
    def zero(self):
        return self.join(a.zero for a in self.atoms)

    @property
    def one(self):
        return self.join(a.one for a in self.atoms)

    def _zip(self, op, x, y):
        return self.join(getattr(a, op)(u, v) for a, u, v in zip(self.atoms, self.parts(x), self.parts(y)))

    def add(self, x, y):
        return self._zip("add", x, y)

    def sub(self, x, y):
        return self._zip("sub", x, y)

    def mul(self, x, y):
        return self._zip("mul", x, y)

    def neg(self, x):
        return self.join(a.neg(u) for a, u in zip(self.atoms, self.parts(x)))

    def power(self, x, k: int):
        return self.join(a.power(u, k) for a, u in zip(self.atoms, self.parts(x)))

    def is_unit(self, x) -> bool:
        x = self(x)
        return all(a.is_unit(u) for a, u in zip(self.atoms, self.parts(x)))

    def is_regular(self, x) -> bool:
        x = self(x)
        return all(a.is_regular(u) for a, u in zip(self.atoms, self.parts(x)))

    def elements(self) -> list:
        if not self.finite:
            raise ValueError(f"{self} is infinite")
        return [self.join(p) for p in itertools.product(*(a.elements() for a in self.atoms))]

    def rank(self, x) -> tuple:
        ranks = [a.rank(u) for a, u in zip(self.atoms, self.parts(x))]
        return (max(ranks), *ranks)

    def sample(self, bound: int | None = None) -> Sample:
        return Sample.build(self, bound)


def _table_int(atom: TableAtom, k: int):
    out = atom.zero
    step = atom.one if k >= 0 else atom.neg(atom.one)
    for _ in range(abs(k)):
        out = atom.add(out, step)
    return out


class Sample:
    """Elements of a ring as per-component integer code arrays.

    Finite rings are sampled completely.  Infinite components contribute the
    elements whose integer entries have magnitude at most ``bound``; the
    sample is then flagged ``partial``.  Rows are sorted by increasing
    magnitude so searches return small witnesses first.
    """

    def __init__(self, ring: Ring, codes: tuple, partial: bool, bound: int | None):
        self.ring = ring
        self.codes = codes
        self.partial = partial
        self.bound = bound

    def __len__(self):
        return len(self.codes[0])

    @classmethod
    def build(cls, ring: Ring, bound: int | None, filters: Iterable | None = None) -> Sample:
        """``filters`` optionally gives, per component, a predicate on code arrays."""
        if not ring.finite and bound is None:
            from .errors import UnboundedEnumeration

            raise UnboundedEnumeration(f"{ring} is infinite; a bound is required")
        filters = list(filters) if filters is not None else [None] * ring.arity
        per_codes, per_ranks = [], []
        for a, keep in zip(ring.atoms, filters):
            codes = np.asarray(a.sample_codes(bound), dtype=np.int64)
            ranks = np.arange(len(codes), dtype=np.int64)
            if keep is not None:
                sel = np.asarray(keep(codes), dtype=bool)
                codes, ranks = codes[sel], ranks[sel]
            per_codes.append(codes)
            per_ranks.append(ranks)
        grids = np.meshgrid(*[np.arange(len(c)) for c in per_codes], indexing="ij")
        flat = [g.ravel() for g in grids]
        ranks = [r[f] for r, f in zip(per_ranks, flat)]
        if ring.arity > 1:
            top = np.max(np.stack(ranks), axis=0)
            order = np.lexsort(tuple(reversed(ranks)) + (top,))
        else:
            order = np.argsort(ranks[0], kind="stable")
        codes = tuple(c[f][order] for c, f in zip(per_codes, flat))
        return cls(ring, codes, not ring.finite, bound if not ring.finite else None)

    def element(self, i: int):
        return self.ring.join(a.decode(c[i]) for a, c in zip(self.ring.atoms, self.codes))

    def take(self, sel) -> tuple:
        return tuple(c[sel] for c in self.codes)

    def regular_mask(self) -> np.ndarray:
        return vregular(self.ring, self.codes)


def vmul(ring: Ring, a: tuple, b: tuple) -> tuple:
    return tuple(at.vmul(x, y) for at, x, y in zip(ring.atoms, a, b))


def vregular(ring: Ring, codes: tuple) -> np.ndarray:
    out = None
    for at, c in zip(ring.atoms, codes):
        m = np.asarray(at.vregular(c), dtype=bool)
        out = m if out is None else out & m
    return out


def encode(ring: Ring, x) -> tuple:
    return tuple(np.int64(a.encode(u)) for a, u in zip(ring.atoms, ring.parts(ring(x))))


# ring construction ---------------------------------------------------------


def make_product(components: list) -> Ring:
    """Product of rings; nested products are flattened."""
    if not components:
        raise EmptyProduct("a product needs at least one component")
    return Ring(tuple(a for r in components for a in r.atoms))


def Z() -> Ring:
    return Ring((ZAtom(),))


def Zn(n: int) -> Ring:
    return Ring((ZnAtom(n),))


def LocZ(S) -> Ring:
    return Ring((LocZAtom(S),))


# element-level decisions ---------------------------------------------------


def is_regular(R: Ring, a) -> bool:
    """``Ann(a) = (0)``, decided per component."""
    return R.is_regular(a)


def _brute_regular(atom, x) -> bool:
    return sum(1 for r in atom.elements() if atom.mul(r, x) == atom.zero) == 1


def _brute_unit(atom, x) -> bool:
    return any(atom.mul(r, x) == atom.one for r in atom.elements())


class ZeroDivisorPredicate:
    """Membership test for zd(R) on an infinite ring."""

    def __init__(self, ring: Ring):
        self.ring = ring

    def __contains__(self, x) -> bool:
        return not self.ring.is_regular(x)

    def __call__(self, x) -> bool:
        return x in self

    def __repr__(self):
        return f"zd({self.ring})"


def zerodivisors(R: Ring):
    """zd(R) as a frozenset (finite rings) or a membership predicate."""
    if R.finite:
        return frozenset(x for x in R.elements() if not R.is_regular(x))
    return ZeroDivisorPredicate(R)


def non_unit_regular(R: Ring):
    """A regular non-unit of ``R``, or ``None`` when there is none."""
    wit = []
    found = False
    for a in R.atoms:
        w = _atom_non_unit_regular(a)
        if w is not None and not found:
            wit.append(w)
            found = True
        else:
            wit.append(a.one)
    return R.join(wit) if found else None


def _atom_non_unit_regular(a):
    if isinstance(a, ZAtom):
        return 2
    if isinstance(a, LocZAtom):
        p = 2
        while p in a.primes or any(p % q == 0 for q in range(2, p)):
            p += 1
        return Fraction(p)
    for x in a.elements():
        if _brute_regular(a, x) and not _brute_unit(a, x):
            return x
    return None


def is_total_quotient_ring(R: Ring) -> Verdict:
    """Every element is a zerodivisor or a unit.

    Finite components are checked by exhausting Ann(x) and inverses.
    """
    w = non_unit_regular(R)
    if w is None:
        return Verdict.holds()
    return Verdict.fails(w)
