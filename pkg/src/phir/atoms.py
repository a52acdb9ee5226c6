"""Irreducible ring components.

A ring is a finite product of atoms.  Each atom owns its element arithmetic,
its ideal representation ("parts") and a vectorized view of its elements as
integer codes, which the bounded searches use.

Ideal parts per atom:

* ``ZAtom``: generator ``d >= 0``
* ``ZnAtom``: generator ``d`` dividing ``n``; the zero ideal is ``d == n``
* ``LocZAtom``: generator ``d >= 0`` coprime to every inverted prime
* ``TableAtom``: frozenset of element indices
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import cached_property
from numbers import Integral

import numpy as np
from sympy import divisors, primefactors

from .errors import ElementNotInRing, InvalidTable, ZeroInMultiplicativeSet


def radical_of(d: int) -> int:
    """Product of the distinct primes dividing ``d`` (with rad(0) = 0)."""
    if d == 0:
        return 0
    return math.prod(primefactors(abs(d)))


def z_rank(x: int) -> int:
    # 0, 1, -1, 2, -2, ... gets ranks 0, 1, 2, 3, 4, ...
    return 2 * x - 1 if x > 0 else -2 * x


def z_sample(bound: int) -> list[int]:
    out = [0]
    for k in range(1, bound + 1):
        out += [k, -k]
    return out


def _as_int(x) -> int:
    if isinstance(x, bool):
        raise ElementNotInRing(f"{x!r} is not an integer")
    if isinstance(x, Integral):
        return int(x)
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    raise ElementNotInRing(f"{x!r} is not an integer")


class Atom:
    finite: bool
    name: str

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"

    def __str__(self):
        return self.name

    # element arithmetic
    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def power(self, x, k: int):
        out = self.one
        for _ in range(k):
            out = self.mul(out, x)
        return out

    # ideals shared by the principal atoms
    def power_ideal(self, p, k: int):
        out = p
        for _ in range(k - 1):
            out = self.prod(out, p)
        return out

    def is_proper(self, p) -> bool:
        return p != self.unit_ideal()

    def principal(self, x):
        return self.ideal([x])


class ZAtom(Atom):
    """The integers."""

    finite = False
    name = "Z"
    zero = 0
    one = 1
    size = None

    def __eq__(self, other):
        return type(other) is ZAtom

    def __hash__(self):
        return hash("Z")

    def normalize(self, x) -> int:
        return _as_int(x)

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def is_regular(self, x) -> bool:
        return x != 0

    def is_unit(self, x) -> bool:
        return x in (1, -1)

    def rank(self, x) -> int:
        return z_rank(x)

    def sample_codes(self, bound: int) -> list[int]:
        return z_sample(bound)

    def decode(self, code: int):
        return int(code)

    def encode(self, x) -> int:
        return x

    def vmul(self, a, b):
        return a * b

    def vregular(self, c):
        return c != 0

    def vcontains(self, d: int, c):
        return c == 0 if d == 0 else c % d == 0

    # ideals
    def ideal(self, gens) -> int:
        return math.gcd(*[self.normalize(g) for g in gens]) if gens else 0

    def zero_ideal(self):
        return 0

    def unit_ideal(self):
        return 1

    def contains(self, d, x) -> bool:
        return x == 0 if d == 0 else x % d == 0

    def le(self, p, q) -> bool:
        return p == 0 if q == 0 else p % q == 0

    def sum(self, p, q):
        return math.gcd(p, q)

    def prod(self, p, q):
        return p * q

    def meet(self, p, q):
        return 0 if p == 0 or q == 0 else math.lcm(p, q)

    def power_ideal(self, p, k: int):
        return p**k

    def omega(self, p):
        return p if p in (0, 1) else 0

    def radical(self, p):
        return radical_of(p)

    def colon(self, p, q):
        """(p : q) = {x : xq in p}."""
        if q == 0:
            return 1
        if p == 0:
            return 0
        return p // math.gcd(p, q)

    def generators(self, p) -> list:
        return [p]

    def ideals(self, bound: int) -> list[int]:
        return list(range(bound + 1))


class ZnAtom(Atom):
    """Integers modulo ``n``; ideals are the divisors of ``n``."""

    finite = True

    def __init__(self, n: int):
        if n < 2:
            raise ValueError(f"Z/{n} is not a ring with 1 != 0")
        self.n = n
        self.name = f"Z/{n}"
        self.zero = 0
        self.one = 1
        self.size = n

    def __eq__(self, other):
        return type(other) is ZnAtom and other.n == self.n

    def __hash__(self):
        return hash(("Zn", self.n))

    def normalize(self, x) -> int:
        return _as_int(x) % self.n

    def add(self, x, y):
        return (x + y) % self.n

    def neg(self, x):
        return -x % self.n

    def mul(self, x, y):
        return x * y % self.n

    def is_regular(self, x) -> bool:
        return math.gcd(x, self.n) == 1

    is_unit = is_regular

    def elements(self) -> list[int]:
        return list(range(self.n))

    def rank(self, x) -> int:
        return x

    def sample_codes(self, bound=None) -> list[int]:
        return self.elements()

    def decode(self, code):
        return int(code)

    def encode(self, x) -> int:
        return x

    def vmul(self, a, b):
        return a * b % self.n

    def vregular(self, c):
        return np.gcd(c, self.n) == 1

    def vcontains(self, d, c):
        return c % d == 0

    def ideal(self, gens) -> int:
        return math.gcd(self.n, *[self.normalize(g) for g in gens])

    def zero_ideal(self):
        return self.n

    def unit_ideal(self):
        return 1

    def contains(self, d, x) -> bool:
        return x % d == 0

    def le(self, p, q) -> bool:
        return p % q == 0

    def sum(self, p, q):
        return math.gcd(p, q)

    def prod(self, p, q):
        return math.gcd(p * q, self.n)

    def meet(self, p, q):
        return math.lcm(p, q)

    def omega(self, p):
        cur = p
        while True:
            nxt = self.prod(cur, p)
            if nxt == cur:
                return cur
            cur = nxt

    def radical(self, p):
        return radical_of(p)

    def colon(self, p, q):
        return p // math.gcd(p, q)

    def generators(self, p) -> list:
        return [0 if p == self.n else p]

    def ideals(self, bound=None) -> list[int]:
        return [self.n] + [d for d in divisors(self.n) if d != self.n]

    def ideal_elements(self, p) -> list[int]:
        return list(range(0, self.n, p))


class LocZAtom(Atom):
    """Z with the primes dividing the given set inverted.

    Elements are reduced :class:`~fractions.Fraction` values whose denominators
    only involve inverted primes.  Every ideal is generated by an integer
    coprime to the inverted primes.
    """

    finite = False
    size = None

    def __init__(self, S):
        S = [_as_int(s) for s in S]
        if any(s == 0 for s in S):
            raise ZeroInMultiplicativeSet("0 cannot be inverted")
        primes = sorted({p for s in S for p in primefactors(abs(s))})
        if not primes:
            raise ValueError("localizing Z at units only gives Z")
        self.primes = tuple(primes)
        self.name = "loc(Z,{" + ",".join(map(str, self.primes)) + "})"
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __eq__(self, other):
        return type(other) is LocZAtom and other.primes == self.primes

    def __hash__(self):
        return hash(("LocZ", self.primes))

    def strip(self, d: int) -> int:
        """Remove every inverted prime from ``d``."""
        d = abs(d)
        if d == 0:
            return 0
        for p in self.primes:
            while d % p == 0:
                d //= p
        return d

    def normalize(self, x) -> Fraction:
        if isinstance(x, bool):
            raise ElementNotInRing(f"{x!r} is not in {self.name}")
        if isinstance(x, Integral):
            return Fraction(int(x))
        if isinstance(x, Fraction):
            if self.strip(x.denominator) != 1:
                raise ElementNotInRing(f"{x} has a denominator not invertible in {self.name}")
            return x
        raise ElementNotInRing(f"{x!r} is not in {self.name}")

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def is_regular(self, x) -> bool:
        return x != 0

    def is_unit(self, x) -> bool:
        return x != 0 and self.strip(x.numerator) == 1

    def rank(self, x) -> int:
        return z_rank(int(x)) if x.denominator == 1 else 2 * abs(x.numerator) + x.denominator

    def sample_codes(self, bound: int) -> list[int]:
        # integral representatives only; every ideal is generated by one
        return z_sample(bound)

    def decode(self, code):
        return Fraction(int(code))

    def encode(self, x) -> int:
        if x.denominator != 1:
            raise ValueError("only integral elements have codes")
        return int(x)

    def vmul(self, a, b):
        return a * b

    def vregular(self, c):
        return c != 0

    def vcontains(self, d, c):
        return c == 0 if d == 0 else c % d == 0

    def ideal(self, gens) -> int:
        nums = [self.normalize(g).numerator for g in gens]
        return self.strip(math.gcd(*nums)) if nums else 0

    def zero_ideal(self):
        return 0

    def unit_ideal(self):
        return 1

    def contains(self, d, x) -> bool:
        return x == 0 if d == 0 else x.numerator % d == 0

    def le(self, p, q) -> bool:
        return p == 0 if q == 0 else p % q == 0

    def sum(self, p, q):
        return math.gcd(p, q)

    def prod(self, p, q):
        return p * q

    def meet(self, p, q):
        return 0 if p == 0 or q == 0 else math.lcm(p, q)

    def power_ideal(self, p, k: int):
        return p**k

    def omega(self, p):
        return p if p in (0, 1) else 0

    def radical(self, p):
        return radical_of(p)

    def colon(self, p, q):
        if q == 0:
            return 1
        if p == 0:
            return 0
        return p // math.gcd(p, q)

    def generators(self, p) -> list:
        return [Fraction(p)]

    def ideals(self, bound: int) -> list[int]:
        return [0] + [d for d in range(1, bound + 1) if self.strip(d) == d]


class TableAtom(Atom):
    """An explicit finite commutative ring given by addition and multiplication tables.

    ``labels`` are the (hashable) element names; the tables hold indices into
    ``labels``.  The ring axioms are verified on construction.
    """

    finite = True

    def __init__(self, labels, add, mul, zero, one, name="T", check=True):
        self.labels = tuple(labels)
        n = len(self.labels)
        self.size = n
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._index) != n:
            raise InvalidTable("duplicate element labels")
        self._add = np.asarray(add, dtype=np.int64)
        self._mul = np.asarray(mul, dtype=np.int64)
        if self._add.shape != (n, n) or self._mul.shape != (n, n):
            raise InvalidTable("tables must be square with one row per element")
        if self._add.min() < 0 or self._add.max() >= n or self._mul.min() < 0 or self._mul.max() >= n:
            raise InvalidTable("table entries must index elements")
        self.zero_index = self._index[zero] if zero in self._index else int(zero)
        self.one_index = self._index[one] if one in self._index else int(one)
        self.zero = self.labels[self.zero_index]
        self.one = self.labels[self.one_index]
        self.name = name
        if check:
            self._check_axioms()
        self._neg = np.argmax(self._add == self.zero_index, axis=1)
        self._masks = {}

    def _check_axioms(self):
        A, M, n = self._add, self._mul, self.size
        z, o = self.zero_index, self.one_index
        if n < 2 or z == o:
            raise InvalidTable("a ring needs 1 != 0")
        idx = np.arange(n)
        if not (A == A.T).all():
            raise InvalidTable("addition is not commutative")
        if not (M == M.T).all():
            raise InvalidTable("multiplication is not commutative")
        if not (A[z] == idx).all():
            raise InvalidTable("zero is not an additive identity")
        if not (M[o] == idx).all():
            raise InvalidTable("one is not a multiplicative identity")
        if not (A == z).any(axis=1).all():
            raise InvalidTable("some element has no additive inverse")
        # chunked over the first argument to bound memory
        for i in range(n):
            if not (A[A[i]] == A[i][A]).all():
                raise InvalidTable("addition is not associative")
            if not (M[M[i]] == M[i][M]).all():
                raise InvalidTable("multiplication is not associative")
            # i(j + k) == ij + ik
            if not (M[i][A] == A[np.ix_(M[i], M[i])]).all():
                raise InvalidTable("multiplication does not distribute over addition")

    def _key(self):
        return (self.labels, self._add.tobytes(), self._mul.tobytes(), self.zero_index, self.one_index)

    def __eq__(self, other):
        return isinstance(other, TableAtom) and self._key() == other._key()

    @cached_property
    def _hash(self):
        return hash(self._key())

    def __hash__(self):
        return self._hash

    def index(self, x) -> int:
        try:
            return self._index[x]
        except (KeyError, TypeError):
            raise ElementNotInRing(f"{x!r} is not an element of {self.name}") from None

    def normalize(self, x):
        return self.labels[self.index(x)]

    def add(self, x, y):
        return self.labels[self._add[self.index(x), self.index(y)]]

    def neg(self, x):
        return self.labels[self._neg[self.index(x)]]

    def mul(self, x, y):
        return self.labels[self._mul[self.index(x), self.index(y)]]

    @cached_property
    def _regular_mask(self):
        # Ann(x) = (0) iff the only r with rx = 0 is r = 0
        return (self._mul == self.zero_index).sum(axis=0) == 1

    @cached_property
    def _unit_mask(self):
        return (self._mul == self.one_index).any(axis=0)

    def is_regular(self, x) -> bool:
        return bool(self._regular_mask[self.index(x)])

    def is_unit(self, x) -> bool:
        return bool(self._unit_mask[self.index(x)])

    def elements(self) -> list:
        return list(self.labels)

    def rank(self, x) -> int:
        return self.index(x)

    def sample_codes(self, bound=None) -> list[int]:
        return list(range(self.size))

    def decode(self, code):
        return self.labels[int(code)]

    def encode(self, x) -> int:
        return self.index(x)

    def vmul(self, a, b):
        return self._mul[a, b]

    def vregular(self, c):
        return self._regular_mask[c]

    def mask(self, p) -> np.ndarray:
        m = self._masks.get(p)
        if m is None:
            m = np.zeros(self.size, dtype=bool)
            m[list(p)] = True
            self._masks[p] = m
        return m

    def vcontains(self, p, c):
        return self.mask(p)[c]

    # ideals
    def principal(self, x) -> frozenset:
        return frozenset(self._mul[:, self.index(x)].tolist())

    def _principal_index(self, i) -> frozenset:
        return frozenset(self._mul[:, i].tolist())

    def _sum_sets(self, p, q) -> frozenset:
        return frozenset(np.unique(self._add[np.ix_(sorted(p), sorted(q))]).tolist())

    def _span(self, indices) -> frozenset:
        out = frozenset([self.zero_index])
        for i in sorted(set(indices)):
            if i not in out:
                out = self._sum_sets(out, self._principal_index(i))
        return out

    def ideal(self, gens) -> frozenset:
        return self._span(self.index(g) for g in gens)

    def zero_ideal(self):
        return frozenset([self.zero_index])

    def unit_ideal(self):
        return frozenset(range(self.size))

    def contains(self, p, x) -> bool:
        return self.index(x) in p

    def le(self, p, q) -> bool:
        return p <= q

    def sum(self, p, q):
        return self._sum_sets(p, q)

    def prod(self, p, q):
        return self._span(np.unique(self._mul[np.ix_(sorted(p), sorted(q))]).tolist())

    def meet(self, p, q):
        return p & q

    def omega(self, p):
        cur = p
        for _ in range(self.size + 1):
            nxt = self.prod(cur, p)
            if nxt == cur:
                return cur
            cur = nxt
        raise AssertionError("ideal powers failed to stabilize")

    def radical(self, p):
        m = self.mask(p)
        base = np.arange(self.size)
        pw = base.copy()
        hit = m[pw].copy()
        for _ in range(self.size):
            pw = self._mul[pw, base]
            hit |= m[pw]
        return frozenset(np.flatnonzero(hit).tolist())

    def colon(self, p, q):
        m = self.mask(p)
        cols = sorted(q)
        ok = m[self._mul[:, cols]].all(axis=1)
        return frozenset(np.flatnonzero(ok).tolist())

    def generators(self, p) -> list:
        gens, span = [], self.zero_ideal()
        for i in sorted(p):
            if i not in span:
                span = self._sum_sets(span, self._principal_index(i))
                gens.append(self.labels[i])
        return gens or [self.zero]

    @cached_property
    def _all_ideals(self) -> list:
        seen = {self.zero_ideal()}
        frontier = [self.zero_ideal()]
        principals = [self._principal_index(i) for i in range(self.size)]
        while frontier:
            nxt = []
            for ideal in frontier:
                for i in range(self.size):
                    if i in ideal:
                        continue
                    bigger = self._sum_sets(ideal, principals[i])
                    if bigger not in seen:
                        seen.add(bigger)
                        nxt.append(bigger)
            frontier = nxt
        return sorted(seen, key=lambda s: (len(s), sorted(s)))

    def ideals(self, bound=None) -> list:
        return list(self._all_ideals)

    def ideal_elements(self, p) -> list:
        return [self.labels[i] for i in sorted(p)]

    def is_ideal(self, indices) -> bool:
        """Whether a set of indices is closed under addition and ring multiplication."""
        s = sorted(set(indices))
        if self.zero_index not in s:
            return False
        fs = frozenset(s)
        return set(np.unique(self._add[np.ix_(s, s)]).tolist()) <= fs and set(
            np.unique(self._mul[:, s]).tolist()
        ) <= fs
