"""Quotients, idealizations and localizations of rings."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .atoms import LocZAtom, TableAtom, ZAtom, ZnAtom
from .errors import (
    ImproperIdeal,
    InfiniteIdealizationBase,
    InvalidIdealPair,
    NonRegularDenominator,
    UnsupportedLocalization,
    ZeroInMultiplicativeSet,
)
from .ideals import Ideal, format_element, ideal_from_generators, unit_ideal
from .rings import Ring


def table_from_ring(R: Ring, name: str, labels=None) -> TableAtom:
    """Materialize a finite ring as a table atom (labels default to the elements)."""
    elems = R.elements()
    index = {x: i for i, x in enumerate(elems)}
    add = [[index[R.add(x, y)] for y in elems] for x in elems]
    mul = [[index[R.mul(x, y)] for y in elems] for x in elems]
    return TableAtom(labels or elems, add, mul, index[R.zero], index[R.one], name=name)


# quotients -----------------------------------------------------------------


@dataclass
class _AtomQuotient:
    atom: object  # None when the component collapses
    project: Callable
    lift: Callable  # part of the quotient atom -> part of the source atom
    image: Callable  # part of the source atom -> part of the quotient atom


def _identity_quotient(a) -> _AtomQuotient:
    ident = lambda v: v  # noqa: E731
    return _AtomQuotient(a, ident, ident, ident)


def _cyclic_quotient(a, d: int, to_int) -> _AtomQuotient:
    q = ZnAtom(d)
    return _AtomQuotient(
        q,
        lambda x: to_int(x) % d,
        lambda e: e,
        lambda j: math.gcd(j, d),
    )


def _quotient_atom(a, p) -> _AtomQuotient:
    if p == a.zero_ideal():
        return _identity_quotient(a)
    if not a.is_proper(p):
        return _AtomQuotient(None, None, None, None)
    if isinstance(a, ZAtom):
        return _cyclic_quotient(a, p, int)
    if isinstance(a, ZnAtom):
        return _cyclic_quotient(a, p, int)
    if isinstance(a, LocZAtom):
        d = p
        return _cyclic_quotient(a, d, lambda x: x.numerator * pow(x.denominator, -1, d))
    return _table_quotient(a, p)


def _table_quotient(a: TableAtom, p: frozenset) -> _AtomQuotient:
    n = a.size
    coset_of = [-1] * n
    reps = []
    members = sorted(p)
    for i in range(n):
        if coset_of[i] >= 0:
            continue
        k = len(reps)
        reps.append(i)
        for j in a._add[i, members].tolist():
            coset_of[j] = k
    add = [[coset_of[a._add[r, s]] for s in reps] for r in reps]
    mul = [[coset_of[a._mul[r, s]] for s in reps] for r in reps]
    labels = [a.labels[r] for r in reps]
    gens = ", ".join(format_element(g) for g in a.generators(p))
    q = TableAtom(labels, add, mul, coset_of[a.zero_index], coset_of[a.one_index], name=f"quot({a.name}, gen {gens})")
    return _AtomQuotient(
        q,
        lambda x: labels[coset_of[a.index(x)]],
        lambda part: frozenset(i for i in range(n) if coset_of[i] in part),
        lambda part: frozenset(coset_of[i] for i in part),
    )


@dataclass
class QuotientMap:
    """``R -> R/I`` with the induced maps on ideals."""

    source: Ring
    ideal: Ideal
    ring: Ring
    _pieces: list = field(repr=False)
    _kept: list = field(repr=False)

    def project(self, x):
        parts = self.source.parts(self.source(x))
        return self.ring.join(self._pieces[i].project(parts[i]) for i in self._kept)

    __call__ = project

    def lift(self, K: Ideal) -> Ideal:
        """Preimage of an ideal of R/I (an ideal of R containing I)."""
        out = list(unit_ideal(self.source).parts)
        for slot, i in enumerate(self._kept):
            out[i] = self._pieces[i].lift(K.parts[slot])
        return Ideal(self.source, tuple(out))

    def image(self, J: Ideal) -> Ideal:
        """(J + I)/I."""
        return Ideal(self.ring, tuple(self._pieces[i].image(J.parts[i]) for i in self._kept))


def make_quotient(R: Ring, I: Ideal) -> QuotientMap:
    if not I.is_proper:
        raise ImproperIdeal(f"{I} is not a proper ideal of {R}")
    pieces = [_quotient_atom(a, p) for a, p in zip(R.atoms, I.parts)]
    kept = [i for i, pc in enumerate(pieces) if pc.atom is not None]
    Q = Ring(tuple(pieces[i].atom for i in kept))
    return QuotientMap(R, I, Q, pieces, kept)


# idealization --------------------------------------------------------------


class RegularModule:
    """M = R acting on itself."""

    def __eq__(self, other):
        return isinstance(other, RegularModule)

    def __hash__(self):
        return hash("RegularModule")

    def __repr__(self):
        return "RegularModule()"


@dataclass(frozen=True)
class QuotientModule:
    """M = R/J."""

    ideal: Ideal


class IdealizationAtom(TableAtom):
    """R(+)M materialized on pairs ``(r, m)`` with (a,m)(b,n) = (ab, an + bm)."""

    def __init__(self, base: Ring, module_map: QuotientMap | None, name: str):
        self.base = base
        self.module_map = module_map
        self.module_ring = module_map.ring if module_map is not None else base
        M = self.module_ring
        act = module_map.project if module_map is not None else (lambda r: r)
        R_el, M_el = base.elements(), M.elements()
        labels = [(r, m) for r in R_el for m in M_el]
        index = {x: i for i, x in enumerate(labels)}
        # (a,m)+(b,n) = (a+b, m+n); (a,m)(b,n) = (ab, an + bm)
        add = [[index[(base.add(a, b), M.add(m, n))] for (b, n) in labels] for (a, m) in labels]
        mul = [
            [index[(base.mul(a, b), M.add(M.mul(act(a), n), M.mul(act(b), m)))] for (b, n) in labels]
            for (a, m) in labels
        ]
        super().__init__(labels, add, mul, (base.zero, M.zero), (base.one, M.zero), name=name)
        self._act = act

    def act(self, r, m):
        return self.module_ring.mul(self._act(r), m)

    def embed(self, a):
        return (self.base(a), self.module_ring.zero)

    def module_zerodivisors(self) -> frozenset:
        """z(M) = {r : rm = 0 for some m != 0}."""
        M = self.module_ring
        nonzero = [m for m in M.elements() if m != M.zero]
        return frozenset(r for r in self.base.elements() if any(self.act(r, m) == M.zero for m in nonzero))

    def zerodivisor_formula(self) -> frozenset:
        """{(r, m) : r in z(R) or z(M)}."""
        zR = frozenset(r for r in self.base.elements() if not self.base.is_regular(r))
        bad = zR | self.module_zerodivisors()
        return frozenset(lab for lab in self.labels if lab[0] in bad)

    def pair_part(self, J: Ideal, N: Ideal) -> frozenset:
        """Part for J(+)N; N is a submodule, given as an ideal of the module ring."""
        if J.ring != self.base or N.ring != self.module_ring:
            raise InvalidIdealPair("J must be an ideal of R and N a submodule of M")
        for j in J.generators():
            for m in self.module_ring.elements():
                if self.act(j, m) not in N:
                    raise InvalidIdealPair(f"JM is not contained in N: {j}*{m} not in {N}")
        return frozenset(self.index((r, m)) for r in J.elements() for m in N.elements())

    def split_part(self, part: frozenset):
        """Recognize a J(+)N shape; returns ``(J, N)`` or ``None``."""
        elems = [self.labels[i] for i in part]
        J_el = {r for r, _ in elems}
        N_el = {m for _, m in elems}
        if len(elems) != len(J_el) * len(N_el):
            return None
        J = ideal_from_generators(self.base, sorted(J_el, key=self.base.rank))
        N = ideal_from_generators(self.module_ring, sorted(N_el, key=self.module_ring.rank))
        if set(J.elements()) != J_el or set(N.elements()) != N_el:
            return None
        return J, N


def make_idealization(R: Ring, module=None) -> Ring:
    """R(+)M for a finite ring R; ``module`` is RegularModule() or QuotientModule(J)."""
    if not R.finite:
        raise InfiniteIdealizationBase(f"{R} is infinite; idealization needs a finite base ring")
    module = module or RegularModule()
    if isinstance(module, QuotientModule):
        J = module.ideal
        if J.ring != R:
            raise InvalidIdealPair("module ideal must belong to the base ring")
        qmap = make_quotient(R, J)
        if J.is_zero:
            qmap = None
        name = f"idealize({R})" if qmap is None else f"idealize({R}, mod {J.text()})"
    else:
        qmap = None
        name = f"idealize({R})"
    return Ring((IdealizationAtom(R, qmap, name),))


def idealization_atom(R: Ring) -> IdealizationAtom:
    a = R.atom
    if not isinstance(a, IdealizationAtom):
        from .errors import ShapeMismatch

        raise ShapeMismatch(f"{R} is not an idealization")
    return a


def pair_ideal(R: Ring, J: Ideal, N: Ideal | None = None) -> Ideal:
    """The ideal J(+)N of R(+)M (N defaults to all of M)."""
    a = idealization_atom(R)
    if N is None:
        N = unit_ideal(a.module_ring)
    return Ideal(R, (a.pair_part(J, N),))


def split_pair_ideal(I: Ideal):
    a = idealization_atom(I.ring)
    return a.split_part(I.parts[0])


# localization --------------------------------------------------------------


@dataclass
class LocalizationMap:
    """``R -> S^-1 R`` for S generated by ``gens``."""

    source: Ring
    gens: tuple
    ring: Ring
    _kinds: list = field(repr=False)

    def __call__(self, x):
        return self.ring(x)

    def extend(self, I: Ideal) -> Ideal:
        """I_S."""
        out = []
        for (kind, src, dst), p in zip(self._kinds, I.parts):
            out.append(dst.strip(p) if kind == "loc" else p)
        return Ideal(self.ring, tuple(out))

    def contract(self, J: Ideal) -> Ideal:
        """J intersected with R (preimage under the canonical map)."""
        return Ideal(self.source, tuple(J.parts))

    def meets(self, I: Ideal) -> bool:
        """Whether S meets I; decided exactly by a high power of the product of generators."""
        if not self.gens:
            return not I.is_proper
        s = self.source.one
        for g in self.gens:
            s = self.source.mul(s, g)
        e = 1
        for a, p in zip(self.source.atoms, I.parts):
            if isinstance(a, (ZAtom, LocZAtom)) and p:
                e = max(e, int(p).bit_length())
        if self.source.finite:
            e = max(e, self.source.size)
        return self.source.power(s, e) in I

    def contained_in_regular(self) -> bool:
        return all(self.source.is_regular(g) for g in self.gens)


def make_localization(R: Ring, S) -> LocalizationMap:
    """Localize at the multiplicative set generated by the elements of ``S``.

    Integers are mapped diagonally.  Generators must be regular; finite
    components are left unchanged (their regular elements are units).
    """
    gens = tuple(R(s) for s in S)
    for g in gens:
        if g == R.zero:
            raise ZeroInMultiplicativeSet("0 cannot be inverted")
        if not R.is_regular(g):
            raise NonRegularDenominator(f"{format_element(g)} is not regular in {R}")
    atoms, kinds = [], []
    for i, a in enumerate(R.atoms):
        comp = [R.parts(g)[i] for g in gens]
        if isinstance(a, ZAtom):
            nontrivial = [c for c in comp if abs(c) != 1]
            if nontrivial:
                b = LocZAtom(nontrivial)
                atoms.append(b)
                kinds.append(("loc", a, b))
                continue
        elif isinstance(a, LocZAtom):
            nums = [abs(c.numerator) for c in comp if a.strip(c.numerator) != 1]
            if nums:
                b = LocZAtom(list(a.primes) + nums)
                atoms.append(b)
                kinds.append(("loc", a, b))
                continue
        elif not isinstance(a, (ZnAtom, TableAtom)):
            raise UnsupportedLocalization(f"cannot localize {a.name}")
        atoms.append(a)
        kinds.append(("id", a, a))
    return LocalizationMap(R, gens, Ring(tuple(atoms)), kinds)
