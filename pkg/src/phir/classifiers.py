"""Ideal-class predicates returning verdicts with witnesses.

Finite rings are decided by exhaustive search.  On rings with Z or Z[1/S]
components the phi-r and phi-pr predicates use a componentwise reduction
with closed forms for the integer components; everything else falls back to
a search over elements of magnitude at most ``bound`` and reports
``HoldsUpToBound`` when nothing is found.

Witness shapes:

* r-type and prime-type classes: ``(a, b)``
* pure / vnr classes: ``(a,)``
* strongly phi-r: ``(X, Y)`` ideals
* regular-ideal: ``(x,)``, a nonzero element killing the ideal
* idempotent: ``(I**2,)``
* sac: ``(J,)``, an ideal with no single-element annihilator witness
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from sympy import primefactors

from .atoms import LocZAtom, ZAtom, ZnAtom
from .errors import ImproperIdeal
from .ideals import (
    Ideal,
    annihilator,
    enumerate_ideals,
    ideal_from_generators,
    principal,
    radical,
    unit_ideal,
    zero_ideal,
)
from .phi import EMPTY, PhiEmpty, PhiMap, PhiPower, PhiZero, member, subset
from .rings import Ring, Sample, vmul
from .verdict import Status, Verdict

DEFAULT_BOUND = 1000
DEFAULT_IDEAL_BOUND = 50
_CHUNK = 1 << 21


def _require_proper(I: Ideal):
    if not I.is_proper:
        raise ImproperIdeal(f"{I} is not proper; the ideal classes are defined for proper ideals")


@lru_cache(maxsize=512)
def _sample(R: Ring, bound: int | None) -> Sample:
    return Sample.build(R, None if R.finite else bound)


def _fmask(F, codes):
    if F is EMPTY:
        return np.zeros(np.broadcast(*codes).shape, dtype=bool)
    return F.vcontains(codes)


def search_pairs(s: Sample, a_sel: np.ndarray, b_sel: np.ndarray, pred):
    """First (a, b) with ``pred`` true, a in row order; returns sample indices or None."""
    A = np.flatnonzero(a_sel)
    B = np.flatnonzero(b_sel)
    if len(A) == 0 or len(B) == 0:
        return None
    Bc = tuple(c[B][None, :] for c in s.codes)
    step = max(1, _CHUNK // len(B))
    for lo in range(0, len(A), step):
        rows = A[lo : lo + step]
        Ac = tuple(c[rows][:, None] for c in s.codes)
        hit = pred(Ac, Bc)
        if hit.any():
            r, c = np.unravel_index(int(np.argmax(hit)), hit.shape)
            return int(rows[r]), int(B[c])
    return None


def _finish(s: Sample, found, bound) -> Verdict:
    if found is not None:
        return Verdict.fails(*(s.element(i) for i in found))
    return Verdict.holds_up_to(bound) if s.partial else Verdict.holds()


# phi-r and phi-pr ------------------------------------------------------------


def _r_search(R: Ring, I: Ideal, F, target: Ideal, bound) -> Verdict:
    """Search a regular, b with ab in I - F and b outside ``target``."""
    s = _sample(R, bound)

    def pred(A, B):
        ab = vmul(R, A, B)
        return I.vcontains(ab) & ~_fmask(F, ab)

    found = search_pairs(s, s.regular_mask(), ~target.vcontains(s.codes), pred)
    return _finish(s, found, bound)


def _integer_violation(atom, d: int, t: int):
    """Regular a, b with ab = d, b outside <t>, in Z or Z[1/S]; None if impossible."""
    if d in (0, 1):
        return None
    p = primefactors(d)[0]
    for a, b in ((p, d // p), (d, 1)):
        if not atom.contains(t, atom.normalize(b)):
            return atom.normalize(a), atom.normalize(b)
    return None


def _component_facts(R: Ring, I: Ideal, F, target: Ideal, i: int):
    """Per-component witnesses: (V, A, B) each a (a_i, b_i) pair or None.

    V: a_i b_i in I_i - F_i and b_i outside T_i.
    A: a_i b_i in I_i - F_i.
    B: a_i b_i in I_i and b_i outside T_i.
    """
    atom = R.atoms[i]
    Ri, Ii, Ti = R.component(i), I.component(i), target.component(i)
    Fi = EMPTY if F is EMPTY else F.component(i)
    if isinstance(atom, (ZAtom, LocZAtom)):
        B = _integer_violation(atom, Ii.parts[0], Ti.parts[0])
        if Fi is EMPTY:
            return B, (atom.one, atom.zero), B
        if Fi == Ii:
            return None, None, B
        # some generator of I_i lies outside F_i
        A = (atom.one, Ii.generators()[0])
        return B, A, B
    V = _r_search(Ri, Ii, Fi, Ti, None)
    Bv = V if Fi is EMPTY else _r_search(Ri, Ii, EMPTY, Ti, None)
    A = None
    if Fi is EMPTY:
        A = (atom.one, atom.zero)
    else:
        for g in Ii.generators():
            if g not in Fi:
                A = (atom.one, g)
                break
    return (V.witness if V.failed else None), A, (Bv.witness if Bv.failed else None)


def _r_closed(R: Ring, I: Ideal, F, target: Ideal) -> Verdict:
    """Exact decision by reducing to components.

    A violating pair needs every a_i regular and a_i b_i in I_i, some
    component j with a_j b_j outside F_j and some k with b_k outside T_k.
    """
    facts = [_component_facts(R, I, F, target, i) for i in range(R.arity)]
    a = [at.one for at in R.atoms]
    b = [at.one if not at.is_proper(p) else at.zero for at, p in zip(R.atoms, I.parts)]
    pick = None
    for j, (V, _, _) in enumerate(facts):
        if V is not None:
            pick = [(j, V)]
            break
    if pick is None:
        for j, (_, A, _) in enumerate(facts):
            for k, (_, _, B) in enumerate(facts):
                if j != k and A is not None and B is not None:
                    pick = [(j, A), (k, B)]
                    break
            if pick:
                break
    if pick is None:
        return Verdict.holds()
    for idx, (ai, bi) in pick:
        a[idx], b[idx] = ai, bi
    return Verdict.fails(R.join(a), R.join(b))


def _r_family(R, I, phi, bound, method, pr: bool) -> Verdict:
    _require_proper(I)
    F = phi(I)
    target = radical(I) if pr else I
    if method == "auto":
        method = "search" if R.finite else "closed"
    if method == "search":
        return _r_search(R, I, F, target, bound)
    if method == "closed":
        return _r_closed(R, I, F, target)
    raise ValueError(f"unknown method {method!r}")


def is_phi_r_ideal(R: Ring, I: Ideal, phi: PhiMap, bound: int = DEFAULT_BOUND, method: str = "auto") -> Verdict:
    """ab in I - phi(I) with a regular forces b in I.

    ``method`` is ``"search"`` (exhaustive, or bounded on infinite rings),
    ``"closed"`` (componentwise reduction) or ``"auto"``.
    """
    return _r_family(R, I, phi, bound, method, pr=False)


def is_r_ideal(R: Ring, I: Ideal, bound: int = DEFAULT_BOUND, method: str = "auto") -> Verdict:
    return is_phi_r_ideal(R, I, PhiEmpty(), bound, method)


def is_weakly_r_ideal(R: Ring, I: Ideal, bound: int = DEFAULT_BOUND, method: str = "auto") -> Verdict:
    return is_phi_r_ideal(R, I, PhiZero(), bound, method)


def is_phi_pr_ideal(R: Ring, I: Ideal, phi: PhiMap, bound: int = DEFAULT_BOUND, method: str = "auto") -> Verdict:
    """Like phi-r, concluding b**n in I for some n (b in the radical of I)."""
    return _r_family(R, I, phi, bound, method, pr=True)


# phi-pure and phi-vnr --------------------------------------------------------


def _pure_like(R: Ring, I: Ideal, phi: PhiMap, bound, vnr: bool) -> Verdict:
    _require_proper(I)
    F = phi(I)
    filters = [lambda c, a=a, p=p: a.vcontains(p, c) for a, p in zip(R.atoms, I.parts)]
    s = Sample.build(R, None if R.finite else bound, filters)
    good = np.ones(len(s), dtype=bool)
    for i, atom in enumerate(R.atoms):
        c = s.codes[i]
        u, inv = np.unique(c, return_inverse=True)
        A, B = u[:, None], u[None, :]
        lhs = atom.vmul(atom.vmul(A, A), B) if vnr else atom.vmul(A, B)
        # b ranges over the elements of I_i in the sample
        good &= (lhs == A).any(axis=1)[inv.ravel()]
    bad = ~good & ~_fmask(F, s.codes)
    if bad.any():
        return Verdict.fails(s.element(int(np.argmax(bad))))
    return Verdict.holds_up_to(bound) if s.partial else Verdict.holds()


def is_phi_pure(R: Ring, I: Ideal, phi: PhiMap, bound: int = DEFAULT_BOUND) -> Verdict:
    """Every a in I - phi(I) has b in I with a = ab."""
    return _pure_like(R, I, phi, bound, vnr=False)


def is_phi_vnr(R: Ring, I: Ideal, phi: PhiMap, bound: int = DEFAULT_BOUND) -> Verdict:
    """Every a in I - phi(I) has b in I with a = a**2 b."""
    return _pure_like(R, I, phi, bound, vnr=True)


def is_pure(R: Ring, I: Ideal, bound: int = DEFAULT_BOUND) -> Verdict:
    return is_phi_pure(R, I, PhiEmpty(), bound)


def is_vnr_ideal(R: Ring, I: Ideal, bound: int = DEFAULT_BOUND) -> Verdict:
    return is_phi_vnr(R, I, PhiEmpty(), bound)


# prime-type ------------------------------------------------------------------


def _prime_closed(R: Ring, I: Ideal) -> Verdict:
    """Primality for products of Z, Z/n and Z[1/S] atoms.

    A product ideal is prime iff exactly one component is proper and that
    component is prime: <0> or <p> in the integer atoms, <p> in Z/n.
    """
    proper = [i for i, (a, p) in enumerate(zip(R.atoms, I.parts)) if a.is_proper(p)]
    a = [at.one for at in R.atoms]
    b = [at.one for at in R.atoms]
    if len(proper) > 1:
        i, j = proper[:2]
        a[i], b[j] = R.atoms[i].zero, R.atoms[j].zero
        return Verdict.fails(R.join(a), R.join(b))
    (i,) = proper
    atom, d = R.atoms[i], I.parts[i]
    if isinstance(atom, (ZAtom, LocZAtom)) and d == 0:
        return Verdict.holds()
    if isinstance(atom, ZnAtom) and d == atom.n:
        d = atom.n
    ps = primefactors(d)
    if len(ps) == 1 and ps[0] == d:
        return Verdict.holds()
    p = ps[0]
    a[i], b[i] = atom.normalize(p), atom.normalize(d // p)
    return Verdict.fails(R.join(a), R.join(b))


def is_phi_prime(R: Ring, I: Ideal, phi: PhiMap, bound: int = DEFAULT_BOUND, method: str = "auto") -> Verdict:
    """a1 a2 in I - phi(I) forces a1 in I or a2 in I.

    With ``method="auto"`` the plain prime case on infinite rings without
    table components is decided exactly by :func:`_prime_closed`.
    """
    _require_proper(I)
    if method == "closed" or (
        method == "auto" and not R.finite and isinstance(phi, PhiEmpty)
        and all(isinstance(a, (ZAtom, ZnAtom, LocZAtom)) for a in R.atoms)
    ):
        return _prime_closed(R, I)
    F = phi(I)
    s = _sample(R, bound)
    outside = ~I.vcontains(s.codes)

    def pred(A, B):
        ab = vmul(R, A, B)
        return I.vcontains(ab) & ~_fmask(F, ab)

    return _finish(s, search_pairs(s, outside, outside, pred), bound)


def is_prime(R: Ring, I: Ideal, bound: int = DEFAULT_BOUND, method: str = "auto") -> Verdict:
    return is_phi_prime(R, I, PhiEmpty(), bound, method)


# ideal-level classes -----------------------------------------------------------


def is_strongly_phi_r(R: Ring, I: Ideal, phi: PhiMap, bound: int = DEFAULT_IDEAL_BOUND) -> Verdict:
    """XY in I, XY not in phi(I) and Ann(X) = 0 force Y in I, over enumerated ideal pairs."""
    _require_proper(I)
    F = phi(I)
    ideals = enumerate_ideals(R, bound)
    zero = zero_ideal(R)
    for X in ideals:
        if annihilator(R, X) != zero:
            continue
        for Y in ideals:
            XY = X * Y
            if XY <= I and not subset(XY, F) and not Y <= I:
                return Verdict.fails(X, Y)
    return Verdict.holds().weaken(ideals.bound)


def is_idempotent(I: Ideal) -> bool:
    return I * I == I


def idempotent_verdict(I: Ideal) -> Verdict:
    sq = I * I
    return Verdict.of(sq == I, sq)


def is_regular_ideal(R: Ring, I: Ideal) -> Verdict:
    """Whether I contains a regular element, decided per component.

    Fails carries a nonzero x with xI = 0, so every element of I is a zerodivisor.
    """
    ann = annihilator(R, I)
    for i, (atom, p) in enumerate(zip(R.atoms, I.parts)):
        comp = I.component(i)
        if any(R.component(i).is_regular(g) for g in comp.generators()):
            continue
        if atom.finite and any(atom.is_regular(x) for x in comp.elements()):
            continue
        x = [at.zero for at in R.atoms]
        g = [c for c in ann.component(i).generators() if c != atom.zero]
        if not g:
            return Verdict.fails()
        x[i] = g[0]
        return Verdict.fails(R.join(x))
    return Verdict.holds()


def _ideal_sample(Ri: Ring, Ii: Ideal, bound):
    if Ri.finite:
        return Ii.elements()
    atom = Ri.atom
    codes = [c for c in atom.sample_codes(bound) if atom.vcontains(Ii.parts[0], np.int64(c))]
    return [atom.decode(c) for c in codes]


def satisfies_sac(R: Ring, bound: int = DEFAULT_IDEAL_BOUND, element_bound: int = DEFAULT_BOUND) -> Verdict:
    """Every (finitely generated) ideal J has b in J with Ann(J) = Ann(b)."""
    ideals = enumerate_ideals(R, bound)
    cache = {}
    for J in ideals:
        for i in range(R.arity):
            Ji = J.component(i)
            if Ji not in cache:
                Ri = R.component(i)
                target = annihilator(Ri, Ji)
                cache[Ji] = any(annihilator(Ri, b) == target for b in _ideal_sample(Ri, Ji, element_bound))
            if not cache[Ji]:
                return Verdict.fails(J)
    return Verdict.holds().weaken(ideals.bound)


# classes and reports -------------------------------------------------------------

PHI_CLASSES = ("phi-r", "phi-pr", "phi-pure", "phi-vnr", "strongly-phi-r", "phi-prime")
PLAIN_CLASSES = ("r", "weakly-r", "prime", "pure", "vnr", "idempotent", "regular-ideal", "sac")
ALL_CLASSES = PLAIN_CLASSES[:3] + PHI_CLASSES + PLAIN_CLASSES[3:]


@dataclass(frozen=True)
class IdealClass:
    kind: str
    phi: PhiMap | None = None

    def __post_init__(self):
        if self.kind not in ALL_CLASSES:
            raise ValueError(f"unknown ideal class {self.kind!r}")
        if (self.kind in PHI_CLASSES) != (self.phi is not None):
            raise ValueError(f"{self.kind} {'needs' if self.kind in PHI_CLASSES else 'takes no'} phi")

    @property
    def name(self) -> str:
        return self.kind if self.phi is None else f"{self.kind}:{self.phi.name}"

    def __str__(self):
        return self.name


def check(cls: IdealClass, R: Ring, I: Ideal, bound: int = DEFAULT_BOUND, ideal_bound: int = DEFAULT_IDEAL_BOUND) -> Verdict:
    k, phi = cls.kind, cls.phi
    if k == "r":
        return is_r_ideal(R, I, bound)
    if k == "weakly-r":
        return is_weakly_r_ideal(R, I, bound)
    if k == "phi-r":
        return is_phi_r_ideal(R, I, phi, bound)
    if k == "phi-pr":
        return is_phi_pr_ideal(R, I, phi, bound)
    if k == "phi-pure":
        return is_phi_pure(R, I, phi, bound)
    if k == "phi-vnr":
        return is_phi_vnr(R, I, phi, bound)
    if k == "pure":
        return is_pure(R, I, bound)
    if k == "vnr":
        return is_vnr_ideal(R, I, bound)
    if k == "strongly-phi-r":
        return is_strongly_phi_r(R, I, phi, ideal_bound)
    if k == "prime":
        return is_prime(R, I, bound)
    if k == "phi-prime":
        return is_phi_prime(R, I, phi, bound)
    if k == "idempotent":
        return idempotent_verdict(I)
    if k == "regular-ideal":
        return is_regular_ideal(R, I)
    if k == "sac":
        return satisfies_sac(R, ideal_bound, bound)
    raise AssertionError(k)


def validate_witness(cls: IdealClass, R: Ring, I: Ideal, verdict: Verdict) -> bool:
    """Re-check a Fails witness by direct ideal arithmetic, independently of the search."""
    if verdict.status is not Status.FAILS:
        return True
    w = verdict.witness
    k = cls.kind
    phi = {"r": PhiEmpty(), "weakly-r": PhiZero(), "prime": PhiEmpty(), "pure": PhiEmpty(), "vnr": PhiEmpty()}.get(k, cls.phi)
    F = phi(I) if phi is not None else None
    if k in ("r", "weakly-r", "phi-r", "phi-pr"):
        a, b = w
        ab = R.mul(a, b)
        target = radical(I) if k == "phi-pr" else I
        return R.is_regular(a) and ab in I and not member(ab, F) and b not in target
    if k in ("prime", "phi-prime"):
        a, b = w
        ab = R.mul(a, b)
        return ab in I and not member(ab, F) and a not in I and b not in I
    if k in ("pure", "phi-pure"):
        (a,) = w
        # a = ab for some b in I  <=>  1 in I + Ann(a)
        return a in I and not member(a, F) and (I + annihilator(R, a)).is_proper
    if k in ("vnr", "phi-vnr"):
        (a,) = w
        # a = a^2 b for some b in I  <=>  a in <a^2> I
        return a in I and not member(a, F) and a not in principal(R, R.mul(a, a)) * I
    if k == "strongly-phi-r":
        X, Y = w
        XY = X * Y
        return annihilator(R, X) == zero_ideal(R) and XY <= I and not subset(XY, F) and not Y <= I
    if k == "idempotent":
        return w[0] == I * I and w[0] != I
    if k == "regular-ideal":
        (x,) = w
        return x != R.zero and all(R.mul(x, g) == R.zero for g in I.generators())
    if k == "sac":
        (J,) = w
        if not R.finite:
            return False
        target = annihilator(R, J)
        return all(annihilator(R, b) != target for b in J.elements())
    raise AssertionError(k)


@dataclass
class ClassificationReport:
    ring: Ring
    ideal: Ideal
    results: list = field(default_factory=list)  # (IdealClass, Verdict) pairs
    bound: int = DEFAULT_BOUND
    ideal_bound: int = DEFAULT_IDEAL_BOUND

    def __getitem__(self, name: str) -> Verdict:
        for cls, v in self.results:
            if cls.name == name:
                return v
        raise KeyError(name)

    def names(self) -> list:
        return [cls.name for cls, _ in self.results]


DEFAULT_PHIS = (PhiEmpty(), PhiZero(), PhiPower(2))


def classify(R: Ring, I: Ideal, phis=DEFAULT_PHIS, bound: int = DEFAULT_BOUND, ideal_bound: int = DEFAULT_IDEAL_BOUND,
             classes=None) -> ClassificationReport:
    """Run every ideal class (for every phi in ``phis``) on a proper ideal."""
    _require_proper(I)
    wanted = []
    for kind in classes or ALL_CLASSES:
        if kind in PHI_CLASSES:
            wanted += [IdealClass(kind, phi) for phi in phis]
        else:
            wanted.append(IdealClass(kind))
    report = ClassificationReport(R, I, bound=bound, ideal_bound=ideal_bound)
    for cls in wanted:
        report.results.append((cls, check(cls, R, I, bound, ideal_bound)))
    return report


def ideal_of(R: Ring, *gens) -> Ideal:
    return ideal_from_generators(R, list(gens))


def improper(R: Ring) -> Ideal:
    return unit_ideal(R)
