"""Executable checks for the phi-r-ideal results, over one ring or a corpus.

Every check enumerates instances (ideals, phi maps, auxiliary elements),
evaluates the hypotheses first and only then the conclusion.  Instances
whose hypotheses fail are counted but never reported as counterexamples.
When a hypothesis was only established up to a search bound and the
conclusion fails, the instance is counted as inconclusive instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .classifiers import (
    DEFAULT_BOUND,
    DEFAULT_IDEAL_BOUND,
    IdealClass,
    check,
    is_phi_r_ideal,
    is_prime,
    is_strongly_phi_r,
    satisfies_sac,
    validate_witness,
)
from .constructions import idealization_atom, make_localization, make_quotient, pair_ideal
from .errors import NonRegularDenominator, PhirError, ShapeMismatch, UnsupportedLocalization
from .ideals import Ideal, colon_set, enumerate_ideals, ideal_from_generators, principal, radical
from .phi import (
    EMPTY,
    PhiCustom,
    PhiEmpty,
    PhiLocalizationInduced,
    PhiOmega,
    PhiPower,
    PhiQuotientInduced,
    PhiZero,
    named_chain,
    is_order_preserving,
    phi_leq,
    product_power,
    subset,
)
from .rings import Ring, Sample, is_total_quotient_ring, vmul, zerodivisors
from .verdict import Status, Verdict

THEOREMS = (
    "basic-1", "basic-2", "basic-3", "basic-4",
    "quot-phi-1", "quot-phi-2", "cha", "diff-zd", "equ", "rad", "union",
    "pro-zd", "prime-zd", "colon-x", "strongly-implies", "sac-thm",
    "quot-JI", "quot-lift", "ide", "loc-1", "loc-2", "product-tqr",
)

PROBE_PHIS = (PhiEmpty(), PhiZero(), PhiPower(2), PhiOmega())

INCONCLUSIVE = "inconclusive"

# magnitude bound for the elements x of colon-x on infinite rings
X_BOUND = 10


@dataclass
class TheoremReport:
    theorem: str
    ring: str
    instances: int = 0
    hypotheses_satisfied: int = 0
    conclusion: Verdict = field(default_factory=Verdict.holds)
    witnesses: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)
    inconclusive: int = 0
    notes: list = field(default_factory=list)
    rings: int = 1

    @property
    def violations(self) -> int:
        return len(self.counterexamples)


class _Tally:
    def __init__(self, theorem: str, ring):
        self.report = TheoremReport(theorem, str(ring))
        self.bound = None

    def seen(self, v):
        if isinstance(v, Verdict) and v.status is Status.HOLDS_UP_TO:
            self.bound = max(self.bound or 0, v.bound)

    def case(self, label: tuple, hyps: list, conclusion) -> bool:
        """One instance; hypotheses and conclusion are Verdicts or thunks producing them.

        Hypotheses are evaluated in order and stop at the first failure.
        """
        r = self.report
        r.instances += 1
        evaluated = []
        for h in hyps:
            h = h() if callable(h) else h
            if h.failed:
                return False
            evaluated.append(h)
        hyps = evaluated
        r.hypotheses_satisfied += 1
        for h in hyps:
            self.seen(h)
        c = conclusion() if callable(conclusion) else conclusion
        if c is INCONCLUSIVE:
            r.inconclusive += 1
        elif c.failed:
            if all(h.exact for h in hyps):
                r.counterexamples.append(tuple(label) + tuple(c.witness))
            else:
                r.inconclusive += 1
        else:
            self.seen(c)
        return True

    def finish(self) -> TheoremReport:
        r = self.report
        if r.counterexamples:
            r.conclusion = Verdict.fails(*r.counterexamples[0])
            r.witnesses = list(r.counterexamples)
        elif self.bound is not None:
            r.conclusion = Verdict.holds_up_to(self.bound)
        else:
            r.conclusion = Verdict.holds()
        return r


def _iff(u: Verdict, v: Verdict):
    """Both sides agree; a disagreement against a bounded Holds is inconclusive."""
    if u.failed == v.failed:
        return Verdict.holds() if u.failed else Verdict.all([u, v])
    holding = v if u.failed else u
    if not holding.exact:
        return INCONCLUSIVE
    return Verdict.fails(f"lhs={u}", f"rhs={v}")


def _truth(ok: bool, *witness) -> Verdict:
    return Verdict.of(ok, *witness)


class _Ctx:
    """Per-ring caches shared by the checks of one ``verify`` call."""

    def __init__(self, R: Ring, params: dict, bound: int, ideal_bound: int):
        self.R = R
        self.params = params
        self.bound = bound
        self.ideal_bound = ideal_bound
        self._phir = {}
        self._ideals = None

    @property
    def phis(self) -> list:
        if "phis" in self.params:
            return list(self.params["phis"])
        if "phi" in self.params:
            return [self.params["phi"]]
        return list(PROBE_PHIS)

    def proper(self) -> list:
        if self._ideals is None:
            self._ideals = enumerate_ideals(self.R, None if self.R.finite else self.ideal_bound, proper_only=True)
        return self._ideals

    def enumeration_verdict(self) -> Verdict:
        ideals = self.proper()
        return Verdict.holds_up_to(ideals.bound) if ideals.partial else Verdict.holds()

    def phi_r(self, I: Ideal, phi, R: Ring | None = None) -> Verdict:
        R = R or self.R
        key = (R, I, phi if not isinstance(phi, (PhiCustom, PhiQuotientInduced, PhiLocalizationInduced)) else id(phi))
        if key not in self._phir:
            self._phir[key] = is_phi_r_ideal(R, I, phi, self.bound)
        return self._phir[key]

    def r(self, I: Ideal, R: Ring | None = None) -> Verdict:
        return self.phi_r(I, PhiEmpty(), R)


# helpers -----------------------------------------------------------------------


def _phi_ideal(F) -> Verdict:
    return _truth(F is not EMPTY)


def _is_r(ctx: _Ctx, F) -> Verdict:
    """phi(I) is an r-ideal (EMPTY is not an ideal)."""
    if F is EMPTY:
        return Verdict.fails("empty")
    if not F.is_proper:
        return Verdict.fails(F)
    return ctx.r(F)


def nonzero_regular(R: Ring, J: Ideal) -> Verdict:
    """Every nonzero element of J is regular (the reading of ``J in r(R)``).

    Fails carries a nonzero zerodivisor of J.
    """
    if J.is_zero:
        return Verdict.holds()
    if R.arity > 1:
        # a nonzero element with a zero coordinate is a zerodivisor
        for i in range(R.arity):
            comp = J.component(i)
            if not comp.is_zero:
                x = [a.zero for a in R.atoms]
                x[i] = comp.generators()[0]
                return Verdict.fails(R.join(x))
    if not R.finite:
        return Verdict.holds()
    for x in J.elements():
        if x != R.zero and not R.is_regular(x):
            return Verdict.fails(x)
    return Verdict.holds()


def regular_element(R: Ring, I: Ideal):
    """A regular element of I, or None (so I lies in zd(R))."""
    out = []
    for i in range(R.arity):
        Ri, Ii = R.component(i), I.component(i)
        cand = [g for g in Ii.generators() if Ri.is_regular(g)]
        if not cand and Ri.finite:
            cand = [x for x in Ii.elements() if Ri.is_regular(x)]
        if not cand:
            return None
        out.append(cand[0])
    return R.join(out)


def in_zd(R: Ring, I: Ideal) -> Verdict:
    x = regular_element(R, I)
    return Verdict.holds() if x is None else Verdict.fails(x)


def _colon_phi(F, Px: Ideal):
    return EMPTY if F is EMPTY else colon_set(F, Px)


def _regular_sample(ctx: _Ctx, default: int) -> list:
    R = ctx.R
    s = Sample.build(R, None if R.finite else ctx.params.get("x_bound", default))
    return [s.element(i) for i in np.flatnonzero(s.regular_mask())]


# checks -------------------------------------------------------------------------


def _basic_1(ctx: _Ctx, t: _Tally):
    chain = named_chain(ctx.params.get("n_max", 4))
    for lo, hi in combinations(chain, 2):
        leq = phi_leq(lo, hi, ctx.R, ctx.ideal_bound)
        for I in ctx.proper():
            t.case((I, lo.name, hi.name), [leq, ctx.phi_r(I, lo)], lambda I=I, hi=hi: ctx.phi_r(I, hi))


def _basic_2(ctx: _Ctx, t: _Tally):
    n_max = ctx.params.get("n_max", 4)
    for I in ctx.proper():
        r, weak = ctx.r(I), ctx.phi_r(I, PhiZero())
        t.case((I, "r<=>weakly-r"), [], lambda: _iff(r, weak))
        steps = [PhiZero(), PhiOmega()] + [PhiPower(n) for n in range(n_max, 1, -1)]
        for lo, hi in zip(steps, steps[1:]):
            t.case((I, f"{lo.name}=>{hi.name}"), [ctx.phi_r(I, lo)], lambda I=I, hi=hi: ctx.phi_r(I, hi))


def _stable_index(I: Ideal) -> int | None:
    if not I.ring.finite:
        return None
    k, P = 1, I
    while P * I != P:
        P, k = P * I, k + 1
    return k


def _basic_3(ctx: _Ctx, t: _Tally):
    n_max = ctx.params.get("n_max", 4)
    for I in ctx.proper():
        k = _stable_index(I)
        top = max(n_max, (k or 0) + 1)
        every = Verdict.all(ctx.phi_r(I, PhiPower(n)) for n in range(2, top + 1))
        if k is None and not every.failed:
            every = every.weaken(top)
        t.case((I, f"omega<=>pow:2..{top}"), [], lambda every=every, I=I: _iff(ctx.phi_r(I, PhiOmega()), every))


def _basic_4(ctx: _Ctx, t: _Tally):
    for I in ctx.proper():
        idem = _truth(I * I == I, I * I)
        for n in range(1, ctx.params.get("n_max", 4) + 1):
            t.case((I, f"pow:{n}"), [idem], lambda I=I, n=n: ctx.phi_r(I, PhiPower(n)))


def _quot_phi_1(ctx: _Ctx, t: _Tally):
    for phi in ctx.phis:
        for I in ctx.proper():
            F = phi(I)

            def concl(I=I, F=F):
                q = make_quotient(ctx.R, F)
                return ctx.r(q.image(I), q.ring)

            hyps = [_phi_ideal(F)]
            if F is not EMPTY:
                hyps.append(nonzero_regular(ctx.R, F))
            hyps.append(ctx.phi_r(I, phi))
            t.case((I, phi.name), hyps, concl)


def _quot_phi_2(ctx: _Ctx, t: _Tally):
    for phi in ctx.phis:
        for I in ctx.proper():
            F = phi(I)
            hyps = [_is_r(ctx, F)]
            if not hyps[0].failed:
                q = make_quotient(ctx.R, F)
                hyps.append(ctx.r(q.image(I), q.ring))
            t.case((I, phi.name), hyps, lambda I=I, phi=phi: ctx.phi_r(I, phi))


def _cha(ctx: _Ctx, t: _Tally):
    R = ctx.R
    # on infinite rings both x and the elements y of (I : x) range up to ideal_bound
    xs = _regular_sample(ctx, ctx.ideal_bound)
    s = Sample.build(R, None if R.finite else ctx.ideal_bound)
    principals = {x: principal(R, x) for x in xs}
    colon_cache = {}

    def col(J, x):
        key = (J, principals[x])
        if key not in colon_cache:
            colon_cache[key] = colon_set(J, principals[x])
        return colon_cache[key]

    X = [_codes(R, x) for x in xs]
    pairs = 0
    for phi in ctx.phis:
        for I in ctx.proper():
            F = phi(I)
            inI = I.vcontains(s.codes)
            two, three, bad = [], [], None
            for x, xc in zip(xs, X):
                xe = vmul(R, xc, s.codes)
                lhs = I.vcontains(xe)
                rhs = inI | (F.vcontains(xe) if F is not EMPTY else False)
                c2 = bool(np.array_equal(lhs, rhs))
                Ix = col(I, x)
                c3 = Ix == I or (F is not EMPTY and Ix == col(F, x))
                two.append(c2)
                three.append(c3)
                if c2 != c3 and bad is None:
                    bad = x
                pairs += 1
            v1 = ctx.phi_r(I, phi)
            v2 = _truth(all(two), *(x for x, ok in zip(xs, two) if not ok))
            v3 = _truth(all(three), *(x for x, ok in zip(xs, three) if not ok))
            if not R.finite:
                v2 = v2 if v2.failed else Verdict.holds_up_to(ctx.ideal_bound)
                v3 = v3 if v3.failed else v3.weaken(ctx.params.get("x_bound", ctx.ideal_bound))

            def concl(v1=v1, v2=v2, v3=v3, bad=bad):
                if bad is not None:
                    return Verdict.fails("pointwise", bad)
                a, b = _iff(v1, v2), _iff(v1, v3)
                if a is INCONCLUSIVE or b is INCONCLUSIVE:
                    return INCONCLUSIVE
                return Verdict.all([a, b])

            t.case((I, phi.name), [], concl)
    t.report.notes.append(f"{pairs} (ideal, regular x) pairs over {len(ctx.phis)} phi maps")


def _codes(R: Ring, x) -> tuple:
    return tuple(np.int64(a.encode(u)) for a, u in zip(R.atoms, R.parts(R(x))))


def _diff_zd(ctx: _Ctx, t: _Tally):
    """phi-r forces I - phi(I) inside zd(R)."""
    R = ctx.R
    for phi in ctx.phis:
        for I in ctx.proper():
            F = phi(I)

            def concl(I=I, F=F):
                s = Sample.build(R, None if R.finite else ctx.bound, [lambda c, a=a, p=p: a.vcontains(p, c) for a, p in zip(R.atoms, I.parts)])
                outside = ~F.vcontains(s.codes) if F is not EMPTY else np.ones(len(s), dtype=bool)
                hit = outside & s.regular_mask()
                if hit.any():
                    return Verdict.fails(s.element(int(np.argmax(hit))))
                return Verdict.holds_up_to(ctx.bound) if s.partial else Verdict.holds()

            t.case((I, phi.name), [ctx.phi_r(I, phi)], concl)


def _equ(ctx: _Ctx, t: _Tally):
    for phi in ctx.phis:
        for I in ctx.proper():
            t.case((I, phi.name), [_is_r(ctx, phi(I))], lambda I=I, phi=phi: _iff(ctx.phi_r(I, phi), ctx.r(I)))


def _rad(ctx: _Ctx, t: _Tally):
    for phi in ctx.phis:
        for I in ctx.proper():
            rI = radical(I)
            F, G = phi(I), phi(rI)
            same = (F is EMPTY and G is EMPTY) or (F is not EMPTY and G is not EMPTY and radical(F) == G)
            t.case((I, phi.name), [_truth(same, I), ctx.phi_r(I, phi)], lambda rI=rI, phi=phi: ctx.phi_r(rI, phi))


def _union(ctx: _Ctx, t: _Tally):
    R = ctx.R
    length = ctx.params.get("chain_length", 3)
    for phi in ctx.phis:
        mono = is_order_preserving(phi, R, ctx.ideal_bound)
        members = [I for I in ctx.proper() if not ctx.phi_r(I, phi).failed]
        for k in range(2, length + 1):
            for chain in combinations(members, k):
                if not all(a < b for a, b in zip(chain, chain[1:])):
                    continue
                hyps = [mono] + [ctx.phi_r(I, phi) for I in chain]
                t.case((tuple(chain), phi.name), hyps, lambda chain=chain, phi=phi: _union_concl(ctx, chain, phi))


def _union_concl(ctx: _Ctx, chain, phi) -> Verdict:
    R = ctx.R
    if R.finite:
        elems = set()
        for I in chain:
            elems.update(I.elements())
        U = ideal_from_generators(R, sorted(elems, key=R.rank))
        if set(U.elements()) != elems:
            return Verdict.fails("union is not an ideal")
    else:
        U = chain[0]
        for I in chain[1:]:
            U = U + I
    return ctx.phi_r(U, phi)


def _pro_zd(ctx: _Ctx, t: _Tally):
    for phi in ctx.phis:
        for I in ctx.proper():
            t.case((I, phi.name), [_is_r(ctx, phi(I)), ctx.phi_r(I, phi)], lambda I=I: in_zd(ctx.R, I))


def _prime_zd(ctx: _Ctx, t: _Tally):
    primes = {}
    for phi in ctx.phis:
        for I in ctx.proper():
            def prime(I=I):
                if I not in primes:
                    primes[I] = is_prime(ctx.R, I, ctx.bound)
                return primes[I]

            hyps = [_is_r(ctx, phi(I)), prime]
            t.case((I, phi.name), hyps, lambda I=I, phi=phi: _iff(ctx.phi_r(I, phi), in_zd(ctx.R, I)))


def _colon_x(ctx: _Ctx, t: _Tally):
    R = ctx.R
    s = Sample.build(R, None if R.finite else ctx.params.get("x_bound", X_BOUND))
    elems = [s.element(i) for i in range(len(s))]
    for phi in ctx.phis:
        for I in ctx.proper():
            F = phi(I)
            prem = ctx.phi_r(I, phi)
            for x in elems:
                if x in I:
                    continue
                Px = principal(R, x)
                J = colon_set(I, Px)
                hyp = _truth(subset(_colon_phi(F, Px), phi(J)), x)
                t.case((I, phi.name, x), [hyp, prem], lambda J=J, phi=phi: ctx.phi_r(J, phi))


def _strongly_implies(ctx: _Ctx, t: _Tally):
    for phi in ctx.phis:
        for I in ctx.proper():
            strong = lambda I=I, phi=phi: is_strongly_phi_r(ctx.R, I, phi, ctx.ideal_bound)  # noqa: E731
            t.case((I, phi.name), [strong], lambda I=I, phi=phi: ctx.phi_r(I, phi))


def _sac_thm(ctx: _Ctx, t: _Tally):
    sac = satisfies_sac(ctx.R, ctx.ideal_bound, ctx.bound)
    for phi in ctx.phis:
        for I in ctx.proper():

            def concl(I=I, phi=phi):
                return _iff(ctx.phi_r(I, phi), is_strongly_phi_r(ctx.R, I, phi, ctx.ideal_bound))

            t.case((I, phi.name), [sac, _is_r(ctx, phi(I))], concl)


def _chain_pairs(ctx: _Ctx):
    ideals = ctx.proper()
    for I in ideals:
        for J in ideals:
            if I <= J:
                yield I, J


def _quot_ji(ctx: _Ctx, t: _Tally):
    for phi in ctx.phis:
        for I, J in _chain_pairs(ctx):
            hyps = [nonzero_regular(ctx.R, I), ctx.phi_r(J, phi)]

            def concl(I=I, J=J, phi=phi):
                q = make_quotient(ctx.R, I)
                return is_phi_r_ideal(q.ring, q.image(J), PhiQuotientInduced(phi, q), ctx.bound)

            t.case((I, J, phi.name), hyps, concl)


def _quot_lift(ctx: _Ctx, t: _Tally):
    for I, J in _chain_pairs(ctx):
        rI = ctx.r(I)
        hyps = [rI]
        if not rI.failed:
            q = make_quotient(ctx.R, I)
            hyps.append(ctx.r(q.image(J), q.ring))
        for phi in ctx.phis:
            t.case((I, J, phi.name), hyps, lambda J=J, phi=phi: ctx.phi_r(J, phi))


def _ide(ctx: _Ctx, t: _Tally):
    R = ctx.R
    atom = idealization_atom(R)
    base = atom.base
    brute = zerodivisors(R)
    formula = atom.zerodivisor_formula()
    diff = sorted(brute ^ formula, key=str)
    t.case(("zd-formula",), [], _truth(not diff, *diff[:1]))
    zR = zerodivisors(base)
    zM = atom.module_zerodivisors()
    same = _truth(zR == zM, *sorted(zR ^ zM, key=str)[:1])
    phis = ctx.params.get("phis") or ([ctx.params["phi"]] if "phi" in ctx.params else [PhiEmpty(), PhiZero()])
    base_ctx = _Ctx(base, ctx.params, ctx.bound, ctx.ideal_bound)
    for psi1 in phis:
        for I in enumerate_ideals(base, proper_only=True):
            IM = pair_ideal(R, I)
            F = psi1(I)
            target = EMPTY if F is EMPTY else pair_ideal(R, F)
            psi2 = PhiCustom({IM: target}, label=f"{psi1.name}(+)M")
            shape = _truth(subset(psi2(IM), target) and subset(target, psi2(IM)))
            prem = is_phi_r_ideal(R, IM, psi2, ctx.bound)
            t.case((I, psi1.name), [same, shape, prem], lambda I=I, psi1=psi1: base_ctx.phi_r(I, psi1))


def _loc(ctx: _Ctx, t: _Tally, part: int):
    R = ctx.R
    S = ctx.params.get("S")
    if not S:
        raise ShapeMismatch("localization checks need a multiplicative set S")
    try:
        lmap = make_localization(R, S)
    except (NonRegularDenominator, UnsupportedLocalization) as e:
        t.report.notes.append(f"localization unavailable: {e}")
        for phi in ctx.phis:
            for I in ctx.proper():
                t.case((I, phi.name), [Verdict.fails(str(e))], Verdict.holds())
        return
    regular = _truth(lmap.contained_in_regular())
    for phi in ctx.phis:
        phiS = PhiLocalizationInduced(phi, lmap)
        for I in ctx.proper():
            disjoint = _truth(not lmap.meets(I), I)
            F = phi(I)
            IS = lmap.extend(I)
            FS = EMPTY if F is EMPTY else lmap.extend(F)
            hyps = [regular, disjoint, ctx.phi_r(I, phi)]
            if not disjoint.failed:
                hyps.append(_truth(subset(FS, phiS(IS))))
            if part == 1:
                t.case((I, phi.name), hyps, lambda IS=IS, phiS=phiS: is_phi_r_ideal(lmap.ring, IS, phiS, ctx.bound))
            else:
                hyps.append(_truth(FS is EMPTY or IS != FS))
                t.case((I, phi.name), hyps, lambda IS=IS: in_zd(R, lmap.contract(IS)))


def _product_tqr(ctx: _Ctx, t: _Tally):
    """(i) every component is a total quotient ring  <=>  (ii) every proper ideal is phi_n^x-r."""
    R = ctx.R
    ns = ctx.params.get("n", 2)
    for n in ns if isinstance(ns, (list, tuple)) else [ns]:
        if n < 2:
            raise ValueError("product-tqr needs n >= 2")
        phi = product_power(n, R.arity)
        tqr = [is_total_quotient_ring(R.component(i)) for i in range(R.arity)]
        bad = next((i for i, v in enumerate(tqr) if v.failed), None)
        if bad is None:
            verdicts = [(I, ctx.phi_r(I, phi)) for I in ctx.proper()]
            for I, v in verdicts:
                t.case((I, phi.name), [], v)
            t.report.notes.append(f"(i) holds; (ii) checked on {len(verdicts)} proper ideals for n={n}")
            continue
        # (ii) => (i) contrapositive: a regular non-unit a gives I = (a^2) x R_2 x ... x R_m
        a = tqr[bad].witness[0]
        comp = R.component(bad)
        parts = [at.unit_ideal() for at in R.atoms]
        parts[bad] = principal(comp, comp.mul(a, a)).parts[0]
        I = Ideal(R, tuple(parts))
        x = list(R.atoms[i].one for i in range(R.arity))
        x[bad] = a
        x = R.join(x)
        v = ctx.phi_r(I, phi)
        constructed = Verdict.fails(x, x)
        cls = IdealClass("phi-r", phi)
        if not validate_witness(cls, R, I, constructed):
            t.case((I, phi.name, "construction"), [], Verdict.fails("construction does not violate", x))
            continue
        t.case((I, phi.name), [], _truth(v.failed, "classifier disagrees", v))
        t.report.witnesses.append((I, x, x))
        t.report.notes.append(f"component {bad + 1} ({R.atoms[bad].name}) is not a total quotient ring: {a} is regular, not a unit")
        t.fails_ii = (I, x, x)


_CHECKS = {
    "basic-1": _basic_1,
    "basic-2": _basic_2,
    "basic-3": _basic_3,
    "basic-4": _basic_4,
    "quot-phi-1": _quot_phi_1,
    "quot-phi-2": _quot_phi_2,
    "cha": _cha,
    "diff-zd": _diff_zd,
    "equ": _equ,
    "rad": _rad,
    "union": _union,
    "pro-zd": _pro_zd,
    "prime-zd": _prime_zd,
    "colon-x": _colon_x,
    "strongly-implies": _strongly_implies,
    "sac-thm": _sac_thm,
    "quot-JI": _quot_ji,
    "quot-lift": _quot_lift,
    "ide": _ide,
    "loc-1": lambda c, t: _loc(c, t, 1),
    "loc-2": lambda c, t: _loc(c, t, 2),
    "product-tqr": _product_tqr,
}


def verify(theorem: str, R: Ring, params: dict | None = None, bound: int = DEFAULT_BOUND,
           ideal_bound: int = DEFAULT_IDEAL_BOUND) -> TheoremReport:
    """Check one result on one ring.

    For ``product-tqr`` the conclusion is statement (ii); it fails exactly
    when some component is not a total quotient ring, with witness
    ``(I, x, y)``.  Counterexamples count disagreements between (i) and (ii).
    """
    if theorem not in _CHECKS:
        raise ValueError(f"unknown theorem {theorem!r}; expected one of {', '.join(THEOREMS)}")
    ctx = _Ctx(R, dict(params or {}), bound, ideal_bound)
    t = _Tally(theorem, R)
    t.fails_ii = None
    _CHECKS[theorem](ctx, t)
    t.seen(ctx.enumeration_verdict())
    report = t.finish()
    if theorem == "product-tqr" and t.fails_ii is not None and not report.counterexamples:
        report.conclusion = Verdict.fails(*t.fails_ii)
    return report


def verify_corpus(theorem: str, corpus, params: dict | None = None, bound: int = DEFAULT_BOUND,
                  ideal_bound: int = DEFAULT_IDEAL_BOUND) -> TheoremReport:
    """Aggregate ``verify`` over a corpus expression or an iterable of rings.

    Rings whose shape does not fit the theorem (e.g. non-idealizations for
    ``ide``) are skipped and listed in the notes.
    """
    from .dsl import parse_corpus

    label = corpus if isinstance(corpus, str) else "corpus"
    rings = parse_corpus(corpus) if isinstance(corpus, str) else list(corpus)
    out = TheoremReport(theorem, label, rings=0)
    bounds, fails_ii = [], None
    for R in rings:
        try:
            rep = verify(theorem, R, params, bound, ideal_bound)
        except ShapeMismatch as e:
            out.notes.append(f"skipped {R}: {e}")
            continue
        out.rings += 1
        out.instances += rep.instances
        out.hypotheses_satisfied += rep.hypotheses_satisfied
        out.inconclusive += rep.inconclusive
        out.counterexamples += [(str(R),) + c for c in rep.counterexamples]
        if rep.conclusion.status is Status.HOLDS_UP_TO:
            bounds.append(rep.conclusion.bound)
        if rep.conclusion.failed and not rep.counterexamples and fails_ii is None:
            fails_ii = (str(R),) + rep.conclusion.witness
    if out.counterexamples:
        out.conclusion = Verdict.fails(*out.counterexamples[0])
        out.witnesses = list(out.counterexamples)
    elif fails_ii is not None:
        out.conclusion = Verdict.fails(*fails_ii)
        out.witnesses = [fails_ii]
    elif bounds:
        out.conclusion = Verdict.holds_up_to(max(bounds))
    return out


# separating examples ---------------------------------------------------------------


@dataclass(frozen=True)
class Separation:
    ring: Ring
    ideal: Ideal
    have: Verdict
    lack: Verdict


@dataclass(frozen=True)
class NotFound:
    rings: int
    ideals: int
    partial: bool

    def __str__(self):
        extent = "bounded" if self.partial else "exhausted"
        return f"NotFound({extent}: {self.ideals} ideals in {self.rings} rings)"


def search_separating(have: IdealClass, lack: IdealClass, corpus, bound: int = DEFAULT_BOUND,
                      ideal_bound: int = DEFAULT_IDEAL_BOUND):
    """First (ring, ideal) in corpus order where ``have`` does not fail and ``lack`` fails."""
    from .dsl import parse_corpus

    rings = parse_corpus(corpus) if isinstance(corpus, str) else list(corpus)
    n_ideals, partial = 0, False
    for R in rings:
        ideals = enumerate_ideals(R, None if R.finite else ideal_bound, proper_only=True)
        partial = partial or ideals.partial
        for I in ideals:
            n_ideals += 1
            try:
                h = check(have, R, I, bound, ideal_bound)
                if h.failed:
                    continue
                miss = check(lack, R, I, bound, ideal_bound)
            except PhirError:
                continue
            if miss.failed:
                return Separation(R, I, h, miss)
    return NotFound(len(rings), n_ideals, partial)
