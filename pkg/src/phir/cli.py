"""Command line front end: ``phir classify | ideals | verify | search``.

Exit codes: 0 on success, 1 when ``verify`` or ``search`` finds a failure,
2 on usage errors (bad flags or unparsable ring, ideal, phi or corpus).
"""

from __future__ import annotations

import argparse
import sys

from . import ringspec as rs
from .classifiers import ALL_CLASSES, DEFAULT_BOUND, DEFAULT_IDEAL_BOUND, PHI_CLASSES, IdealClass, check
from .dsl import parse_ideal, parse_phi, parse_ring_spec
from .errors import PhirError
from .ideals import enumerate_ideals
from .phi import PhiEmpty, PhiPower, PhiZero
from .report import Report, Result
from .verifier import THEOREMS, NotFound, search_separating, verify, verify_corpus
from .verdict import Verdict

EXIT_OK, EXIT_FAILS, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_class(text: str) -> IdealClass:
    """``r``, ``prime``, ``phi-r:pow:2``, ``strongly-phi-r:empty``, ..."""
    kind, _, rest = text.strip().partition(":")
    if kind not in ALL_CLASSES:
        raise UsageError(f"unknown class {kind!r}; expected one of {', '.join(ALL_CLASSES)}")
    if kind in PHI_CLASSES:
        return IdealClass(kind, parse_phi(rest or "empty"))
    if rest:
        raise UsageError(f"class {kind} takes no phi")
    return IdealClass(kind)


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="phir", description="phi-r-ideals of computable commutative rings")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, bound_default):
        sp.add_argument("--bound", type=int, default=bound_default, help="magnitude bound for searches on infinite rings")
        sp.add_argument("--ideal-bound", type=int, default=DEFAULT_IDEAL_BOUND, help="generator bound for ideal enumeration")
        sp.add_argument("--format", choices=("json", "table"), default="table")

    c = sub.add_parser("classify", help="run every ideal class on one ideal")
    c.add_argument("--ring", required=True)
    c.add_argument("--ideal", required=True)
    c.add_argument("--phi", action="append", help="phi map (repeatable); default empty, zero, pow:2")
    c.add_argument("--class", dest="classes", action="append", help="restrict to these class names (repeatable)")
    common(c, DEFAULT_BOUND)

    i = sub.add_parser("ideals", help="list the ideals of a ring")
    i.add_argument("--ring", required=True)
    i.add_argument("--bound", type=int, default=DEFAULT_IDEAL_BOUND, help="generator bound on infinite rings")
    i.add_argument("--format", choices=("json", "table"), default="table")

    v = sub.add_parser("verify", help="check a result on a ring or corpus")
    v.add_argument("--theorem", required=True, choices=THEOREMS)
    target = v.add_mutually_exclusive_group(required=True)
    target.add_argument("--ring")
    target.add_argument("--corpus")
    v.add_argument("--phi", action="append", help="phi map (repeatable); default probe set")
    v.add_argument("--n", type=int, action="append", help="exponent for product-tqr (repeatable)")
    v.add_argument("--S", dest="S", help="comma separated generators of S for loc-1/loc-2")
    common(v, DEFAULT_BOUND)

    s = sub.add_parser("search", help="find an ideal in one class but not another")
    s.add_argument("--have", required=True)
    s.add_argument("--lack", required=True)
    s.add_argument("--corpus", required=True)
    common(s, DEFAULT_BOUND)
    return p


def _ring(text: str):
    spec = parse_ring_spec(text)
    return spec, rs.build_ring(spec)


def _cmd_classify(a) -> tuple[Report, int]:
    spec, R = _ring(a.ring)
    I = parse_ideal(a.ideal, R)
    phis = [parse_phi(t) for t in a.phi] if a.phi else [PhiEmpty(), PhiZero(), PhiPower(2)]
    kinds = a.classes or list(ALL_CLASSES)
    classes = []
    for k in kinds:
        if ":" in k:
            classes.append(parse_class(k))
        elif k in PHI_CLASSES:
            classes += [IdealClass(k, phi) for phi in phis]
        else:
            classes.append(parse_class(k))
    rep = Report("classify", rs.print_ring(spec), a.bound, ideal=I.text(), phi=",".join(p.name for p in phis),
                 ideal_bound=a.ideal_bound)
    for cls in classes:
        rep.results.append(Result.of("class", cls.name, check(cls, R, I, a.bound, a.ideal_bound)))
    return rep, EXIT_OK


def _cmd_ideals(a) -> tuple[Report, int]:
    spec, R = _ring(a.ring)
    ideals = enumerate_ideals(R, None if R.finite else a.bound)
    v = Verdict.holds_up_to(a.bound) if ideals.partial else Verdict.holds()
    rep = Report("ideals", rs.print_ring(spec), a.bound)
    for I in ideals:
        rep.results.append(Result.of("ideal", I.text(), v, {"proper": I.is_proper}))
    return rep, EXIT_OK


def _cmd_verify(a) -> tuple[Report, int]:
    params = {}
    if a.phi:
        params["phis"] = [parse_phi(t) for t in a.phi]
    if a.n:
        params["n"] = a.n
    if a.S:
        try:
            params["S"] = [int(x) for x in a.S.split(",")]
        except ValueError:
            raise UsageError(f"--S expects comma separated integers, got {a.S!r}") from None
    if a.ring is not None:
        spec, R = _ring(a.ring)
        ring_text = rs.print_ring(spec)
        tr = verify(a.theorem, R, params, a.bound, a.ideal_bound)
    else:
        ring_text = a.corpus
        tr = verify_corpus(a.theorem, a.corpus, params, a.bound, a.ideal_bound)
    details = {
        "instances": tr.instances,
        "hypotheses_satisfied": tr.hypotheses_satisfied,
        "counterexamples": len(tr.counterexamples),
        "inconclusive": tr.inconclusive,
        "rings": tr.rings,
    }
    if tr.notes:
        details["notes"] = tr.notes
    rep = Report("verify", ring_text, a.bound, phi=",".join(p.name for p in params.get("phis", [])) or None,
                 ideal_bound=a.ideal_bound)
    rep.results.append(Result.of("theorem", a.theorem, tr.conclusion, details))
    return rep, EXIT_FAILS if tr.conclusion.failed else EXIT_OK


def _cmd_search(a) -> tuple[Report, int]:
    have, lack = parse_class(a.have), parse_class(a.lack)
    found = search_separating(have, lack, a.corpus, a.bound, a.ideal_bound)
    rep = Report("search", a.corpus, a.bound, ideal_bound=a.ideal_bound)
    name = f"{have.name} without {lack.name}"
    if isinstance(found, NotFound):
        v = Verdict.holds_up_to(a.ideal_bound) if found.partial else Verdict.holds()
        rep.results.append(Result.of("search", name, v, {"rings": found.rings, "ideals": found.ideals}))
        return rep, EXIT_OK
    details = {"have": str(found.have), "lack": str(found.lack)}
    rep.results.append(Result.of("search", name, Verdict.fails(str(found.ring), found.ideal, *found.lack.witness), details))
    return rep, EXIT_FAILS


_COMMANDS = {"classify": _cmd_classify, "ideals": _cmd_ideals, "verify": _cmd_verify, "search": _cmd_search}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        rep, code = _COMMANDS[a.command](a)
    except (UsageError, PhirError, ValueError) as e:
        print(f"phir {a.command}: {e}", file=err)
        return EXIT_USAGE
    print(rep.to_json() if a.format == "json" else rep.to_table(), file=out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
