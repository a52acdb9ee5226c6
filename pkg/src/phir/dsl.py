"""Recursive-descent parsers for the ring, ideal, phi and corpus mini-languages.

Ring grammar (whitespace-insensitive)::

    ring  := term {"x" term}
    term  := "Z" | "Z/" nat | "quot(" ring "," ideal ")"
           | "idealize(" ring ["," "mod" ideal] ")"
           | "loc(" ring "," "{" nat {"," nat} "}" ")"
    ideal := "gen" [elem {"," elem}]
    elem  := int | "(" elem {"," elem} ")"

Elements may nest so that idealization pairs can be written, e.g.
``gen ((0,1),2)`` in ``idealize(Z/2) x Z/4``.

Phi names: ``empty | zero | id | pow:<n> | omega | prod:[phi, ...]``.

Corpus grammar::

    corpus := item {(";" | "|") item}
    item   := family [":size<=" nat]
    family := fterm {"x" fterm}
    fterm  := "zn:" nat ".." nat | "z" | "ideal(z)"
            | "prod(" family {"," family} ")" | "idealize(" family ")"
            | term

A family denotes the ordered list of rings obtained by taking every
combination of its factors; ``:size<=N`` keeps finite rings of at most N
elements.
"""

from __future__ import annotations

import itertools

from . import ringspec as rs
from .errors import ParseError, PhirError, RingMismatch, SemanticError
from .ideals import Ideal, ideal_from_generators
from .phi import PhiEmpty, PhiIdentity, PhiMap, PhiOmega, PhiPower, PhiProduct, PhiZero
from .rings import Ring


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    # low level
    def ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, lit: str) -> bool:
        self.ws()
        return self.text.startswith(lit, self.pos)

    def accept(self, lit: str) -> bool:
        if self.peek(lit):
            self.pos += len(lit)
            return True
        return False

    def expect(self, lit: str):
        if not self.accept(lit):
            got = self.text[self.pos : self.pos + 8] or "end of input"
            raise ParseError(f"expected {lit!r}, found {got!r}", self.pos)

    def error(self, msg: str):
        raise ParseError(msg, self.pos)

    def nat(self) -> int:
        self.ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected a natural number")
        return int(self.text[start : self.pos])

    def integer(self) -> int:
        self.ws()
        neg = self.accept("-")
        return -self.nat() if neg else self.nat()

    def end(self):
        self.ws()
        if self.pos != len(self.text):
            self.error(f"unexpected trailing input {self.text[self.pos:self.pos + 8]!r}")

    # rings
    def ring(self):
        comps = [self.term()]
        while self.accept("x"):
            comps.append(self.term())
        return comps[0] if len(comps) == 1 else rs.Product(tuple(comps))

    def term(self):
        start = self.pos
        if self.accept("quot("):
            base = self.ring()
            self.expect(",")
            ideal = self.ideal()
            self.expect(")")
            return rs.Quotient(base, ideal)
        if self.accept("idealize("):
            base = self.ring()
            module = rs.RegularModule()
            if self.accept(","):
                self.expect("mod")
                module = rs.QuotientModule(self.ideal())
            self.expect(")")
            return rs.Idealization(base, module)
        if self.accept("loc("):
            base = self.ring()
            self.expect(",")
            self.expect("{")
            S = [self.nat()]
            while self.accept(","):
                S.append(self.nat())
            self.expect("}")
            self.expect(")")
            return rs.Localization(base, frozenset(S))
        if self.accept("Z"):
            if self.accept("/"):
                n = self.nat()
                if n < 2:
                    raise SemanticError(f"Z/{n} is not a ring with 1 != 0 (at position {start})")
                return rs.ZnAtom(n)
            return rs.ZAtom()
        self.error("expected a ring term")

    # ideals
    def ideal(self) -> rs.IdealSpec:
        self.expect("gen")
        gens = []
        if self._elem_start():
            gens.append(self.elem())
            while self.accept(","):
                gens.append(self.elem())
        return rs.IdealSpec(tuple(gens))

    def _elem_start(self) -> bool:
        self.ws()
        return self.pos < len(self.text) and (self.text[self.pos] in "(-" or self.text[self.pos].isdigit())

    def elem(self):
        if self.accept("("):
            parts = [self.elem()]
            while self.accept(","):
                parts.append(self.elem())
            self.expect(")")
            return tuple(parts)
        return self.integer()

    # phi
    def phi(self) -> PhiMap:
        for lit, make in (("empty", PhiEmpty), ("zero", PhiZero), ("id", PhiIdentity), ("omega", PhiOmega)):
            if self.accept(lit):
                return make()
        if self.accept("pow:"):
            start = self.pos
            n = self.nat()
            if n < 1:
                raise SemanticError(f"pow:{n} needs n >= 1 (at position {start})")
            return PhiPower(n)
        if self.accept("prod:["):
            maps = [self.phi()]
            while self.accept(","):
                maps.append(self.phi())
            self.expect("]")
            return PhiProduct(tuple(maps))
        self.error("expected a phi name (empty, zero, id, pow:<n>, omega, prod:[...])")

    # corpora
    def corpus(self) -> list:
        out = self.item()
        while self.accept(";") or self.accept("|"):
            out += self.item()
        return out

    def item(self) -> list:
        rings = self.family()
        if self.accept(":size<="):
            cap = self.nat()
            kept = []
            for r in rings:
                R = rs.build_ring(rs.canonical(r))
                if R.finite and R.size <= cap:
                    kept.append(r)
            rings = kept
        return rings

    def family(self) -> list:
        factors = [self.fterm()]
        while self.accept("x"):
            factors.append(self.fterm())
        return _combine(factors)

    def fterm(self) -> list:
        if self.accept("zn:"):
            lo = self.nat()
            self.expect("..")
            hi = self.nat()
            if lo < 2 or hi < lo:
                raise SemanticError(f"bad range zn:{lo}..{hi}")
            return [rs.ZnAtom(n) for n in range(lo, hi + 1)]
        if self.accept("ideal(z)"):
            return [rs.ZAtom()]
        if self.accept("prod("):
            factors = [self.family()]
            while self.accept(","):
                factors.append(self.family())
            self.expect(")")
            return _combine(factors)
        if self.accept("idealize("):
            # a family of finite bases, or a ring literal with a module
            save = self.pos
            try:
                bases = self.family()
                self.expect(")")
            except ParseError:
                self.pos = save - len("idealize(")
                return [self.term()]
            return [rs.Idealization(b) for b in bases]
        if self.peek("z") and not self.peek("zn"):
            self.pos += 1
            return [rs.ZAtom()]
        return [self.term()]


def _combine(factors: list) -> list:
    return [rs._product(list(combo)) for combo in itertools.product(*factors)]


def _run(text: str, rule: str):
    if not isinstance(text, str):
        raise TypeError("expected a string")
    p = _Parser(text)
    out = getattr(p, rule)()
    p.end()
    return out


def parse_ring_spec(text: str):
    """Parse to a canonical ring description."""
    return rs.canonical(_run(text, "ring"))


def parse_ring(text: str):
    """Parse ring syntax; returns the canonical :mod:`phir.ringspec` value."""
    return parse_ring_spec(text)


def ring_from_text(text: str) -> Ring:
    return rs.build_ring(parse_ring_spec(text))


def parse_ideal_spec(text: str) -> rs.IdealSpec:
    return _run(text, "ideal")


def parse_ideal(text: str, R: Ring) -> Ideal:
    """``gen e1, e2, ...`` as an ideal of ``R``."""
    spec = parse_ideal_spec(text)
    for g in spec.gens:
        if R.arity > 1 and not (isinstance(g, tuple) and len(g) == R.arity):
            raise RingMismatch(f"{rs.format_elem(g)} is not an element of {R}")
    try:
        return ideal_from_generators(R, list(spec.gens))
    except RingMismatch:
        raise
    except (PhirError, TypeError, ValueError, KeyError) as e:
        raise RingMismatch(f"generators do not belong to {R}: {e}") from None


def parse_phi(text: str) -> PhiMap:
    return _run(text, "phi")


def parse_corpus_specs(text: str) -> list:
    return [rs.canonical(s) for s in _run(text, "corpus")]


def parse_corpus(text: str) -> list:
    """Rings of a corpus expression, in corpus order."""
    return [rs.build_ring(spec) for spec in parse_corpus_specs(text)]
