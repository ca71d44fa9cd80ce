"""Knot expressions over torus knots and their cables, and complexes built from them.

Grammar::

    expr   := term { "#" term }
    term   := ["-"] factor
    factor := INT "*" factor | atom
    atom   := "U" | "T(" INT "," INT ")" | "C(" INT "," INT ";" expr ")" | "(" expr ")"
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .cfk import BifilteredComplex, dual, staircase, tensor, unknot_complex, validate
from .laurent import LaurentPoly, StaircaseError, cable_alexander, staircase_exponents, torus_alexander
from .reduce import check_global_homology, homology_summand

__all__ = [
    "KnotExpr", "Unknot", "Torus", "Cable", "Mirror", "Sum", "Multiple",
    "KnotSyntaxError", "parse", "alexander", "build",
]


class KnotExpr:
    """Base class of knot expressions."""

    def __str__(self) -> str:
        return self.text()


@dataclass(frozen=True)
class Unknot(KnotExpr):
    def text(self) -> str:
        return "U"


@dataclass(frozen=True)
class Torus(KnotExpr):
    p: int
    q: int

    def text(self) -> str:
        return f"T({self.p},{self.q})"


@dataclass(frozen=True)
class Cable(KnotExpr):
    """The (s, t)-cable of ``companion``; s is the longitudinal winding."""

    s: int
    t: int
    companion: KnotExpr

    def text(self) -> str:
        return f"C({self.s},{self.t};{self.companion.text()})"


@dataclass(frozen=True)
class Mirror(KnotExpr):
    knot: KnotExpr

    def text(self) -> str:
        inner = self.knot.text()
        return f"-({inner})" if isinstance(self.knot, Sum) else f"-{inner}"


@dataclass(frozen=True)
class Sum(KnotExpr):
    terms: tuple[KnotExpr, ...]

    def text(self) -> str:
        return " # ".join(t.text() for t in self.terms)


@dataclass(frozen=True)
class Multiple(KnotExpr):
    n: int
    knot: KnotExpr

    def text(self) -> str:
        inner = self.knot.text()
        return f"{self.n}*({inner})" if isinstance(self.knot, Sum) else f"{self.n}*{inner}"


class KnotSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.position = pos


_TOKEN = re.compile(r"\s*(?:(\d+)|(.))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(1) if m.group(1) else m.start(2)
        if m.group(1):
            toks.append(("INT", m.group(1), start))
        else:
            ch = m.group(2)
            if ch not in "UTC(),;#-*":
                raise KnotSyntaxError(f"unexpected character {ch!r}", text, start)
            toks.append((ch, ch, start))
        pos = m.end()
    toks.append(("END", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.k = 0

    def peek(self) -> str:
        return self.toks[self.k][0]

    def take(self, kind: str) -> str:
        tok, value, pos = self.toks[self.k]
        if tok != kind:
            want = "an integer" if kind == "INT" else repr(kind)
            got = "end of input" if tok == "END" else repr(value)
            raise KnotSyntaxError(f"expected {want}, found {got}", self.text, pos)
        self.k += 1
        return value

    def signed_int(self) -> int:
        neg = self.peek() == "-"
        if neg:
            self.take("-")
        value = int(self.take("INT"))
        return -value if neg else value

    def expr(self) -> KnotExpr:
        terms = [self.term()]
        while self.peek() == "#":
            self.take("#")
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def term(self) -> KnotExpr:
        if self.peek() == "-":
            self.take("-")
            return Mirror(self.factor())
        return self.factor()

    def factor(self) -> KnotExpr:
        if self.peek() == "INT":
            n = int(self.take("INT"))
            self.take("*")
            return Multiple(n, self.factor())
        return self.atom()

    def atom(self) -> KnotExpr:
        kind = self.peek()
        if kind == "U":
            self.take("U")
            return Unknot()
        if kind == "T":
            self.take("T")
            self.take("(")
            p = self.signed_int()
            self.take(",")
            q = self.signed_int()
            self.take(")")
            return Torus(p, q)
        if kind == "C":
            self.take("C")
            self.take("(")
            s = self.signed_int()
            self.take(",")
            t = self.signed_int()
            self.take(";")
            inner = self.expr()
            self.take(")")
            return Cable(s, t, inner)
        if kind == "(":
            self.take("(")
            inner = self.expr()
            self.take(")")
            return inner
        tok, value, pos = self.toks[self.k]
        got = "end of input" if tok == "END" else repr(value)
        raise KnotSyntaxError(f"expected a knot, found {got}", self.text, pos)


def parse(text: str) -> KnotExpr:
    """Parse a knot expression.

    >>> parse("T(2,5) # -T(4,5)")
    Sum(terms=(Torus(p=2, q=5), Mirror(knot=Torus(p=4, q=5))))
    """
    p = _Parser(text)
    expr = p.expr()
    p.take("END")
    return expr


def alexander(expr: KnotExpr) -> LaurentPoly:
    """Symmetrized Alexander polynomial, multiplicative under connected sum."""
    if isinstance(expr, Unknot):
        return LaurentPoly.one()
    if isinstance(expr, Torus):
        return torus_alexander(expr.p, expr.q)
    if isinstance(expr, Cable):
        return cable_alexander(expr.s, expr.t, alexander(expr.companion))
    if isinstance(expr, Mirror):
        return alexander(expr.knot)
    if isinstance(expr, Multiple):
        return alexander(expr.knot) ** abs(expr.n)
    if isinstance(expr, Sum):
        out = LaurentPoly.one()
        for t in expr.terms:
            out = out * alexander(t)
        return out
    raise TypeError(f"unsupported knot expression {expr!r}")


def _atom_complex(expr: KnotExpr) -> BifilteredComplex:
    if isinstance(expr, Cable):
        # The companion has to be a positive L-space knot itself.
        if not isinstance(expr.companion, (Unknot, Torus, Cable)):
            raise StaircaseError(
                f"companion of {expr.text()} must be a torus knot or an iterated cable"
            )
        try:
            staircase_exponents(alexander(expr.companion))
        except StaircaseError as err:
            raise StaircaseError(f"companion of {expr.text()}: {err}") from None
        genus = alexander(expr.companion).degree
        if expr.t < expr.s * (2 * genus - 1):
            raise StaircaseError(
                f"{expr.text()}: cable is not an L-space knot (needs t >= s(2g-1) = {expr.s * (2 * genus - 1)})"
            )
    try:
        exps = staircase_exponents(alexander(expr))
    except StaircaseError as err:
        raise StaircaseError(f"{expr.text()}: {err}") from None
    return staircase(exps)


def _reduce(C: BifilteredComplex) -> BifilteredComplex:
    comp, _ = homology_summand(C)
    return comp


@lru_cache(maxsize=256)
def _build(expr: KnotExpr, reduced: bool) -> BifilteredComplex:
    if isinstance(expr, Unknot):
        return unknot_complex()
    if isinstance(expr, (Torus, Cable)):
        return _atom_complex(expr)
    if isinstance(expr, Mirror):
        return dual(_build(expr.knot, reduced))
    if isinstance(expr, Multiple):
        base = _build(expr.knot, reduced)
        if expr.n < 0:
            base = dual(base)
        return _fold([base] * abs(expr.n), reduced)
    if isinstance(expr, Sum):
        return _fold([_build(t, reduced) for t in expr.terms], reduced)
    raise TypeError(f"unsupported knot expression {expr!r}")


def _fold(parts: list[BifilteredComplex], reduced: bool) -> BifilteredComplex:
    if not parts:
        return unknot_complex()
    out = parts[0]
    for part in parts[1:]:
        out = tensor(out, part)
        if reduced:
            out = _reduce(out)
    return out


def build(expr: KnotExpr | str, reduced: bool = False) -> BifilteredComplex:
    """The complex of a knot expression.

    With ``reduced=True`` every intermediate tensor product is replaced by
    its homology-carrying summand, which has the same tau, epsilon and Upsilon
    but far fewer generators.
    """
    if isinstance(expr, str):
        expr = parse(expr)
    C = _build(expr, reduced)
    report = validate(C)
    if not report:
        raise AssertionError(f"built complex is invalid: {report}")
    if not check_global_homology(C).is_knot_like:
        raise AssertionError("built complex does not have the homology of a knot")
    return C
