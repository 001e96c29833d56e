"""Text grammar for skein expressions.

::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' nat)?
    base   := int | 'Q' ('^' ['-'] int)? | generator | '(' expr ')'

``Q`` is ``q^(1/2)``; generators are ``t`` followed by an ascending subset of
``1234`` (``t0`` is ``t1234``).  :func:`parse` returns an AST, :func:`lower`
turns it into a :class:`~skein4.skeinfree.SkeinElement`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Union

from .laurent import ONE, HalfLaurent
from .skeinfree import Generator, SkeinElement, gen

__all__ = ["ParseError", "parse", "lower", "parse_element", "render_terms",
           "Num", "QPow", "Gen", "Sum", "Product", "Power"]


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class QPow:
    exp: int


@dataclass(frozen=True)
class Gen:
    generator: Generator


@dataclass(frozen=True)
class Power:
    base: "Expr"
    exp: int


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class Sum:
    terms: tuple  # of (sign, Expr)


Expr = Union[Num, QPow, Gen, Power, Product, Sum]

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<gen>t\d+)|(?P<q>Q)|(?P<op>[-+*^()]))")


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    out, pos = [], 0
    while pos < len(src):
        if src[pos:].strip() == "":
            break
        m = _TOKEN.match(src, pos)
        if not m:
            raise ParseError(f"unexpected character {src[pos]!r}", pos)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(src)))
    return out


def _generator(tok: str, pos: int) -> Generator:
    digits = tok[1:]
    if digits == "0":
        return gen("t0")
    holes = [int(d) for d in digits]
    if any(h < 1 or h > 4 for h in holes):
        raise ParseError(f"generator {tok!r} uses a hole outside 1..4", pos)
    if any(a >= b for a, b in zip(holes, holes[1:])):
        raise ParseError(f"generator {tok!r} is not in ascending order", pos)
    return gen(holes)


class _Parser:
    def __init__(self, src: str):
        self.toks = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, value: str):
        kind, val, pos = self.take()
        if val != value:
            raise ParseError(f"expected {value!r}, found {val or 'end of input'!r}", pos)

    def expr(self) -> Expr:
        terms = []
        sign = 1
        if self.peek()[1] == "-":
            self.take()
            sign = -1
        terms.append((sign, self.term()))
        while self.peek()[1] in ("+", "-"):
            sign = 1 if self.take()[1] == "+" else -1
            terms.append((sign, self.term()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms))

    def term(self) -> Expr:
        factors = [self.factor()]
        while self.peek()[1] == "*":
            self.take()
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def factor(self) -> Expr:
        bare_q = self.peek()[0] == "q"
        base = self.base()
        if self.peek()[1] == "^" and not bare_q:
            self.take()
            kind, val, pos = self.take()
            if val == "-":
                raise ParseError("negative exponent is only allowed on Q", pos)
            if kind != "int":
                raise ParseError("expected a natural-number exponent", pos)
            return Power(base, int(val))
        return base

    def base(self) -> Expr:
        kind, val, pos = self.take()
        if kind == "int":
            return Num(int(val))
        if kind == "gen":
            return Gen(_generator(val, pos))
        if kind == "q":
            if self.peek()[1] != "^":
                return QPow(1)
            self.take()
            sign = 1
            if self.peek()[1] == "-":
                self.take()
                sign = -1
            kind, val, pos = self.take()
            if kind != "int":
                raise ParseError("expected an integer exponent after Q^", pos)
            return QPow(sign * int(val))
        if val == "(":
            e = self.expr()
            self.expect(")")
            return e
        raise ParseError(f"unexpected {val or 'end of input'!r}", pos)


def parse(src: str) -> Expr:
    p = _Parser(src)
    e = p.expr()
    kind, val, pos = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {val!r}", pos)
    return e


def lower(e: Expr) -> SkeinElement:
    if isinstance(e, Num):
        return SkeinElement.scalar(e.value)
    if isinstance(e, QPow):
        return SkeinElement.scalar(HalfLaurent.monomial(e.exp))
    if isinstance(e, Gen):
        return SkeinElement.word([e.generator])
    if isinstance(e, Power):
        return lower(e.base) ** e.exp
    if isinstance(e, Product):
        out = SkeinElement.one()
        for f in e.factors:
            out = out * lower(f)
        return out
    if isinstance(e, Sum):
        out = SkeinElement()
        for sign, t in e.terms:
            out = out + (lower(t) if sign > 0 else -lower(t))
        return out
    raise TypeError(f"not an expression node: {e!r}")


def parse_element(src: str) -> SkeinElement:
    return lower(parse(src))


def render_terms(terms: Iterable[tuple[str, bool, HalfLaurent]]) -> str:
    """Join ``(word_text, is_unit_word, coeff)`` triples into parseable text."""
    out = []
    for word, unit, c in terms:
        if c.is_monomial():
            (n, v), = c.items()
            neg = v < 0
            mag = HalfLaurent.monomial(n, abs(v))
            if unit:
                body = mag.render()
            elif mag == ONE:
                body = word
            else:
                body = f"{mag.render()}*{word}"
        else:
            neg = False
            body = f"({c.render()})" if (not unit or out) else c.render()
            if not unit:
                body = f"{body}*{word}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out) or "0"
