"""Tiny expression language for naming Riordan arrays on the command line.

    expr   := term ("*" term)*
    term   := factor ("^" INT)?
    factor := atom | "(" expr ")" | "inv" "(" expr ")"
    atom   := "I" | "P" INT | "P(" scalar ")" | "pascal"
            | "diag(" scalar "," scalar ")" | "delta(" scalar "," scalar ")"
            | "dihedral(" INT "," INT "," INT "," INT ")" "." ("r1" | "r2")

Scalars are integers or fractions ``p/q``.  ``dihedral(n, a, b, s)`` always
lives over Zmod:n, whatever ring the other atoms use.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import RiordanError
from .group import (
    DihedralParams,
    RiordanArray,
    delta_embed,
    diagonal_embed,
    dihedral_generators,
    identity,
    inverse,
    pascal,
    pascal_generalized,
)
from .rings import Ring


class ExpressionError(RiordanError, ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(?P<num>-?\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<sym>[*^().,]))")


def _tokenize(text: str):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            raise ExpressionError(f"cannot parse {text[pos:]!r} at column {pos + 1}")
        kind = mt.lastgroup
        out.append((kind, mt.group(kind), mt.start(kind) + 1))
        pos = mt.end()
    out.append(("end", "", len(text) + 1))
    return out


@dataclass
class Context:
    ring: Ring
    precision: int
    pascal_b: Optional[Fraction] = None


class _Parser:
    def __init__(self, text: str, ctx: Context):
        self.toks = _tokenize(text)
        self.pos = 0
        self.ctx = ctx

    def peek(self):
        return self.toks[self.pos]

    def take(self, value=None, kind=None):
        tok = self.toks[self.pos]
        if (value is not None and tok[1] != value) or (kind is not None and tok[0] != kind):
            want = value if value is not None else kind
            got = tok[1] or "end of input"
            raise ExpressionError(f"expected {want!r} at column {tok[2]}, got {got!r}")
        self.pos += 1
        return tok

    def parse(self) -> RiordanArray:
        value = self.expr()
        self.take(kind="end")
        return value

    def expr(self):
        value = self.term()
        while self.peek()[1] == "*":
            self.take("*")
            value = value * self.term()
        return value

    def term(self):
        value = self.factor()
        if self.peek()[1] == "^":
            self.take("^")
            _, text, col = self.take(kind="num")
            if "/" in text:
                raise ExpressionError(f"exponent must be an integer at column {col}")
            value = value ** int(text)
        return value

    def scalar(self) -> Fraction:
        return Fraction(self.take(kind="num")[1])

    def integer(self) -> int:
        _, text, col = self.take(kind="num")
        if "/" in text:
            raise ExpressionError(f"expected an integer at column {col}")
        return int(text)

    def factor(self):
        kind, text, col = self.peek()
        ctx = self.ctx
        if text == "(":
            self.take("(")
            value = self.expr()
            self.take(")")
            return value
        if kind != "name":
            raise ExpressionError(f"unexpected {text or 'end of input'!r} at column {col}")
        self.take()
        if text == "inv":
            self.take("(")
            value = self.expr()
            self.take(")")
            return inverse(value)
        if text == "I":
            return identity(ctx.ring, ctx.precision)
        if text == "pascal":
            if ctx.pascal_b is not None:
                return pascal_generalized(ctx.ring, ctx.precision, ctx.pascal_b)
            return pascal(ctx.ring, ctx.precision)
        if text == "P":
            # P(1/2) or P followed by a separate signed number
            if self.peek()[1] == "(":
                self.take("(")
                b = self.scalar()
                self.take(")")
            else:
                b = Fraction(self.integer())
            return pascal_generalized(ctx.ring, ctx.precision, b)
        match = re.fullmatch(r"P(\d+)", text)
        if match:
            return pascal_generalized(ctx.ring, ctx.precision, int(match.group(1)))
        if text in ("diag", "delta"):
            self.take("(")
            first = self.scalar()
            self.take(",")
            second = self.scalar()
            self.take(")")
            build = diagonal_embed if text == "diag" else delta_embed
            return build(ctx.ring, ctx.precision, first, second)
        if text == "dihedral":
            self.take("(")
            nums = [self.integer()]
            for _ in range(3):
                self.take(",")
                nums.append(self.integer())
            self.take(")")
            self.take(".")
            _, which, wcol = self.take(kind="name")
            if which not in ("r1", "r2"):
                raise ExpressionError(f"expected r1 or r2 at column {wcol}")
            r1, r2 = dihedral_generators(DihedralParams(*nums), ctx.precision)
            return r1 if which == "r1" else r2
        raise ExpressionError(f"unknown name {text!r} at column {col}")


def evaluate(text: str, ring: Ring, precision: int, pascal_b=None) -> RiordanArray:
    ctx = Context(ring, precision, None if pascal_b is None else Fraction(pascal_b))
    return _Parser(text, ctx).parse()
