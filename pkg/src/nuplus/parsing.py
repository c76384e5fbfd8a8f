"""Parser for knot expressions.

Grammar (whitespace is ignored everywhere)::

    knot    := "U"
             | "T" "(" int "," int ")"
             | "S" "{" ints "}"
             | "A" "[" ints "]"
             | "G" "[" ints ";" int "]"
    ints    := int ("," int)*
    int     := ["-"] digit+
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .semigroups import (
    AlexanderVector,
    EnumeratingFunction,
    from_alexander,
    from_generators,
    torus_semigroup,
    unknot,
)

__all__ = ["KnotSpec", "ParseError", "parse_knot"]


class ParseError(ValueError):
    def __init__(self, text: str, pos: int, message: str):
        self.text, self.pos = text, pos
        super().__init__(f"{message} at position {pos}\n  {text}\n  {' ' * pos}^")


@dataclass(frozen=True)
class KnotSpec:
    """A parsed knot expression and the enumerating function it resolves to."""

    kind: str  # one of "unknot", "torus", "generators", "alexander", "gamma"
    data: tuple
    resolved: EnumeratingFunction = field(compare=False)

    def render(self) -> str:
        if self.kind == "unknot":
            return "U"
        if self.kind == "torus":
            return "T({},{})".format(*self.data)
        if self.kind == "generators":
            return "S{" + ",".join(map(str, self.data)) + "}"
        if self.kind == "alexander":
            return "A[" + ",".join(map(str, self.data)) + "]"
        prefix, delta = self.data
        return "G[" + ",".join(map(str, prefix)) + f";{delta}]"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise ParseError(self.text, self.pos, message)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            self.error(f"expected {ch!r}, found {found}")
        self.pos += 1

    def integer(self) -> int:
        self.skip()
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.pos = start
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def integers(self, stop: str) -> list[int]:
        out = [self.integer()]
        while self.peek() == ",":
            self.pos += 1
            out.append(self.integer())
        if self.peek() != stop:
            self.error(f"expected ',' or {stop!r}")
        return out

    def knot(self) -> tuple[str, tuple]:
        head = self.peek()
        if not head:
            self.error("empty knot expression")
        self.pos += 1
        if head == "U":
            return "unknot", ()
        if head == "T":
            self.expect("(")
            p = self.integer()
            self.expect(",")
            q = self.integer()
            self.expect(")")
            return "torus", (p, q)
        if head == "S":
            self.expect("{")
            gens = self.integers("}")
            self.expect("}")
            return "generators", tuple(gens)
        if head == "A":
            self.expect("[")
            exps = self.integers("]")
            self.expect("]")
            return "alexander", tuple(exps)
        if head == "G":
            self.expect("[")
            prefix = self.integers(";")
            self.expect(";")
            delta = self.integer()
            self.expect("]")
            return "gamma", (tuple(prefix), delta)
        self.pos -= 1
        self.error(f"unknown knot constructor {head!r} (use U, T, S, A or G)")

    def parse(self) -> tuple[str, tuple]:
        result = self.knot()
        if self.peek():
            self.error("unexpected trailing input")
        return result


def _resolve(kind: str, data: tuple, label: str) -> EnumeratingFunction:
    if kind == "unknot":
        return unknot()
    if kind == "torus":
        return torus_semigroup(*data)
    if kind == "generators":
        return from_generators(data, label=label)
    if kind == "alexander":
        return from_alexander(AlexanderVector(data), label=label)
    prefix, delta = data
    return EnumeratingFunction(delta, prefix, label=label)


def parse_knot(text: str) -> KnotSpec:
    """Parse and resolve a knot expression.

    Syntax errors raise :class:`ParseError`; data that the constructors reject
    raise their own :class:`~nuplus.errors.InvalidKnotData` unchanged.

    >>> parse_knot(" T( 3 , 7 ) ").resolved.delta
    6
    """
    kind, data = _Parser(text).parse()
    spec = KnotSpec(kind, data, None)
    return KnotSpec(kind, data, _resolve(kind, data, spec.render()))
