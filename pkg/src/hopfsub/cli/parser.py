"""Species expressions: tokenizer, precedence-climbing parser, printer.

Grammar (loosest first)::

    expr    := cauchy ('+' cauchy)*
    cauchy  := had ('.' had)*
    had     := subst ('*' subst)*
    subst   := primary ('o' primary)*
    primary := ATOM | '(' expr ')'
             | 'T' '[' expr ']' '(' expr ')'
             | 'R' '{' INT '}' '[' expr ',' expr ']' '(' expr ',' expr ')'
             | 'trunc' '(' expr ',' CMP ',' INT ')'

A ``+`` glued to an atom and not followed by an operand is part of the atom,
so ``E+ + L`` is ``E₊`` plus ``L`` while ``E+L`` is ``E`` plus ``L``.  The
operator ``o`` does not count as an operand: ``L+ o G+`` composes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

ATOMS = ("One", "E", "E+", "L", "L+", "G", "G+", "Gc", "Gc+", "cyc", "cyc0", "Pos", "Pos+", "Pi")
PRECEDENCE = {"+": 1, ".": 2, "*": 3, "o": 4}
CMPS = ("=", "<", ">=")


class ParseError(ValueError):
    def __init__(self, message: str, offset: int | None = None, path: str | None = None):
        self.offset = offset
        self.path = path
        where = f" at offset {offset}" if offset is not None else ""
        where += f" at {path}" if path is not None else ""
        super().__init__(message + where)


@dataclass(frozen=True)
class Atom:
    name: str
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class TNode:
    b: object
    p: object
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class RNode:
    r: int
    b: object
    d: object
    p: object
    q: object
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Trunc:
    arg: object
    cmp: str
    n: int
    pos: int = field(default=0, compare=False)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<id>[A-Za-z][A-Za-z0-9]*)|(?P<sym>>=|[-+*.()\[\]{},=<]))")


def tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    i = 0
    while True:
        m = _TOKEN.match(text, i)
        if not m or m.end() == i:
            rest = text[i:]
            if rest.strip():
                j = i + len(rest) - len(rest.lstrip())
                raise ParseError(f"unexpected character {text[j]!r}", j)
            break
        kind = m.lastgroup
        val = m.group(kind)
        start = m.start(kind)
        i = m.end()
        if kind == "id" and val == "o":
            kind = "sym"
        elif kind == "id" and i < len(text) and text[i] == "+":
            nxt = _TOKEN.match(text, i + 1)
            operand = nxt and (nxt.lastgroup == "num" or nxt.group(0).strip() == "("
                               or (nxt.lastgroup == "id" and nxt.group("id") != "o"))
            if not operand:
                val += "+"
                i += 1
        out.append((kind, val, start))
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text):
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, val=None, kind=None):
        k, v, pos = self.toks[self.i]
        if (val is not None and v != val) or (kind is not None and k != kind):
            want = repr(val) if val is not None else kind
            got = repr(v) if v else "end of input"
            raise ParseError(f"expected {want}, got {got}", pos)
        self.i += 1
        return v, pos

    def expr(self, min_prec=1):
        left = self.primary()
        while True:
            k, v, pos = self.peek()
            if k != "sym" or v not in PRECEDENCE or PRECEDENCE[v] < min_prec:
                return left
            self.i += 1
            right = self.expr(PRECEDENCE[v] + 1)
            left = BinOp(v, left, right, pos)

    def integer(self):
        v, pos = self.take(kind="num")
        return int(v)

    def primary(self):
        k, v, pos = self.peek()
        if k == "sym" and v == "(":
            self.i += 1
            e = self.expr()
            self.take(")")
            return e
        if k != "id":
            raise ParseError(f"expected a species, got {v!r}" if v else "unexpected end of input", pos)
        self.i += 1
        if v == "T" and self.peek()[1] == "[":
            self.take("[")
            b = self.expr()
            self.take("]")
            self.take("(")
            p = self.expr()
            self.take(")")
            return TNode(b, p, pos)
        if v == "R" and self.peek()[1] == "{":
            self.take("{")
            r = self.integer()
            self.take("}")
            self.take("[")
            b = self.expr()
            self.take(",")
            d = self.expr()
            self.take("]")
            self.take("(")
            p = self.expr()
            self.take(",")
            q = self.expr()
            self.take(")")
            return RNode(r, b, d, p, q, pos)
        if v == "trunc" and self.peek()[1] == "(":
            self.take("(")
            arg = self.expr()
            self.take(",")
            ck, cv, cpos = self.peek()
            if cv not in CMPS:
                raise ParseError(f"expected one of {', '.join(CMPS)}, got {cv!r}", cpos)
            self.i += 1
            self.take(",")
            n = self.integer()
            self.take(")")
            return Trunc(arg, cv, n, pos)
        if v not in ATOMS:
            raise ParseError(f"unknown species {v!r}", pos)
        return Atom(v, pos)


def parse_expr(text: str):
    p = _Parser(text)
    e = p.expr()
    k, v, pos = p.peek()
    if k != "end":
        raise ParseError(f"unexpected {v!r}", pos)
    return e


def print_expr(e) -> str:
    """Canonical text; ``parse_expr(print_expr(e)) == e``."""
    if isinstance(e, Atom):
        return e.name
    if isinstance(e, BinOp):
        prec = PRECEDENCE[e.op]
        left = print_expr(e.left)
        right = print_expr(e.right)
        if isinstance(e.left, BinOp) and PRECEDENCE[e.left.op] < prec:
            left = f"({left})"
        if isinstance(e.right, BinOp) and PRECEDENCE[e.right.op] <= prec:
            right = f"({right})"
        return f"{left} {e.op} {right}"
    if isinstance(e, TNode):
        return f"T[{print_expr(e.b)}]({print_expr(e.p)})"
    if isinstance(e, RNode):
        return (f"R{{{e.r}}}[{print_expr(e.b)},{print_expr(e.d)}]"
                f"({print_expr(e.p)},{print_expr(e.q)})")
    if isinstance(e, Trunc):
        return f"trunc({print_expr(e.arg)},{e.cmp},{e.n})"
    raise TypeError(f"not an expression node: {e!r}")
