"""Recursive-descent parser for scalar field expressions.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' unary)?          # right associative, binds tighter than unary minus
    atom   := NUMBER | 't' | 'x'INDEX | 'pi'
            | FUNC '(' expr ')' | '(' expr ')'
    FUNC   := 'sin' | 'cos' | 'exp'

``x1 .. xN`` are 1-based position components; ``t`` is time.
"""

from __future__ import annotations

import math
import re
from typing import Callable

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)

_FUNCS = {"sin": math.sin, "cos": math.cos, "exp": math.exp}


class ExprError(ValueError):
    def __init__(self, message: str, column: int):
        super().__init__(message)
        self.message = message
        self.column = column


def _tokenize(src: str):
    pos = 0
    out = []
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            raise ExprError(f"unknown token {src[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            out.append((kind, m.group(), pos))
        pos = m.end()
    out.append(("end", "", len(src)))
    return out


class _Parser:
    def __init__(self, src: str, dim: int):
        self.toks = _tokenize(src)
        self.i = 0
        self.dim = dim

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, text: str):
        kind, val, col = self.take()
        if val != text:
            raise ExprError(f"expected {text!r}, found {val or 'end of expression'!r}", col)

    def parse(self) -> Callable:
        node = self.expr()
        kind, val, col = self.peek()
        if kind != "end":
            raise ExprError(f"unexpected {val!r}", col)
        return node

    def expr(self):
        node = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            node = _add(node, rhs) if op == "+" else _sub(node, rhs)
        return node

    def term(self):
        node = self.unary()
        while self.peek()[1] in ("*", "/"):
            op = self.take()[1]
            rhs = self.unary()
            node = _mul(node, rhs) if op == "*" else _div(node, rhs)
        return node

    def unary(self):
        if self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            node = self.unary()
            return node if op == "+" else _neg(node)
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            exponent = self.unary()
            return _pow(base, exponent)
        return base

    def atom(self):
        kind, val, col = self.take()
        if kind == "num":
            c = float(val)
            return lambda x, t: c
        if kind == "name":
            if val == "t":
                return lambda x, t: t
            if val == "pi":
                return lambda x, t: math.pi
            if val in _FUNCS:
                fn = _FUNCS[val]
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return lambda x, t: fn(arg(x, t))
            m = re.fullmatch(r"x([1-9][0-9]*)", val)
            if m:
                k = int(m.group(1))
                if k > self.dim:
                    raise ExprError(f"unknown variable {val!r} in dim {self.dim}", col)
                return lambda x, t: x[k - 1]
            raise ExprError(f"unknown token {val!r}", col)
        if val == "(":
            node = self.expr()
            self.expect(")")
            return node
        raise ExprError(f"unexpected {val or 'end of expression'!r}", col)


def _add(a, b):
    return lambda x, t: a(x, t) + b(x, t)


def _sub(a, b):
    return lambda x, t: a(x, t) - b(x, t)


def _mul(a, b):
    return lambda x, t: a(x, t) * b(x, t)


def _div(a, b):
    def f(x, t):
        d = b(x, t)
        return a(x, t) / d if d != 0.0 else math.copysign(math.inf, a(x, t)) if a(x, t) else math.nan

    return f


def _pow(a, b):
    def f(x, t):
        try:
            return float(a(x, t) ** b(x, t))
        except (OverflowError, ZeroDivisionError, TypeError):
            return math.nan

    return f


def _neg(a):
    return lambda x, t: -a(x, t)


class Expression:
    """Compiled scalar expression ``f(x, t)``; keeps its source for reporting."""

    def __init__(self, source: str, dim: int):
        self.source = source.strip()
        self._fn = _Parser(source, dim).parse()

    def __call__(self, x, t: float = 0.0) -> float:
        try:
            return float(self._fn(x, t))
        except OverflowError:
            return math.inf

    def __repr__(self) -> str:
        return f"Expression({self.source!r})"
