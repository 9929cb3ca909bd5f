"""Scenario file format.

One statement per line, ``#`` starts a comment::

    statement := KEY '=' value (WS value)*
    value     := array | WORD
    array     := '[' (item (',' item)*)? ']'
    item      := array | TEXT          # TEXT: anything up to ',' or ']' outside parentheses

Keys are case-insensitive.  ``kind`` and ``dim`` are the header; the remaining
keys depend on the kind (see README).  Numeric items must be plain decimal
literals; field items are expressions (see :mod:`doublewedge.cli.expr`).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .expr import Expression, ExprError

KINDS = (
    "moment",
    "inertia",
    "angular-momentum",
    "power",
    "volume",
    "curl",
    "faraday",
    "lorentz",
    "verify",
)

_KEY = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*)\s*=")
_NUMBER = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_INT = re.compile(r"[+-]?\d+")


class ScenarioError(ValueError):
    exit_code = 2
    kind = "parse"

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    def __str__(self) -> str:
        if self.line is None:
            return self.message
        return f"line {self.line}, column {self.column}: {self.message}"


class ScenarioDimensionError(ScenarioError):
    exit_code = 3
    kind = "dimension"


@dataclass
class Node:
    """Raw value: either a text atom or an array of nodes."""

    line: int
    col: int
    text: str | None = None
    items: list["Node"] | None = None

    @property
    def is_array(self) -> bool:
        return self.items is not None


@dataclass
class Statement:
    key: str
    values: list[Node]
    line: int
    col: int


@dataclass
class Scenario:
    kind: str
    dim: int | None
    payload: dict[str, Any] = field(default_factory=dict)
    statements: list[Statement] = field(default_factory=list)


# ---------------------------------------------------------------------------
# lexing


class _LineReader:
    def __init__(self, text: str, lineno: int):
        self.s = text
        self.pos = 0
        self.lineno = lineno

    def err(self, msg: str, pos: int | None = None) -> ScenarioError:
        return ScenarioError(msg, self.lineno, (self.pos if pos is None else pos) + 1)

    def skip_ws(self):
        while self.pos < len(self.s) and self.s[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.s)

    def value(self) -> Node:
        self.skip_ws()
        if self.s[self.pos] == "[":
            return self.array()
        if self.s[self.pos] in ",]":
            raise self.err(f"unexpected {self.s[self.pos]!r}")
        start = self.pos
        while self.pos < len(self.s) and not self.s[self.pos].isspace() and self.s[self.pos] != "[":
            if self.s[self.pos] in ",]":
                raise self.err(f"unexpected {self.s[self.pos]!r}")
            self.pos += 1
        return Node(self.lineno, start + 1, text=self.s[start : self.pos])

    def array(self) -> Node:
        open_pos = self.pos
        self.pos += 1
        node = Node(self.lineno, open_pos + 1, items=[])
        self.skip_ws()
        if self.pos < len(self.s) and self.s[self.pos] == "]":
            self.pos += 1
            return node
        while True:
            self.skip_ws()
            if self.pos >= len(self.s):
                raise self.err("unterminated array", open_pos)
            if self.s[self.pos] == "[":
                node.items.append(self.array())
                self.skip_ws()
            else:
                node.items.append(self.item())
            if self.pos >= len(self.s):
                raise self.err("unterminated array", open_pos)
            c = self.s[self.pos]
            self.pos += 1
            if c == "]":
                return node
            if c != ",":
                raise self.err(f"expected ',' or ']', found {c!r}", self.pos - 1)

    def item(self) -> Node:
        start = self.pos
        depth = 0
        while self.pos < len(self.s):
            c = self.s[self.pos]
            if c == "(":
                depth += 1
            elif c == ")":
                depth -= 1
            elif depth <= 0 and c in ",]":
                break
            elif c == "[":
                raise self.err("unexpected '['")
            self.pos += 1
        raw = self.s[start : self.pos]
        text = raw.strip()
        if not text:
            raise self.err("empty array item", start)
        lead = len(raw) - len(raw.lstrip())
        return Node(self.lineno, start + lead + 1, text=text)


def _statements(text: str) -> list[Statement]:
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        if not body.strip():
            continue
        m = _KEY.match(body)
        if m is None:
            lead = len(body) - len(body.lstrip())
            raise ScenarioError("expected 'key = value'", lineno, lead + 1)
        rd = _LineReader(body, lineno)
        rd.pos = m.end()
        values = []
        while not rd.at_end():
            values.append(rd.value())
        if not values:
            raise ScenarioError(f"missing value for {m.group(1)!r}", lineno, m.end() + 1)
        out.append(Statement(m.group(1).lower(), values, lineno, m.start(1) + 1))
    return out


# ---------------------------------------------------------------------------
# typed conversion


def _atom(node: Node, what: str) -> str:
    if node.is_array:
        raise ScenarioError(f"{what}: expected a scalar, found an array", node.line, node.col)
    return node.text


def _number(node: Node, what: str) -> float:
    text = _atom(node, what)
    if not _NUMBER.fullmatch(text):
        raise ScenarioError(f"{what}: malformed number {text!r}", node.line, node.col)
    value = float(text)
    if not np.isfinite(value):
        raise ScenarioError(f"{what}: number out of range {text!r}", node.line, node.col)
    return value


def _integer(node: Node, what: str) -> int:
    text = _atom(node, what)
    if not _INT.fullmatch(text):
        raise ScenarioError(f"{what}: malformed integer {text!r}", node.line, node.col)
    return int(text)


def _array(node: Node, what: str) -> list[Node]:
    if not node.is_array:
        raise ScenarioError(f"{what}: expected an array '[...]'", node.line, node.col)
    return node.items


def _expression(node: Node, what: str, dim: int) -> Expression:
    text = _atom(node, what)
    try:
        return Expression(text, dim)
    except ExprError as exc:
        raise ScenarioError(f"{what}: {exc.message}", node.line, node.col + exc.column) from None


class _Builder:
    """Consumes statements for one kind and records every length for dim checks."""

    def __init__(self, kind: str, dim: int | None, stmts: dict[str, list[Statement]]):
        self.kind = kind
        self.dim = dim
        self.stmts = stmts
        self.used: set[str] = {"kind", "dim"}
        self.lengths: list[tuple[str, int, Node]] = []

    def has(self, key: str) -> bool:
        return key in self.stmts

    def one(self, key: str, required: bool = True) -> Node | None:
        self.used.add(key)
        if key not in self.stmts:
            if required:
                raise ScenarioError(f"{self.kind} scenario requires '{key}'")
            return None
        st = self.stmts[key]
        if len(st) > 1:
            raise ScenarioError(f"duplicate key {key!r}", st[1].line, st[1].col)
        if len(st[0].values) != 1:
            v = st[0].values[1]
            raise ScenarioError(f"{key}: expected exactly one value", v.line, v.col)
        return st[0].values[0]

    def _note(self, what: str, n: int, node: Node):
        self.lengths.append((what, n, node))

    def vector(self, key: str, required: bool = True, node: Node | None = None, what: str | None = None):
        node = node if node is not None else self.one(key, required)
        if node is None:
            return None
        what = what or key
        items = _array(node, what)
        self._note(what, len(items), node)
        return np.array([_number(it, what) for it in items])

    def matrix(self, key: str, required: bool = True):
        node = self.one(key, required)
        if node is None:
            return None
        rows = _array(node, key)
        out = []
        for q, row in enumerate(rows):
            out.append(self.vector(key, node=row, what=f"{key} row {q + 1}"))
        if len(rows) == 0:
            raise ScenarioError(f"{key}: empty matrix", node.line, node.col)
        return out, node

    def square_matrix(self, key: str, required: bool = True):
        got = self.matrix(key, required)
        if got is None:
            return None
        rows, node = got
        self._note(f"{key} rows", len(rows), node)
        return np.array(rows)

    def expr_vector(self, key: str, required: bool = True):
        node = self.one(key, required)
        if node is None:
            return None
        items = _array(node, key)
        self._note(key, len(items), node)
        self.check_dims()
        return [_expression(it, key, self.dim) for it in items]

    def expr_matrix(self, key: str, required: bool = True):
        node = self.one(key, required)
        if node is None:
            return None
        rows = _array(node, key)
        self._note(f"{key} rows", len(rows), node)
        for q, row in enumerate(rows):
            self._note(f"{key} row {q + 1}", len(_array(row, key)), row)
        self.check_dims()
        return [[_expression(it, key, self.dim) for it in row.items] for row in rows]

    def number(self, key: str, default: float | None = None) -> float | None:
        node = self.one(key, default is None)
        return default if node is None else _number(node, key)

    def check_dims(self):
        bad = [(w, n, node) for w, n, node in self.lengths if n != self.dim]
        if bad:
            w, n, node = bad[0]
            desc = ", ".join(f"{w} has length {k}" for w, k, _ in self.lengths)
            raise ScenarioDimensionError(
                f"dimension mismatch: dim = {self.dim}, {desc}", node.line, node.col
            )

    def finish(self):
        self.check_dims()
        for key, sts in self.stmts.items():
            if key not in self.used:
                raise ScenarioError(
                    f"unknown key {key!r} for {self.kind} scenario", sts[0].line, sts[0].col
                )


def _particles(b: _Builder, with_velocity: bool) -> list[tuple]:
    b.used.add("particle")
    sts = b.stmts.get("particle", [])
    if not sts:
        raise ScenarioError(f"{b.kind} scenario requires at least one 'particle'")
    out = []
    for q, st in enumerate(sts, start=1):
        what = f"particle {q}"
        if len(st.values) not in (2, 3):
            raise ScenarioError(f"{what}: expected 'mass [position] [velocity]'", st.line, st.col)
        if len(st.values) == 3 and not with_velocity:
            v = st.values[2]
            raise ScenarioError(f"{what}: velocity not allowed here", v.line, v.col)
        mass = _number(st.values[0], f"{what} mass")
        if mass <= 0:
            node = st.values[0]
            raise ScenarioError(f"{what}: mass must be positive", node.line, node.col)
        x = b.vector("particle", node=st.values[1], what=f"{what} position")
        v = b.vector("particle", node=st.values[2], what=f"{what} velocity") if len(st.values) == 3 else None
        out.append((mass, x, v))
    return out


def _bivector_input(b: _Builder, key: str, required: bool = True):
    """Numeric bivector from ``key`` (matrix) or ``key_axial`` (3-D vector)."""
    axial_key = f"{key}_axial"
    if b.has(key) and b.has(axial_key):
        st = b.stmts[axial_key][0]
        raise ScenarioError(f"give either {key!r} or {axial_key!r}, not both", st.line, st.col)
    if b.has(axial_key):
        node = b.stmts[axial_key][0]
        if b.dim != 3:
            raise ScenarioDimensionError(f"{axial_key} requires dim = 3", node.line, node.col)
        return ("axial", b.vector(axial_key))
    m = b.square_matrix(key, required)
    if m is None:
        return None
    b.check_dims()
    if not np.array_equal(m, -m.T):
        node = b.stmts[key][0]
        raise ScenarioError(f"{key}: matrix is not antisymmetric", node.line, node.col)
    return ("matrix", m)


def _field_bivector(b: _Builder, key: str):
    axial_key = f"{key}_axial"
    if b.has(key) and b.has(axial_key):
        st = b.stmts[axial_key][0]
        raise ScenarioError(f"give either {key!r} or {axial_key!r}, not both", st.line, st.col)
    if b.has(axial_key):
        node = b.stmts[axial_key][0]
        if b.dim != 3:
            raise ScenarioDimensionError(f"{axial_key} requires dim = 3", node.line, node.col)
        return ("axial", b.expr_vector(axial_key))
    if not b.has(key):
        raise ScenarioError(f"{b.kind} scenario requires '{key}' or '{axial_key}'")
    return ("matrix", b.expr_matrix(key))


def _indices(b: _Builder):
    node = b.one("indices", required=False)
    if node is None:
        return None
    items = _array(node, "indices")
    if len(items) != 3:
        raise ScenarioError("indices: expected three 0-based indices", node.line, node.col)
    return [_integer(it, "indices") for it in items]


def parse_scenario(text: bytes | str, kind: str | None = None) -> Scenario:
    """Parse and validate scenario text.

    ``kind`` (from the command line) is used when the file has no ``kind``
    statement, and must agree with it otherwise.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ScenarioError(f"input is not valid UTF-8: {exc}") from None
    stmts: dict[str, list[Statement]] = {}
    for st in _statements(text):
        stmts.setdefault(st.key, []).append(st)
    ordered = [st for sts in stmts.values() for st in sts]
    ordered.sort(key=lambda s: s.line)

    b0 = _Builder(kind or "", None, stmts)
    kind_node = b0.one("kind", required=False)
    if kind_node is not None:
        file_kind = _atom(kind_node, "kind").lower()
        if file_kind not in KINDS:
            raise ScenarioError(f"unknown kind {file_kind!r}", kind_node.line, kind_node.col)
        if kind is not None and kind != file_kind:
            raise ScenarioError(
                f"scenario kind {file_kind!r} does not match subcommand {kind!r}",
                kind_node.line,
                kind_node.col,
            )
        kind = file_kind
    if kind is None:
        raise ScenarioError("missing 'kind'")
    if kind not in KINDS:
        raise ScenarioError(f"unknown kind {kind!r}")

    dim = None
    dim_node = b0.one("dim", required=kind != "verify")
    if dim_node is not None:
        dim = _integer(dim_node, "dim")
        if dim < 1:
            raise ScenarioDimensionError("dim must be >= 1", dim_node.line, dim_node.col)

    b = _Builder(kind, dim, stmts)
    p: dict[str, Any] = {}

    if kind == "moment":
        p["r"] = b.vector("r")
        p["f"] = b.vector("f")
    elif kind == "inertia":
        p["particles"] = _particles(b, with_velocity=False)
        p["pole"] = b.vector("pole", required=False)
    elif kind == "angular-momentum":
        p["pole"] = b.vector("pole", required=False)
        p["omega"] = _bivector_input(b, "omega", required=False)
        p["v_pole"] = b.vector("v_pole", required=False)
        rigid = p["omega"] is not None
        if p["v_pole"] is not None and not rigid:
            node = stmts["v_pole"][0]
            raise ScenarioError("v_pole requires omega", node.line, node.col)
        p["particles"] = _particles(b, with_velocity=not rigid)
    elif kind == "power":
        if b.has("r") or b.has("f"):
            p["r"] = b.vector("r")
            p["f"] = b.vector("f")
            if b.has("m") or b.has("m_axial"):
                st = (stmts.get("m") or stmts["m_axial"])[0]
                raise ScenarioError("give either r and f or m, not both", st.line, st.col)
        else:
            p["m"] = _bivector_input(b, "m")
        p["omega"] = _bivector_input(b, "omega")
    elif kind == "volume":
        got = b.matrix("vectors")
        p["vectors"] = np.array(got[0])
        p["indices"] = _indices(b)
        if p["indices"] is not None:
            b.check_dims()
            node = b.stmts["indices"][0].values[0]
            for q in p["indices"]:
                if not 0 <= q < dim:
                    raise ScenarioError(f"indices: {q} out of range for dim {dim}", node.line, node.col)
            if len(set(p["indices"])) != 3:
                raise ScenarioError("indices must be distinct", node.line, node.col)
            if len(p["vectors"]) != 3:
                raise ScenarioError(
                    "indices need exactly three vectors (a, b, c)", node.line, node.col
                )
        if len(p["vectors"]) > (dim or 0):
            node = b.stmts["vectors"][0]
            raise ScenarioDimensionError(
                f"vectors: {len(p['vectors'])} vectors exceed dim = {dim}", node.line, node.col
            )
    elif kind == "curl":
        p["v"] = b.expr_vector("v")
        p["x"] = b.vector("x")
        p["t"] = b.number("t", 0.0)
        p["h"] = b.number("h", float("nan"))
    elif kind == "faraday":
        p["e"] = b.expr_vector("e")
        p["b"] = _field_bivector(b, "b")
        p["x"] = b.vector("x")
        p["t"] = b.number("t", 0.0)
        p["h"] = b.number("h", float("nan"))
        p["dt"] = b.number("dt", float("nan"))
    elif kind == "lorentz":
        p["charge"] = b.number("charge")
        p["b"] = _field_bivector(b, "b")
        p["v"] = b.vector("v")
        p["x"] = b.vector("x", required=False)
        p["t"] = b.number("t", 0.0)
    elif kind == "verify":
        node = b.one("seed", required=False)
        p["seed"] = None if node is None else _integer(node, "seed")
        if p["seed"] is not None and not 0 <= p["seed"] < 2**64:
            raise ScenarioError("seed must be an unsigned 64-bit integer", node.line, node.col)
        node = b.one("dims", required=False)
        if node is None:
            p["dims"] = None
        else:
            p["dims"] = [_integer(it, "dims") for it in _array(node, "dims")]
            if not p["dims"] or any(d < 1 for d in p["dims"]):
                raise ScenarioError("dims: expected positive integers", node.line, node.col)
        node = b.one("samples", required=False)
        p["samples"] = None if node is None else _integer(node, "samples")
        if p["samples"] is not None and p["samples"] < 1:
            raise ScenarioError("samples must be >= 1", node.line, node.col)
    b.finish()
    for key in ("h", "dt"):
        if key in p and p[key] == p[key] and not p[key] > 0:
            st = stmts[key][0]
            raise ScenarioError(f"{key} must be positive", st.line, st.col)
    return Scenario(kind=kind, dim=dim, payload=p, statements=ordered)
