"""Homogeneous ideal presentations and the text format that describes them.

Input format, one directive per line:

    # comment
    vars: x, y, z
    ideal: x*y - z^2, x^3 + 2*y^2*z

Grammar for each generator: integer literals, identifiers declared in the
vars line, +, -, *, ^ with nonnegative integer exponents, and parentheses.
Multiplication is always explicit (write 2*x, not 2x).  Whitespace is
insignificant.  Every generator must be homogeneous and nonzero; constant
nonzero generators are allowed but mark the ideal as containing a unit
(empty scheme downstream).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import InputError, ParseError
from .poly import Polynomial, PolyRing

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^(),]))"
)

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class IdealPresentation:
    """A homogeneous ideal given by an explicit generator list over QQ."""

    ring: PolyRing
    generators: tuple[Polynomial, ...]
    contains_unit: bool = field(init=False)

    def __post_init__(self):
        if self.ring.prime is not None:
            raise InputError("ideal presentations live over the rationals")
        if not self.generators:
            raise InputError("the zero ideal is not a valid input")
        for i, g in enumerate(self.generators):
            if g.ring != self.ring:
                raise InputError(f"generator {i + 1} belongs to a different ring")
            if g.is_zero():
                raise InputError(f"generator {i + 1} is zero")
            if not g.is_homogeneous():
                raise InputError(f"generator {i + 1} is not homogeneous")
        unit = any(g.is_constant() for g in self.generators)
        object.__setattr__(self, "contains_unit", unit)

    @property
    def ambient_dim(self) -> int:
        return self.ring.nvars - 1

    @property
    def variables(self) -> tuple[str, ...]:
        return self.ring.variables

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(g.total_degree() for g in self.generators)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    def canonical(self) -> tuple:
        return tuple(g.canonical() for g in self.generators)

    def __str__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"({gens}) in QQ[{', '.join(self.variables)}]"


class _LineParser:
    def __init__(self, text: str, lineno: int, ring: PolyRing, names: dict):
        self.text = text
        self.lineno = lineno
        self.ring = ring
        self.names = names
        self.pos = 0
        self.tokens: list[tuple[str, str, int]] = []
        self._tokenize()
        self.idx = 0

    def _tokenize(self):
        pos = 0
        while pos < len(self.text):
            m = _TOKEN.match(self.text, pos)
            if m is None:
                rest = self.text[pos:].lstrip()
                if not rest:
                    break
                col = len(self.text) - len(rest) + 1
                raise ParseError(f"unexpected character {rest[0]!r}", self.lineno, col)
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind) + 1))
            pos = m.end()

    def peek(self):
        return self.tokens[self.idx] if self.idx < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            col = len(self.text) + 1
            raise ParseError("unexpected end of line", self.lineno, col)
        self.idx += 1
        return tok

    def expect_op(self, op: str):
        tok = self.next()
        if tok[0] != "op" or tok[1] != op:
            raise ParseError(f"expected {op!r}, found {tok[1]!r}", self.lineno, tok[2])

    def at_op(self, *ops: str) -> bool:
        tok = self.peek()
        return tok is not None and tok[0] == "op" and tok[1] in ops

    def parse_poly_list(self) -> list[Polynomial]:
        polys = [self.parse_expr()]
        while self.at_op(","):
            self.next()
            polys.append(self.parse_expr())
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected {tok[1]!r}", self.lineno, tok[2])
        return polys

    def parse_expr(self) -> Polynomial:
        if self.at_op("+", "-"):
            sign_tok = self.next()
            left = self.parse_term()
            if sign_tok[1] == "-":
                left = -left
        else:
            left = self.parse_term()
        while self.at_op("+", "-"):
            op = self.next()[1]
            right = self.parse_term()
            left = left + right if op == "+" else left - right
        return left

    def parse_term(self) -> Polynomial:
        left = self.parse_factor()
        while self.at_op("*"):
            self.next()
            left = left * self.parse_factor()
        return left

    def parse_factor(self) -> Polynomial:
        base = self.parse_atom()
        if self.at_op("^"):
            self.next()
            tok = self.next()
            if tok[0] != "int":
                raise ParseError("exponent must be an integer", self.lineno, tok[2])
            return base ** int(tok[1])
        return base

    def parse_atom(self) -> Polynomial:
        tok = self.next()
        kind, value, col = tok
        if kind == "int":
            return self.ring.const(int(value))
        if kind == "ident":
            i = self.names.get(value)
            if i is None:
                raise ParseError(f"unknown variable {value!r}", self.lineno, col)
            return self.ring.gen(i)
        if kind == "op" and value == "(":
            inner = self.parse_expr()
            self.expect_op(")")
            return inner
        if kind == "op" and value in "+-":
            inner = self.parse_factor()
            return -inner if value == "-" else inner
        raise ParseError(f"unexpected {value!r}", self.lineno, col)


def parse_ideal_text(text: str) -> IdealPresentation:
    vars_line = None
    ideal_line = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("vars:"):
            if vars_line is not None:
                raise ParseError("duplicate vars line", lineno, 1)
            vars_line = (lineno, raw, raw.index("vars:") + 5)
        elif line.startswith("ideal:"):
            if ideal_line is not None:
                raise ParseError("duplicate ideal line", lineno, 1)
            ideal_line = (lineno, raw, raw.index("ideal:") + 6)
        else:
            raise ParseError(
                "expected a vars: or ideal: directive", lineno, len(raw) - len(raw.lstrip()) + 1
            )
    if vars_line is None:
        raise InputError("missing vars: line")
    if ideal_line is None:
        raise InputError("missing ideal: line")

    lineno, raw, offset = vars_line
    names = []
    for chunk in raw[offset:].split(","):
        name = chunk.strip()
        col = raw.index(chunk, offset) + 1 if chunk else offset + 1
        if not _IDENT.match(name):
            raise ParseError(f"bad variable name {name!r}", lineno, col)
        names.append(name)
    if len(set(names)) != len(names):
        raise InputError(f"duplicate variable in vars line: {names}")
    if len(names) < 2:
        raise InputError("need at least two variables for a projective space")

    ring = PolyRing(names)
    name_index = {n: i for i, n in enumerate(names)}
    lineno, raw, offset = ideal_line
    parser = _LineParser(raw[offset:], lineno, ring, name_index)
    # token columns are relative to the slice; shift them to the raw line
    parser.tokens = [(k, v, c + offset) for k, v, c in parser.tokens]
    gens = parser.parse_poly_list()
    return IdealPresentation(ring, tuple(gens))


def parse_ideal_file(path) -> IdealPresentation:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_ideal_text(fh.read())


def principal_ideal(f: Polynomial) -> IdealPresentation:
    return IdealPresentation(f.ring, (f,))


def partial_derivatives(f: Polynomial) -> IdealPresentation:
    """The ideal of all first partials of a homogeneous polynomial.  Zero
    partials are dropped; for a linear form the result contains a unit and
    presents the empty scheme."""
    if f.is_zero() or not f.is_homogeneous():
        raise InputError("partial derivatives need a nonzero homogeneous polynomial")
    parts = [f.derivative(i) for i in range(f.ring.nvars)]
    parts = [p for p in parts if not p.is_zero()]
    if not parts:
        raise InputError("constant polynomial has no singularity subscheme")
    return IdealPresentation(f.ring, tuple(parts))


def product_ideal(*ideals: IdealPresentation) -> IdealPresentation:
    """Generators: all products of one generator from each factor, with
    duplicates removed in first-occurrence order."""
    if not ideals:
        raise InputError("empty product")
    ring = ideals[0].ring
    for ideal in ideals[1:]:
        if ideal.ring != ring:
            raise InputError("product of ideals from different rings")
    gens = list(ideals[0].generators)
    for ideal in ideals[1:]:
        seen = set()
        nxt = []
        for a in gens:
            for b in ideal.generators:
                prod = a * b
                key = prod.canonical()
                if key not in seen:
                    seen.add(key)
                    nxt.append(prod)
        gens = nxt
    return IdealPresentation(ring, tuple(gens))


def ideal_sum(*ideals: IdealPresentation) -> IdealPresentation:
    """Concatenated generators (the ideal of the scheme intersection), with
    duplicates removed in first-occurrence order."""
    if not ideals:
        raise InputError("empty sum")
    ring = ideals[0].ring
    seen = set()
    gens = []
    for ideal in ideals:
        if ideal.ring != ring:
            raise InputError("sum of ideals from different rings")
        for g in ideal.generators:
            key = g.canonical()
            if key not in seen:
                seen.add(key)
                gens.append(g)
    return IdealPresentation(ring, tuple(gens))


def monomials_of_degree(ring: PolyRing, d: int) -> list[int]:
    """Packed keys of all degree-d monomials, descending."""
    k = ring.nvars
    out = []

    def rec(prefix, i, rest):
        if i == k - 1:
            out.append(ring.pack(prefix + [rest]))
            return
        for e in range(rest, -1, -1):
            rec(prefix + [e], i + 1, rest - e)

    rec([], 0, d)
    out.sort(reverse=True)
    return out


def graded_piece(ideal: IdealPresentation, d: int) -> list[Polynomial]:
    """Spanning set of the degree-d part: monomial multiples of generators.
    Exact duplicates are dropped; order is deterministic."""
    ring = ideal.ring
    seen = set()
    out = []
    for g in ideal.generators:
        shift = d - g.total_degree()
        if shift < 0:
            continue
        for mkey in monomials_of_degree(ring, shift):
            prod = Polynomial(ring, {k + mkey: c for k, c in g.terms.items()})
            key = prod.canonical()
            if key not in seen:
                seen.add(key)
                out.append(prod)
    if not out:
        raise InputError(f"ideal has no generators in degree {d}")
    return out
