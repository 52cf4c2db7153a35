"""Expression language for skew polynomials.

Grammar (``*`` is mandatory; juxtaposition is a syntax error because the
ring is noncommutative)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | atom ('^' uint)?
    atom   := scalar | 'y' | 'x' | '(' expr ')'
    scalar := uint ('/' uint)?
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero, ExprSyntaxError, RingMismatch, UnknownGenerator, ValidationError
from .orepoly import OrePoly, mul_goodearl, mul_naive
from .rings import OreContext

__all__ = [
    "GRAMMAR",
    "Num",
    "Gen",
    "Add",
    "Sub",
    "Mul",
    "Neg",
    "Pow",
    "parse_expression",
    "to_text",
    "validate_ring_only",
    "evaluate",
    "evaluate_element",
]

GRAMMAR = __doc__.split("::", 1)[1].strip("\n")


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Gen:
    name: str  # 'x' or 'y'


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


_TOKEN = re.compile(r"\s*(?:(\d+(?:\s*/\s*\d+)?)|([A-Za-z_]\w*)|(.))")


def _tokenize(src):
    toks = []
    pos = 0
    while True:
        m = _TOKEN.match(src, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        num, name, sym = m.groups()
        if num is not None:
            toks.append(("num", num, start))
        elif name is not None:
            toks.append(("name", name, start))
        elif sym is not None:
            if sym not in "+-*^()":
                raise ExprSyntaxError(f"unexpected character {sym!r}", start)
            toks.append((sym, sym, start))
        pos = m.end()
    toks.append(("end", "", len(src)))
    return toks


class _Parser:
    def __init__(self, src):
        self.toks = _tokenize(src)
        self.i = 0

    @property
    def tok(self):
        return self.toks[self.i]

    def take(self, kind=None):
        t = self.toks[self.i]
        if kind is not None and t[0] != kind:
            want = "end of input" if kind == "end" else repr(kind)
            got = "end of input" if t[0] == "end" else repr(t[1])
            raise ExprSyntaxError(f"expected {want}, found {got}", t[2])
        self.i += 1
        return t

    def expr(self):
        node = self.term()
        while self.tok[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self):
        node = self.factor()
        while self.tok[0] == "*":
            self.take()
            node = Mul(node, self.factor())
        return node

    def factor(self):
        if self.tok[0] == "-":
            self.take()
            return Neg(self.factor())
        base = self.atom()
        if self.tok[0] == "^":
            self.take()
            t = self.tok
            if t[0] != "num" or "/" in t[1]:
                raise ExprSyntaxError("exponent must be a nonnegative integer", t[2])
            self.take()
            return Pow(base, int(t[1]))
        return base

    def atom(self):
        kind, text, pos = self.tok
        if kind == "num":
            self.take()
            num, _, den = text.replace(" ", "").partition("/")
            if den and int(den) == 0:
                raise ExprSyntaxError("zero denominator", pos)
            return Num(Fraction(int(num), int(den) if den else 1))
        if kind == "name":
            if text not in ("x", "y"):
                raise ExprSyntaxError(f"unknown symbol {text!r} (only x and y)", pos)
            self.take()
            return Gen(text)
        if kind == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        found = "end of input" if kind == "end" else repr(text)
        raise ExprSyntaxError(f"expected a scalar, 'x', 'y' or '(', found {found}", pos)


def parse_expression(src: str):
    p = _Parser(src)
    node = p.expr()
    t = p.tok
    if t[0] != "end":
        hint = " (use '*' for multiplication)" if t[0] in ("num", "name", "(") else ""
        raise ExprSyntaxError(f"unexpected {t[1]!r}{hint}", t[2])
    return node


# printing: 0 = sum level, 1 = product level, 2 = factor level, 3 = atom
def _level(node):
    if isinstance(node, (Add, Sub)):
        return 0
    if isinstance(node, Mul):
        return 1
    if isinstance(node, (Neg, Pow)):
        return 2
    return 3


def _wrap(node, need):
    s = to_text(node)
    return f"({s})" if _level(node) < need else s


def to_text(node) -> str:
    """Canonical print; ``parse_expression(to_text(t)) == t``."""
    if isinstance(node, Num):
        v = node.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(node, Gen):
        return node.name
    if isinstance(node, Add):
        return f"{_wrap(node.left, 0)} + {_wrap(node.right, 1)}"
    if isinstance(node, Sub):
        return f"{_wrap(node.left, 0)} - {_wrap(node.right, 1)}"
    if isinstance(node, Mul):
        return f"{_wrap(node.left, 1)}*{_wrap(node.right, 2)}"
    if isinstance(node, Neg):
        return f"-{_wrap(node.operand, 2)}"
    if isinstance(node, Pow):
        return f"{_wrap(node.base, 3)}^{node.exp}"
    raise TypeError(f"not an expression node: {node!r}")


def _walk(node):
    yield node
    for attr in ("left", "right", "operand", "base"):
        child = getattr(node, attr, None)
        if child is not None:
            yield from _walk(child)


def validate_ring_only(node):
    """Reject ``x`` where a base-ring element is required."""
    if any(isinstance(n, Gen) and n.name == "x" for n in _walk(node)):
        raise ValidationError("'x' is not allowed here: a base-ring element (in y only) is required")
    return node


_MULS = {"naive": mul_naive, "goodearl": mul_goodearl}


def evaluate(node, ctx: OreContext, method: str = "goodearl") -> OrePoly:
    """Normal form of the expression in ``R[x; sigma, delta]``.

    Products are taken left to right with the chosen multiplier.  When R
    has no unit the computation runs in its unitization and the result is
    projected back; a leftover unit component is an error.
    """
    if method not in _MULS:
        raise ValueError(f"method must be naive or goodearl, not {method!r}")
    mul = _MULS[method]
    ctx1, embed, project = ctx.unitization()
    F = ctx.field
    A1 = ctx1.algebra
    one = A1.one()

    def as_poly(v):
        return v if isinstance(v, OrePoly) else OrePoly.monomial(ctx1, one.scale(v))

    def ev(n):
        if isinstance(n, Num):
            try:
                return F.from_fraction(n.value)
            except DivisionByZero as e:
                raise DivisionByZero(f"{to_text(n)} is undefined in {F}: {e}") from None
        if isinstance(n, Gen):
            if n.name == "x":
                return OrePoly.monomial(ctx1, one, 1)
            if A1.gen_index is None:
                raise UnknownGenerator(f"{ctx.name} has no generator y")
            return OrePoly.monomial(ctx1, A1.gen())
        if isinstance(n, Neg):
            v = ev(n.operand)
            return -v if isinstance(v, OrePoly) else F.neg(v)
        if isinstance(n, (Add, Sub)):
            a, b = ev(n.left), ev(n.right)
            if not isinstance(a, OrePoly) and not isinstance(b, OrePoly):
                return F.add(a, b) if isinstance(n, Add) else F.sub(a, b)
            a, b = as_poly(a), as_poly(b)
            return a + b if isinstance(n, Add) else a - b
        if isinstance(n, Mul):
            a, b = ev(n.left), ev(n.right)
            if not isinstance(a, OrePoly):
                return F.mul(a, b) if not isinstance(b, OrePoly) else b.scale(a)
            if not isinstance(b, OrePoly):
                return a.scale(b)
            return mul(a, b)
        if isinstance(n, Pow):
            v = ev(n.base)
            if not isinstance(v, OrePoly):
                return F.pow(v, n.exp) if n.exp else F.one
            if n.exp == 0:
                return as_poly(F.one)
            out = v
            for _ in range(n.exp - 1):
                out = mul(out, v)
            return out
        raise TypeError(f"not an expression node: {n!r}")

    v = as_poly(ev(node))
    try:
        coeffs = [project(c) for c in v.coeffs]
    except RingMismatch as e:
        raise RingMismatch(f"{e} (expression {to_text(node)!r})") from None
    return OrePoly.from_coeffs(ctx, coeffs)


def evaluate_element(node, ctx: OreContext):
    """Evaluate a ring-only expression to an element of R."""
    validate_ring_only(node)
    return evaluate(node, ctx).coeff(0)
