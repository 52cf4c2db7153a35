"""Exact coefficient fields: the rationals and prime fields GF(p).

Internally the rest of the package works with *raw* field values to keep
the inner loops cheap: ``fractions.Fraction`` for the rationals and plain
``int`` residues in ``[0, p)`` for GF(p).  Every raw computation may produce
an un-normalised intermediate (an int sum that exceeds p, say); passing it
through :meth:`Field.reduce` restores the canonical form.

:class:`Scalar` wraps a raw value together with its field and is the
public, operator-overloaded value type.
"""

from __future__ import annotations

import functools
import re
from fractions import Fraction

from .errors import DivisionByZero, MixedFields, ZeroInput

__all__ = [
    "Field",
    "Rationals",
    "PrimeField",
    "QQ",
    "GF",
    "Scalar",
    "mult_order",
    "parse_field",
]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class Field:
    """Common interface of the two coefficient fields."""

    kind: str
    p: int | None = None

    # raw-value interface -------------------------------------------------
    zero: object
    one: object

    def reduce(self, v):
        raise NotImplementedError

    def from_int(self, n: int):
        return self.reduce(n)

    def from_fraction(self, fr: Fraction):
        raise NotImplementedError

    def inv(self, v):
        raise NotImplementedError

    def is_zero(self, v) -> bool:
        return v == 0

    def add(self, a, b):
        return self.reduce(a + b)

    def sub(self, a, b):
        return self.reduce(a - b)

    def mul(self, a, b):
        return self.reduce(a * b)

    def neg(self, a):
        return self.reduce(-a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k: int):
        if k < 0:
            return self.pow(self.inv(a), -k)
        return self.reduce(pow(a, k)) if self.p is None else pow(a, k, self.p)

    def format(self, v) -> str:
        raise NotImplementedError

    def parse(self, text: str):
        """Parse ``"a"`` or ``"a/b"`` (optionally signed) into a raw value."""
        m = re.fullmatch(r"\s*([+-]?)\s*(\d+)\s*(?:/\s*(\d+))?\s*", text)
        if m is None:
            raise ValueError(f"not a scalar literal: {text!r}")
        sign, num, den = m.groups()
        value = Fraction(int(num), 1) if den is None else None
        if den is not None:
            if int(den) == 0:
                raise DivisionByZero("zero denominator in scalar literal")
            value = Fraction(int(num), int(den))
        if sign == "-":
            value = -value
        return self.from_fraction(value)

    def elements(self):
        """Iterate over all elements (finite fields only)."""
        raise TypeError(f"{self} is infinite")

    def scalar(self, v) -> Scalar:
        """Wrap an int, Fraction, str or raw value as a :class:`Scalar`."""
        if isinstance(v, Scalar):
            if v.field != self:
                raise MixedFields(f"{v.field} vs {self}")
            return v
        if isinstance(v, str):
            return Scalar(self, self.parse(v))
        if isinstance(v, Fraction):
            return Scalar(self, self.from_fraction(v))
        return Scalar(self, self.from_int(v))

    def __eq__(self, other):
        return isinstance(other, Field) and (self.kind, self.p) == (other.kind, other.p)

    def __hash__(self):
        return hash((self.kind, self.p))


class Rationals(Field):
    kind = "rationals"
    zero = Fraction(0)
    one = Fraction(1)

    def reduce(self, v):
        return v if isinstance(v, Fraction) else Fraction(v)

    def from_fraction(self, fr):
        return Fraction(fr)

    def inv(self, v):
        if v == 0:
            raise DivisionByZero("inverse of zero")
        return 1 / Fraction(v)

    def format(self, v) -> str:
        v = Fraction(v)
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"

    def __repr__(self):
        return "QQ"

    __str__ = __repr__


class PrimeField(Field):
    kind = "prime_field"
    zero = 0
    one = 1

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    def reduce(self, v):
        return v % self.p

    def from_fraction(self, fr):
        num, den = fr.numerator % self.p, fr.denominator % self.p
        if den == 0:
            raise DivisionByZero(f"denominator {fr.denominator} vanishes mod {self.p}")
        return num * pow(den, -1, self.p) % self.p

    def inv(self, v):
        if v % self.p == 0:
            raise DivisionByZero("inverse of zero")
        return pow(v, -1, self.p)

    def format(self, v) -> str:
        return str(v % self.p)

    def elements(self):
        return iter(range(self.p))

    def __repr__(self):
        return f"GF({self.p})"

    __str__ = __repr__


QQ = Rationals()


@functools.lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(text: str) -> Field:
    """``"Q"``/``"QQ"`` for the rationals, ``"GF:p"`` or ``"GF(p)"`` for a prime field."""
    t = text.strip()
    if t.upper() in ("Q", "QQ", "RATIONALS"):
        return QQ
    m = re.fullmatch(r"(?:GF|F)\s*[:(]?\s*(\d+)\s*\)?", t, flags=re.IGNORECASE)
    if m is None:
        raise ValueError(f"unrecognised field spec {text!r} (use Q or GF:p)")
    return GF(int(m.group(1)))


class Scalar:
    """An immutable element of a :class:`Field`, always in canonical form."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", field.reduce(value))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise MixedFields(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        if isinstance(other, Fraction):
            return self.field.from_fraction(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else Scalar(self.field, self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else Scalar(self.field, self.value - o)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else Scalar(self.field, o - self.value)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else Scalar(self.field, self.value * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field.div(self.value, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field.div(o, self.value))

    def __neg__(self):
        return Scalar(self.field, -self.value)

    def __pow__(self, k: int):
        return Scalar(self.field, self.field.pow(self.value, k))

    def inverse(self) -> Scalar:
        return Scalar(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.value)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self._other(other)
            except DivisionByZero:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"Scalar({self.field}, {self})"

    @classmethod
    def parse(cls, text: str, field: Field) -> Scalar:
        return cls(field, field.parse(text))


def mult_order(q: Scalar) -> int | None:
    """Least r >= 1 with q**r == 1, or None if q has infinite order."""
    if q.is_zero():
        raise ZeroInput("multiplicative order of zero")
    F = q.field
    if F.p is None:
        if q.value == 1:
            return 1
        if q.value == -1:
            return 2
        return None
    x, r = q.value, 1
    while x != 1:
        x = x * q.value % F.p
        r += 1
    return r
