"""Gaussian binomial coefficients as integer polynomials in t.

The polynomial is built first (q-Pascal recurrence) and only then evaluated
at a field element, so evaluation at roots of unity never meets the 0/0 of
the quotient-of-products presentation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IndexOutOfRange, ZeroInput
from .scalars import Field, Scalar

__all__ = [
    "GaussPolynomial",
    "gauss_binom",
    "gauss_binom_product",
    "qbinom_eval",
    "qbinom_raw",
    "set_memo_cap",
]


@dataclass(frozen=True)
class GaussPolynomial:
    n: int
    i: int
    coeffs: tuple  # coeffs[k] is the coefficient of t**k

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def at_one(self) -> int:
        return sum(self.coeffs)

    def evaluate(self, q: Scalar) -> Scalar:
        F = q.field
        return Scalar(F, _horner(F, self.coeffs, q.value))

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            mono = "t" if k == 1 else f"t^{k}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"


def _horner(F: Field, coeffs, q):
    acc = F.zero
    for c in reversed(coeffs):
        acc = F.reduce(acc * q + F.from_int(c))
    return acc


_MEMO_CAP = 64
_memo: dict = {}


def set_memo_cap(cap: int) -> None:
    """Only (n, i) with n <= cap are memoised; entries are deterministic."""
    global _MEMO_CAP
    _MEMO_CAP = cap
    for key in [k for k in _memo if k[0] > cap]:
        _memo.pop(key, None)


def _poly_add(a, b):
    n = max(len(a), len(b))
    return tuple((a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(n))


def _coeffs(n: int, i: int) -> tuple:
    key = (n, i)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    if i == 0 or i == n:
        out = (1,)
    else:
        # C(n,i) = C(n-1,i-1) + t^i C(n-1,i); iterate rows to keep recursion shallow
        row = [(1,)]
        for r in range(1, n + 1):
            new = [(1,)]
            for j in range(1, r):
                new.append(_poly_add(row[j - 1], (0,) * j + row[j]))
            new.append((1,))
            row = new
            if r <= _MEMO_CAP:
                for j, c in enumerate(row):
                    _memo.setdefault((r, j), c)
        out = row[i]
    if n <= _MEMO_CAP:
        _memo[key] = out
    return out


def gauss_binom(n: int, i: int) -> GaussPolynomial:
    if n < 0 or i < 0 or i > n:
        raise IndexOutOfRange(f"need 0 <= i <= n, got n={n}, i={i}")
    return GaussPolynomial(n, i, _coeffs(n, i))


def gauss_binom_product(n: int, i: int) -> GaussPolynomial:
    """Same polynomial via the quotient of products of (t^k - 1), divided exactly.

    Independent of the recurrence; used as a cross-check.
    """
    if n < 0 or i < 0 or i > n:
        raise IndexOutOfRange(f"need 0 <= i <= n, got n={n}, i={i}")

    def falling(lo, hi):
        acc = [1]
        for k in range(lo, hi + 1):
            f = [-1] + [0] * (k - 1) + [1]
            out = [0] * (len(acc) + k)
            for a, x in enumerate(acc):
                if x:
                    for b, y in enumerate(f):
                        out[a + b] += x * y
            acc = out
        return acc

    num = falling(1, n)
    a, b = falling(1, i), falling(1, n - i)
    den = [0] * (len(a) + len(b) - 1)
    for j, x in enumerate(a):
        for k, y in enumerate(b):
            den[j + k] += x * y
    quot = [0] * (len(num) - len(den) + 1)
    rem = list(num)
    lead = den[-1]
    for k in range(len(quot) - 1, -1, -1):
        c, r = divmod(rem[k + len(den) - 1], lead)
        if r:
            raise ArithmeticError("non-integral quotient")
        quot[k] = c
        for j, d in enumerate(den):
            rem[k + j] -= c * d
    if any(rem):
        raise ArithmeticError("product formula did not divide exactly")
    while len(quot) > 1 and quot[-1] == 0:
        quot.pop()
    return GaussPolynomial(n, i, tuple(quot))


def qbinom_raw(F: Field, n: int, i: int, q):
    """Evaluation on raw field values; the hot path for the multipliers."""
    return _horner(F, _coeffs(n, i), q)


def qbinom_eval(n: int, i: int, q: Scalar) -> Scalar:
    if q.is_zero():
        raise ZeroInput("q must be nonzero")
    return gauss_binom(n, i).evaluate(q)
