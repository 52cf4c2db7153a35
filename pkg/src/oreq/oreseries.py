"""Ore power series truncated at x^T, and quasi-inverses.

Left multiplication never lowers the power of x (``x^n b`` only produces
powers 0..n, shifted by the power already carried by ``b``), so
arithmetic modulo x^T is exact on the first T coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .errors import (
    ContextMismatch,
    GuardExceedsTruncation,
    NonconvergentConstantTerm,
    SingularSystem,
    TruncationMismatch,
)
from .orepoly import MINUS_INFINITY, OrePoly, mul_naive, x_pow_times
from .rings import AlgebraElement, OreContext

__all__ = [
    "DEFAULT_TRUNC",
    "OreSeries",
    "QuasiCheck",
    "series_mul",
    "quasi_inverse",
    "quasi_inverse_linear",
    "quasi_check",
    "detect_polynomial",
]

DEFAULT_TRUNC = 24


class OreSeries:
    """Coefficients of x^0..x^(T-1); everything at x^T and above is unknown."""

    __slots__ = ("ctx", "trunc", "coords")

    def __init__(self, ctx: OreContext, coords, trunc: int):
        if trunc < 1:
            raise ValueError("truncation order must be positive")
        zero = (ctx.field.zero,) * ctx.dim
        coords = list(coords)[:trunc]
        coords += [zero] * (trunc - len(coords))
        self.ctx = ctx
        self.trunc = trunc
        self.coords = tuple(coords)

    @classmethod
    def from_poly(cls, f: OrePoly, trunc: int) -> OreSeries:
        return cls(f.ctx, f.coords, trunc)

    def to_poly(self) -> OrePoly:
        return OrePoly(self.ctx, self.coords)

    def coeff(self, k: int) -> AlgebraElement:
        if not 0 <= k < self.trunc:
            raise IndexError(f"power {k} outside [0, {self.trunc})")
        return AlgebraElement(self.ctx.algebra, self.coords[k])

    def is_zero(self) -> bool:
        return not any(any(c) for c in self.coords)

    def _same(self, other):
        if other.ctx is not self.ctx:
            raise ContextMismatch(f"{self.ctx.name} vs {other.ctx.name}")
        if other.trunc != self.trunc:
            raise TruncationMismatch(f"T={self.trunc} vs T={other.trunc}")

    def __add__(self, other):
        self._same(other)
        r = self.ctx.field.reduce
        return OreSeries(self.ctx, [tuple(r(a + b) for a, b in zip(u, v))
                                    for u, v in zip(self.coords, other.coords)], self.trunc)

    def __neg__(self):
        r = self.ctx.field.reduce
        return OreSeries(self.ctx, [tuple(r(-a) for a in u) for u in self.coords], self.trunc)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return series_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, OreSeries):
            return NotImplemented
        return self.ctx is other.ctx and self.trunc == other.trunc and self.coords == other.coords

    def __hash__(self):
        return hash((id(self.ctx), self.trunc, self.coords))

    def __str__(self):
        body = str(self.to_poly())
        return f"{body} + O(x^{self.trunc})"


def series_mul(f: OreSeries, g: OreSeries) -> OreSeries:
    f._same(g)
    ctx, T = f.ctx, f.trunc
    A = ctx.algebra
    r = ctx.field.reduce
    acc = [[0] * A.dim for _ in range(T)]
    for j, b in enumerate(g.coords):
        if not any(b):
            continue
        bel = AlgebraElement(A, b)
        for i, a in enumerate(f.coords):
            if not any(a):
                continue
            # x^i b contributes to powers j..j+i
            xb = x_pow_times(ctx, bel, i).coords
            for k, c in enumerate(xb):
                if k + j >= T:
                    break
                if any(c):
                    row = acc[k + j]
                    for t, v in enumerate(A.mul_coords(a, c)):
                        row[t] += v
    return OreSeries(ctx, [tuple(r(x) for x in row) for row in acc], T)


def _as_series(r, trunc):
    if isinstance(r, OreSeries):
        if trunc is not None and trunc != r.trunc:
            raise TruncationMismatch(f"T={r.trunc} vs T={trunc}")
        return r
    return OreSeries.from_poly(r, trunc if trunc is not None else DEFAULT_TRUNC)


def quasi_inverse(r, trunc: int | None = None) -> OreSeries:
    """``s = sum_{i>=1} (-r)^i`` modulo x^T, so that ``r + s + r s = 0``.

    Each new term is ``(-r)`` times the previous one.  Left multiplication
    by ``-r`` is a linear operator on the (dim * T)-dimensional truncated
    space; if the terms have not died out after that many steps they never
    will, and :class:`NonconvergentConstantTerm` is raised.
    """
    rs = _as_series(r, trunc)
    ctx, T = rs.ctx, rs.trunc
    neg = -rs
    term = neg
    total = neg
    cap = ctx.dim * T + 1
    for _ in range(cap):
        term = series_mul(neg, term)
        if term.is_zero():
            return total
        total = total + term
    raise NonconvergentConstantTerm(
        f"geometric series for the quasi-inverse does not terminate mod x^{T} on {ctx.name}"
    )


def quasi_inverse_linear(r, trunc: int | None = None) -> OreSeries:
    """Second, independent route: solve ``s + r s = -r`` power by power.

    The system is block lower triangular in the power of x.  The diagonal
    block ``c -> c + sum_l r_l delta^l(c)`` is the same at every power; the
    off-diagonal contributions are obtained from :func:`mul_naive`.
    """
    rs = _as_series(r, trunc)
    ctx, T = rs.ctx, rs.trunc
    A, F = ctx.algebra, ctx.field
    rpoly = rs.to_poly()
    n = A.dim
    cols = []
    for b in range(n):
        e = A.basis(b).coords
        v = list(e)
        for l, rl in enumerate(rpoly.coords):
            if any(rl):
                for t, x in enumerate(A.mul_coords(rl, ctx.delta_pow(l).apply(e))):
                    v[t] += x
        cols.append([F.reduce(x) for x in v])
    block = [[cols[j][i] for j in range(n)] for i in range(n)]
    try:
        block_inv = linalg.inverse(F, block)
    except SingularSystem:
        raise SingularSystem(f"1 + r is not invertible on the constant block ({ctx.name})") from None
    rhs = [[F.reduce(-x) for x in c] for c in rs.coords]
    s = []
    for k in range(T):
        sk = tuple(linalg.matvec(F, block_inv, rhs[k]))
        s.append(sk)
        if any(sk):
            contrib = mul_naive(rpoly, OrePoly(ctx, [(F.zero,) * n] * k + [sk]))
            for p in range(k + 1, min(T, len(contrib.coords))):
                rhs[p] = [F.reduce(a - b) for a, b in zip(rhs[p], contrib.coords[p])]
    return OreSeries(ctx, s, T)


@dataclass(frozen=True)
class QuasiCheck:
    ok: bool
    power: int | None = None
    coefficient: str | None = None

    def __bool__(self):
        return self.ok


def quasi_check(r, s) -> QuasiCheck:
    """Is ``r + s + r s == 0`` modulo x^T?  On failure report the lowest bad power."""
    s = _as_series(s, None) if not isinstance(s, OreSeries) else s
    rs = _as_series(r, s.trunc)
    rs._same(s)
    total = rs + s + series_mul(rs, s)
    for k, c in enumerate(total.coords):
        if any(c):
            return QuasiCheck(False, k, str(AlgebraElement(rs.ctx.algebra, c)))
    return QuasiCheck(True)


def detect_polynomial(s: OreSeries, guard: int):
    """Degree of ``s`` if its top ``guard`` coefficients vanish, else None.

    Certification holds only up to the truncation order.  The zero series
    returns ``MINUS_INFINITY``.
    """
    if guard < 0 or guard >= s.trunc:
        raise GuardExceedsTruncation(f"guard {guard} must lie in [0, {s.trunc})")
    head = s.trunc - guard
    if any(any(c) for c in s.coords[head:]):
        return None
    for k in range(head - 1, -1, -1):
        if any(s.coords[k]):
            return k
    return MINUS_INFINITY
