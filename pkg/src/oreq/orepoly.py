"""Skew polynomials ``sum a_i x^i`` (left coefficients) over an OreContext.

Two multipliers are provided and must agree exactly:

* :func:`mul_naive` pushes one ``x`` at a time past a coefficient using
  ``x r = sigma(r) x + delta(r)``.  It never looks at q and is the
  reference for every other product in the package.
* :func:`mul_goodearl` uses the closed form
  ``x^n a = sum_i [n choose i]_q sigma^i delta^(n-i)(a) x^i``, with the
  coefficient maps cached on the context.
"""

from __future__ import annotations

from .errors import ContextMismatch, RingMismatch
from .rings import AlgebraElement, OreContext

__all__ = [
    "MINUS_INFINITY",
    "OrePoly",
    "poly_add",
    "x_pow_times",
    "mul_naive",
    "mul_goodearl",
    "delta_pow_product",
    "iterated_expand",
    "coeff_at",
    "truncate",
]


class _MinusInfinity:
    """Degree of the zero polynomial.  Absorbs addition, below every int."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "-inf"

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("-inf")


MINUS_INFINITY = _MinusInfinity()


def _trim(cs):
    cs = list(cs)
    while cs and not any(cs[-1]):
        cs.pop()
    return tuple(cs)


class OrePoly:
    """Immutable skew polynomial; ``coords[k]`` is the raw coordinate tuple of the x^k coefficient."""

    __slots__ = ("ctx", "coords")

    def __init__(self, ctx: OreContext, coords):
        self.ctx = ctx
        self.coords = _trim(coords)

    @classmethod
    def from_coeffs(cls, ctx: OreContext, coeffs) -> OrePoly:
        out = []
        for c in coeffs:
            if c.algebra is not ctx.algebra:
                raise RingMismatch(f"coefficient from {c.algebra.name} in {ctx.name}")
            out.append(c.coords)
        return cls(ctx, out)

    @classmethod
    def monomial(cls, ctx: OreContext, a: AlgebraElement, k: int = 0) -> OrePoly:
        zero = ctx.algebra.zero().coords
        return cls.from_coeffs(ctx, []) if a.is_zero() else cls(ctx, [zero] * k + [a.coords])

    @classmethod
    def zero(cls, ctx: OreContext) -> OrePoly:
        return cls(ctx, ())

    @property
    def degree(self):
        return len(self.coords) - 1 if self.coords else MINUS_INFINITY

    @property
    def coeffs(self):
        A = self.ctx.algebra
        return tuple(AlgebraElement(A, c) for c in self.coords)

    def coeff(self, k: int) -> AlgebraElement:
        A = self.ctx.algebra
        if 0 <= k < len(self.coords):
            return AlgebraElement(A, self.coords[k])
        return A.zero()

    def is_zero(self) -> bool:
        return not self.coords

    def _same(self, other):
        if not isinstance(other, OrePoly):
            return False
        if other.ctx is not self.ctx:
            raise ContextMismatch(f"{self.ctx.name} vs {other.ctx.name}")
        return True

    def __add__(self, other):
        if not self._same(other):
            return NotImplemented
        return poly_add(self, other)

    def __neg__(self):
        r = self.ctx.field.reduce
        return OrePoly(self.ctx, [tuple(r(-x) for x in c) for c in self.coords])

    def __sub__(self, other):
        if not self._same(other):
            return NotImplemented
        return poly_add(self, -other)

    def scale(self, c) -> OrePoly:
        """Multiply every coefficient by the raw scalar ``c``."""
        r = self.ctx.field.reduce
        return OrePoly(self.ctx, [tuple(r(c * x) for x in cs) for cs in self.coords])

    def __mul__(self, other):
        if not self._same(other):
            return NotImplemented
        return mul_goodearl(self, other)

    def __pow__(self, m: int):
        if m < 1:
            raise ValueError("only positive powers (R may lack a unit)")
        out = self
        for _ in range(m - 1):
            out = mul_goodearl(self, out)
        return out

    def __eq__(self, other):
        if not isinstance(other, OrePoly):
            return NotImplemented
        return self.ctx is other.ctx and self.coords == other.coords

    def __hash__(self):
        return hash((id(self.ctx), self.coords))

    def __str__(self):
        parts = []
        for k in range(len(self.coords) - 1, -1, -1):
            c = self.coeff(k)
            if c.is_zero():
                continue
            cs = str(c)
            single = len(c.terms()) == 1
            neg = single and cs.startswith("-")
            body = cs[1:] if neg else cs
            if k:
                mono = "x" if k == 1 else f"x^{k}"
                if body == "1":
                    body = mono
                else:
                    body = f"{body}*{mono}" if single else f"({body})*{mono}"
            parts.append(("-" if neg else "+", body))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"<OrePoly {self.ctx.name}: {self}>"


def _check_pair(f: OrePoly, g: OrePoly):
    if f.ctx is not g.ctx:
        raise ContextMismatch(f"{f.ctx.name} vs {g.ctx.name}")


def _check_elem(ctx: OreContext, a: AlgebraElement):
    if a.algebra is not ctx.algebra:
        raise ContextMismatch(f"element of {a.algebra.name} used with {ctx.name}")


def _accumulate(F, dim, acc, k, coords):
    row = acc.get(k)
    if row is None:
        acc[k] = list(coords)
    else:
        for t in range(dim):
            row[t] += coords[t]


def _from_acc(ctx, acc):
    if not acc:
        return OrePoly.zero(ctx)
    r = ctx.field.reduce
    top = max(acc)
    zero = (ctx.field.zero,) * ctx.dim
    return OrePoly(ctx, [tuple(r(x) for x in acc[k]) if k in acc else zero for k in range(top + 1)])


def poly_add(f: OrePoly, g: OrePoly) -> OrePoly:
    _check_pair(f, g)
    r = f.ctx.field.reduce
    a, b = f.coords, g.coords
    if len(a) < len(b):
        a, b = b, a
    out = [tuple(r(x + y) for x, y in zip(ca, b[k])) if k < len(b) else ca for k, ca in enumerate(a)]
    return OrePoly(f.ctx, out)


def coeff_at(f: OrePoly, k: int) -> AlgebraElement:
    """Left coefficient of x^k; zero beyond the degree."""
    return f.coeff(k)


def truncate(f: OrePoly, top: int) -> OrePoly:
    """Drop every power above ``top``."""
    return OrePoly(f.ctx, f.coords[: top + 1])


def x_pow_times(ctx: OreContext, a: AlgebraElement, n: int) -> OrePoly:
    """``x^n a`` in normal form via the q-binomial closed form."""
    _check_elem(ctx, a)
    if n < 0:
        raise ValueError("n must be nonnegative")
    return OrePoly(ctx, [ctx.goodearl_map(n, i).apply(a.coords) for i in range(n + 1)])


def _push_x(ctx, coords):
    """x * (sum c_l x^l) = sum sigma(c_l) x^(l+1) + delta(c_l) x^l."""
    r = ctx.field.reduce
    sig, dlt = ctx.sigma, ctx.delta
    out = [None] * (len(coords) + 1)
    out[0] = dlt.apply(coords[0])
    for l in range(1, len(coords)):
        s = sig.apply(coords[l - 1])
        d = dlt.apply(coords[l])
        out[l] = tuple(r(u + v) for u, v in zip(s, d))
    out[len(coords)] = sig.apply(coords[-1])
    return out


def mul_naive(f: OrePoly, g: OrePoly) -> OrePoly:
    """Product by repeated application of the one-step rule ``x r = sigma(r) x + delta(r)``."""
    _check_pair(f, g)
    ctx = f.ctx
    if f.is_zero() or g.is_zero():
        return OrePoly.zero(ctx)
    A, F = ctx.algebra, ctx.field
    dim = A.dim
    top = len(f.coords) - 1
    acc = {}
    for j, b in enumerate(g.coords):
        if not any(b):
            continue
        pushed = [b]  # x^k b, as a list of coordinate tuples by power
        for k, a in enumerate(f.coords):
            if k:
                pushed = _push_x(ctx, pushed)
            if not any(a):
                continue
            for i, c in enumerate(pushed):
                if any(c):
                    _accumulate(F, dim, acc, i + j, A.mul_coords(a, c))
            if k == top:
                break
    return _from_acc(ctx, acc)


def mul_goodearl(f: OrePoly, g: OrePoly) -> OrePoly:
    """Product assembled from the closed form for ``x^i b``."""
    _check_pair(f, g)
    ctx = f.ctx
    if f.is_zero() or g.is_zero():
        return OrePoly.zero(ctx)
    A, F = ctx.algebra, ctx.field
    dim = A.dim
    acc = {}
    for j, b in enumerate(g.coords):
        if not any(b):
            continue
        for i, a in enumerate(f.coords):
            if not any(a):
                continue
            for k in range(i + 1):
                c = ctx.goodearl_map(i, k).apply(b)
                if any(c):
                    _accumulate(F, dim, acc, k + j, A.mul_coords(a, c))
    return _from_acc(ctx, acc)


def delta_pow_product(ctx: OreContext, a: AlgebraElement, b: AlgebraElement, n: int) -> AlgebraElement:
    """Right-hand side of ``delta^n(ab) = sum_i [n i]_q sigma^(n-i) delta^i(a) delta^(n-i)(b)``."""
    from .qbinom import qbinom_raw

    _check_elem(ctx, a)
    _check_elem(ctx, b)
    A, F = ctx.algebra, ctx.field
    acc = [0] * A.dim
    for i in range(n + 1):
        left = (ctx.sigma_pow(n - i) @ ctx.delta_pow(i)).apply(a.coords)
        right = ctx.delta_pow(n - i).apply(b.coords)
        c = qbinom_raw(F, n, i, ctx.q)
        for t, v in enumerate(A.mul_coords(left, right)):
            acc[t] += c * v
    return A.element(acc)


def iterated_expand(ctx: OreContext, a: AlgebraElement, n: int, m: int, upto: int | None = None) -> OrePoly:
    """``(a x^n)^m`` from the nested ``a F_i(a F_i(... a))`` expansion.

    ``F_i = [n i]_q sigma^i delta^(n-i)``.  Index tuples are grouped by
    their partial sum, so the cost is polynomial in m rather than
    ``(n+1)^(m-1)``.  With ``upto`` set, powers above it are discarded
    (exact, since left factors never lower the power of x).
    """
    _check_elem(ctx, a)
    if m < 1:
        raise ValueError("m must be >= 1")
    A, F = ctx.algebra, ctx.field
    r = F.reduce
    limit = None if upto is None else upto - n
    maps = [ctx.goodearl_map(n, i) for i in range(n + 1)]
    # level[s] = sum over (i_1..i_j) with i_1+..+i_j = s of a F_(i_j)(... a F_(i_1)(a))
    level = {0: a.coords}
    for _ in range(m - 1):
        nxt = {}
        for s, c in level.items():
            for i, M in enumerate(maps):
                if limit is not None and s + i > limit:
                    break
                v = M.apply(c)
                if not any(v):
                    continue
                _accumulate(F, A.dim, nxt, s + i, A.mul_coords(a.coords, v))
        level = {s: tuple(r(x) for x in c) for s, c in nxt.items() if any(r(x) for x in c)}
        if not level:
            break
    if limit is not None and limit < 0:
        level = {}
    return _from_acc(ctx, {s + n: c for s, c in level.items()})
