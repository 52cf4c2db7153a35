"""Finite-dimensional base algebras R together with their (sigma, delta, q) data.

An :class:`Algebra` is given by structure constants on a monomial basis.  An
:class:`OreContext` adds an automorphism sigma and a sigma-derivation delta,
both as basis matrices, plus the scalar q of the relation
``q * sigma o delta == delta o sigma``.

Three families are built in (see :class:`RingSpec`):

``QP:p,m,q``
    F_p[y]/(y^m), sigma(y^j) = q^j y^j, delta(y^j) = [j]_q y^(j-1).
``TRUNCQ:m``
    Q[y]/(y^m), sigma = id, delta = d/dy, q = 1.
``NILQ:p,m,q``
    the non-unital y F_p[y]/(y^m), sigma(y^j) = q^j y^j,
    delta(y^j) = [j]_q y^(j+1); its skew parameter is q^-1.

The lowering derivation of QP and TRUNCQ only respects the relation y^m = 0
when [m]_q vanishes in the field (for QP: q^m = 1, q != 1; never for
TRUNCQ with m >= 2).  :func:`check_context` detects the failure and reports
the offending basis pair; contexts are still constructed so they can be
studied.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct

from . import linalg
from .errors import CapExceeded, RingMismatch, SingularSystem
from .scalars import GF, QQ, Field, Scalar

__all__ = [
    "Algebra",
    "AlgebraElement",
    "LinearMap",
    "OreContext",
    "RingSpec",
    "ContextReport",
    "AxiomResult",
    "quantum_plane",
    "truncq",
    "nilq",
    "ring_arith",
    "sigma_apply",
    "delta_apply",
    "check_context",
    "nildeg",
    "tordeg",
    "random_scalar",
]


def random_scalar(F: Field, rng: random.Random, nonzero: bool = False):
    """Uniform over GF(p); bounded numerator/denominator over Q."""
    while True:
        if F.p is None:
            v = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        else:
            v = rng.randrange(F.p)
        if not (nonzero and v == 0):
            return v


class Algebra:
    """Associative algebra on a basis ``e_0..e_{dim-1}``.

    ``products[i][j]`` lists the nonzero ``(k, c)`` with
    ``e_i e_j = sum c e_k``.
    """

    def __init__(self, name, field, basis_names, products, unit_index=None, gen_index=None):
        self.name = name
        self.field = field
        self.basis_names = tuple(basis_names)
        self.dim = len(self.basis_names)
        self.products = products
        self.unit_index = unit_index
        self.gen_index = gen_index

    def __repr__(self):
        return f"Algebra({self.name})"

    # raw coordinate arithmetic
    def mul_coords(self, u, v):
        F = self.field
        acc = [0] * self.dim
        nz_v = [(j, b) for j, b in enumerate(v) if b != 0]
        for i, a in enumerate(u):
            if a == 0:
                continue
            row = self.products[i]
            for j, b in nz_v:
                for k, c in row[j]:
                    acc[k] += a * b * c
        return tuple(F.reduce(x) for x in acc)

    def element(self, coords) -> AlgebraElement:
        F = self.field
        coords = tuple(F.reduce(c) for c in coords)
        if len(coords) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(coords)}")
        return AlgebraElement(self, coords)

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, (self.field.zero,) * self.dim)

    def basis(self, i: int) -> AlgebraElement:
        F = self.field
        return AlgebraElement(self, tuple(F.one if k == i else F.zero for k in range(self.dim)))

    def basis_elements(self):
        return [self.basis(i) for i in range(self.dim)]

    def one(self) -> AlgebraElement:
        if self.unit_index is None:
            raise RingMismatch(f"{self.name} has no unit")
        return self.basis(self.unit_index)

    def gen(self) -> AlgebraElement:
        if self.gen_index is None:
            raise RingMismatch(f"{self.name} has no generator y")
        return self.basis(self.gen_index)

    def random_element(self, rng: random.Random) -> AlgebraElement:
        return AlgebraElement(self, tuple(random_scalar(self.field, rng) for _ in range(self.dim)))

    def elements(self):
        """Every element of the algebra (finite fields only)."""
        values = list(self.field.elements())
        for coords in iproduct(values, repeat=self.dim):
            yield AlgebraElement(self, coords)


class AlgebraElement:
    """Immutable element of an :class:`Algebra`, stored as raw coordinates."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: Algebra, coords: tuple):
        self.algebra = algebra
        self.coords = coords

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def scalars(self):
        return tuple(Scalar(self.field, c) for c in self.coords)

    def _check(self, other):
        if not isinstance(other, AlgebraElement):
            return False
        if other.algebra is not self.algebra:
            raise RingMismatch(f"{self.algebra.name} vs {other.algebra.name}")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        r = self.field.reduce
        return AlgebraElement(self.algebra, tuple(r(a + b) for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        r = self.field.reduce
        return AlgebraElement(self.algebra, tuple(r(a - b) for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        r = self.field.reduce
        return AlgebraElement(self.algebra, tuple(r(-a) for a in self.coords))

    def scale(self, c) -> AlgebraElement:
        """Multiply by a raw field value."""
        r = self.field.reduce
        return AlgebraElement(self.algebra, tuple(r(c * a) for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check(other)
            return AlgebraElement(self.algebra, self.algebra.mul_coords(self.coords, other.coords))
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise RingMismatch("scalar from a different field")
            return self.scale(other.value)
        if isinstance(other, (int, Fraction)):
            return self.scale(self.field.from_fraction(Fraction(other)))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 1:
            if k == 0:
                return self.algebra.one()
            raise ValueError("negative power")
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra is other.algebra and self.coords == other.coords

    def __hash__(self):
        return hash((id(self.algebra), self.coords))

    def terms(self):
        """Nonzero ``(basis_index, raw_coeff)`` pairs, highest basis index first."""
        return [(i, c) for i, c in reversed(list(enumerate(self.coords))) if c != 0]

    def __str__(self):
        F = self.field
        names = self.algebra.basis_names
        parts = []
        for i, c in self.terms():
            name = names[i]
            s = F.format(c)
            neg = s.startswith("-")
            mag = s[1:] if neg else s
            if name == "1":
                body = mag
            elif mag == "1":
                body = name
            else:
                body = f"{mag}*{name}"
            parts.append(("-" if neg else "+", body))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"<{self.algebra.name}: {self}>"


class LinearMap:
    """Square matrix acting on coordinate tuples; ``rows[i][j]`` = coeff of e_i in f(e_j)."""

    __slots__ = ("field", "rows", "_nz")

    def __init__(self, F: Field, rows):
        self.field = F
        self.rows = tuple(tuple(F.reduce(x) for x in r) for r in rows)
        self._nz = tuple(tuple((j, c) for j, c in enumerate(r) if c != 0) for r in self.rows)

    @classmethod
    def from_images(cls, F, images):
        """Build from the list of column vectors f(e_j)."""
        n = len(images)
        return cls(F, [[images[j][i] for j in range(n)] for i in range(n)])

    @property
    def dim(self):
        return len(self.rows)

    def apply(self, coords):
        r = self.field.reduce
        return tuple(r(sum(c * coords[j] for j, c in nz)) for nz in self._nz)

    def __matmul__(self, other: LinearMap) -> LinearMap:
        return LinearMap(self.field, linalg.matmul(self.field, self.rows, other.rows))

    def scaled(self, c) -> LinearMap:
        return LinearMap(self.field, [[c * x for x in r] for r in self.rows])

    def __add__(self, other: LinearMap) -> LinearMap:
        return LinearMap(self.field, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def inverse(self) -> LinearMap:
        return LinearMap(self.field, linalg.inverse(self.field, [list(r) for r in self.rows]))

    def is_zero(self):
        return not any(self._nz)

    def __eq__(self, other):
        return isinstance(other, LinearMap) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    @classmethod
    def identity(cls, F, n):
        return cls(F, linalg.identity(F, n))


class OreContext:
    """A base algebra with (sigma, delta, q).  Treated as immutable.

    ``q`` is the raw scalar with ``q * sigma delta == delta sigma``.
    Powers of sigma and delta are cached on first use.
    """

    def __init__(self, algebra: Algebra, sigma: LinearMap, delta: LinearMap, q, name=None,
                 nildeg_cap=None, tordeg_cap=None):
        F = algebra.field
        self.algebra = algebra
        self.field = F
        self.sigma = sigma
        self.delta = delta
        self.q = F.reduce(q)
        if self.q == 0:
            raise ValueError("q must be nonzero")
        self.name = name or algebra.name
        self.nildeg_cap = nildeg_cap if nildeg_cap is not None else 4 * algebra.dim
        self.tordeg_cap = tordeg_cap if tordeg_cap is not None else 4 * algebra.dim
        n = algebra.dim
        self._sigma_pows = {0: LinearMap.identity(F, n), 1: sigma}
        self._delta_pows = {0: LinearMap.identity(F, n), 1: delta}
        self._goodearl = {}
        self._unitization = None

    def __repr__(self):
        return f"OreContext({self.name})"

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def q_scalar(self) -> Scalar:
        return Scalar(self.field, self.q)

    def replace(self, sigma=None, delta=None, q=None, name=None) -> OreContext:
        """A new context over the same algebra with some data swapped out."""
        return OreContext(
            self.algebra,
            sigma if sigma is not None else self.sigma,
            delta if delta is not None else self.delta,
            q if q is not None else self.q,
            name=name or self.name,
            nildeg_cap=self.nildeg_cap,
            tordeg_cap=self.tordeg_cap,
        )

    def sigma_pow(self, k: int) -> LinearMap:
        M = self._sigma_pows.get(k)
        if M is None:
            if k < 0:
                if -1 not in self._sigma_pows:
                    try:
                        self._sigma_pows[-1] = self.sigma.inverse()
                    except SingularSystem:
                        raise SingularSystem(f"sigma is not invertible on {self.name}") from None
                M = self._sigma_pows[-1] if k == -1 else self.sigma_pow(k + 1) @ self._sigma_pows[-1]
            else:
                M = self.sigma_pow(k - 1) @ self.sigma
            self._sigma_pows[k] = M
        return M

    def delta_pow(self, k: int) -> LinearMap:
        if k < 0:
            raise ValueError("delta powers must be nonnegative")
        M = self._delta_pows.get(k)
        if M is None:
            M = self.delta_pow(k - 1) @ self.delta
            self._delta_pows[k] = M
        return M

    def goodearl_map(self, n: int, i: int) -> LinearMap:
        """``[n choose i]_q * sigma^i delta^(n-i)``, the coefficient map of x^i in x^n a."""
        from .qbinom import qbinom_raw

        key = (n, i)
        M = self._goodearl.get(key)
        if M is None:
            c = qbinom_raw(self.field, n, i, self.q)
            M = (self.sigma_pow(i) @ self.delta_pow(n - i)).scaled(c)
            self._goodearl[key] = M
        return M

    def sigma_el(self, a: AlgebraElement, k: int = 1) -> AlgebraElement:
        return AlgebraElement(self.algebra, self.sigma_pow(k).apply(a.coords))

    def delta_el(self, a: AlgebraElement, k: int = 1) -> AlgebraElement:
        return AlgebraElement(self.algebra, self.delta_pow(k).apply(a.coords))

    def unitization(self):
        """``(ctx1, embed, project)`` adjoining a unit when R has none.

        ``embed`` maps elements of R into the unitization and ``project``
        maps back, raising :class:`RingMismatch` if a unit component remains.
        Unital algebras return themselves with identity maps.
        """
        if self.algebra.unit_index is not None:
            return self, (lambda a: a), (lambda a: a)
        if self._unitization is None:
            self._unitization = _unitize(self)
        return self._unitization


def _unitize(ctx: OreContext):
    A, F = ctx.algebra, ctx.field
    n = A.dim
    products = [[[] for _ in range(n + 1)] for _ in range(n + 1)]
    for j in range(n + 1):
        products[0][j] = [(j, F.one)]
        products[j][0] = [(j, F.one)]
    for i in range(n):
        for j in range(n):
            products[i + 1][j + 1] = [(k + 1, c) for k, c in A.products[i][j]]
    gen = None if A.gen_index is None else A.gen_index + 1
    A1 = Algebra(A.name + "+1", F, ("1",) + A.basis_names, products, unit_index=0, gen_index=gen)

    def extend(M: LinearMap, fixed_unit):
        rows = [[F.one if fixed_unit else F.zero] + [F.zero] * n]
        rows += [[F.zero] + list(r) for r in M.rows]
        return LinearMap(F, rows)

    ctx1 = OreContext(A1, extend(ctx.sigma, True), extend(ctx.delta, False), ctx.q,
                      name=ctx.name + "+1")

    def embed(a):
        return AlgebraElement(A1, (F.zero,) + tuple(a.coords))

    def project(b):
        if b.coords[0] != 0:
            raise RingMismatch(f"result has a unit component, which {ctx.name} lacks")
        return AlgebraElement(A, tuple(b.coords[1:]))

    return ctx1, embed, project


# -- registry ---------------------------------------------------------------

def _qint(F, q, j):
    """[j]_q = 1 + q + ... + q^(j-1) as a raw field value."""
    return F.reduce(sum(F.pow(q, k) for k in range(j)))


def _power_names(lo, hi):
    return ["1" if j == 0 else ("y" if j == 1 else f"y^{j}") for j in range(lo, hi)]


def _truncated_poly_algebra(name, F, m, lo):
    """Span of y^lo..y^(m-1) in F[y]/(y^m)."""
    powers = list(range(lo, m))
    index = {j: k for k, j in enumerate(powers)}
    products = [[[] for _ in powers] for _ in powers]
    for a, i in enumerate(powers):
        for b, j in enumerate(powers):
            if i + j < m:
                products[a][b] = [(index[i + j], F.one)]
    unit = index.get(0)
    gen = index.get(1)
    return Algebra(name, F, _power_names(lo, m), products, unit_index=unit, gen_index=gen), powers, index


def quantum_plane(p: int, m: int, q: int) -> OreContext:
    if m < 1:
        raise ValueError("QP needs m >= 1")
    F = GF(p)
    qq = F.reduce(q)
    if qq == 0:
        raise ValueError("q must be nonzero mod p")
    name = f"QP:{p},{m},{q}"
    A, powers, index = _truncated_poly_algebra(name, F, m, 0)
    sig, dlt = [], []
    for j in powers:
        s = [F.zero] * A.dim
        s[index[j]] = F.pow(qq, j)
        sig.append(s)
        d = [F.zero] * A.dim
        if j >= 1:
            d[index[j - 1]] = _qint(F, qq, j)
        dlt.append(d)
    return OreContext(A, LinearMap.from_images(F, sig), LinearMap.from_images(F, dlt), qq, name=name)


def truncq(m: int) -> OreContext:
    if m < 1:
        raise ValueError("TRUNCQ needs m >= 1")
    F = QQ
    name = f"TRUNCQ:{m}"
    A, powers, index = _truncated_poly_algebra(name, F, m, 0)
    dlt = []
    for j in powers:
        d = [F.zero] * A.dim
        if j >= 1:
            d[index[j - 1]] = Fraction(j)
        dlt.append(d)
    return OreContext(A, LinearMap.identity(F, A.dim), LinearMap.from_images(F, dlt), F.one, name=name)


def nilq(p: int, m: int, q: int) -> OreContext:
    if m < 2:
        raise ValueError("NILQ needs m >= 2")
    F = GF(p)
    qq = F.reduce(q)
    if qq == 0:
        raise ValueError("q must be nonzero mod p")
    name = f"NILQ:{p},{m},{q}"
    A, powers, index = _truncated_poly_algebra(name, F, m, 1)
    sig, dlt = [], []
    for j in powers:
        s = [F.zero] * A.dim
        s[index[j]] = F.pow(qq, j)
        sig.append(s)
        d = [F.zero] * A.dim
        if j + 1 < m:
            d[index[j + 1]] = _qint(F, qq, j)
        dlt.append(d)
    # delta sigma = q^-1 sigma delta here
    return OreContext(A, LinearMap.from_images(F, sig), LinearMap.from_images(F, dlt), F.inv(qq),
                      name=name)


_FAMILIES = {"QP": (quantum_plane, 3), "TRUNCQ": (truncq, 1), "NILQ": (nilq, 3)}


@dataclass(frozen=True)
class RingSpec:
    family: str
    params: tuple = field(default_factory=tuple)

    @classmethod
    def parse(cls, text: str) -> RingSpec:
        m = re.fullmatch(r"\s*([A-Za-z]+)\s*:\s*([-\d,\s]+)\s*", text)
        if m is None:
            raise ValueError(f"bad ring spec {text!r}; expected FAMILY:params, e.g. QP:5,3,2")
        family = m.group(1).upper()
        if family not in _FAMILIES:
            raise ValueError(f"unknown ring family {family!r}; known: {', '.join(_FAMILIES)}")
        params = tuple(int(x) for x in m.group(2).split(",") if x.strip())
        arity = _FAMILIES[family][1]
        if len(params) != arity:
            raise ValueError(f"{family} takes {arity} parameter(s), got {len(params)}")
        return cls(family, params)

    def build(self) -> OreContext:
        return _build_cached(self)

    def __str__(self):
        return f"{self.family}:{','.join(map(str, self.params))}"


_context_cache: dict = {}


def _build_cached(spec: RingSpec) -> OreContext:
    ctx = _context_cache.get(spec)
    if ctx is None:
        ctx = _FAMILIES[spec.family][0](*spec.params)
        _context_cache[spec] = ctx
    return ctx


# -- operations ---------------------------------------------------------------

def ring_arith(a: AlgebraElement, b, op: str) -> AlgebraElement:
    if op == "add":
        return a + b
    if op == "mul":
        if not isinstance(b, AlgebraElement):
            raise RingMismatch("mul expects two algebra elements")
        return a * b
    if op == "scalar_mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def _owned(ctx: OreContext, a: AlgebraElement):
    if a.algebra is not ctx.algebra:
        raise RingMismatch(f"element of {a.algebra.name} used with {ctx.name}")


def sigma_apply(ctx: OreContext, a: AlgebraElement, k: int = 1) -> AlgebraElement:
    _owned(ctx, a)
    return ctx.sigma_el(a, k)


def delta_apply(ctx: OreContext, a: AlgebraElement, k: int = 1) -> AlgebraElement:
    _owned(ctx, a)
    return ctx.delta_el(a, k)


def nildeg(ctx: OreContext, a: AlgebraElement) -> int:
    """Least N with delta^N(a) = 0."""
    _owned(ctx, a)
    v = a.coords
    N = 0
    while any(v):
        if N >= ctx.nildeg_cap:
            raise CapExceeded(f"delta^{N}({a}) != 0 on {ctx.name}; delta not locally nilpotent?")
        v = ctx.delta.apply(v)
        N += 1
    return N


def tordeg(ctx: OreContext, a: AlgebraElement) -> int:
    """Least m >= 1 with sigma^m(a) = a."""
    _owned(ctx, a)
    v = ctx.sigma.apply(a.coords)
    m = 1
    while v != a.coords:
        if m >= ctx.tordeg_cap:
            raise CapExceeded(f"sigma orbit of {a} exceeds {ctx.tordeg_cap} on {ctx.name}")
        v = ctx.sigma.apply(v)
        m += 1
    return m


@dataclass
class AxiomResult:
    passed: bool
    witness: dict | None = None


@dataclass
class ContextReport:
    ring: str
    trials: int
    seed: int | None
    checks: dict  # axiom name -> AxiomResult, fixed order

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.checks.values())

    def failures(self):
        return [name for name, r in self.checks.items() if not r.passed]


def _sample_pairs(A: Algebra, trials, rng):
    basis = A.basis_elements()
    for a in basis:
        for b in basis:
            yield a, b
    for _ in range(trials):
        yield A.random_element(rng), A.random_element(rng)


def check_context(ctx: OreContext, trials: int = 20, rng_seed: int | None = 0) -> ContextReport:
    """Exact verification of the Ore-datum axioms.

    All basis pairs are checked, then ``trials`` random pairs.  The first
    failing pair (basis pairs in lexicographic order come first) is kept
    as witness.
    """
    A, F = ctx.algebra, ctx.field
    checks = {}

    inv_ok = linalg.rank(F, [list(r) for r in ctx.sigma.rows]) == A.dim
    checks["sigma_invertible"] = AxiomResult(inv_ok, None if inv_ok else {"rank_deficient": True})

    def first_failure(pred):
        rng = random.Random(rng_seed)
        for a, b in _sample_pairs(A, trials, rng):
            bad = pred(a, b)
            if bad is not None:
                return bad
        return None

    def mult(a, b):
        lhs = ctx.sigma_el(a * b)
        rhs = ctx.sigma_el(a) * ctx.sigma_el(b)
        if lhs != rhs:
            return {"a": str(a), "b": str(b), "lhs": str(lhs), "rhs": str(rhs)}
        return None

    def leib(a, b):
        lhs = ctx.delta_el(a * b)
        rhs = ctx.sigma_el(a) * ctx.delta_el(b) + ctx.delta_el(a) * b
        if lhs != rhs:
            return {"a": str(a), "b": str(b), "lhs": str(lhs), "rhs": str(rhs)}
        return None

    w = first_failure(mult)
    checks["sigma_multiplicative"] = AxiomResult(w is None, w)
    w = first_failure(leib)
    checks["leibniz"] = AxiomResult(w is None, w)

    lhs = (ctx.sigma @ ctx.delta).scaled(ctx.q)
    rhs = ctx.delta @ ctx.sigma
    if lhs == rhs:
        checks["q_skew"] = AxiomResult(True)
    else:
        i, j = next((i, j) for i in range(A.dim) for j in range(A.dim) if lhs.rows[i][j] != rhs.rows[i][j])
        checks["q_skew"] = AxiomResult(False, {
            "entry": [i, j], "q_sigma_delta": F.format(lhs.rows[i][j]), "delta_sigma": F.format(rhs.rows[i][j]),
        })
    return ContextReport(ctx.name, trials, rng_seed, checks)
