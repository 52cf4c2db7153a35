import random

import pytest
from hypothesis import given, strategies as st

from conftest import REGISTRY, ring
from oreq.errors import GuardExceedsTruncation, NonconvergentConstantTerm, TruncationMismatch
from oreq.expr import evaluate, parse_expression
from oreq.orepoly import MINUS_INFINITY, OrePoly
from oreq.oreseries import OreSeries, detect_polynomial, quasi_check, quasi_inverse, quasi_inverse_linear, series_mul


def P(ctx, text):
    return evaluate(parse_expression(text), ctx)


def test_zero_cases(qp):
    z = OreSeries.from_poly(OrePoly.zero(qp), 10)
    assert quasi_inverse(z).is_zero()
    assert quasi_check(z, z).ok
    assert detect_polynomial(z, 3) is MINUS_INFINITY
    f = OreSeries.from_poly(P(qp, "y*x"), 10)
    assert series_mul(f, z).is_zero()


def test_square_zero_collapses(nilq):
    r = P(nilq, "y^3*x^3")  # y^3 times anything of y-degree >= 1 vanishes
    rs = OreSeries.from_poly(r, 20)
    assert series_mul(rs, rs).is_zero()
    s = quasi_inverse(r, 20)
    assert s == -rs
    assert detect_polynomial(s, 5) == 3


def test_qp_example(qp):
    r = P(qp, "y*x^3")
    s = quasi_inverse(r, 20)
    assert quasi_check(r, s).ok
    assert s == quasi_inverse_linear(r, 20)


def test_quasi_check_witness(truncq3):
    r = P(truncq3, "y*x")
    res = quasi_check(r, OreSeries.from_poly(-r, 24))
    assert not res.ok
    # r + s + r s = -r^2 = -(y^2 x^2 + y x); lowest surviving power is 1
    assert (res.power, res.coefficient) == (1, "-y")


def test_constant_unit_is_nonconvergent(qp):
    with pytest.raises(NonconvergentConstantTerm):
        quasi_inverse(P(qp, "1"), 8)


def test_detect_polynomial_guard(qp):
    s = OreSeries.from_poly(P(qp, "y*x^7"), 10)
    assert detect_polynomial(s, 2) == 7
    assert detect_polynomial(s, 3) is None
    with pytest.raises(GuardExceedsTruncation):
        detect_polynomial(s, 10)


def test_truncation_mismatch(qp):
    with pytest.raises(TruncationMismatch):
        OreSeries.from_poly(P(qp, "x"), 5) + OreSeries.from_poly(P(qp, "x"), 6)


def _random_r(ctx, rng):
    from oreq.orepoly import OrePoly
    from oreq.rings import nildeg, random_scalar

    a = ctx.algebra.random_element(rng)
    n = nildeg(ctx, a) + rng.randint(1, 3)
    return OrePoly.monomial(ctx, a.scale(random_scalar(ctx.field, rng)), n)


@pytest.mark.parametrize("spec", REGISTRY)
@given(seed=st.integers(0, 10**6))
def test_quasi_inverse_properties(spec, seed):
    ctx = ring(spec)
    r = _random_r(ctx, random.Random(seed))
    s = quasi_inverse(r, 16)
    assert quasi_check(r, s).ok
    assert s == quasi_inverse_linear(r, 16)
    # truncation consistency
    longer = quasi_inverse(r, 24)
    assert longer.coords[:16] == s.coords


@pytest.mark.parametrize("spec", ("QP:5,4,2", "NILQ:5,4,2", "NILQ:7,5,3"))
@given(seed=st.integers(0, 10**6))
def test_two_sided_on_valid_rings(spec, seed):
    # needs an associative series ring, i.e. a genuine sigma-derivation
    ctx = ring(spec)
    r = _random_r(ctx, random.Random(seed))
    s = quasi_inverse(r, 16)
    rs = OreSeries.from_poly(r, 16)
    assert (series_mul(s, rs) + s + rs).is_zero()
