import random

import pytest
from hypothesis import given, strategies as st

from conftest import ring
from oreq.errors import BadBoundInputs, NoVanishingD, SingularSystem
from oreq.expr import evaluate_element, parse_expression
from oreq.harness import (
    LEMMA_IDS,
    check_coefficient_vanishing,
    check_main_lemma,
    check_nildeg_bounds,
    certified_degree,
    find_vanishing_d,
    inject_delta_fault,
    lemma_suite,
    mexists_bound,
    nil_witness,
    product_chain,
    vandermonde_eval,
    vandermonde_solve,
)
from oreq.scalars import GF, QQ


def el(ctx, text):
    return evaluate_element(parse_expression(text), ctx)


def test_mexists_bound():
    assert mexists_bound(2, 5, 3) == 5
    assert mexists_bound(3, 4, 1) == 4
    assert all(mexists_bound(d, 7, 0) == d for d in range(1, 6))
    for bad in ((0, 3, 1), (2, 3, 3), (2, 3, -1)):
        with pytest.raises(BadBoundInputs):
            mexists_bound(*bad)


def test_product_chain_examples(qp):
    y = el(qp, "y")
    assert product_chain(qp, y, 4, 1) == y
    assert product_chain(qp, y, 4, 3).is_zero()
    t = ring("TRUNCQ:4")
    a = el(t, "1 + y")
    assert product_chain(t, a, 3, 3) == a * a * a


def test_find_vanishing_d(qp):
    assert find_vanishing_d(qp, el(qp, "y"), 4, 5) == 3
    assert find_vanishing_d(qp, qp.algebra.one(), 4, 10) is None
    assert find_vanishing_d(qp, qp.algebra.zero(), 4, 3) == 1


def test_nil_witness_examples(qp, nilq):
    c = nil_witness(nilq, el(nilq, "y"))
    assert c.d <= 4 and c.replay()
    assert c.n % c.tordeg == 0 and c.n > c.nildeg
    z = nil_witness(qp, qp.algebra.zero())
    assert z.d == 1
    with pytest.raises(NoVanishingD):
        nil_witness(qp, qp.algebra.one())


def test_nil_witness_respects_t(nilq):
    c = nil_witness(nilq, el(nilq, "y + y^2"), t=9)
    assert c.n >= 9 and c.n % c.tordeg == 0


def test_vandermonde_examples():
    F = GF(5)
    lams = [F.scalar(1), F.scalar(2)]
    c = vandermonde_solve(lams, [F.scalar(3), F.scalar(4)], 1, 2)
    assert [vandermonde_eval(c, 1, l) for l in lams] == [F.scalar(3), F.scalar(4)]
    assert vandermonde_solve([QQ.scalar(1)], [QQ.scalar(7)], 0, 0) == [QQ.scalar(7)]
    zero = vandermonde_solve([QQ.scalar(k) for k in (2, 3, 5)], [QQ.scalar(0)] * 3, 1, 3)
    assert all(v == QQ.scalar(0) for v in zero)


def test_vandermonde_singular():
    with pytest.raises(SingularSystem):
        vandermonde_solve([QQ.scalar(2), QQ.scalar(2)], [QQ.scalar(1)] * 2, 0, 1)
    with pytest.raises(SingularSystem):
        vandermonde_solve([QQ.scalar(2)], [QQ.scalar(1)], 0, 1)


@given(st.integers(0, 10**6), st.integers(0, 3), st.integers(0, 4))
def test_vandermonde_random_qq(seed, lo, width):
    rng = random.Random(seed)
    k = width + 1
    lams = [QQ.scalar(x) for x in rng.sample(range(1, 40), k)]
    coeffs = [QQ.scalar(rng.randint(-9, 9)) for _ in range(k)]
    vals = [vandermonde_eval(coeffs, lo, l) for l in lams]
    assert vandermonde_solve(lams, vals, lo, lo + width) == coeffs


def test_coefficient_vanishing_examples(qp, nilq):
    assert check_coefficient_vanishing(qp, qp.algebra.zero(), 3, 2).passed
    y = el(qp, "y")
    deg, _ = certified_degree(qp, y, 3)
    d = 1 if deg is None else deg + 1
    assert check_coefficient_vanishing(qp, y, 3, d).passed
    # nildeg(y) = 3 here, so n must be at least 4
    with pytest.raises(BadBoundInputs):
        check_coefficient_vanishing(nilq, el(nilq, "y"), 2, 4)
    assert check_coefficient_vanishing(nilq, el(nilq, "y"), 4, 4).passed


def test_main_lemma_large_prime():
    ctx = ring("NILQ:101,4,10")
    rep = check_main_lemma(ctx, el(ctx, "y"), 4)
    assert rep.passed is True and rep.trials > 0


def test_nildeg_bounds_report(qp_valid, nilq):
    for ctx in (qp_valid, nilq):
        assert check_nildeg_bounds(ctx, trials=50).passed


def test_nildeg_bound_example(qp):
    # nildeg(delta^2(y^2)) = nildeg(3) = 1 <= max(0, 3 - 2)
    from oreq.rings import nildeg
    assert nildeg(qp, qp.delta_el(el(qp, "y^2"), 2)) == 1


@pytest.mark.parametrize("spec", ("NILQ:5,4,2", "QP:5,4,2", "NILQ:7,5,3"))
def test_suite_passes_on_valid_rings(spec):
    rep = lemma_suite(ring(spec), seed=42, trials=8)
    assert rep.passed, rep.failed_ids()
    assert [r.lemma_id for r in rep.reports] == list(LEMMA_IDS)


@pytest.mark.parametrize("spec", ("QP:5,3,2", "TRUNCQ:4"))
def test_suite_flags_broken_derivation(spec):
    rep = lemma_suite(ring(spec), seed=42, trials=8)
    assert rep.failed_ids() == ["leibniz"]
    assert rep.exit_status == 1
    assert all(r.passed is None for r in rep.reports[3:])


def test_suite_deterministic(nilq):
    a = [r.to_dict() for r in lemma_suite(nilq, seed=7, trials=5).reports]
    b = [r.to_dict() for r in lemma_suite(nilq, seed=7, trials=5).reports]
    assert a == b
    assert all(r["millis"] is None for r in a)


def test_suite_fault_injection(qp_valid):
    rep = lemma_suite(inject_delta_fault(qp_valid), seed=42, trials=8)
    assert rep.failed_ids() == ["leibniz"]
    assert rep.reports[1].witnesses


def test_suite_only(nilq):
    rep = lemma_suite(nilq, seed=1, only="vandermonde")
    assert [r.lemma_id for r in rep.reports] == ["vandermonde"]
    with pytest.raises(ValueError):
        lemma_suite(nilq, only="nope")
