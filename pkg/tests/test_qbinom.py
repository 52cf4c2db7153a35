from math import comb

import pytest
from hypothesis import given, strategies as st

from oreq.errors import ZeroInput
from oreq.qbinom import gauss_binom, gauss_binom_product, qbinom_eval
from oreq.scalars import GF, QQ


def test_small_examples():
    assert str(gauss_binom(2, 1)) == "1 + t"
    assert gauss_binom(7, 0).coeffs == (1,)
    assert str(gauss_binom(4, 2)) == "1 + t + 2*t^2 + t^3 + t^4"


def test_evaluation_examples():
    assert qbinom_eval(4, 2, QQ.scalar(1)) == QQ.scalar(6)
    assert qbinom_eval(4, 2, GF(5).scalar(2)) == GF(5).scalar(0)
    q = QQ.scalar("2/3")
    assert qbinom_eval(2, 1, q) == q + 1


def test_zero_q_rejected():
    with pytest.raises(ZeroInput):
        qbinom_eval(3, 1, GF(5).scalar(0))


@pytest.mark.parametrize("n", range(13))
def test_recurrence_matches_product_formula(n):
    for i in range(n + 1):
        assert gauss_binom(n, i) == gauss_binom_product(n, i)


@given(st.integers(0, 20), st.data())
def test_symmetry_and_at_one(n, data):
    i = data.draw(st.integers(0, n))
    g = gauss_binom(n, i)
    assert g.coeffs == gauss_binom(n, n - i).coeffs
    assert g.at_one() == comb(n, i)
    assert g.degree == i * (n - i)
    assert g.coeffs == g.coeffs[::-1]


@given(st.integers(1, 15), st.data(), st.integers(1, 4))
def test_roots_of_unity_in_f5_finite(n, data, q):
    i = data.draw(st.integers(0, n))
    F = GF(5)
    v = qbinom_eval(n, i, F.scalar(q))
    # q-Pascal evaluated directly in the field
    row = [F.scalar(1)]
    for k in range(1, n + 1):
        row = [F.scalar(1)] + [row[j - 1] + F.scalar(q) ** j * row[j] for j in range(1, k)] + [F.scalar(1)]
    assert v == row[i]
