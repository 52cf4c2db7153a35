import pytest
from hypothesis import given, strategies as st

from conftest import ring
from corpus import CORPUS
from fractions import Fraction
from oreq.errors import DivisionByZero, ExprSyntaxError, RingMismatch, ValidationError
from oreq.expr import Add, Gen, Mul, Neg, Num, Pow, Sub, evaluate, evaluate_element, parse_expression, to_text


@pytest.mark.parametrize("src", CORPUS)
def test_corpus_roundtrip(src):
    t = parse_expression(src)
    printed = to_text(t)
    assert parse_expression(printed) == t
    assert to_text(parse_expression(printed)) == printed


def test_corpus_size():
    assert len(CORPUS) >= 50


leaves = st.one_of(
    st.sampled_from([Gen("x"), Gen("y")]),
    st.fractions(min_value=0, max_denominator=20).map(Num),
)
trees = st.recursive(
    leaves,
    lambda kids: st.one_of(
        st.builds(Add, kids, kids),
        st.builds(Sub, kids, kids),
        st.builds(Mul, kids, kids),
        st.builds(Neg, kids),
        st.builds(Pow, kids, st.integers(0, 4)),
    ),
    max_leaves=12,
)


@given(trees)
def test_random_tree_roundtrip(t):
    assert parse_expression(to_text(t)) == t


@pytest.mark.parametrize("src, pos", [
    ("x y", 2),
    ("2x", 1),
    ("x +", 3),
    ("(x + y", 6),
    ("z", 0),
    ("x ^ y", 4),
    ("x ^ 1/2", 4),
    ("x $ y", 2),
    ("1/0", 0),
    ("", 0),
])
def test_syntax_errors(src, pos):
    with pytest.raises(ExprSyntaxError) as ei:
        parse_expression(src)
    assert ei.value.pos == pos
    assert f"position {pos}" in str(ei.value)


def test_juxtaposition_hint():
    with pytest.raises(ExprSyntaxError, match=r"use '\*'"):
        parse_expression("y x")


def test_evaluate_examples():
    t3 = ring("TRUNCQ:3")
    assert str(evaluate(parse_expression("x*y"), t3)) == "y*x + 1"
    assert str(evaluate(parse_expression("x*y - y*x"), t3)) == "1"
    qp = ring("QP:5,3,2")
    assert str(evaluate(parse_expression("1/2*y"), qp)) == "3*y"
    assert str(evaluate(parse_expression("x*y"), qp, "naive")) == "2*y*x + 1"
    assert evaluate(parse_expression("x^0"), qp) == evaluate(parse_expression("1"), qp)


def test_evaluate_errors():
    qp = ring("QP:5,3,2")
    with pytest.raises(DivisionByZero):
        evaluate(parse_expression("1/5*y"), qp)
    with pytest.raises(ValidationError):
        evaluate_element(parse_expression("x + y"), qp)
    nilq = ring("NILQ:5,4,2")
    with pytest.raises(RingMismatch):
        evaluate(parse_expression("x"), nilq)
    assert str(evaluate(parse_expression("x*y"), nilq)) == "2*y*x + y^2"


@given(trees)
def test_methods_agree(t):
    ctx = ring("QP:5,4,2")
    try:
        a = evaluate(t, ctx, "naive")
    except DivisionByZero:
        return
    assert a == evaluate(t, ctx, "goodearl")


def test_fraction_values():
    assert parse_expression("3/6") == Num(Fraction(1, 2))
