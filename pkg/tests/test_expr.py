from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from octofib.expr import Basis, BinOp, Neg, Num, ParseError, evaluate, parse, to_source
from octofib.octonion import AlgebraParams, Octonion, format_octonion

O111 = AlgebraParams(1, 1, 1)


def value(text, alg=O111):
    return format_octonion(evaluate(parse(text), alg))


def test_examples():
    assert value("(e1*e2)*e4") == "e7"
    assert value("e1*(e2*e4)") == "-e7"
    assert value("1/2 + 3*e5 - e5") == "1/2 + 2e5"


def test_left_associative_product():
    assert parse("e1*e2*e4") == parse("(e1*e2)*e4")
    assert value("e1*e2*e4") == "e7"


def test_precedence_and_negation():
    assert parse("1 + 2*e3") == BinOp("+", Num(Fraction(1)), BinOp("*", Num(Fraction(2)), Basis(3)))
    assert parse("--e1") == Neg(Neg(Basis(1)))
    assert value("-e1*e1") == "1"
    assert value("e1*e1", AlgebraParams(3, 1, 1)) == "-3"


@pytest.mark.parametrize(
    "text,pos",
    [("e8", 0), ("1 +", 3), ("(e1", 3), ("1/0", 2), ("e1 e2", 3), ("2 $ 3", 2), ("", 0)],
)
def test_parse_errors(text, pos):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.position == pos


leaves = st.one_of(
    st.fractions(min_value=-20, max_value=20, max_denominator=9).map(Num),
    st.integers(1, 7).map(Basis),
)
trees = st.recursive(
    leaves,
    lambda kids: st.one_of(
        kids.map(Neg),
        st.tuples(st.sampled_from("+-*"), kids, kids).map(lambda t: BinOp(*t)),
    ),
    max_leaves=12,
)


def normalize(node):
    """A negative literal prints as '-k', which parses back as Neg(k)."""
    if isinstance(node, Num) and node.value < 0:
        return Neg(Num(-node.value))
    if isinstance(node, Neg):
        return Neg(normalize(node.operand))
    if isinstance(node, BinOp):
        return BinOp(node.op, normalize(node.left), normalize(node.right))
    return node


@given(trees)
def test_round_trip(tree):
    src = to_source(tree)
    assert parse(src) == normalize(tree)
    assert evaluate(parse(src), O111) == evaluate(tree, O111)


def test_scalar_and_units():
    assert evaluate(parse("7/3"), O111) == Octonion.scalar(Fraction(7, 3), O111)
    assert evaluate(parse("e4"), O111) == Octonion.unit(4, O111)
