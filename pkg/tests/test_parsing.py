from fractions import Fraction as F

import pytest

from parfrac import QQ, ExtensionField, ParseError, Polynomial, PrimeField
from parfrac.parsing import parse_ast, parse_expansion_text, parse_expression, parse_polynomial

from cases import FULL_DEN, FULL_N, QUOT_DEN, QUOT_N, SPLIT_DEN, SPLIT_N, poly


def test_split_example():
    spec = parse_expression("t/((t+1)^2*(t-1)^3*(t-2)^5)", QQ)
    assert spec.numerator == SPLIT_N
    assert spec.denominator.polynomial() == SPLIT_DEN.polynomial()
    assert spec.denominator.as_split() is not None


def test_quotient_example():
    spec = parse_expression("t^2/((t^2-2*t-1)^2*(t^2-t+2))", QQ)
    assert spec.numerator == QUOT_N
    assert spec.denominator == QUOT_DEN


def test_full_example_mode():
    spec = parse_expression("t/((t^2-t-1)^2*(t^2-t+2))", QQ, mode="full")
    assert spec.mode == "full"
    assert spec.numerator == FULL_N and spec.denominator == FULL_DEN


def test_constants_and_units():
    spec = parse_expression("3*t/(2*(t-1))", QQ)
    assert spec.denominator.unit == 2
    assert spec.numerator == poly(0, 3)
    assert parse_expression("t^2+1", QQ).denominator.factors == ()
    assert parse_polynomial("(2*t+1)/3", QQ) == poly(F(1, 3), F(2, 3))


def test_repeated_factors_merge():
    spec = parse_expression("1/((t-1)*(t-1)^2)", QQ)
    assert spec.denominator.factors[0][1] == 3


def test_prime_field():
    K = PrimeField(7)
    assert parse_polynomial("t^7 - t + 9", K) == Polynomial([2, 6, 0, 0, 0, 0, 0, 1], K)


def test_over_extension():
    L = ExtensionField(QQ, poly(-2, 0, 1), "a")
    p = parse_polynomial("t^2 - 1/2", L)
    assert p.field == L and p[0] == L.convert("-1/2") and p.degree == 2


@pytest.mark.parametrize(
    "src,msg,pos",
    [
        ("t^2 +* 1", "unexpected '\\*'", 5),
        ("(t+1", "expected '\\)'", 4),
        ("t$", "unexpected character", 1),
        ("1/(t^2 - t", "expected", 10),
    ],
)
def test_error_positions(src, msg, pos):
    with pytest.raises(ParseError, match=msg) as info:
        parse_expression(src, QQ)
    assert info.value.position == pos


def test_zero_factor():
    with pytest.raises(ParseError, match="zero denominator factor"):
        parse_expression("1/(t-t)", QQ)
    with pytest.raises(ParseError, match="zero denominator factor"):
        parse_expression("1/0", QQ)


def test_exponents():
    with pytest.raises(ParseError, match="non-integer exponent"):
        parse_expression("1/(t-1)^1.5", QQ)
    with pytest.raises(ParseError, match="nonnegative"):
        parse_expression("t^-1", QQ)
    with pytest.raises(ParseError, match="integer literal"):
        parse_expression("t^t", QQ)


def test_unknown_symbol():
    with pytest.raises(ParseError, match="unknown symbol 'x'"):
        parse_expression("1/(x-1)", QQ)


def test_nested_fractions_rejected():
    with pytest.raises(ParseError, match="top level"):
        parse_expression("1/(t-1) + 1/(t-2)", QQ)


def test_ast_precedence():
    node = parse_ast("-t^2")
    assert type(node).__name__ == "Neg"


def test_expansion_text():
    from parfrac import pfd_general

    e = parse_expansion_text("(3+5*t)/14/(t^2-2*t-1)^2 + (5-3*t)/28/(t^2-2*t-1) + (-2+3*t)/28/(t^2-t+2)", QQ)
    assert e.equivalent(pfd_general(QUOT_N, QUOT_DEN))
    with pytest.raises(ParseError, match="improper"):
        parse_expansion_text("t^2/(t-1)", QQ)
