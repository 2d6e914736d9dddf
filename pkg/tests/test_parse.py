from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from seriesroots.parse import ParseError, Query, SemanticError, parse_expression, render


def test_cubic_expression():
    q = parse_expression("(1 - 12x + 12x^2 + 8x^3)^(-1/6)")
    assert q.polynomial.coeffs == (1, -12, 12, 8)
    assert q.exponent == Fraction(-1, 6)


def test_exponent_defaults_to_one():
    q = parse_expression("1 + x")
    assert q.polynomial.coeffs == (1, 1) and q.exponent == 1


@pytest.mark.parametrize(
    "src, coeffs, lam",
    [
        ("(1-4*x)^(-1/2)", (1, -4), Fraction(-1, 2)),
        ("  ( 1 - 4 x ) ^ ( 1 / 2 ) ", (1, -4), Fraction(1, 2)),
        ("(x^2 + 1)^(3)", (1, 0, 1), 3),
        ("1 + x - x + 2x^3", (1, 0, 0, 2), 1),
        ("(1 + 2*x^2 + 3x^2)^(5/10)", (1, 0, 5), Fraction(1, 2)),
        ("1", (1,), 1),
        ("(1+x)", (1, 1), 1),
    ],
)
def test_accepted_forms(src, coeffs, lam):
    q = parse_expression(src)
    assert q.polynomial.coeffs == coeffs and q.exponent == lam


@pytest.mark.parametrize(
    "src, column",
    [
        ("(1 - 4*x)^(1/2", 15),
        ("(1 - 4*x", 9),
        ("1 + + x", 5),
        ("1 + x^", 7),
        ("(1 + x)^(1/ 0)", 13),
        ("1 + y", 5),
        ("(1 + x) 2", 9),
        ("", 1),
    ],
)
def test_syntax_errors_carry_column(src, column):
    with pytest.raises(ParseError) as info:
        parse_expression(src)
    assert info.value.column == column


def test_unclosed_paren_message():
    with pytest.raises(ParseError, match="unclosed parenthesis"):
        parse_expression("(1 - 4*x")


@pytest.mark.parametrize("src", ["(2 - 4x)^(1/2)", "x + x^2", "(1 - 1 + x)^(1/3)"])
def test_non_unit_constant_is_semantic(src):
    with pytest.raises(SemanticError) as info:
        parse_expression(src)
    assert not isinstance(info.value, ParseError)


def test_query_validation():
    with pytest.raises(SemanticError):
        Query(((0, 1),), order=0)
    with pytest.raises(SemanticError):
        Query(((0, 1),), criterion="nope")


queries = st.builds(
    lambda cs, lam, order, crit, fmt: Query(
        tuple([(0, 1)] + [(d, c) for d, c in enumerate(cs, start=1) if c]), lam, order, crit, fmt
    ),
    st.lists(st.integers(-10**6, 10**6), max_size=10),
    st.fractions(max_denominator=10**4),
    st.integers(1, 500),
    st.sampled_from(["theorem_main", "dd", "dd_extended", "oracle", "all"]),
    st.sampled_from(["text", "json"]),
)


@given(queries)
def test_render_round_trip(q):
    again = parse_expression(render(q), order=q.order, criterion=q.criterion, output_format=q.output_format)
    assert again == q
