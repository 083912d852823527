"""Tests for the polynomial parser."""

import pytest

from glvar.polyalg import PolynomialRing, PolynomialSyntaxError, UnknownVariableError, parse_poly, variables_in

RING = PolynomialRing(("f", "g", "h", "x"))


@pytest.mark.parametrize(
    "text,expected",
    [
        ("f*g - h^2", "f*g - h^2"),
        ("f*g - h**2", "f*g - h^2"),
        ("-(x + 1)^2", "-x^2 - 2*x - 1"),
        ("1/2*x + x/2", "x"),
        ("3", "3"),
        ("+x", "x"),
        ("(f)(g)", None),
    ],
)
def test_parse(text, expected):
    """Test parsing valid and invalid text."""
    if expected is None:
        with pytest.raises(PolynomialSyntaxError):
            parse_poly(text, RING)
    else:
        assert str(parse_poly(text, RING)) == expected


@pytest.mark.parametrize(
    "text,position",
    [("x +* g", 3), ("x + ", 4), ("(x + f", 6), ("x $ g", 2), ("x ^ f", 4)],
)
def test_syntax_error_positions(text, position):
    """Test that syntax errors point at the offending character."""
    with pytest.raises(PolynomialSyntaxError) as excinfo:
        parse_poly(text, RING)
    assert excinfo.value.position == position


def test_unknown_variable_position():
    """Test that unknown identifiers report their offset."""
    with pytest.raises(UnknownVariableError) as excinfo:
        parse_poly("f + zz", RING)
    assert excinfo.value.name == "zz"
    assert excinfo.value.position == 4


def test_division_by_variable_rejected():
    """Test that division by a non-constant fails."""
    with pytest.raises(PolynomialSyntaxError):
        parse_poly("x/f", RING)


def test_variables_in():
    """Test identifier discovery in first-appearance order."""
    assert variables_in("y^2*f + x^2*g - 2*x*y*h") == ["y", "f", "x", "g", "h"]
