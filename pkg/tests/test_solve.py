"""Tests for the rational witness search."""

from fractions import Fraction

from glvar.polyalg import (
    Ideal,
    PolynomialRing,
    find_rational_point,
    rational_roots,
    search_rational_point,
    triangular_point,
)


def test_rational_roots():
    """Test root finding for univariate polynomials."""
    ring = PolynomialRing(("x",))
    assert rational_roots(ring.parse("x^3 - x")) == [-1, 0, 1]
    assert rational_roots(ring.parse("2*x^2 - 3*x + 1")) == [Fraction(1, 2), 1]
    assert rational_roots(ring.parse("x^2 + 1")) == []
    assert rational_roots(ring.parse("x^2 - 2")) == []


def test_find_point_on_hyperbola_line():
    """Test a system that needs a root of a univariate quadratic."""
    ideal = Ideal.from_strings(("a", "b"), ["a*b - 2", "a - b - 1"])
    point = find_rational_point(ideal)
    assert point is not None
    assert all(g.evaluate(point) == 0 for g in ideal)


def test_find_point_underdetermined():
    """Test that free variables get guessed values."""
    ideal = Ideal.from_strings(("x", "y", "z"), ["x*y - z^2", "x^2 - y*z"])
    point = find_rational_point(ideal)
    assert point is not None
    assert set(point) == {"x", "y", "z"}
    assert all(g.evaluate(point) == 0 for g in ideal)


def test_no_rational_point():
    """Test that an irrational-only system yields None."""
    assert find_rational_point(Ideal.from_strings(("x",), ["x^2 - 2"])) is None
    assert find_rational_point(Ideal.from_strings(("x",), ["x", "x - 1"])) is None


def test_zero_ideal_gives_origin():
    """Test the trivial system."""
    ring = PolynomialRing(("x", "y"))
    assert find_rational_point(Ideal.zero(ring)) == {"x": 0, "y": 0}
    assert find_rational_point([]) == {}


def test_budget_exhaustion():
    """Test that a budget of one node gives up on a nonlinear system."""
    ideal = Ideal.from_strings(("x", "y"), ["x^2*y^2 - 4", "x*y^3 - 8"])
    assert find_rational_point(ideal, budget=1) is None
    point = find_rational_point(ideal, budget=100)
    assert point is not None
    assert all(g.evaluate(point) == 0 for g in ideal)


def test_linear_system():
    """Test a system solved by propagation alone."""
    ideal = Ideal.from_strings(("x", "y"), ["x + y - 3", "x - y - 1"])
    assert find_rational_point(ideal) == {"x": 2, "y": 1}


def test_triangular_point_needs_lex_basis():
    """Test a system the propagation search misses but back-substitution solves."""
    ideal = Ideal.from_strings(("x", "y"), ["x^2 - 9*y^2", "x*y - 3"])
    assert search_rational_point(ideal) is None
    assert triangular_point(ideal) == {"x": -3, "y": -1}
    assert find_rational_point(ideal) == {"x": -3, "y": -1}


def test_triangular_point_free_variables():
    """Test that free variables get generic values and solve_first reorders the lex basis."""
    ideal = Ideal.from_strings(("a", "b", "t"), ["a*t - 1"])
    assert triangular_point(ideal) == {"a": Fraction(1, 5), "b": 3, "t": 5}
    assert triangular_point(ideal, solve_first=["a"]) == {"a": 5, "b": 2, "t": Fraction(1, 5)}


def test_triangular_point_gives_up():
    """Test the unit ideal, irrational roots and an exhausted Gröbner budget."""
    assert triangular_point(Ideal.from_strings(("x",), ["x", "x - 1"])) is None
    assert triangular_point(Ideal.from_strings(("x", "y"), ["x^2 - 2", "y - x"])) is None
    ideal = Ideal.from_strings(("x", "y"), ["x^2 - 9*y^2", "x*y - 3"])
    assert triangular_point(ideal, groebner_budget=1) is None
    assert triangular_point(ideal, budget=1) is None
