"""Tests for reduced Gröbner bases, checked against sympy."""

import pytest
import sympy

from glvar.polyalg import (
    GREVLEX,
    LEX,
    BudgetExceededError,
    Ideal,
    MonomialOrder,
    PolynomialRing,
    groebner,
    normal_form,
)

SYSTEMS = [
    (("x", "y"), ["x^2 - y", "x*y - 1"]),
    (("x", "y", "z"), ["x + y + z", "x*y + y*z + z*x", "x*y*z - 1"]),
    (("x", "y", "z"), ["x^2 + y^2 + z^2 - 1", "x - y", "y - z^2"]),
    (("a", "b", "c", "d"), ["a*d - b*c", "a*c - b^2", "b*d - c^2"]),
    (("x", "y"), ["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"]),
    (("f", "g", "h"), ["f*g - h^2", "f - g"]),
]


def _to_sympy(p, symbols):
    expr = sympy.Integer(0)
    for m, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, e in zip(symbols, m, strict=True):
            term *= s**e
        expr += term
    return expr


def _canonical(exprs, symbols, order):
    return sympy.groebner(exprs, *symbols, order=order, domain="QQ").exprs


@pytest.mark.parametrize("variables,gens", SYSTEMS)
@pytest.mark.parametrize("order,name", [(GREVLEX, "grevlex"), (LEX, "lex")])
def test_groebner_matches_sympy(variables, gens, order, name):
    """Test that the basis generates the same ideal sympy computes."""
    ideal = Ideal.from_strings(variables, gens)
    symbols = sympy.symbols(variables)
    basis = groebner(ideal, order)
    expected = _canonical([_to_sympy(g, symbols) for g in ideal], symbols, name)
    computed = _canonical([_to_sympy(g, symbols) for g in basis], symbols, name)
    assert computed == expected
    assert len(basis) == len(expected)


@pytest.mark.parametrize("variables,gens", SYSTEMS)
def test_basis_is_reduced_and_monic(variables, gens):
    """Test that basis elements are monic and mutually reduced."""
    basis = groebner(Ideal.from_strings(variables, gens))
    for i, g in enumerate(basis):
        assert g.leading_coefficient() == 1
        others = [h for j, h in enumerate(basis) if j != i]
        assert normal_form(g, others) == g


def test_unit_and_zero_ideals(xy_ring):
    """Test the degenerate bases."""
    assert groebner(Ideal.from_strings(xy_ring, ["x", "x - 1"])).is_unit
    zero = groebner(Ideal.zero(xy_ring))
    assert zero.is_zero
    assert len(zero) == 0


def test_lex_example():
    """Test a lex basis against a hand computation."""
    basis = groebner(Ideal.from_strings(("x", "y"), ["x^2 - y", "y"]), LEX)
    assert str(basis) == "{x^2, y}"


def test_block_order_eliminates(xyz_ring):
    """Test that a block order yields an elimination basis."""
    ideal = Ideal.from_strings(xyz_ring, ["y - x^2", "z - x^3"])
    basis = groebner(ideal, MonomialOrder.block(["x"]))
    free = [g for g in basis if "x" not in g.variables()]
    assert [str(g) for g in free] == ["y^3 - z^2"]


def test_membership(xy_ring):
    """Test ideal membership through normal forms."""
    basis = groebner(Ideal.from_strings(xy_ring, ["x^2 - y", "x*y - 1"]))
    assert basis.contains(xy_ring.parse("x^3 - 1"))
    assert not basis.contains(xy_ring.parse("x"))


def test_budget_exceeded():
    """Test that a tiny budget stops the computation."""
    ideal = Ideal.from_strings(*SYSTEMS[0])
    with pytest.raises(BudgetExceededError) as excinfo:
        groebner(ideal, budget=1)
    assert excinfo.value.budget == 1
    assert "--budget" in str(excinfo.value)


def test_budget_from_environment(monkeypatch):
    """Test that GLVAR_BUDGET sets the default budget."""
    monkeypatch.setenv("GLVAR_BUDGET", "1")
    with pytest.raises(BudgetExceededError):
        groebner(Ideal.from_strings(*SYSTEMS[0]))


def test_steps_recorded():
    """Test that the number of reductions is reported."""
    basis = groebner(Ideal.from_strings(*SYSTEMS[0]))
    assert basis.steps > 0


def test_ring_validation_for_block_order(xy_ring):
    """Test that block orders must name ring variables."""
    with pytest.raises(KeyError):
        groebner(Ideal.from_strings(xy_ring, ["x"]), MonomialOrder.block(["t"]))
