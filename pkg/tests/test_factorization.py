"""Tests for factorization through smaller tuples and typicality."""

import pytest

from glvar.equimap import (
    AbstractCoefficientError,
    Certificate,
    Typicality,
    Verdict,
    WeightedMap,
    compose,
    factors_through,
    instantiate,
    is_typical,
    maps_equal,
    phi_family,
    square_map,
    zero_map,
)
from glvar.partitions import PartitionTuple, parse_tuple


def test_inclusion_certificate():
    """Test that a tuple containing the source always works."""
    result = factors_through(square_map(), parse_tuple("[[2],[1]]"))
    assert result.verdict is Verdict.YES
    assert result.certificate is Certificate.INCLUSION
    assert maps_equal(compose(result.witness.delta, result.witness.gamma), square_map())


def test_dimension_certificate():
    """Test that a large Jacobian rank rules out a small middle tuple."""
    f = WeightedMap.from_strings([2, 2, 2], [4], ["f*g - h^2"])
    result = factors_through(f, parse_tuple("[[2]]"))
    assert result.verdict is Verdict.NO
    assert result.certificate is Certificate.DIMENSION
    assert result.level == 2


def test_witness_certificate():
    """Test v^4 = (v^2)^2 through a single quadric."""
    f = WeightedMap.from_strings([1], [4], ["v^4"], source_names=["v"])
    result = factors_through(f, parse_tuple("[[2]]"))
    assert result.verdict is Verdict.YES
    assert result.certificate is Certificate.WITNESS
    assert result.unknowns == 2
    assert maps_equal(compose(result.witness.delta, result.witness.gamma), f)


def test_groebner_certificate():
    """Test a refutation by Gröbner basis with the dimension check disabled."""
    result = factors_through(square_map(), PartitionTuple(), max_level=0)
    assert result.verdict is Verdict.NO
    assert result.certificate is Certificate.GROEBNER
    assert "GB = {1}" in result.detail


def test_parameters_must_be_fixed():
    """Test that symbolic coefficients are rejected."""
    with pytest.raises(AbstractCoefficientError):
        factors_through(phi_family(), parse_tuple("[[2],[2],[2]]"))


def test_square_map_is_typical():
    """Test a map with no proper factorization."""
    result = is_typical(square_map())
    assert result.verdict is Typicality.TYPICAL
    assert [str(c.mid) for c in result.checks] == ["[]"]


def test_zero_map_is_not_typical():
    """Test that the zero map factors through the empty tuple."""
    result = is_typical(zero_map([1], [2]))
    assert result.verdict is Typicality.NOT_TYPICAL
    assert result.witness == PartitionTuple()


@pytest.mark.slow
def test_phi1_factors_through_quadrics():
    """Test that φ_1 factors through three quadrics with an explicit witness."""
    phi = phi_family(1)
    result = factors_through(phi, parse_tuple("[[2],[2],[2]]"))
    assert result.verdict is Verdict.YES
    assert result.certificate is Certificate.WITNESS
    assert result.unknowns == 24
    composite = compose(result.witness.delta, result.witness.gamma)
    assert maps_equal(composite, phi)
    expected = [str(p) for p in instantiate(phi, 2).outputs]
    assert [str(p) for p in instantiate(composite, 2).outputs] == expected


@pytest.mark.slow
def test_phi0_is_typical():
    """Test that φ_0 factors through no proper subtuple."""
    result = is_typical(phi_family(0))
    assert result.verdict is Typicality.TYPICAL
    by_mid = {str(c.mid): c for c in result.checks}
    assert by_mid["[[2],[2],[1],[1]]"].certificate is Certificate.DIMENSION
    assert by_mid["[[2],[2],[2],[1]]"].certificate is Certificate.GROEBNER
    assert all(c.verdict is Verdict.NO for c in result.checks)


@pytest.mark.slow
def test_budget_gives_unknown():
    """Test that an exhausted budget is reported rather than raised."""
    result = factors_through(phi_family(0), parse_tuple("[[2],[2],[2],[1]]"), budget=1)
    assert result.verdict is Verdict.UNKNOWN
    assert result.certificate is Certificate.BUDGET
