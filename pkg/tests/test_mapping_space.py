"""Tests for spaces of equivariant maps into a family."""

import pytest

from glvar.glvariety import VarietyError, affine_family, mapping_space, minors_family, shift_level
from glvar.partitions import PartitionTuple, parse_tuple


def test_linear_forms_into_rank_one(rank_one):
    """Test that every map A^[(1)] -> pairs of linear forms lands in rank <= 1."""
    result = mapping_space(parse_tuple("[[1]]"), rank_one)
    assert result.symbols == ("c1_1", "c2_1")
    assert result.ideal.is_zero
    assert result.stabilized
    assert result.dimension == 2
    assert result.level == 3


def test_linear_form_into_quadrics():
    """Test the one-parameter family v -> c*v^2."""
    result = mapping_space(parse_tuple("[[1]]"), affine_family([2]))
    assert result.symbols == ("c1_1",)
    assert result.ideal.is_zero
    assert result.dimension == 1


def test_quadric_into_linear_forms():
    """Test that no nonzero map lowers the degree."""
    result = mapping_space(parse_tuple("[[2]]"), affine_family([1]))
    assert result.symbols == ()
    assert result.dimension == 0
    assert result.stabilized


def test_linear_form_into_origin():
    """Test that only the zero map lands in the rank-zero quadrics."""
    result = mapping_space(parse_tuple("[[1]]"), minors_family(0), level=2)
    assert [str(g) for g in result.ideal] == ["c1_1"]
    assert result.dimension == 0
    assert result.stabilized


def test_two_linear_forms_into_rank_one_quadrics():
    """Test maps (x, y) -> a x^2 + b x y + c y^2 of rank at most one."""
    result = mapping_space(PartitionTuple.from_parts([[1], [1]]), minors_family(1), level=2)
    assert len(result.symbols) == 3
    assert result.dimension == 2
    assert result.stabilized


def test_shift_family_rejected(rank_one):
    """Test that shift families are refused."""
    with pytest.raises(VarietyError):
        mapping_space(parse_tuple("[[1]]"), shift_level(rank_one, 1))


def test_level_must_be_positive(rank_one):
    """Test level validation."""
    with pytest.raises(ValueError):
        mapping_space(parse_tuple("[[1]]"), rank_one, level=0)
