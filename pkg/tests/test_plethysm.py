"""Tests for characters and symmetric-algebra decompositions."""

from collections import Counter
from math import factorial

import pytest

from glvar.partitions import Partition, PartitionTuple, partitions_of
from glvar.schur import ImpureTupleError, character, schur_dim, sym_decompose, z_factor


def _monomials_up_to(weights, bound):
    """Count monomials of weighted degree at most bound."""
    counts = [1] + [0] * bound
    for w in weights:
        for d in range(w, bound + 1):
            counts[d] += counts[d - w]
    return sum(counts)


def test_character_examples():
    """Test small S_3 characters."""
    assert character(Partition.of(2, 1), (1, 1, 1)) == 2
    assert character(Partition.of(2, 1), (2, 1)) == 0
    assert character(Partition.of(2, 1), (3,)) == -1
    assert character(Partition.of(1, 1, 1), (2, 1)) == -1
    assert character(Partition.of(3), (3,)) == 1


def test_character_size_mismatch():
    """Test that cycle type and partition sizes must agree."""
    with pytest.raises(ValueError):
        character(Partition.of(2), (1,))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_character_orthogonality(n):
    """Test Σ_ρ χ^λ(ρ)^2 / z_ρ == 1."""
    for lam in partitions_of(n):
        total = sum(character(lam, rho.parts) ** 2 * factorial(n) // z_factor(rho.parts) for rho in partitions_of(n))
        assert total == factorial(n)


def test_sym_of_quadrics():
    """Test Sym(V_[2]) up to degree 4."""
    e = sym_decompose(PartitionTuple.from_parts([[2]]), 4)
    assert e.multiplicity(Partition.of()) == 1
    assert e.multiplicity(Partition.of(2)) == 1
    assert e.multiplicity(Partition.of(4)) == 1
    assert e.multiplicity(Partition.of(2, 2)) == 1
    assert e.multiplicity(Partition.of(3, 1)) == 0


def test_sym_of_three_quadrics():
    """Test that V_[4] occurs six times in degree 4 of Sym(V_[2]^3)."""
    e = sym_decompose(PartitionTuple.from_parts([[2], [2], [2]]), 4)
    assert e.multiplicity(Partition.of(4)) == 6
    assert e.multiplicity(Partition.of(3, 1)) == 3
    assert e.multiplicity(Partition.of(2)) == 3


def test_sym_of_linear_forms():
    """Test Sym(V_[1] ⊕ V_[1]) in low degree."""
    e = sym_decompose(PartitionTuple.from_parts([[1], [1]]), 2)
    assert dict(e.items()) == {
        Partition.of(): 1,
        Partition.of(1): 2,
        Partition.of(2): 3,
        Partition.of(1, 1): 1,
    }


@pytest.mark.parametrize(
    "parts,degree",
    [([[1]], 4), ([[2]], 4), ([[1], [2]], 4), ([[1, 1], [1]], 4), ([[3]], 3)],
)
def test_sym_dimension_counts_monomials(parts, degree):
    """Test that the decomposition has the dimension of the polynomial ring."""
    t = PartitionTuple.from_parts(parts)
    e = sym_decompose(t, degree)
    for n in range(1, 4):
        weights = [lam.size for lam in t.entries for _ in range(schur_dim(lam, n))]
        assert e.dimension(n) == _monomials_up_to(weights, degree), (parts, n)


def test_sym_rejects_impure_tuple():
    """Test that the empty partition is rejected."""
    with pytest.raises(ImpureTupleError):
        sym_decompose(PartitionTuple.from_parts([[1], []]), 2)


def test_sym_negative_degree():
    """Test that a negative degree is rejected."""
    with pytest.raises(ValueError):
        sym_decompose(PartitionTuple.from_parts([[1]]), -1)


def test_sym_degree_zero():
    """Test the degree-zero expansion."""
    e = sym_decompose(PartitionTuple.from_parts([[2]]), 0)
    assert Counter(dict(e.items())) == Counter({Partition.of(): 1})
