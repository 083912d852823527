"""Tests for the shift operation on tuples."""

import pytest

from glvar.partitions import PartitionTuple, partitions_up_to, parse_tuple
from glvar.shift import shift_complement, shift_dimension_check, shift_tuple


def test_shift_quadric():
    """Test sh_1 of a single quadric."""
    assert str(shift_tuple(1, parse_tuple("[[2]]"))) == "[[2],[1],[]]"


def test_shift_linear_pair():
    """Test sh_1 of two linear forms."""
    assert str(shift_tuple(1, parse_tuple("[[1],[1]]"))) == "[[1],[1],[],[]]"


def test_shift_two_coordinates():
    """Test sh_2 of a quadric."""
    assert str(shift_tuple(2, parse_tuple("[[2]]"))) == "[[2],[1],[1],[],[],[]]"


def test_shift_zero_is_identity():
    """Test that sh_0 does nothing."""
    t = parse_tuple("[[2,1],[1],[]]")
    assert shift_tuple(0, t) == t
    assert len(shift_complement(0, t)) == 0


def test_shift_negative():
    """Test that a negative shift is rejected."""
    with pytest.raises(ValueError):
        shift_tuple(-1, parse_tuple("[[1]]"))


def test_shift_contains_original():
    """Test t ⊆ sh_n(t)."""
    for lam in partitions_up_to(4):
        t = PartitionTuple((lam,))
        for n in range(3):
            assert shift_tuple(n, t).contains(t)


def test_shift_complement_sizes_drop():
    """Test that every complement entry is strictly smaller than the source."""
    t = parse_tuple("[[2,1],[3]]")
    for n in (1, 2):
        assert all(nu.size < 3 for nu in shift_complement(n, t).entries)


def test_shift_composition():
    """Test sh_m ∘ sh_n == sh_{m+n}."""
    for text in ["[[2]]", "[[1],[1]]", "[[2,1]]", "[[3],[1,1]]"]:
        t = parse_tuple(text)
        for m in (1, 2):
            for n in (1, 2):
                assert shift_tuple(m, shift_tuple(n, t)) == shift_tuple(m + n, t), (text, m, n)


def test_shift_complement_of_constant():
    """Test that constants have nothing to shift."""
    assert str(shift_complement(3, parse_tuple("[[]]"))) == "[]"


@pytest.mark.parametrize("text", ["[[2]]", "[[2,1],[1]]", "[[3],[1,1,1]]", "[[2,2]]"])
def test_shift_dimension_check(text):
    """Test that shifted dimensions add up at several levels."""
    t = parse_tuple(text)
    for n in range(1, 3):
        for d in range(1, 4):
            assert shift_dimension_check(n, t, d)


def test_shift_laws_exhaustive():
    """Test composition and complement sizes for every partition of size at most 4."""
    for lam in partitions_up_to(4):
        t = PartitionTuple((lam,))
        for m in range(4):
            for n in range(4):
                assert shift_tuple(m, shift_tuple(n, t)) == shift_tuple(m + n, t), (lam, m, n)
        for n in range(1, 4):
            assert all(nu.size < lam.size for nu in shift_complement(n, t).entries), (lam, n)
