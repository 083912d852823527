"""Tests for the partition and tuple text grammar."""

import pytest

from glvar.partitions import (
    InvalidPartitionError,
    Partition,
    PartitionSyntaxError,
    PartitionTuple,
    parse_partition,
    parse_partitions,
    parse_tuple,
)


def test_parse_partition_basic():
    """Test parsing partitions with and without whitespace."""
    assert parse_partition("[2,1]") == Partition.of(2, 1)
    assert parse_partition(" [ 3 , 1 ] ") == Partition.of(3, 1)
    assert parse_partition("[]").is_empty


def test_parse_tuple_canonical_order():
    """Test that tuples are stored in canonical order."""
    t = parse_tuple("[[1],[2],[1,1]]")
    assert str(t) == "[[2],[1,1],[1]]"
    assert parse_tuple("[]") == PartitionTuple()
    assert len(parse_tuple("[[]]")) == 1


def test_parse_partitions_keeps_written_order():
    """Test that the ordered variant keeps declaration order."""
    assert [str(p) for p in parse_partitions("[[1],[2],[1]]")] == ["[1]", "[2]", "[1]"]


def test_syntax_error_position():
    """Test that syntax errors carry the offending offset."""
    with pytest.raises(PartitionSyntaxError) as excinfo:
        parse_partition("[2,,1]")
    assert excinfo.value.position == 3
    assert "^" in str(excinfo.value)


def test_syntax_error_trailing_text():
    """Test that trailing text is rejected."""
    with pytest.raises(PartitionSyntaxError) as excinfo:
        parse_tuple("[[2]] x")
    assert excinfo.value.position == 6


def test_invalid_partition_from_text():
    """Test that increasing parts are rejected after parsing."""
    with pytest.raises(InvalidPartitionError):
        parse_partition("[1,2]")


@pytest.mark.parametrize("text", ["[]", "[3]", "[2,1]", "[4,2,2,1]"])
def test_printed_partitions_reparse(text):
    """Test that printing and parsing agree."""
    assert str(parse_partition(text)) == text


@pytest.mark.parametrize("text", ["[]", "[[]]", "[[2],[1],[]]", "[[3,1],[2],[2]]"])
def test_printed_tuples_reparse(text):
    """Test that canonical tuple text reparses to itself."""
    assert str(parse_tuple(text)) == text
