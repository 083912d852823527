"""Partitions, tuples of partitions and the magnitude order.

This module provides the combinatorial vocabulary shared by every other
part of glvar, plus the text grammar used by the CLI and file inputs.
"""

from glvar.partitions.enumeration import partitions_of, partitions_up_to, sub_partitions
from glvar.partitions.exceptions import (
    InvalidPartitionError,
    NotContainedError,
    PartitionError,
    PartitionSyntaxError,
)
from glvar.partitions.grammar import parse_partition, parse_partitions, parse_tuple
from glvar.partitions.partition import (
    EMPTY,
    Magnitude,
    Ordering,
    Partition,
    PartitionTuple,
    compare_magnitude,
    contains,
    magnitude,
    union,
)

__all__ = [
    "EMPTY",
    "Magnitude",
    "Ordering",
    "Partition",
    "PartitionTuple",
    "compare_magnitude",
    "contains",
    "magnitude",
    "union",
    "parse_partition",
    "parse_partitions",
    "parse_tuple",
    "partitions_of",
    "partitions_up_to",
    "sub_partitions",
    "PartitionError",
    "PartitionSyntaxError",
    "InvalidPartitionError",
    "NotContainedError",
]
