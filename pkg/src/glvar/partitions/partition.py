"""Partitions, tuples of partitions and magnitudes.

A partition indexes an irreducible polynomial representation; a tuple of
partitions is a finite multiset of them and indexes the affine space whose
coordinate ring is generated by the corresponding representations. The
magnitude of a tuple counts its entries by size and is compared from the
largest size downwards, which makes it a well-order.
"""

from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from enum import Enum
from functools import total_ordering
from itertools import product

from glvar.partitions.exceptions import InvalidPartitionError, NotContainedError


class Ordering(str, Enum):
    """Result of a three-way comparison."""

    LT = "lt"
    EQ = "eq"
    GT = "gt"


@dataclass(frozen=True, order=False)
class Partition:
    """A weakly decreasing sequence of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``. The empty sequence is the empty partition.

    Attributes:
        parts: The non-zero parts in weakly decreasing order

    Example:
        >>> lam = Partition((2, 1))
        >>> lam.size, lam.rows
        (3, 2)
        >>> str(lam)
        '[2,1]'

    """

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        for p in parts:
            if isinstance(p, bool) or not isinstance(p, int) or p < 0:
                raise InvalidPartitionError(parts)
        if any(a < b for a, b in zip(parts, parts[1:], strict=False)):
            raise InvalidPartitionError(parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        """Build a partition from its parts given as arguments."""
        return cls(tuple(parts))

    @property
    def size(self) -> int:
        """Sum of the parts."""
        return sum(self.parts)

    @property
    def rows(self) -> int:
        """Number of non-zero parts."""
        return len(self.parts)

    @property
    def is_empty(self) -> bool:
        return not self.parts

    @property
    def is_single_row(self) -> bool:
        """True for non-empty partitions with exactly one row."""
        return len(self.parts) == 1

    def part(self, i: int) -> int:
        """Return the i-th part (zero-based), or 0 past the last row."""
        return self.parts[i] if i < len(self.parts) else 0

    def contains(self, other: "Partition") -> bool:
        """Young-diagram containment: ``other`` fits inside ``self``."""
        if other.rows > self.rows:
            return False
        return all(o <= s for o, s in zip(other.parts, self.parts, strict=False))

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram."""
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.size, self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    def __repr__(self) -> str:
        return f"Partition({str(self)})"


EMPTY = Partition()


def compare_magnitude(a: "Magnitude", b: "Magnitude") -> Ordering:
    """Compare two magnitudes.

    Magnitudes are compared at the largest index where they disagree, after
    padding the shorter one with zeros.

    Args:
        a: First magnitude
        b: Second magnitude

    Returns:
        Ordering.LT, Ordering.EQ or Ordering.GT

    Example:
        >>> compare_magnitude(Magnitude((0, 0, 3)), Magnitude((0, 2, 3)))
        <Ordering.LT: 'lt'>
        >>> compare_magnitude(Magnitude((5,)), Magnitude((0, 1)))
        <Ordering.LT: 'lt'>

    """
    length = max(len(a.counts), len(b.counts))
    for i in range(length - 1, -1, -1):
        x = a.counts[i] if i < len(a.counts) else 0
        y = b.counts[i] if i < len(b.counts) else 0
        if x != y:
            return Ordering.LT if x < y else Ordering.GT
    return Ordering.EQ


@total_ordering
@dataclass(frozen=True, eq=True)
class Magnitude:
    """Number of entries of each size in a tuple.

    Attributes:
        counts: ``counts[i]`` is the number of entries of size ``i``; trailing
            zeros are trimmed

    """

    counts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        counts = tuple(self.counts)
        if any(c < 0 for c in counts):
            raise ValueError(f"Magnitude counts must be non-negative: {counts}")
        while counts and counts[-1] == 0:
            counts = counts[:-1]
        object.__setattr__(self, "counts", counts)

    def __add__(self, other: "Magnitude") -> "Magnitude":
        length = max(len(self.counts), len(other.counts))
        return Magnitude(
            tuple(
                (self.counts[i] if i < len(self.counts) else 0)
                + (other.counts[i] if i < len(other.counts) else 0)
                for i in range(length)
            )
        )

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, Magnitude):
            return NotImplemented
        return compare_magnitude(self, other) is Ordering.LT

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.counts) + ")"


@dataclass(frozen=True)
class PartitionTuple:
    """A finite multiset of partitions.

    Entries are stored sorted descending by ``(size, parts)``, so equality
    and hashing are multiset equality.

    Attributes:
        entries: The partitions in canonical order

    Example:
        >>> t = PartitionTuple.from_parts([[1], [2], [1]])
        >>> str(t)
        '[[2],[1],[1]]'
        >>> t.degree, t.is_pure
        (2, True)

    """

    entries: tuple[Partition, ...] = field(default=())

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        for e in entries:
            if not isinstance(e, Partition):
                raise TypeError(f"PartitionTuple entries must be Partition, got {e!r}")
        object.__setattr__(
            self, "entries", tuple(sorted(entries, key=Partition.sort_key, reverse=True))
        )

    @classmethod
    def from_parts(cls, parts: Iterable[Iterable[int]]) -> "PartitionTuple":
        """Build a tuple from nested integer sequences."""
        return cls(tuple(Partition(tuple(p)) for p in parts))

    @classmethod
    def from_counter(cls, counter: Counter[Partition]) -> "PartitionTuple":
        return cls(tuple(counter.elements()))

    def counter(self) -> Counter[Partition]:
        return Counter(self.entries)

    @property
    def is_pure(self) -> bool:
        """True if the empty partition does not occur."""
        return all(not e.is_empty for e in self.entries)

    @property
    def is_single_row(self) -> bool:
        """True if every entry has exactly one row."""
        return all(e.is_single_row for e in self.entries)

    @property
    def degree(self) -> int:
        """Largest entry size, 0 for the empty tuple."""
        return max((e.size for e in self.entries), default=0)

    def magnitude(self) -> Magnitude:
        return magnitude(self)

    def count(self, lam: Partition) -> int:
        """Multiplicity of ``lam`` in the tuple."""
        return sum(1 for e in self.entries if e == lam)

    def contains(self, other: "PartitionTuple") -> bool:
        return contains(self, other)

    def union(self, other: "PartitionTuple") -> "PartitionTuple":
        return union(self, other)

    def difference(self, other: "PartitionTuple") -> "PartitionTuple":
        """Multiset difference ``self - other``.

        Raises:
            NotContainedError: If ``other`` is not contained in ``self``

        """
        if not self.contains(other):
            raise NotContainedError(f"{other} is not contained in {self}")
        return PartitionTuple.from_counter(self.counter() - other.counter())

    def proper_subtuples(self) -> list["PartitionTuple"]:
        """Distinct proper sub-multisets, by increasing magnitude.

        Ties in magnitude are broken by the canonical entry order, so the
        result is deterministic.
        """
        counter = self.counter()
        distinct = sorted(counter, key=Partition.sort_key, reverse=True)
        subs: list[PartitionTuple] = []
        for choice in product(*(range(counter[p] + 1) for p in distinct)):
            if all(c == counter[p] for c, p in zip(choice, distinct, strict=True)):
                continue
            subs.append(
                PartitionTuple(
                    tuple(p for c, p in zip(choice, distinct, strict=True) for _ in range(c))
                )
            )
        return sorted(subs, key=lambda t: (t.magnitude(), [e.sort_key() for e in t.entries]))

    def sizes(self) -> tuple[int, ...]:
        """Entry sizes in canonical order."""
        return tuple(e.size for e in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.entries)

    def __str__(self) -> str:
        return "[" + ",".join(str(e) for e in self.entries) + "]"

    def __repr__(self) -> str:
        return f"PartitionTuple({str(self)})"


def magnitude(t: PartitionTuple) -> Magnitude:
    """Count the entries of ``t`` by size.

    Example:
        >>> str(magnitude(PartitionTuple.from_parts([[1], [1], [2], [2], [2]])))
        '(0,2,3)'

    """
    sizes = Counter(e.size for e in t.entries)
    top = max(sizes, default=-1)
    return Magnitude(tuple(sizes.get(i, 0) for i in range(top + 1)))


def contains(big: PartitionTuple, small: PartitionTuple) -> bool:
    """True iff every partition occurs in ``big`` at least as often as in ``small``."""
    have = big.counter()
    return all(have[p] >= m for p, m in small.counter().items())


def union(a: PartitionTuple, b: PartitionTuple) -> PartitionTuple:
    """Multiset union (sum of multiplicities)."""
    return PartitionTuple(a.entries + b.entries)
