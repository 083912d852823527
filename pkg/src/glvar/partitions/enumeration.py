"""Enumeration of partitions."""

from collections.abc import Iterator

from glvar.partitions.partition import Partition


def partitions_of(n: int, max_rows: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """Yield the partitions of ``n`` in descending lexicographic order.

    Args:
        n: Size of the partitions
        max_rows: Only yield partitions with at most this many rows
        max_part: Only yield partitions whose largest part is at most this

    Example:
        >>> [str(p) for p in partitions_of(3)]
        ['[3]', '[2,1]', '[1,1,1]']

    """
    if n < 0:
        return
    rows = n if max_rows is None else max_rows
    top = n if max_part is None else max_part

    def rec(remaining: int, bound: int, rows_left: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if rows_left == 0:
            return
        for first in range(min(remaining, bound), 0, -1):
            for rest in rec(remaining - first, first, rows_left - 1):
                yield (first, *rest)

    for parts in rec(n, top, rows):
        yield Partition(parts)


def partitions_up_to(d: int, max_rows: int | None = None) -> Iterator[Partition]:
    """Yield all partitions of size 0..d, by increasing size."""
    for n in range(d + 1):
        yield from partitions_of(n, max_rows=max_rows)


def sub_partitions(lam: Partition) -> Iterator[Partition]:
    """Yield every partition whose diagram fits inside ``lam``."""
    for n in range(lam.size + 1):
        for mu in partitions_of(n, max_rows=lam.rows, max_part=lam.part(0)):
            if lam.contains(mu):
                yield mu
