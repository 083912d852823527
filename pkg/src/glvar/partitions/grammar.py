"""Text grammar for partitions and tuples.

    partition := '[' [ INT { ',' INT } ] ']'
    tuple     := '[' [ partition { ',' partition } ] ']'

Whitespace between tokens is ignored. ``[]`` is the empty partition when a
partition is expected and the empty tuple when a tuple is expected; the
tuple holding only the empty partition is ``[[]]``.
"""

from glvar.partitions.exceptions import PartitionSyntaxError
from glvar.partitions.partition import Partition, PartitionTuple


class _Scanner:
    """Character cursor with whitespace skipping."""

    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str) -> None:
        if self.peek() != char:
            self.fail(f"expected '{char}'")
        self.pos += 1

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected a non-negative integer")
        return int(self.text[start : self.pos])

    def end(self) -> None:
        if self.peek() != "":
            self.fail("unexpected trailing text")

    def fail(self, reason: str) -> None:
        raise PartitionSyntaxError(self.text, min(self.pos, len(self.text)), reason)


def _partition(scanner: _Scanner) -> Partition:
    scanner.expect("[")
    parts: list[int] = []
    if scanner.peek() != "]":
        parts.append(scanner.integer())
        while scanner.peek() == ",":
            scanner.pos += 1
            parts.append(scanner.integer())
    scanner.expect("]")
    return Partition(tuple(parts))


def parse_partition(text: str) -> Partition:
    """Parse a partition such as ``"[2,1]"``.

    Args:
        text: Partition text

    Returns:
        The parsed partition

    Raises:
        PartitionSyntaxError: If the text does not follow the grammar
        InvalidPartitionError: If the parts are not weakly decreasing

    Example:
        >>> parse_partition(" [3, 1] ").size
        4
        >>> parse_partition("[]").is_empty
        True

    """
    scanner = _Scanner(text)
    lam = _partition(scanner)
    scanner.end()
    return lam


def parse_partitions(text: str) -> list[Partition]:
    """Parse a tuple but keep the entries in the order they were written.

    Form spaces name their symbols in declaration order, so they need the
    written order rather than the canonical one.
    """
    scanner = _Scanner(text)
    scanner.expect("[")
    entries: list[Partition] = []
    if scanner.peek() != "]":
        entries.append(_partition(scanner))
        while scanner.peek() == ",":
            scanner.pos += 1
            entries.append(_partition(scanner))
    scanner.expect("]")
    scanner.end()
    return entries


def parse_tuple(text: str) -> PartitionTuple:
    """Parse a tuple of partitions such as ``"[[2],[1,1]]"``.

    Example:
        >>> str(parse_tuple("[[1],[2]]"))
        '[[2],[1]]'
        >>> len(parse_tuple("[[]]"))
        1

    """
    return PartitionTuple(tuple(parse_partitions(text)))
