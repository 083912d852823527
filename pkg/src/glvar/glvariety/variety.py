"""Varieties at a fixed level."""

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction

from glvar.equimap import FormSpace
from glvar.glvariety.exceptions import ArityError, VarietyError
from glvar.partitions import PartitionTuple
from glvar.polyalg import Ideal, ideal_dimension


@dataclass(frozen=True)
class FiniteLevelVariety:
    """The closed subvariety X{K^n} of A^tuple{K^n} cut out by ``ideal``.

    For the shift of a family, X{K^n} is the base family at level
    ``n + shift`` with renamed coordinates, so the ambient has
    dim A^tuple{K^(n+shift)} coordinates.

    Attributes:
        space: Forms of the ambient A^tuple
        level: The level n
        ideal: Ideal in the coordinates of the ambient at this level
        shift: Shift applied to the family this variety came from

    """

    space: FormSpace
    level: int
    ideal: Ideal
    shift: int = 0

    def __post_init__(self) -> None:
        if self.level < 1:
            raise ValueError(f"level must be at least 1, got {self.level}")
        expected = self.space.dimension(self.level + self.shift)
        if self.ideal.ring.nvars != expected:
            raise VarietyError(
                f"Ideal ring has {self.ideal.ring.nvars} variables, "
                f"expected {expected} for {self.space} at level {self.level}"
            )

    @property
    def partition_tuple(self) -> PartitionTuple:
        return self.space.partition_tuple

    @property
    def coordinates(self) -> tuple[str, ...]:
        return self.ideal.ring.variables

    @property
    def ambient_dimension(self) -> int:
        return self.ideal.ring.nvars

    def dimension(self, budget: int | None = None) -> int:
        return ideal_dimension(self.ideal, budget)

    def point_map(self, point: Sequence[int | Fraction]) -> dict[str, Fraction]:
        """Name the coordinates of a point given in ambient order.

        Raises:
            ArityError: If the point has the wrong length

        """
        if len(point) != self.ambient_dimension:
            raise ArityError(self.ambient_dimension, len(point))
        return {name: Fraction(v) for name, v in zip(self.coordinates, point, strict=True)}

    def contains_point(self, point: Sequence[int | Fraction] | Mapping[str, Fraction]) -> bool:
        """True iff every generator vanishes at ``point``."""
        values = point if isinstance(point, Mapping) else self.point_map(point)
        return all(not g.evaluate(values) for g in self.ideal.generators)

    def __str__(self) -> str:
        return f"{self.partition_tuple}{{K^{self.level}}}: {self.ideal}"
