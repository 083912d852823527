"""Finitely generated ideals."""

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from glvar.polyalg.exceptions import RingMismatchError
from glvar.polyalg.parser import parse_poly
from glvar.polyalg.polynomial import Polynomial, PolynomialRing


@dataclass(frozen=True)
class Ideal:
    """The ideal generated by ``generators`` in ``ring``.

    Zero generators are dropped, so the zero ideal has no generators.

    Example:
        >>> I = Ideal.from_strings(("x", "y"), ["x*y", "0"])
        >>> len(I.generators)
        1

    """

    ring: PolynomialRing
    generators: tuple[Polynomial, ...] = ()

    def __post_init__(self) -> None:
        gens: list[Polynomial] = []
        seen: set[Polynomial] = set()
        for g in self.generators:
            if g.ring != self.ring:
                raise RingMismatchError(f"Generator {g} lives in {g.ring}, expected {self.ring}")
            if g and g not in seen:
                seen.add(g)
                gens.append(g)
        object.__setattr__(self, "generators", tuple(gens))

    @classmethod
    def from_strings(
        cls,
        variables: Sequence[str] | PolynomialRing,
        generators: Iterable[str],
    ) -> "Ideal":
        ring = variables if isinstance(variables, PolynomialRing) else PolynomialRing(tuple(variables))
        return cls(ring, tuple(parse_poly(text, ring) for text in generators))

    @classmethod
    def zero(cls, ring: PolynomialRing) -> "Ideal":
        return cls(ring)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise RingMismatchError(f"Cannot add ideals of {self.ring} and {other.ring}")
        return Ideal(self.ring, self.generators + other.generators)

    def with_generators(self, extra: Iterable[Polynomial]) -> "Ideal":
        return Ideal(self.ring, self.generators + tuple(extra))

    def coerce(self, ring: PolynomialRing) -> "Ideal":
        """The same generators re-expressed in ``ring`` (matched by name)."""
        return Ideal(ring, tuple(ring.coerce(g) for g in self.generators))

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.generators) + ")"
