"""Finite Schur expansions of polynomial representations."""

from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field

from glvar.partitions import Partition
from glvar.schur.dimension import schur_dim


@dataclass(frozen=True)
class SchurExpansion:
    """A representation written as Σ mult(λ)·V_λ, complete up to a degree.

    Attributes:
        terms: Positive multiplicity for each recorded partition
        degree_bound: The expansion is complete for partitions of size at most this

    Example:
        >>> e = SchurExpansion({Partition.of(2): 1, Partition.of(1, 1): 1}, 2)
        >>> e.dimension(3)
        9

    """

    terms: Mapping[Partition, int] = field(default_factory=dict)
    degree_bound: int = 0

    def __post_init__(self) -> None:
        if self.degree_bound < 0:
            raise ValueError(f"degree_bound must be non-negative, got {self.degree_bound}")
        for lam, mult in self.terms.items():
            if mult <= 0:
                raise ValueError(f"Multiplicity of {lam} must be positive, got {mult}")
            if lam.size > self.degree_bound:
                raise ValueError(f"{lam} exceeds degree bound {self.degree_bound}")
        object.__setattr__(self, "terms", dict(self.terms))

    def multiplicity(self, lam: Partition) -> int:
        """Multiplicity of V_λ; zero if not recorded.

        Raises:
            ValueError: If ``|λ|`` exceeds the degree bound

        """
        if lam.size > self.degree_bound:
            raise ValueError(f"{lam} exceeds degree bound {self.degree_bound}")
        return self.terms.get(lam, 0)

    def degree_part(self, d: int) -> "SchurExpansion":
        """The degree-``d`` summand."""
        return SchurExpansion({lam: m for lam, m in self.terms.items() if lam.size == d}, max(d, 0))

    def dimension(self, n: int) -> int:
        """Σ mult(λ)·dim S_λ(K^n) over the recorded terms."""
        return sum(m * schur_dim(lam, n) for lam, m in self.terms.items())

    def items(self) -> Iterator[tuple[Partition, int]]:
        """Terms by increasing size, then descending parts."""
        for lam in sorted(self.terms, key=lambda p: (p.size, tuple(-x for x in p.parts))):
            yield lam, self.terms[lam]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{m}*V{lam}" if m != 1 else f"V{lam}" for lam, m in self.items())
