"""Form spaces: named symbols standing for symmetric-power factors.

A pure single-row tuple [(d_1), ..., (d_r)] is modelled by r symbols of
weights d_1, ..., d_r. At level n the symbol of weight d becomes a generic
degree-d form in n variables, with one coordinate per monomial.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import lru_cache

from glvar.equimap.exceptions import NotSingleRowError
from glvar.partitions import Partition, PartitionTuple
from glvar.polyalg import Monomial, PolynomialRing
from glvar.schur import schur_dim

SOURCE_POOLS: dict[int, tuple[str, ...]] = {
    1: ("x", "y", "z", "u", "v", "w"),
    2: ("f", "g", "h", "p", "q", "r"),
    3: ("k", "l", "m"),
    4: ("a", "b", "d", "e"),
}
TARGET_POOL: tuple[str, ...] = tuple("abcdefghijklmnopqrstuvwxyz")


@lru_cache(maxsize=None)
def weighted_monomials(weights: tuple[int, ...], degree: int) -> tuple[Monomial, ...]:
    """Exponent vectors of weighted degree ``degree``, in descending lex order.

    Example:
        >>> weighted_monomials((1, 1, 2), 2)
        ((2, 0, 0), (1, 1, 0), (0, 2, 0), (0, 0, 1))

    """
    if any(w <= 0 for w in weights):
        raise ValueError(f"Weights must be positive, got {weights}")
    if not weights:
        return ((),) if degree == 0 else ()
    head, rest = weights[0], weights[1:]
    out: list[Monomial] = []
    for e in range(degree // head, -1, -1):
        for tail in weighted_monomials(rest, degree - e * head):
            out.append((e, *tail))
    return tuple(out)


def level_monomials(degree: int, n: int) -> tuple[Monomial, ...]:
    """Monomials of degree ``degree`` in ``n`` variables, descending lex."""
    if n < 0:
        raise ValueError(f"level must be non-negative, got {n}")
    return weighted_monomials((1,) * n, degree)


def coordinate_name(symbol: str, weight: int, exponent: Monomial) -> str:
    """Name of the coordinate of ``symbol`` at ``exponent``.

    Weight-one symbols are named ``x_1 ... x_n``; higher weights spell out
    the exponent vector, e.g. ``f_2_0`` for the x_1^2 coefficient of f.
    """
    if weight == 1:
        return f"{symbol}_{exponent.index(1) + 1}"
    return symbol + "".join(f"_{e}" for e in exponent)


def _pick(pool: Iterable[str], taken: set[str]) -> str | None:
    return next((name for name in pool if name not in taken), None)


def default_names(
    weights: Sequence[int],
    taken: Iterable[str] = (),
    target: bool = False,
) -> tuple[str, ...]:
    """Choose symbol names for forms of the given weights.

    Source symbols come from per-weight pools (x, y, ... for linear forms,
    f, g, ... for quadrics); target symbols come from a, b, c, ....
    """
    used = set(taken)
    names: list[str] = []
    overflow: dict[int, int] = {}
    for w in weights:
        pool = TARGET_POOL if target else SOURCE_POOLS.get(w, ())
        name = _pick(pool, used)
        while name is None:
            overflow[w] = overflow.get(w, 0) + 1
            candidate = f"t{overflow[w]}" if target else f"s{w}_{overflow[w]}"
            name = candidate if candidate not in used else None
        used.add(name)
        names.append(name)
    return tuple(names)


@dataclass(frozen=True)
class FormSpace:
    """An ordered list of named forms: the affine space A^tuple.

    Attributes:
        symbols: Symbol names, in declaration order
        weights: Degree of each form (the single row of its partition)

    Example:
        >>> space = FormSpace.from_weights([1, 1, 2, 2, 2])
        >>> space.symbols
        ('x', 'y', 'f', 'g', 'h')
        >>> space.dimension(2)
        13

    """

    symbols: tuple[str, ...]
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        symbols = tuple(self.symbols)
        weights = tuple(self.weights)
        if len(symbols) != len(weights):
            raise ValueError(f"Got {len(weights)} weights for {len(symbols)} symbols")
        for w in weights:
            if w <= 0:
                raise NotSingleRowError(f"[{w}]" if w else "[]")
        PolynomialRing(symbols, weights)
        object.__setattr__(self, "symbols", symbols)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def from_weights(
        cls,
        weights: Sequence[int],
        names: Sequence[str] | None = None,
        taken: Iterable[str] = (),
        target: bool = False,
    ) -> "FormSpace":
        chosen = tuple(names) if names is not None else default_names(weights, taken, target)
        return cls(chosen, tuple(weights))

    @classmethod
    def from_partitions(
        cls,
        entries: Iterable[Partition],
        names: Sequence[str] | None = None,
        taken: Iterable[str] = (),
        target: bool = False,
    ) -> "FormSpace":
        """Build a form space from single-row partitions, keeping their order.

        Raises:
            NotSingleRowError: If an entry is empty or has several rows

        """
        weights: list[int] = []
        for lam in entries:
            if not lam.is_single_row:
                raise NotSingleRowError(str(lam))
            weights.append(lam.size)
        return cls.from_weights(weights, names, taken, target)

    @classmethod
    def from_tuple(
        cls,
        t: PartitionTuple,
        names: Sequence[str] | None = None,
        taken: Iterable[str] = (),
        target: bool = False,
    ) -> "FormSpace":
        return cls.from_partitions(t.entries, names, taken, target)

    @property
    def partition_tuple(self) -> PartitionTuple:
        return PartitionTuple(tuple(Partition.of(w) for w in self.weights))

    def ring(self) -> PolynomialRing:
        return PolynomialRing(self.symbols, self.weights)

    def weight_of(self, symbol: str) -> int:
        return self.weights[self.symbols.index(symbol)]

    def coordinates(self, symbol: str, n: int) -> list[tuple[str, Monomial]]:
        """(name, exponent) pairs of the coordinates of ``symbol`` at level n."""
        w = self.weight_of(symbol)
        return [(coordinate_name(symbol, w, m), m) for m in level_monomials(w, n)]

    def coordinate_names(self, n: int) -> tuple[str, ...]:
        return tuple(name for s in self.symbols for name, _ in self.coordinates(s, n))

    def level_ring(self, n: int) -> PolynomialRing:
        """Coordinate ring of A^tuple{K^n}."""
        return PolynomialRing(self.coordinate_names(n))

    def dimension(self, n: int) -> int:
        """dim A^tuple{K^n} = Σ dim S^{d_i}(K^n)."""
        return sum(schur_dim(Partition.of(w), n) for w in self.weights)

    def renamed(self, names: Sequence[str]) -> "FormSpace":
        return FormSpace(tuple(names), self.weights)

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return "[" + ",".join(f"{s}:{w}" for s, w in zip(self.symbols, self.weights, strict=True)) + "]"
