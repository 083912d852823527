"""Families of finite-level varieties, one ideal per level.

A :class:`LevelFamily` is a rule producing the ideal of X{K^n} for every n.
Recipes:

- ``affine``: the zero ideal, X = A^tuple
- ``origin``: all coordinates
- ``orbit``: index templates such as ``x_i*y_j - x_j*y_i`` instantiated
  for all indices i, j, k, l in 1..n
- ``minors``: rank at most r, via the (r+1)-minors of the symmetric matrix of
  a quadric or of the matrix whose rows are linear forms
- ``map_image``: closure of the image of a map
- ``shift``: the shift Sh_n of another family
"""

import itertools
import logging
import re
from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cache

from glvar.equimap import FormSpace, WeightedMap, coordinate_name
from glvar.glvariety.exceptions import VarietyError
from glvar.glvariety.images import image_closure_level
from glvar.glvariety.variety import FiniteLevelVariety
from glvar.partitions import PartitionTuple
from glvar.polyalg import Ideal, Monomial, Polynomial, PolynomialRing
from glvar.shift import shift_tuple

logger = logging.getLogger(__name__)

_INDEX = re.compile(r"(?<=_)([ijkl])\b")


class RecipeKind(str, Enum):
    """How a family produces its level-n ideal."""

    AFFINE = "affine"
    ORIGIN = "origin"
    ORBIT = "orbit"
    MINORS = "minors"
    MAP_IMAGE = "map_image"
    SHIFT = "shift"


@dataclass(frozen=True)
class LevelFamily:
    """A GL-variety presented level by level.

    Attributes:
        space: Forms of the ambient A^tuple
        kind: Recipe producing the ideals
        templates: Orbit generator templates (``orbit``)
        rank: Rank bound r (``minors``)
        map: Map whose image closure is taken (``map_image``)
        base: Family being shifted (``shift``)
        shift: Shift amount (``shift``)
        name: Optional label used in reports

    Example:
        >>> space = FormSpace.from_weights([1, 1])
        >>> X = LevelFamily(space, RecipeKind.ORBIT, templates=("x_i*y_j - x_j*y_i",))
        >>> str(X.ideal_at(2))
        '(-x_2*y_1 + x_1*y_2)'

    """

    space: FormSpace
    kind: RecipeKind
    templates: tuple[str, ...] = ()
    rank: int = 0
    map: WeightedMap | None = None
    base: "LevelFamily | None" = None
    shift: int = 0
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", RecipeKind(self.kind))
        object.__setattr__(self, "templates", tuple(self.templates))
        if self.kind is RecipeKind.ORBIT:
            if not self.templates:
                raise VarietyError("An orbit family needs at least one template")
            if any(w != 1 for w in self.space.weights):
                raise VarietyError(f"Orbit templates need weight-one forms only, got {self.space}")
        if self.kind is RecipeKind.MINORS:
            if self.rank < 0:
                raise ValueError(f"rank must be non-negative, got {self.rank}")
            if not _is_quadric(self.space) and any(w != 1 for w in self.space.weights):
                raise VarietyError(f"Minors need one quadric or only linear forms, got {self.space}")
        if self.kind is RecipeKind.MAP_IMAGE:
            if self.map is None:
                raise VarietyError("A map_image family needs a map")
            if self.map.target != self.space:
                raise VarietyError(f"Map target {self.map.target} differs from {self.space}")
        if self.kind is RecipeKind.SHIFT:
            if self.base is None or self.base.kind is RecipeKind.SHIFT:
                raise VarietyError("A shift family needs an unshifted base family")
            if self.shift < 1:
                raise ValueError(f"shift must be positive, got {self.shift}")
            if self.base.space != self.space:
                raise VarietyError("A shift family shares the space of its base")

    @property
    def degree(self) -> int:
        """Largest entry size of the tuple; bounds the degree of the dimension polynomial."""
        return self.space.partition_tuple.degree

    @property
    def partition_tuple(self) -> PartitionTuple:
        """Tuple of the ambient; for a shift family, the shifted tuple sh_shift(tuple)."""
        if self.kind is RecipeKind.SHIFT:
            return shift_tuple(self.shift, self.space.partition_tuple)
        return self.space.partition_tuple

    def ring_at(self, n: int) -> PolynomialRing:
        """Coordinate ring of the ambient of X{K^n}."""
        if n < 1:
            raise ValueError(f"level must be at least 1, got {n}")
        if self.kind is RecipeKind.SHIFT:
            return PolynomialRing(shift_coordinate_names(self.space, self.shift, n))
        return self.space.level_ring(n)

    def ideal_at(self, n: int, budget: int | None = None) -> Ideal:
        """Ideal of X{K^n} in :meth:`ring_at` ``(n)``."""
        ring = self.ring_at(n)
        match self.kind:
            case RecipeKind.AFFINE:
                return Ideal.zero(ring)
            case RecipeKind.ORIGIN:
                return Ideal(ring, ring.gens())
            case RecipeKind.ORBIT:
                return orbit_ideal(self.templates, ring, n)
            case RecipeKind.MINORS:
                return minors_ideal(self.space, self.rank, n)
            case RecipeKind.MAP_IMAGE:
                assert self.map is not None
                return image_closure_level(self.map, n, budget).ideal
            case RecipeKind.SHIFT:
                assert self.base is not None
                inner = self.base.ideal_at(n + self.shift, budget)
                return Ideal(ring, tuple(g.with_ring(ring) for g in inner.generators))
        raise VarietyError(f"Unknown recipe {self.kind}")

    def variety_at(self, n: int, budget: int | None = None) -> FiniteLevelVariety:
        shift = self.shift if self.kind is RecipeKind.SHIFT else 0
        return FiniteLevelVariety(self.space, n, self.ideal_at(n, budget), shift)

    def __str__(self) -> str:
        label = self.name or self.kind.value
        if self.kind is RecipeKind.SHIFT:
            return f"Sh_{self.shift}({self.base})"
        return f"{label} in {self.space}"


def affine_family(space: FormSpace | Sequence[int]) -> LevelFamily:
    """A^tuple itself."""
    space = space if isinstance(space, FormSpace) else FormSpace.from_weights(space)
    return LevelFamily(space, RecipeKind.AFFINE)


def rank_one_family(names: Sequence[str] = ("x", "y")) -> LevelFamily:
    """Pairs of linear forms of rank at most one, cut out by x_i*y_j - x_j*y_i."""
    x, y = names
    space = FormSpace.from_weights([1, 1], names)
    return LevelFamily(
        space, RecipeKind.ORBIT, templates=(f"{x}_i*{y}_j - {x}_j*{y}_i",), name="rank<=1"
    )


def shift_level(X: LevelFamily, n: int) -> LevelFamily:
    """Sh_n(X): the family whose level-d ideal is the level-(n+d) ideal of X.

    Coordinates supported in the first n slots are relabelled with an ``s``
    suffix on the symbol (``xs_1``, ``ys_1`` for n = 1); the other slots are
    renumbered from 1. Shifting a shift adds the amounts.

    Example:
        >>> X = shift_level(rank_one_family(), 1)
        >>> X.ring_at(2).variables
        ('xs_1', 'x_1', 'x_2', 'ys_1', 'y_1', 'y_2')

    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if X.kind is RecipeKind.SHIFT:
        assert X.base is not None
        return LevelFamily(X.space, RecipeKind.SHIFT, base=X.base, shift=X.shift + n)
    return LevelFamily(X.space, RecipeKind.SHIFT, base=X, shift=n, name=X.name)


def shift_coordinate_name(
    symbol: str, weight: int, exponent: Monomial, n: int, stem: str | None = None
) -> str:
    """Name of a level-(n+d) coordinate seen at level d of Sh_n.

    Exponents supported in the first n slots get the ``stem`` symbol
    (default ``symbol + "s"``), those supported in the last d slots get their
    level-d name, mixed ones keep the full name.
    """
    head, tail = exponent[:n], exponent[n:]
    if not any(tail):
        return coordinate_name(stem or symbol + "s", weight, head)
    if not any(head):
        return coordinate_name(symbol, weight, tail)
    return coordinate_name(symbol, weight, exponent)


def shift_stems(space: FormSpace) -> dict[str, str]:
    """Symbol for the first-slot coordinates of each form, distinct from every symbol.

    Example:
        >>> shift_stems(FormSpace(("x", "xs"), (1, 1)))
        {'x': 'xs1', 'xs': 'xss'}

    """
    scope = PolynomialRing(space.symbols)
    stems: dict[str, str] = {}
    for symbol in space.symbols:
        stem = scope.fresh_name(symbol + "s")
        scope = scope.extend([stem])
        stems[symbol] = stem
    return stems


def shift_coordinate_names(space: FormSpace, shift: int, d: int) -> tuple[str, ...]:
    """Coordinate names of Sh_shift(A^space) at level d, in the order of level ``shift + d``."""
    stems = shift_stems(space)
    names: list[str] = []
    for symbol, weight in zip(space.symbols, space.weights, strict=True):
        for _, m in space.coordinates(symbol, shift + d):
            names.append(shift_coordinate_name(symbol, weight, m, shift, stems[symbol]))
    return tuple(names)


def orbit_ideal(templates: Sequence[str], ring: PolynomialRing, n: int) -> Ideal:
    """Instantiate index templates for every choice of indices in 1..n.

    Generators equal up to sign are kept once.
    """
    gens: list[Polynomial] = []
    seen: set[Polynomial] = set()
    for template in templates:
        letters = sorted(set(_INDEX.findall(template)))
        for values in itertools.product(range(1, n + 1), repeat=len(letters)):
            assignment = dict(zip(letters, values, strict=True))
            text = _INDEX.sub(lambda m: str(assignment[m.group(1)]), template)
            p = ring.parse(text)
            if p and p not in seen and -p not in seen:
                seen.add(p)
                gens.append(p)
    logger.debug("Orbit of %d templates at level %d: %d generators", len(templates), n, len(gens))
    return Ideal(ring, tuple(gens))


def _is_quadric(space: FormSpace) -> bool:
    return space.weights == (2,)


def _matrix(space: FormSpace, n: int) -> list[list[Polynomial]]:
    ring = space.level_ring(n)
    if _is_quadric(space):
        (symbol,) = space.symbols
        entries: dict[tuple[int, int], Polynomial] = {}
        for name, m in space.coordinates(symbol, n):
            support = [i for i, e in enumerate(m) for _ in range(e)]
            i, j = support
            scale = Fraction(1) if i == j else Fraction(1, 2)
            entries[i, j] = entries[j, i] = ring.gen(name) * scale
        return [[entries[i, j] for j in range(n)] for i in range(n)]
    return [[ring.gen(name) for name, _ in space.coordinates(s, n)] for s in space.symbols]


def _determinant(rows: Sequence[Sequence[Polynomial]]) -> Polynomial:
    size = len(rows)

    @cache
    def minor(row: int, columns: tuple[int, ...]) -> Polynomial:
        if row == size:
            return rows[0][0].ring.one()
        total = rows[0][0].ring.zero()
        for k, c in enumerate(columns):
            term = rows[row][c] * minor(row + 1, columns[:k] + columns[k + 1 :])
            total = total + term if k % 2 == 0 else total - term
        return total

    return minor(0, tuple(range(size)))


def minors_ideal(space: FormSpace, rank: int, n: int) -> Ideal:
    """Ideal of (rank+1)-minors of the coordinate matrix at level n, made monic."""
    ring = space.level_ring(n)
    matrix = _matrix(space, n)
    size = rank + 1
    if size > min(len(matrix), n):
        return Ideal.zero(ring)
    gens: list[Polynomial] = []
    for rows in itertools.combinations(range(len(matrix)), size):
        for cols in itertools.combinations(range(n), size):
            det = _determinant([[matrix[r][c] for c in cols] for r in rows])
            if det:
                gens.append(det.monic())
    return Ideal(ring, tuple(gens))


def minors_family(rank: int, symbol: str = "q") -> LevelFamily:
    """Quadrics of rank at most ``rank``."""
    return LevelFamily(
        FormSpace((symbol,), (2,)), RecipeKind.MINORS, rank=rank, name=f"rank<={rank}"
    )


def minors_stratum(r: int, n: int, symbol: str = "q") -> FiniteLevelVariety:
    """The rank-at-most-r quadrics at level n, inside A^[(2)]{K^n}.

    Example:
        >>> minors_stratum(0, 2).ideal.generators == minors_stratum(0, 2).ideal.ring.gens()
        True

    """
    if n < 1:
        raise ValueError(f"level must be at least 1, got {n}")
    return minors_family(r, symbol).variety_at(n)
