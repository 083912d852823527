"""Spaces of equivariant maps A^lam -> X."""

import logging
from dataclasses import dataclass

from glvar.equimap import FormSpace, ParameterMode, generic_map, instantiate
from glvar.glvariety.exceptions import VarietyError
from glvar.glvariety.families import LevelFamily, RecipeKind
from glvar.partitions import PartitionTuple
from glvar.polyalg import Ideal, PolynomialRing, ideal_dimension, ideals_equal

logger = logging.getLogger(__name__)

DEFAULT_LEVEL = 3


@dataclass(frozen=True)
class MappingSpaceResult:
    """Equations of the space of maps A^source -> X, computed at two levels.

    Attributes:
        source: The source tuple
        symbols: Coefficient symbols of the generic map
        level: The level N
        ideal: Equations obtained at level N
        next_ideal: Equations obtained at level N + 1
        stabilized: Whether the two ideals agree (evidence, not a proof)
        dimension: Dimension of the mapping space according to ``ideal``

    """

    source: PartitionTuple
    symbols: tuple[str, ...]
    level: int
    ideal: Ideal
    next_ideal: Ideal
    stabilized: bool
    dimension: int


def _equations(lam_space: FormSpace, X: LevelFamily, n: int, budget: int | None) -> Ideal:
    g, symbols = generic_map(lam_space, X.space)
    inst = instantiate(g, n, ParameterMode.KEEP)
    coefficient_ring = PolynomialRing(symbols)
    pullback = dict(zip(inst.output_names, inst.outputs, strict=True))
    coordinates = lam_space.coordinate_names(n)
    gens = []
    for h in X.ideal_at(n, budget).generators:
        expanded = h.substitute(pullback, inst.ring)
        for part in expanded.coefficients(coordinates).values():
            gens.append(coefficient_ring.coerce(part).monic())
    return Ideal(coefficient_ring, tuple(gens))


def mapping_space(
    lam: PartitionTuple,
    X: LevelFamily,
    level: int = DEFAULT_LEVEL,
    budget: int | None = None,
) -> MappingSpaceResult:
    """Equations on the coefficients of a generic map A^lam -> A^tuple landing in X.

    The pulled-back equations of X{K^N} must vanish identically in the
    source coordinates; every coefficient of every pullback is a generator.
    The computation is repeated at N + 1 and the two ideals compared.

    Args:
        lam: Pure single-row source tuple
        X: Target family (not a shift)
        level: The level N
        budget: Gröbner step budget

    Raises:
        NotSingleRowError: If ``lam`` has an entry that is not a single row
        VarietyError: If ``X`` is a shift family

    Example:
        >>> from glvar.glvariety.families import rank_one_family
        >>> result = mapping_space(PartitionTuple.from_parts([[1]]), rank_one_family())
        >>> result.symbols, result.ideal.is_zero, result.stabilized
        (('c1_1', 'c2_1'), True, True)

    """
    if X.kind is RecipeKind.SHIFT:
        raise VarietyError("Mapping spaces into shift families are not supported")
    if level < 1:
        raise ValueError(f"level must be at least 1, got {level}")
    source = FormSpace.from_tuple(lam, taken=X.space.symbols)
    _, symbols = generic_map(source, X.space)
    ideal = _equations(source, X, level, budget)
    next_ideal = _equations(source, X, level + 1, budget)
    stabilized = ideals_equal(ideal, next_ideal, budget)
    if not stabilized:
        logger.warning("Mapping space equations changed between levels %d and %d", level, level + 1)
    return MappingSpaceResult(
        source=lam,
        symbols=symbols,
        level=level,
        ideal=ideal,
        next_ideal=next_ideal,
        stabilized=stabilized,
        dimension=ideal_dimension(ideal, budget),
    )
