"""Closed images of equivariant maps at a fixed level, and image membership."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from glvar.equimap import InstantiatedMap, ParameterMode, WeightedMap, instantiate
from glvar.glvariety.exceptions import ArityError
from glvar.glvariety.variety import FiniteLevelVariety
from glvar.polyalg import (
    Ideal,
    Polynomial,
    PolynomialRing,
    eliminate,
    find_rational_point,
    is_inconsistent,
)

logger = logging.getLogger(__name__)

INPUT_PREFIX = "in_"


class MembershipStatus(str, Enum):
    """Where a point lies relative to the image of a map."""

    MEMBER = "member"
    CLOSURE_ONLY = "closure_only"
    NON_MEMBER = "non_member"


@dataclass(frozen=True)
class MembershipResult:
    """Outcome of :func:`image_membership`.

    Attributes:
        status: member, closure_only or non_member
        level: Level n of the test
        witness: A rational preimage, when one was found
        certificate: Short text describing how the status was decided

    """

    status: MembershipStatus
    level: int
    witness: dict[str, Fraction] | None
    certificate: str

    @property
    def is_member(self) -> bool:
        return self.status is MembershipStatus.MEMBER


def _graph(f: WeightedMap, n: int) -> tuple[InstantiatedMap, PolynomialRing, tuple[Polynomial, ...]]:
    """Instantiate ``f`` with inputs renamed away from the target coordinates.

    Returns the instantiated map, the renamed input ring and the outputs
    expressed in it.
    """
    inst = instantiate(f, n, ParameterMode.INPUTS)
    clash = set(inst.ring.variables) & set(inst.output_names)
    if not clash:
        return inst, inst.ring, inst.outputs
    ring = inst.ring.rename({v: INPUT_PREFIX + v for v in inst.ring.variables})
    return inst, ring, tuple(p.with_ring(ring) for p in inst.outputs)


def image_closure_level(f: WeightedMap, n: int, budget: int | None = None) -> FiniteLevelVariety:
    """Closure of the image of ``f`` at level ``n``.

    Parameters of ``f`` are treated as inputs, so a map with base B gives the
    closure of the image of B x A^source{K^n}.

    Args:
        f: The map
        n: Level, at least 1
        budget: Gröbner step budget

    Returns:
        Variety in the target coordinates cut out by the elimination ideal
        of the graph

    Raises:
        BudgetExceededError: If the elimination runs out of budget

    Example:
        >>> from glvar.equimap import rank_one_map
        >>> str(image_closure_level(rank_one_map(), 2).ideal)
        '(x_2*y_1 - x_1*y_2)'

    """
    inst, ring, outputs = _graph(f, n)
    graph_ring = ring.extend(inst.output_names)
    graph = Ideal(
        graph_ring,
        tuple(
            graph_ring.gen(name) - graph_ring.coerce(p)
            for name, p in zip(inst.output_names, outputs, strict=True)
        ),
    )
    logger.info("Eliminating %d inputs of %s at level %d", ring.nvars, f, n)
    image = eliminate(graph, ring.variables, budget)
    return FiniteLevelVariety(f.target, n, image)


def _fiber(f: WeightedMap, n: int, values: Sequence[Fraction]) -> Ideal:
    inst = instantiate(f, n, ParameterMode.INPUTS)
    return Ideal(inst.ring, tuple(p - v for p, v in zip(inst.outputs, values, strict=True)))


def image_membership(
    f: WeightedMap,
    point: Sequence[int | Fraction],
    n: int,
    budget: int | None = None,
    witness_budget: int | None = None,
) -> MembershipResult:
    """Decide whether ``point`` lies in the image of ``f`` at level ``n``.

    Membership is over the algebraic closure: the point is a member iff its
    fiber ideal is consistent. A rational preimage is reported when the
    witness search finds one.

    Args:
        f: The map
        point: Target coordinates in the order of ``f.target.coordinate_names(n)``
        n: Level
        budget: Gröbner step budget
        witness_budget: Node budget for the rational witness search

    Raises:
        ArityError: If ``point`` has the wrong number of coordinates

    """
    expected = f.target.dimension(n)
    if len(point) != expected:
        raise ArityError(expected, len(point))
    values = [Fraction(v) for v in point]
    fiber = _fiber(f, n, values)
    if not is_inconsistent(fiber, budget):
        witness = find_rational_point(fiber, witness_budget, budget)
        certificate = "fiber consistent"
        if witness is not None:
            certificate += ", rational preimage found"
        return MembershipResult(MembershipStatus.MEMBER, n, witness, certificate)
    closure = image_closure_level(f, n, budget)
    if closure.contains_point(values):
        return MembershipResult(
            MembershipStatus.CLOSURE_ONLY, n, None, "fiber GB = {1}, closure equations vanish"
        )
    return MembershipResult(
        MembershipStatus.NON_MEMBER, n, None, "fiber GB = {1}, a closure equation is nonzero"
    )


def sample_image_points(
    f: WeightedMap,
    n: int,
    count: int,
    seed: int = 0,
    low: int = -5,
    high: int = 5,
) -> list[list[Fraction]]:
    """Images of ``count`` random integer inputs, drawn with a seeded generator."""
    inst = instantiate(f, n, ParameterMode.INPUTS)
    rng = np.random.default_rng(seed)
    samples = rng.integers(low, high, size=(count, len(inst.inputs)), endpoint=True)
    points: list[list[Fraction]] = []
    for row in samples:
        values = {name: Fraction(int(v)) for name, v in zip(inst.inputs, row, strict=True)}
        points.append(inst(values))
    return points
