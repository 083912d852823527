"""Factorization through smaller tuples, and typicality.

A map f: A^source -> A^target factors through A^mid if f = δ ∘ γ for some
equivariant γ: A^source -> A^mid and δ: A^mid -> A^target. A map (with a
point as base) is typical iff it factors through no proper subtuple of its
source.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from glvar.config import load_settings
from glvar.equimap.evaluation import jacobian_rank
from glvar.equimap.exceptions import AbstractCoefficientError, MapError
from glvar.equimap.forms import FormSpace
from glvar.equimap.maps import WeightedMap, compose, equate_maps, generic_map, maps_equal
from glvar.partitions import PartitionTuple
from glvar.polyalg import BudgetExceededError, groebner, search_rational_point, triangular_point

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    """Answer of a factorization check."""

    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class Certificate(str, Enum):
    """How a factorization verdict was reached."""

    INCLUSION = "inclusion"
    WITNESS = "witness"
    NONCONSTRUCTIVE = "nonconstructive"
    DIMENSION = "dimension"
    GROEBNER = "groebner"
    BUDGET = "budget"


class Typicality(str, Enum):
    TYPICAL = "typical"
    NOT_TYPICAL = "not_typical"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Factorization:
    """A witness f = delta ∘ gamma."""

    gamma: WeightedMap
    delta: WeightedMap


@dataclass(frozen=True)
class FactorizationResult:
    """Outcome of :func:`factors_through`.

    Attributes:
        mid: The tuple the map was tested against
        verdict: yes, no or unknown
        certificate: How the verdict was reached
        level: Level of the dimension certificate, when that decided it
        witness: Explicit factorization, when one was found
        unknowns: Number of coefficient symbols in the factorization system
        detail: Human-readable summary of the certificate

    """

    mid: PartitionTuple
    verdict: Verdict
    certificate: Certificate
    level: int | None = None
    witness: Factorization | None = None
    unknowns: int = 0
    detail: str = ""


@dataclass(frozen=True)
class TypicalityResult:
    """Outcome of :func:`is_typical`.

    Attributes:
        verdict: typical, not_typical or unknown
        witness: Smallest-magnitude proper subtuple the map factors through
        checks: Every factorization check that was actually run, in order

    """

    verdict: Typicality
    witness: PartitionTuple | None = None
    checks: tuple[FactorizationResult, ...] = field(default=())


def _mid_space(f: WeightedMap, mid: PartitionTuple) -> FormSpace:
    return FormSpace.from_tuple(mid, taken=(*f.source.symbols, *f.target.symbols))


def _inclusion(f: WeightedMap, space: FormSpace) -> Factorization | None:
    """Factor through a tuple containing the source by including it."""
    free = list(zip(space.symbols, space.weights, strict=True))
    matched: dict[str, str] = {}
    for symbol, weight in zip(f.source.symbols, f.source.weights, strict=True):
        slot = next((s for s, w in free if w == weight), None)
        if slot is None:
            return None
        free.remove((slot, weight))
        matched[symbol] = slot
    gamma_bodies = []
    source_ring = f.source.ring()
    back = {slot: symbol for symbol, slot in matched.items()}
    for slot in space.symbols:
        gamma_bodies.append(source_ring.gen(back[slot]) if slot in back else source_ring.zero())
    gamma = WeightedMap(f.source, space, tuple(gamma_bodies))
    delta_ring = space.ring()
    images = {symbol: delta_ring.gen(slot) for symbol, slot in matched.items()}
    delta_bodies = tuple(source_ring.coerce(b).substitute(images, delta_ring) for b in f.bodies)
    delta = WeightedMap(space, f.target, delta_bodies)
    return Factorization(gamma, delta)


def factors_through(
    f: WeightedMap,
    mid: PartitionTuple,
    budget: int | None = None,
    witness_budget: int | None = None,
    max_level: int | None = None,
) -> FactorizationResult:
    """Decide whether ``f`` factors through A^mid.

    The checks run in order:

    1. If ``mid`` contains the source, include the source into it.
    2. Dimension certificate: if for some level n ≤ ``max_level`` the
       Jacobian rank of f exceeds dim A^mid{K^n}, the image is too big: no.
    3. Build generic γ (coefficients ``c``) and δ (coefficients ``d``) and
       the ideal of equate_maps(f, δ ∘ γ). A rational point found by the
       propagation search gives a witness.
    4. Otherwise a Gröbner basis decides: {1} means no. For a consistent
       system, back-substitution through a lex basis (γ fixed first) looks
       for a witness; failing that the answer is yes without one.

    Args:
        f: A map without parameters
        mid: Pure single-row tuple
        budget: Gröbner step budget
        witness_budget: Node budget for the witness search
        max_level: Highest level for the dimension certificate

    Returns:
        FactorizationResult; ``unknown`` only when the Gröbner budget runs out

    Raises:
        NotSingleRowError: If ``mid`` is not pure single-row
        AbstractCoefficientError: If ``f`` has parameters

    """
    used = f.used_parameters()
    if used:
        raise AbstractCoefficientError(used)
    if f.parameters:
        f = f.substitute_parameters({p: 0 for p in f.parameters})
    space = _mid_space(f, mid)
    settings = load_settings()
    top = max_level if max_level is not None else settings.max_dimension_level

    if mid.contains(f.source_tuple):
        witness = _inclusion(f, space)
        if witness is not None:
            return FactorizationResult(
                mid, Verdict.YES, Certificate.INCLUSION, witness=witness, detail="source included in mid"
            )

    for n in range(1, top + 1):
        rank = jacobian_rank(f, n)
        room = space.dimension(n)
        if rank > room:
            logger.info("%s: Jacobian rank %d > %d at level %d", mid, rank, room, n)
            return FactorizationResult(
                mid,
                Verdict.NO,
                Certificate.DIMENSION,
                level=n,
                detail=f"level {n}: image dimension >= {rank} > {room} = dim A^{mid}",
            )

    gamma, c_symbols = generic_map(f.source, space, prefix="c")
    delta, d_symbols = generic_map(space, f.target, prefix="d")
    composite = compose(delta, gamma)
    system = equate_maps(f, composite)
    unknowns = len(c_symbols) + len(d_symbols)
    logger.info("%s: %d equations in %d unknowns", mid, len(system.generators), unknowns)

    def witnessed(point: dict[str, Fraction]) -> FactorizationResult:
        values: dict[str, int | Fraction] = dict(point)
        g = gamma.substitute_parameters({c: values.get(c, 0) for c in c_symbols})
        d = delta.substitute_parameters({s: values.get(s, 0) for s in d_symbols})
        if not maps_equal(f, compose(d, g)):
            raise MapError(f"Witness for {mid} failed verification")
        return FactorizationResult(
            mid,
            Verdict.YES,
            Certificate.WITNESS,
            witness=Factorization(g, d),
            unknowns=unknowns,
            detail=f"gamma = {g}; delta = {d}",
        )

    point = search_rational_point(system, witness_budget)
    if point is not None:
        return witnessed(point)

    try:
        basis = groebner(system, budget=budget)
    except BudgetExceededError as e:
        logger.warning("%s: %s", mid, e)
        return FactorizationResult(
            mid, Verdict.UNKNOWN, Certificate.BUDGET, unknowns=unknowns, detail=str(e)
        )
    if basis.is_unit:
        return FactorizationResult(
            mid,
            Verdict.NO,
            Certificate.GROEBNER,
            unknowns=unknowns,
            detail=f"GB = {{1}} after {basis.steps} S-pair reductions: no solutions",
        )
    # linear in delta's coefficients once gamma's are fixed
    point = triangular_point(basis.polynomials, witness_budget, budget, solve_first=c_symbols)
    if point is not None:
        return witnessed(point)
    return FactorizationResult(
        mid,
        Verdict.YES,
        Certificate.NONCONSTRUCTIVE,
        unknowns=unknowns,
        detail=f"consistent system, reduced GB has {len(basis)} elements",
    )


def is_typical(
    f: WeightedMap,
    budget: int | None = None,
    witness_budget: int | None = None,
    max_level: int | None = None,
) -> TypicalityResult:
    """Decide whether ``f`` factors through no proper subtuple of its source.

    Factoring through μ implies factoring through every tuple containing μ,
    so the maximal proper subtuples are checked first: if none of them
    works, the map is typical. Otherwise proper subtuples are scanned by
    increasing magnitude, skipping those inside a tuple already answered
    no, and the first yes is the witness.

    Example:
        >>> from glvar.equimap.library import zero_map
        >>> is_typical(zero_map([1], [2])).verdict
        <Typicality.NOT_TYPICAL: 'not_typical'>

    """
    source = f.source_tuple
    candidates = source.proper_subtuples()
    maximal = [t for t in candidates if len(t) == len(source) - 1]
    results: dict[PartitionTuple, FactorizationResult] = {}
    checks: list[FactorizationResult] = []

    def check(mid: PartitionTuple) -> FactorizationResult:
        result = factors_through(f, mid, budget, witness_budget, max_level)
        logger.info("factors through %s: %s (%s)", mid, result.verdict.value, result.certificate.value)
        results[mid] = result
        checks.append(result)
        return result

    for mid in sorted(maximal, key=lambda t: (t.magnitude(), [e.sort_key() for e in t.entries]), reverse=True):
        check(mid)
    if all(r.verdict is Verdict.NO for r in results.values()):
        return TypicalityResult(Typicality.TYPICAL, checks=tuple(checks))

    refuted = [t for t, r in results.items() if r.verdict is Verdict.NO]
    for mid in candidates:
        if any(t.contains(mid) for t in refuted):
            continue
        result = results.get(mid) or check(mid)
        if result.verdict is Verdict.YES:
            return TypicalityResult(Typicality.NOT_TYPICAL, witness=mid, checks=tuple(checks))
        if result.verdict is Verdict.NO:
            refuted.append(mid)
    return TypicalityResult(Typicality.UNKNOWN, checks=tuple(checks))
