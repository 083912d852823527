"""Ideal-level operations built on Gröbner bases."""

import logging
from collections.abc import Iterable

from glvar.polyalg.exceptions import RingMismatchError
from glvar.polyalg.groebner import groebner
from glvar.polyalg.ideal import Ideal
from glvar.polyalg.order import GREVLEX, MonomialOrder
from glvar.polyalg.polynomial import Polynomial

logger = logging.getLogger(__name__)


def is_inconsistent(ideal: Ideal, budget: int | None = None) -> bool:
    """True iff the reduced Gröbner basis is {1}.

    Over an algebraically closed field of characteristic zero this decides
    whether the system ``ideal = 0`` has no solutions.

    Example:
        >>> is_inconsistent(Ideal.from_strings(("x",), ["x", "x - 1"]))
        True
        >>> is_inconsistent(Ideal.from_strings(("x",), ["x^2 + 1"]))
        False

    """
    return groebner(ideal, GREVLEX, budget).is_unit


def eliminate(ideal: Ideal, drop: Iterable[str], budget: int | None = None) -> Ideal:
    """Intersect ``ideal`` with the subring free of the ``drop`` variables.

    Args:
        ideal: Ideal to eliminate from
        drop: Variables to eliminate
        budget: Gröbner step budget

    Returns:
        The elimination ideal, living in ``ideal.ring.without(drop)``

    Example:
        >>> I = Ideal.from_strings(("x", "y", "z"), ["y - x^2", "z - x^3"])
        >>> [str(g) for g in eliminate(I, ["x"])]
        ['y^3 - z^2']

    """
    names = tuple(dict.fromkeys(drop))
    target = ideal.ring.without(names)
    if not names:
        return ideal
    basis = groebner(ideal, MonomialOrder.block(names), budget)
    indices = [ideal.ring.index(name) for name in names]
    kept = [p for p in basis if not any(m[i] for m in p.terms for i in indices)]
    logger.debug("Eliminated %s: %d of %d basis elements kept", ",".join(names), len(kept), len(basis))
    return Ideal(target, tuple(target.coerce(p) for p in kept))


def saturate(ideal: Ideal, h: Polynomial, budget: int | None = None) -> Ideal:
    """The saturation (I : h^∞).

    Computed by adding a fresh variable t and the generator 1 - t*h, then
    eliminating t.

    Raises:
        ValueError: If ``h`` is the zero polynomial
        RingMismatchError: If ``h`` is not in the ideal's ring

    Example:
        >>> I = Ideal.from_strings(("x", "y"), ["x*y"])
        >>> [str(g) for g in saturate(I, I.ring.gen("x"))]
        ['y']

    """
    if h.ring != ideal.ring:
        raise RingMismatchError(f"{h} lives in {h.ring}, the ideal in {ideal.ring}")
    if not h:
        raise ValueError("Cannot saturate by the zero polynomial")
    t = ideal.ring.fresh_name("t")
    extended = ideal.ring.extend([t])
    gens = [extended.coerce(g) for g in ideal.generators]
    gens.append(1 - extended.gen(t) * extended.coerce(h))
    result = eliminate(Ideal(extended, tuple(gens)), [t], budget)
    return Ideal(ideal.ring, tuple(ideal.ring.coerce(g) for g in result.generators))


def _max_independent(masks: list[int], candidates: list[int]) -> int:
    best = 0

    def independent(chosen: int) -> bool:
        return all(mask & ~chosen for mask in masks)

    def search(i: int, chosen: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if size + len(candidates) - i <= best:
            return
        bit = 1 << candidates[i]
        if independent(chosen | bit):
            search(i + 1, chosen | bit, size + 1)
        search(i + 1, chosen, size)

    if candidates:
        search(0, 0, 0)
    return best


def ideal_dimension(ideal: Ideal, budget: int | None = None) -> int:
    """Krull dimension of the affine variety of ``ideal``.

    The dimension is the size of a largest set of variables containing no
    leading monomial of a Gröbner basis. The unit ideal has dimension -1.

    Example:
        >>> ideal_dimension(Ideal.from_strings(("x", "y"), ["x*y"]))
        1

    """
    basis = groebner(ideal, GREVLEX, budget)
    if basis.is_unit:
        return -1
    n = ideal.ring.nvars
    masks = []
    for lm in basis.leading_monomials():
        masks.append(sum(1 << i for i, e in enumerate(lm) if e))
    blocked = {mask.bit_length() - 1 for mask in masks if mask & (mask - 1) == 0}
    occurring = 0
    for mask in masks:
        occurring |= mask
    free = [i for i in range(n) if not occurring >> i & 1]
    candidates = [i for i in range(n) if occurring >> i & 1 and i not in blocked]
    relevant = [mask for mask in masks if mask & (mask - 1)]
    return len(free) + _max_independent(relevant, candidates)


def ideal_contains(big: Ideal, small: Ideal, budget: int | None = None) -> bool:
    """True iff every generator of ``small`` lies in ``big``."""
    if big.ring != small.ring:
        raise RingMismatchError(f"Cannot compare ideals of {big.ring} and {small.ring}")
    basis = groebner(big, GREVLEX, budget)
    return all(basis.contains(g) for g in small.generators)


def ideals_equal(a: Ideal, b: Ideal, budget: int | None = None) -> bool:
    """True iff the two ideals have the same reduced grevlex Gröbner basis."""
    if a.ring != b.ring:
        raise RingMismatchError(f"Cannot compare ideals of {a.ring} and {b.ring}")
    return groebner(a, GREVLEX, budget).polynomials == groebner(b, GREVLEX, budget).polynomials
