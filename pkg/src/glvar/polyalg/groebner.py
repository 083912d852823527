"""Reduced Gröbner bases by Buchberger's algorithm.

Pairs are chosen with the normal selection strategy (smallest lcm of the
leading monomials first) and pruned with the Gebauer–Möller criteria. All
arithmetic is exact over the rationals, so results are deterministic.
"""

import heapq
import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction

from glvar.config import resolve_budget
from glvar.polyalg.exceptions import BudgetExceededError, RingMismatchError
from glvar.polyalg.ideal import Ideal
from glvar.polyalg.order import GREVLEX, Monomial, MonomialOrder, OrderKey
from glvar.polyalg.polynomial import Polynomial, PolynomialRing, Terms

logger = logging.getLogger(__name__)


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b, strict=True))


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b, strict=True))


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(not (x and y) for x, y in zip(a, b, strict=True))


class _Engine:
    """Buchberger state over raw term dictionaries for one ring and order."""

    def __init__(self, key: OrderKey) -> None:
        self.key = key
        self._keys: dict[Monomial, tuple[int, ...]] = {}

    def heap_key(self, m: Monomial) -> tuple[int, ...]:
        k = self._keys.get(m)
        if k is None:
            k = tuple(-x for x in self.key(m))
            self._keys[m] = k
        return k

    def leading(self, p: Terms) -> Monomial:
        return max(p, key=self.key)

    def monic(self, p: Terms) -> Terms:
        lc = p[self.leading(p)]
        if lc == 1:
            return p
        return {m: c / lc for m, c in p.items()}

    def reduce(
        self,
        p: Terms,
        basis: Sequence[Terms],
        lms: Sequence[Monomial],
        full: bool = True,
    ) -> Terms:
        """Remainder of ``p`` on division by monic ``basis``."""
        p = dict(p)
        heap = [(self.heap_key(m), m) for m in p]
        heapq.heapify(heap)
        queued = set(p)
        remainder: Terms = {}
        while heap:
            _, m = heapq.heappop(heap)
            queued.discard(m)
            c = p.pop(m, None)
            if c is None:
                continue
            divisor = next((i for i, lm in enumerate(lms) if _divides(lm, m)), None)
            if divisor is None:
                remainder[m] = c
                if not full:
                    remainder.update(p)
                    return remainder
                continue
            lm = lms[divisor]
            shift = tuple(x - y for x, y in zip(m, lm, strict=True))
            for gm, gc in basis[divisor].items():
                if gm == lm:
                    continue
                nm = tuple(x + y for x, y in zip(gm, shift, strict=True))
                v = p.get(nm, Fraction(0)) - c * gc
                if v:
                    p[nm] = v
                    if nm not in queued:
                        queued.add(nm)
                        heapq.heappush(heap, (self.heap_key(nm), nm))
                else:
                    p.pop(nm, None)
        return remainder

    def spoly(self, f: Terms, g: Terms, lmf: Monomial, lmg: Monomial) -> Terms:
        lcm = _lcm(lmf, lmg)
        sf = tuple(x - y for x, y in zip(lcm, lmf, strict=True))
        sg = tuple(x - y for x, y in zip(lcm, lmg, strict=True))
        out: Terms = {}
        for m, c in f.items():
            out[tuple(x + y for x, y in zip(m, sf, strict=True))] = c
        for m, c in g.items():
            nm = tuple(x + y for x, y in zip(m, sg, strict=True))
            v = out.get(nm, Fraction(0)) - c
            if v:
                out[nm] = v
            else:
                out.pop(nm, None)
        return out

    def is_unit(self, p: Terms) -> bool:
        return len(p) == 1 and not any(next(iter(p)))

    def buchberger(self, polys: Sequence[Terms], budget: int) -> tuple[list[Terms], int]:
        """Return a reduced Gröbner basis of ``polys`` and the steps used."""
        basis: list[Terms] = []
        lms: list[Monomial] = []
        alive: set[tuple[int, int]] = set()
        queue: list[tuple[tuple[int, ...], int, int]] = []
        pruned = 0

        def update(f: Terms) -> bool:
            nonlocal pruned
            lmf = self.leading(f)
            new = len(basis)
            stale: set[tuple[int, int]] = set()
            for i, j in alive:
                lij = _lcm(lms[i], lms[j])
                if (
                    _divides(lmf, lij)
                    and lij != _lcm(lms[i], lmf)
                    and lij != _lcm(lms[j], lmf)
                ):
                    stale.add((i, j))
            alive.difference_update(stale)
            pruned += len(stale)
            groups: dict[Monomial, list[int]] = {}
            for i, lm in enumerate(lms):
                groups.setdefault(_lcm(lm, lmf), []).append(i)
            kept: list[Monomial] = []
            for lcm in sorted(groups, key=self.key):
                if all(not _divides(other, lcm) for other in kept):
                    kept.append(lcm)
            for lcm in kept:
                members = groups[lcm]
                if any(_coprime(lms[i], lmf) for i in members):
                    pruned += len(members)
                    continue
                i = min(members)
                alive.add((i, new))
                heapq.heappush(queue, (self.key(lcm), new, i))
            basis.append(f)
            lms.append(lmf)
            return self.is_unit(f)

        for p in polys:
            r = self.reduce(p, basis, lms)
            if r:
                r = self.monic(r)
                if update(r):
                    return [r], 0

        steps = 0
        while queue:
            _, j, i = heapq.heappop(queue)
            if (i, j) not in alive:
                continue
            alive.discard((i, j))
            steps += 1
            if steps > budget:
                raise BudgetExceededError(budget, steps)
            s = self.spoly(basis[i], basis[j], lms[i], lms[j])
            r = self.reduce(s, basis, lms)
            if r:
                r = self.monic(r)
                if update(r):
                    logger.debug("Unit ideal detected after %d S-pair reductions", steps)
                    return [r], steps
        logger.debug(
            "Buchberger finished: %d steps, %d generators, %d pairs pruned",
            steps,
            len(basis),
            pruned,
        )
        return self.interreduce(self.minimalize(basis)), steps

    def minimalize(self, basis: Sequence[Terms]) -> list[Terms]:
        chosen: list[Terms] = []
        chosen_lms: list[Monomial] = []
        for f in sorted(basis, key=lambda p: self.key(self.leading(p))):
            lm = self.leading(f)
            if all(not _divides(other, lm) for other in chosen_lms):
                chosen.append(f)
                chosen_lms.append(lm)
        return chosen

    def interreduce(self, basis: Sequence[Terms]) -> list[Terms]:
        lms = [self.leading(f) for f in basis]
        reduced: list[Terms] = []
        for i, f in enumerate(basis):
            others = list(basis[:i]) + list(basis[i + 1 :])
            other_lms = lms[:i] + lms[i + 1 :]
            reduced.append(self.monic(self.reduce(f, others, other_lms)))
        reduced.sort(key=lambda p: self.key(self.leading(p)), reverse=True)
        return reduced


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Gröbner basis together with its order.

    Attributes:
        ring: Ambient ring
        order: Monomial order the basis is reduced for
        polynomials: Monic basis elements, largest leading monomial first
        steps: S-pair reductions spent computing it

    """

    ring: PolynomialRing
    order: MonomialOrder
    polynomials: tuple[Polynomial, ...]
    steps: int = 0

    @property
    def is_unit(self) -> bool:
        """True if the basis is {1}, i.e. the ideal is the whole ring."""
        return len(self.polynomials) == 1 and self.polynomials[0] == 1

    @property
    def is_zero(self) -> bool:
        return not self.polynomials

    def leading_monomials(self) -> list[Monomial]:
        return [p.leading_monomial(self.order) for p in self.polynomials]

    def reduce(self, p: Polynomial) -> Polynomial:
        """Normal form of ``p`` modulo the basis."""
        return normal_form(p, self.polynomials, self.order)

    def contains(self, p: Polynomial) -> bool:
        return not self.reduce(p)

    def ideal(self) -> Ideal:
        return Ideal(self.ring, self.polynomials)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.polynomials)

    def __len__(self) -> int:
        return len(self.polynomials)

    def __str__(self) -> str:
        return "{" + ", ".join(p.format(self.order) for p in self.polynomials) + "}"


def groebner(ideal: Ideal, order: MonomialOrder = GREVLEX, budget: int | None = None) -> GroebnerBasis:
    """Compute the reduced Gröbner basis of an ideal.

    Args:
        ideal: Ideal to process
        order: Monomial order (default grevlex)
        budget: Maximum S-pair reductions; defaults to the configured budget

    Returns:
        GroebnerBasis with monic elements; empty for the zero ideal and
        exactly ``[1]`` for the unit ideal

    Raises:
        BudgetExceededError: If more than ``budget`` S-pairs are reduced

    Example:
        >>> I = Ideal.from_strings(("x", "y"), ["x^2 - y", "y"])
        >>> str(groebner(I, LEX))
        '{x^2, y}'

    """
    limit = resolve_budget(budget)
    order.validate(ideal.ring)
    engine = _Engine(order.key_function(ideal.ring))
    raw, steps = engine.buchberger([g.terms for g in ideal.generators], limit)
    polys = tuple(Polynomial._raw(ideal.ring, dict(p)) for p in raw)
    logger.debug("Gröbner basis under %s: %d elements, %d steps", order, len(polys), steps)
    return GroebnerBasis(ideal.ring, order, polys, steps)


def normal_form(p: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> Polynomial:
    """Remainder of multivariate division of ``p`` by ``basis``.

    When ``basis`` is a Gröbner basis for ``order`` the remainder is zero
    exactly when ``p`` lies in the ideal.

    Raises:
        RingMismatchError: If ``p`` and the basis live in different rings

    """
    for g in basis:
        if g.ring != p.ring:
            raise RingMismatchError(f"{p} lives in {p.ring}, basis element {g} in {g.ring}")
    engine = _Engine(order.key_function(p.ring))
    gens = [engine.monic(g.terms) for g in basis if g]
    lms = [engine.leading(g) for g in gens]
    return Polynomial._raw(p.ring, engine.reduce(p.terms, gens, lms))
