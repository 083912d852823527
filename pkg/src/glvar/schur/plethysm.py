"""Symmetric-group characters and plethysm in the power-sum basis.

Symmetric functions are stored as ``{ρ: coefficient}`` with ρ a partition
written as a descending tuple and exact rational coefficients. The graded
character of Sym(V_λ) is exp(Σ_m p_m[s_λ]/m); truncating every product at
the requested degree keeps the computation finite.
"""

import logging
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial

from glvar.partitions import Partition, PartitionTuple, partitions_of
from glvar.schur.exceptions import ImpureTupleError, SchurError
from glvar.schur.expansion import SchurExpansion

logger = logging.getLogger(__name__)

PowerSum = dict[tuple[int, ...], Fraction]


@lru_cache(maxsize=None)
def _mn(beta: frozenset[int], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    total = 0
    for b in beta:
        t = b - r
        if t < 0 or t in beta:
            continue
        height = sum(1 for x in beta if t < x < b)
        total += (-1) ** height * _mn((beta - {b}) | {t}, rest)
    return total


def character(lam: Partition, rho: tuple[int, ...]) -> int:
    """Value χ^λ(ρ) of the irreducible S_n character on cycle type ρ.

    Computed with the Murnaghan–Nakayama rule on the beta-set (abacus) of λ:
    removing a border strip of length r moves one bead r positions down,
    with sign given by the number of beads jumped over.

    Args:
        lam: Partition indexing the character
        rho: Cycle type, any order

    Raises:
        ValueError: If ``|λ| != |ρ|``

    Example:
        >>> character(Partition.of(2, 1), (1, 1, 1))
        2
        >>> character(Partition.of(2, 1), (3,))
        -1

    """
    if sum(rho) != lam.size:
        raise ValueError(f"Size mismatch: |{lam}| = {lam.size} but |rho| = {sum(rho)}")
    k = lam.rows
    beta = frozenset(lam.part(i) + (k - 1 - i) for i in range(k))
    return _mn(beta, tuple(sorted(rho, reverse=True)))


def z_factor(rho: tuple[int, ...]) -> int:
    """Size of the centralizer of a permutation with cycle type ρ."""
    z = 1
    for part, mult in Counter(rho).items():
        z *= part**mult * factorial(mult)
    return z


@lru_cache(maxsize=None)
def _schur_power_sums(lam: Partition) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
    out = []
    for rho in partitions_of(lam.size):
        chi = character(lam, rho.parts)
        if chi:
            out.append((rho.parts, Fraction(chi, z_factor(rho.parts))))
    return tuple(out)


def schur_power_sums(lam: Partition) -> PowerSum:
    """s_λ = Σ_ρ χ^λ(ρ)/z_ρ · p_ρ."""
    return dict(_schur_power_sums(lam))


def _merge(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(a + b, reverse=True))


def _multiply(a: PowerSum, b: PowerSum, bound: int) -> PowerSum:
    out: PowerSum = {}
    for ra, ca in a.items():
        da = sum(ra)
        for rb, cb in b.items():
            if da + sum(rb) > bound:
                continue
            key = _merge(ra, rb)
            value = out.get(key, Fraction(0)) + ca * cb
            if value:
                out[key] = value
            else:
                out.pop(key, None)
    return out


def _exp(g: PowerSum, bound: int) -> PowerSum:
    """exp(g) truncated at degree ``bound``; g must have no constant term."""
    result: PowerSum = {(): Fraction(1)}
    power: PowerSum = {(): Fraction(1)}
    for k in range(1, bound + 1):
        power = _multiply(power, g, bound)
        if not power:
            break
        for key, value in power.items():
            total = result.get(key, Fraction(0)) + value / factorial(k)
            if total:
                result[key] = total
            else:
                result.pop(key, None)
    return result


def symmetric_algebra_power_sums(t: PartitionTuple, bound: int) -> PowerSum:
    """Graded character of Sym(V_t) up to degree ``bound`` in power sums."""
    log_terms: PowerSum = {}
    for lam in t.entries:
        s = schur_power_sums(lam)
        m = 1
        while m * lam.size <= bound:
            for rho, coef in s.items():
                key = tuple(m * part for part in rho)
                value = log_terms.get(key, Fraction(0)) + coef / m
                if value:
                    log_terms[key] = value
                else:
                    log_terms.pop(key, None)
            m += 1
    return _exp(log_terms, bound)


def sym_decompose(t: PartitionTuple, degree: int) -> SchurExpansion:
    """Decompose the degree-≤D part of Sym(V_t) into irreducibles.

    Args:
        t: A pure tuple of partitions
        degree: Degree bound D

    Returns:
        SchurExpansion complete up to ``degree``, including V_∅ in degree 0

    Raises:
        ImpureTupleError: If ``t`` contains the empty partition
        ValueError: If ``degree`` is negative

    Example:
        >>> e = sym_decompose(PartitionTuple.from_parts([[2]]), 4)
        >>> e.multiplicity(Partition.of(4)), e.multiplicity(Partition.of(2, 2))
        (1, 1)

    """
    if not t.is_pure:
        raise ImpureTupleError(str(t))
    if degree < 0:
        raise ValueError(f"degree must be non-negative, got {degree}")
    character_sum = symmetric_algebra_power_sums(t, degree)
    terms: dict[Partition, int] = {}
    for d in range(degree + 1):
        pieces = {rho: c for rho, c in character_sum.items() if sum(rho) == d}
        if not pieces:
            continue
        for mu in partitions_of(d):
            total = sum((c * character(mu, rho) for rho, c in pieces.items()), Fraction(0))
            if total.denominator != 1 or total < 0:
                raise SchurError(f"Non-integral multiplicity {total} for {mu}")
            if total:
                terms[mu] = int(total)
    logger.debug("Sym(V_%s) up to degree %d has %d isotypic components", t, degree, len(terms))
    return SchurExpansion(terms=terms, degree_bound=degree)
