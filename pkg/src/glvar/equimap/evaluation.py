"""Evaluating equivariant maps on K^n.

At level n every source symbol of weight d is replaced by a generic form of
degree d in n auxiliary variables whose coefficients are the coordinates of
A^source{K^n}; the coefficients of the expanded bodies are the coordinate
functions of the map A^source{K^n} -> A^target{K^n}.
"""

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from glvar.equimap.exceptions import AbstractCoefficientError
from glvar.equimap.forms import FormSpace, level_monomials
from glvar.equimap.maps import Scalar, WeightedMap
from glvar.polyalg import Polynomial, PolynomialRing

logger = logging.getLogger(__name__)


class ParameterMode(str, Enum):
    """What to do with a map's parameters when instantiating it."""

    REJECT = "reject"
    KEEP = "keep"
    INPUTS = "inputs"


@dataclass(frozen=True)
class InstantiatedMap:
    """A map A^source{K^n} -> A^target{K^n} in coordinates.

    Attributes:
        level: The level n
        ring: Ring of the input coordinates (and kept parameters)
        inputs: Names of the input coordinates, parameters last when they are inputs
        outputs: Coordinate functions, one per target coordinate
        output_names: Names of the target coordinates

    """

    level: int
    ring: PolynomialRing
    inputs: tuple[str, ...]
    outputs: tuple[Polynomial, ...]
    output_names: tuple[str, ...]

    def __call__(self, point: Mapping[str, Scalar]) -> list[Fraction]:
        return [p.evaluate(point) for p in self.outputs]

    def __len__(self) -> int:
        return len(self.outputs)


def _aux_names(ring_names: Sequence[str], n: int) -> tuple[str, ...]:
    taken = set(ring_names)
    stem = "_z"
    while any(f"{stem}{i}" in taken for i in range(1, n + 1)):
        stem = "_" + stem
    return tuple(f"{stem}{i}" for i in range(1, n + 1))


def generic_forms(space: FormSpace, n: int, ring: PolynomialRing, aux: Sequence[str]) -> dict[str, Polynomial]:
    """Generic level-n form for each symbol, in ``ring`` (which holds coordinates and ``aux``)."""
    aux_index = [ring.index(z) for z in aux]
    forms: dict[str, Polynomial] = {}
    for symbol in space.symbols:
        terms: dict[tuple[int, ...], Fraction] = {}
        for name, m in space.coordinates(symbol, n):
            exponent = [0] * ring.nvars
            exponent[ring.index(name)] = 1
            for i, e in zip(aux_index, m, strict=True):
                exponent[i] = e
            terms[tuple(exponent)] = Fraction(1)
        forms[symbol] = Polynomial(ring, terms)
    return forms


def instantiate(
    f: WeightedMap,
    n: int,
    parameters: ParameterMode | str = ParameterMode.REJECT,
) -> InstantiatedMap:
    """Write ``f`` at level ``n`` as an explicit polynomial map.

    Args:
        f: The map
        n: Level, at least 1
        parameters: ``reject`` (parameters are an error), ``keep`` (they stay
            as coefficients in the ring) or ``inputs`` (they become extra
            input coordinates, for maps B x A^source -> A^target)

    Returns:
        InstantiatedMap with schur_dim((e_j), n) outputs per body

    Raises:
        AbstractCoefficientError: If ``f`` has parameters in ``reject`` mode
        ValueError: If ``n < 1``

    Example:
        >>> phi = WeightedMap.from_strings([2, 2, 2], [4], ["f*g - h^2"])
        >>> [str(p) for p in instantiate(phi, 1).outputs]
        ['f_2*g_2 - h_2^2']

    """
    mode = ParameterMode(parameters)
    if n < 1:
        raise ValueError(f"level must be at least 1, got {n}")
    used = f.used_parameters()
    if mode is ParameterMode.REJECT and used:
        raise AbstractCoefficientError(used)
    params = f.parameters if mode is not ParameterMode.REJECT else ()
    coordinates = f.source.coordinate_names(n)
    input_ring = PolynomialRing(params + coordinates, (0,) * len(params) + (1,) * len(coordinates))
    aux = _aux_names(input_ring.variables, n)
    work = input_ring.extend(aux)
    forms = generic_forms(f.source, n, work, aux)
    body_ring = f.ring if params else PolynomialRing(f.source.symbols, f.source.weights)
    outputs: list[Polynomial] = []
    for body, weight in zip(f.bodies, f.target.weights, strict=True):
        expanded = body_ring.coerce(body).substitute(forms, work)
        parts = expanded.coefficients(aux)
        for m in level_monomials(weight, n):
            part = parts.get(m)
            outputs.append(input_ring.coerce(part) if part is not None else input_ring.zero())
    inputs = coordinates + params if mode is ParameterMode.INPUTS else coordinates
    logger.debug("Instantiated %s at level %d: %d inputs, %d outputs", f, n, len(inputs), len(outputs))
    return InstantiatedMap(n, input_ring, inputs, tuple(outputs), f.target.coordinate_names(n))


def jacobian_matrix(f: WeightedMap, n: int, seed: int = 0) -> list[list[Fraction]]:
    """Jacobian of ``f`` at level ``n`` at a seeded random integer point.

    Rows are target coordinates and columns source coordinates. The column
    of the coordinate of symbol s at monomial m is the coefficient vector of
    (∂body/∂s)(p) · z^m, with p the random point viewed as forms.
    """
    used = f.used_parameters()
    if used:
        raise AbstractCoefficientError(used)
    source_ring = PolynomialRing(f.source.symbols, f.source.weights)
    bodies = [source_ring.coerce(b) for b in f.bodies]
    aux = tuple(f"z{i}" for i in range(1, n + 1))
    aux_ring = PolynomialRing(aux)
    rng = np.random.default_rng(seed)
    point: dict[str, Polynomial] = {}
    for symbol, weight in zip(f.source.symbols, f.source.weights, strict=True):
        monomials = level_monomials(weight, n)
        values = rng.integers(-9, 10, size=len(monomials))
        point[symbol] = Polynomial(aux_ring, {m: int(v) for m, v in zip(monomials, values, strict=True)})
    rows: list[list[Fraction]] = []
    partials = [
        [body.derivative(s).substitute(point, aux_ring) for s in f.source.symbols] for body in bodies
    ]
    for j, weight in enumerate(f.target.weights):
        for target_m in level_monomials(weight, n):
            row: list[Fraction] = []
            for k, symbol in enumerate(f.source.symbols):
                partial = partials[j][k]
                for source_m in level_monomials(f.source.weights[k], n):
                    shift = tuple(a - b for a, b in zip(target_m, source_m, strict=True))
                    if min(shift, default=0) < 0:
                        row.append(Fraction(0))
                    else:
                        row.append(partial.terms.get(shift, Fraction(0)))
            rows.append(row)
    return rows


def matrix_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Exact rank of a rational matrix."""
    if not rows or not rows[0]:
        return 0
    entries = [[QQ(v.numerator, v.denominator) for v in row] for row in rows]
    return int(DomainMatrix(entries, (len(rows), len(rows[0])), QQ).rank())


def jacobian_rank(f: WeightedMap, n: int, seed: int = 0) -> int:
    """Rank of the level-n Jacobian of ``f`` at a seeded random point.

    This is a lower bound for the dimension of the image closure of ``f`` at
    level ``n`` (and equals it for almost every seed).

    Example:
        >>> phi = WeightedMap.from_strings([2, 2, 2], [4], ["f*g - h^2"])
        >>> jacobian_rank(phi, 2)
        5

    """
    if n < 1:
        raise ValueError(f"level must be at least 1, got {n}")
    rank = matrix_rank(jacobian_matrix(f, n, seed))
    logger.debug("Jacobian rank of %s at level %d: %d", f, n, rank)
    return rank
