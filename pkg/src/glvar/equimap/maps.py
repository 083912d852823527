"""Equivariant maps between pure single-row tuples.

A map A^source -> A^target is a list of bodies, one per target form, each a
weighted-homogeneous polynomial in the source symbols of the target form's
weight. Coefficients are rationals or weight-zero parameters.
"""

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction

from glvar.equimap.exceptions import MapError, NotHomogeneousError, TupleMismatchError
from glvar.equimap.forms import FormSpace, weighted_monomials
from glvar.partitions import PartitionTuple
from glvar.polyalg import Ideal, Polynomial, PolynomialRing, parse_poly

logger = logging.getLogger(__name__)

Scalar = int | Fraction


def map_ring(source: FormSpace, parameters: Sequence[str]) -> PolynomialRing:
    """Ring of weight-zero parameters followed by the source symbols."""
    return PolynomialRing(tuple(parameters) + source.symbols, (0,) * len(parameters) + source.weights)


@dataclass(frozen=True)
class WeightedMap:
    """An equivariant morphism A^source -> A^target.

    Attributes:
        source: Source forms
        target: Target forms
        bodies: One polynomial per target form, in ``map_ring(source, parameters)``
        parameters: Coefficient symbols (weight zero) that the bodies may use

    Raises:
        NotHomogeneousError: If a body is not weighted-homogeneous of its
            target weight
        MapError: If the body count or names are inconsistent

    Example:
        >>> f = WeightedMap.from_strings([2, 2, 2], [4], ["f*g - h^2"])
        >>> str(f)
        '(f, g, h) -> (f*g - h^2)'

    """

    source: FormSpace
    target: FormSpace
    bodies: tuple[Polynomial, ...]
    parameters: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        parameters = tuple(self.parameters)
        clash = set(parameters) & set(self.source.symbols)
        if clash:
            raise MapError(f"Parameters {sorted(clash)} clash with source symbols")
        ring = map_ring(self.source, parameters)
        bodies = tuple(ring.coerce(b) for b in self.bodies)
        if len(bodies) != len(self.target):
            raise MapError(f"Got {len(bodies)} bodies for {len(self.target)} target forms")
        for body, weight in zip(bodies, self.target.weights, strict=True):
            if not body.is_weighted_homogeneous(weight):
                raise NotHomogeneousError(str(body), weight)
        object.__setattr__(self, "parameters", parameters)
        object.__setattr__(self, "bodies", bodies)

    @classmethod
    def from_strings(
        cls,
        source_weights: Sequence[int],
        target_weights: Sequence[int],
        bodies: Sequence[str],
        source_names: Sequence[str] | None = None,
        target_names: Sequence[str] | None = None,
        parameters: Sequence[str] = (),
    ) -> "WeightedMap":
        """Build a map from weights and body text."""
        source = FormSpace.from_weights(source_weights, source_names, taken=parameters)
        target = FormSpace.from_weights(
            target_weights, target_names, taken=(*source.symbols, *parameters), target=True
        )
        ring = map_ring(source, parameters)
        return cls(source, target, tuple(parse_poly(text, ring) for text in bodies), tuple(parameters))

    @property
    def ring(self) -> PolynomialRing:
        return map_ring(self.source, self.parameters)

    @property
    def source_tuple(self) -> PartitionTuple:
        return self.source.partition_tuple

    @property
    def target_tuple(self) -> PartitionTuple:
        return self.target.partition_tuple

    @property
    def has_parameters(self) -> bool:
        return bool(self.parameters)

    def used_parameters(self) -> tuple[str, ...]:
        """Parameters that actually occur in some body."""
        return tuple(p for p in self.parameters if any(p in b.variables() for b in self.bodies))

    def uses(self, symbol: str) -> bool:
        """True if the source symbol occurs in some body."""
        return any(symbol in b.variables() for b in self.bodies)

    def substitute_parameters(self, values: Mapping[str, Scalar]) -> "WeightedMap":
        """Fix some parameters to rational values."""
        for name in values:
            if name not in self.parameters:
                raise MapError(f"Unknown parameter {name}")
        remaining = tuple(p for p in self.parameters if p not in values)
        ring = map_ring(self.source, remaining)
        mapping: dict[str, Polynomial | Scalar] = dict(values)
        bodies = tuple(b.substitute(mapping, ring) for b in self.bodies)
        return WeightedMap(self.source, self.target, bodies, remaining)

    def rename_parameters(self, mapping: Mapping[str, str]) -> "WeightedMap":
        """Same map with some parameters renamed."""
        for name in mapping:
            if name not in self.parameters:
                raise MapError(f"Unknown parameter {name}")
        parameters = tuple(mapping.get(p, p) for p in self.parameters)
        ring = map_ring(self.source, parameters)
        bodies = tuple(b.with_ring(ring) for b in self.bodies)
        return WeightedMap(self.source, self.target, bodies, parameters)

    def rename_source(self, names: Sequence[str]) -> "WeightedMap":
        """Same map with the source symbols renamed positionally."""
        source = self.source.renamed(names)
        ring = map_ring(source, self.parameters)
        bodies = tuple(b.with_ring(ring) for b in self.bodies)
        return WeightedMap(source, self.target, bodies, self.parameters)

    def __str__(self) -> str:
        return (
            "(" + ", ".join(self.source.symbols) + ") -> (" + ", ".join(str(b) for b in self.bodies) + ")"
        )


def generic_map(
    source: FormSpace,
    target: FormSpace,
    prefix: str = "c",
) -> tuple[WeightedMap, tuple[str, ...]]:
    """The most general equivariant map between two form spaces.

    Body j is Σ_m c{j}_{k} m over the source monomials m of weighted degree
    e_j (descending lex), with one fresh coefficient symbol each.

    Returns:
        The map (coefficients as parameters) and the list of coefficient symbols

    Example:
        >>> src = FormSpace.from_weights([1, 1, 2, 2, 2])
        >>> tgt = FormSpace.from_weights([2], target=True)
        >>> f, symbols = generic_map(src, tgt)
        >>> str(f.bodies[0])
        'c1_1*x^2 + c1_2*x*y + c1_3*y^2 + c1_4*f + c1_5*g + c1_6*h'

    """
    names: list[str] = []
    layout: list[list[tuple[str, tuple[int, ...]]]] = []
    for j, weight in enumerate(target.weights):
        row: list[tuple[str, tuple[int, ...]]] = []
        for k, m in enumerate(weighted_monomials(source.weights, weight)):
            name = f"{prefix}{j + 1}_{k + 1}"
            names.append(name)
            row.append((name, m))
        layout.append(row)
    ring = map_ring(source, names)
    bodies: list[Polynomial] = []
    for row in layout:
        terms: dict[tuple[int, ...], Fraction] = {}
        for name, m in row:
            exponent = [0] * len(names) + list(m)
            exponent[names.index(name)] = 1
            terms[tuple(exponent)] = Fraction(1)
        bodies.append(Polynomial(ring, terms))
    logger.debug("Generic map %s -> %s has %d coefficients", source, target, len(names))
    return WeightedMap(source, target, tuple(bodies), tuple(names)), tuple(names)


def compose(outer: WeightedMap, inner: WeightedMap) -> WeightedMap:
    """The composite ``outer ∘ inner``.

    Parameters of both maps are kept; a name used by both refers to the
    same symbol. An outer parameter named like an inner source symbol is
    renamed apart first.

    Raises:
        TupleMismatchError: If inner's target weights differ from outer's source

    Example:
        >>> inner = WeightedMap.from_strings([1], [1], ["a"], source_names=["a"])
        >>> outer = WeightedMap.from_strings(
        ...     [1], [1], ["a*x"], source_names=["x"], parameters=["a"]
        ... )
        >>> composite = compose(outer, inner)
        >>> composite.parameters, str(composite.bodies[0])
        (('a1',), 'a1*a')

    """
    if inner.target.weights != outer.source.weights:
        raise TupleMismatchError(str(outer.source_tuple), str(inner.target_tuple))
    clash = [p for p in outer.parameters if p in inner.source.symbols]
    if clash:
        scope = outer.ring.extend(
            [v for v in (*inner.parameters, *inner.source.symbols) if v not in outer.ring]
        )
        renames: dict[str, str] = {}
        for p in clash:
            renames[p] = scope.fresh_name(p)
            scope = scope.extend([renames[p]])
        logger.debug("Renamed outer parameters %s apart from the inner source", renames)
        outer = outer.rename_parameters(renames)
    parameters = inner.parameters + tuple(p for p in outer.parameters if p not in inner.parameters)
    ring = map_ring(inner.source, parameters)
    images = {
        symbol: ring.coerce(body)
        for symbol, body in zip(outer.source.symbols, inner.bodies, strict=True)
    }
    bodies = tuple(b.substitute(images, ring) for b in outer.bodies)
    return WeightedMap(inner.source, outer.target, bodies, parameters)


def equate_maps(a: WeightedMap, b: WeightedMap) -> Ideal:
    """Equations on the parameters that make two maps equal.

    One generator per (target index, source monomial): the difference of the
    two coefficients. Source symbols of ``b`` are matched to those of ``a``
    by position.

    Returns:
        Ideal in the ring of the parameters of both maps

    Raises:
        TupleMismatchError: If sources or targets differ

    """
    if a.source.weights != b.source.weights:
        raise TupleMismatchError(str(a.source_tuple), str(b.source_tuple))
    if a.target.weights != b.target.weights:
        raise TupleMismatchError(str(a.target_tuple), str(b.target_tuple))
    if b.source.symbols != a.source.symbols:
        b = b.rename_source(a.source.symbols)
    parameters = a.parameters + tuple(p for p in b.parameters if p not in a.parameters)
    ring = map_ring(a.source, parameters)
    coefficient_ring = PolynomialRing(parameters)
    gens: list[Polynomial] = []
    for body_a, body_b in zip(a.bodies, b.bodies, strict=True):
        diff = ring.coerce(body_a) - ring.coerce(body_b)
        parts = diff.coefficients(a.source.symbols)
        for key in sorted(parts, reverse=True):
            gens.append(coefficient_ring.coerce(parts[key]))
    return Ideal(coefficient_ring, tuple(gens))


def maps_equal(a: WeightedMap, b: WeightedMap) -> bool:
    """True iff the maps have the same tuples and identical bodies."""
    try:
        return equate_maps(a, b).is_zero
    except TupleMismatchError:
        return False
