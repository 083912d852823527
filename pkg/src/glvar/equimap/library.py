"""Built-in maps used by the worked examples."""

from collections.abc import Sequence
from fractions import Fraction

from glvar.equimap.forms import FormSpace
from glvar.equimap.maps import WeightedMap, map_ring


def identity_map(space: FormSpace | Sequence[int]) -> WeightedMap:
    """Identity on A^space; target symbols reuse the source names."""
    source = space if isinstance(space, FormSpace) else FormSpace.from_weights(space)
    ring = source.ring()
    return WeightedMap(source, source, ring.gens())


def zero_map(source_weights: Sequence[int], target_weights: Sequence[int]) -> WeightedMap:
    """The map sending everything to 0."""
    source = FormSpace.from_weights(source_weights)
    target = FormSpace.from_weights(target_weights, taken=source.symbols, target=True)
    ring = source.ring()
    return WeightedMap(source, target, tuple(ring.zero() for _ in target.weights))


def projection_map(space: FormSpace | Sequence[int], keep: Sequence[int]) -> WeightedMap:
    """Projection of A^space onto the factors at positions ``keep``.

    Example:
        >>> str(projection_map([1, 2, 2], [0, 2]))
        '(x, f, g) -> (x, g)'

    """
    source = space if isinstance(space, FormSpace) else FormSpace.from_weights(space)
    for i in keep:
        if not 0 <= i < len(source):
            raise IndexError(f"Position {i} out of range for {source}")
    target = FormSpace(tuple(source.symbols[i] for i in keep), tuple(source.weights[i] for i in keep))
    ring = source.ring()
    return WeightedMap(source, target, tuple(ring.gen(source.symbols[i]) for i in keep))


def phi_family(t: int | Fraction | None = None) -> WeightedMap:
    """The family t^{-1}((x^2 + t f)(y^2 + t g) - (xy + t h)^2) on [(1),(1),(2),(2),(2)] -> [(4)].

    The division by t is exact, so the member at t = 0 is
    x^2 g + y^2 f - 2 x y h. With ``t=None`` the parameter stays symbolic.

    Example:
        >>> str(phi_family(0).bodies[0])
        'y^2*f + x^2*g - 2*x*y*h'

    """
    source = FormSpace.from_weights([1, 1, 2, 2, 2])
    target = FormSpace.from_weights([4], taken=(*source.symbols, "t"), target=True)
    ring = map_ring(source, ["t"])
    product = ring.parse("(x^2 + t*f)*(y^2 + t*g) - (x*y + t*h)^2")
    family = WeightedMap(source, target, (product.divide_by_variable("t"),), ("t",))
    if t is None:
        return family
    return family.substitute_parameters({"t": Fraction(t)})


def discriminant_map() -> WeightedMap:
    """(f, g, h) -> f g - h^2 on [(2),(2),(2)] -> [(4)]."""
    return WeightedMap.from_strings([2, 2, 2], [4], ["f*g - h^2"])


def psi_map() -> WeightedMap:
    """(x, y, f, g, h) -> x^2 f + y^2 g + x y h on [(1),(1),(2),(2),(2)] -> [(4)]."""
    return WeightedMap.from_strings([1, 1, 2, 2, 2], [4], ["x^2*f + y^2*g + x*y*h"])


def square_map() -> WeightedMap:
    """v -> v^2 on [(1)] -> [(2)]: the cone of rank-one quadrics."""
    return WeightedMap.from_strings([1], [2], ["v^2"], source_names=["v"], target_names=["q"])


def rank_one_map() -> WeightedMap:
    """(alpha, beta, v) -> (alpha v, beta v): the base A^2 times A^(1), onto rank ≤ 1 pairs."""
    return WeightedMap.from_strings(
        [1],
        [1, 1],
        ["alpha*v", "beta*v"],
        source_names=["v"],
        target_names=["x", "y"],
        parameters=["alpha", "beta"],
    )


def strength_map(degree: int, k: int, split: int = 1) -> WeightedMap:
    """Sum of ``k`` products of forms of degrees ``split`` and ``degree - split``.

    The image closure is the locus of degree-``degree`` forms of strength at
    most ``k`` with that split.

    Example:
        >>> str(strength_map(2, 2))
        '(x, y, z, u) -> (x*z + y*u)'

    """
    if not 0 < split < degree:
        raise ValueError(f"split must lie strictly between 0 and {degree}, got {split}")
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    weights = [split] * k + [degree - split] * k
    source = FormSpace.from_weights(weights)
    target = FormSpace.from_weights([degree], taken=source.symbols, target=True)
    ring = source.ring()
    body = ring.zero()
    for i in range(k):
        body = body + ring.gen(source.symbols[i]) * ring.gen(source.symbols[k + i])
    return WeightedMap(source, target, (body,))
