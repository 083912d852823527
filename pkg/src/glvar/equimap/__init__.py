"""Equivariant maps between products of symmetric-power spaces.

Maps A^[(d_1),...,(d_r)] -> A^[(e_1),...,(e_s)] are modelled as tuples of
weighted-homogeneous polynomials in named form symbols. This package builds,
composes and evaluates them, and decides factorization and typicality.
"""

from glvar.equimap.evaluation import (
    InstantiatedMap,
    ParameterMode,
    generic_forms,
    instantiate,
    jacobian_matrix,
    jacobian_rank,
    matrix_rank,
)
from glvar.equimap.exceptions import (
    AbstractCoefficientError,
    MapError,
    MapFormatError,
    NotHomogeneousError,
    NotSingleRowError,
    TupleMismatchError,
)
from glvar.equimap.factorization import (
    Certificate,
    Factorization,
    FactorizationResult,
    Typicality,
    TypicalityResult,
    Verdict,
    factors_through,
    is_typical,
)
from glvar.equimap.forms import FormSpace, coordinate_name, level_monomials, weighted_monomials
from glvar.equimap.io import dump_map, load_map, map_from_dict
from glvar.equimap.library import (
    discriminant_map,
    identity_map,
    phi_family,
    projection_map,
    psi_map,
    rank_one_map,
    square_map,
    strength_map,
    zero_map,
)
from glvar.equimap.maps import WeightedMap, compose, equate_maps, generic_map, map_ring, maps_equal

__all__ = [
    "Certificate",
    "Factorization",
    "FactorizationResult",
    "FormSpace",
    "InstantiatedMap",
    "ParameterMode",
    "Typicality",
    "TypicalityResult",
    "Verdict",
    "WeightedMap",
    "compose",
    "coordinate_name",
    "discriminant_map",
    "dump_map",
    "equate_maps",
    "factors_through",
    "generic_forms",
    "generic_map",
    "identity_map",
    "instantiate",
    "is_typical",
    "jacobian_matrix",
    "jacobian_rank",
    "level_monomials",
    "load_map",
    "map_from_dict",
    "map_ring",
    "maps_equal",
    "matrix_rank",
    "phi_family",
    "projection_map",
    "psi_map",
    "rank_one_map",
    "square_map",
    "strength_map",
    "weighted_monomials",
    "zero_map",
    "AbstractCoefficientError",
    "MapError",
    "MapFormatError",
    "NotHomogeneousError",
    "NotSingleRowError",
    "TupleMismatchError",
]
