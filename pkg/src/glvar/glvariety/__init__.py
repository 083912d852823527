"""Finite-level geometry of GL-varieties.

A GL-variety X inside A^tuple is handled through its evaluations X{K^n}:
one ideal per level. This package computes dimension functions, image
closures and membership, mapping spaces, shifts and the rank strata of
quadrics.
"""

from glvar.glvariety.dimension import DeltaFit, delta, delta_range, fit_delta
from glvar.glvariety.exceptions import ArityError, FamilyFormatError, VarietyError
from glvar.glvariety.families import (
    LevelFamily,
    RecipeKind,
    affine_family,
    minors_family,
    minors_ideal,
    minors_stratum,
    orbit_ideal,
    rank_one_family,
    shift_coordinate_name,
    shift_coordinate_names,
    shift_level,
    shift_stems,
)
from glvar.glvariety.images import (
    MembershipResult,
    MembershipStatus,
    image_closure_level,
    image_membership,
    sample_image_points,
)
from glvar.glvariety.io import family_from_dict, load_family
from glvar.glvariety.mapping import MappingSpaceResult, mapping_space
from glvar.glvariety.variety import FiniteLevelVariety

__all__ = [
    "DeltaFit",
    "FiniteLevelVariety",
    "LevelFamily",
    "MappingSpaceResult",
    "MembershipResult",
    "MembershipStatus",
    "RecipeKind",
    "affine_family",
    "delta",
    "delta_range",
    "family_from_dict",
    "fit_delta",
    "image_closure_level",
    "image_membership",
    "load_family",
    "mapping_space",
    "minors_family",
    "minors_ideal",
    "minors_stratum",
    "orbit_ideal",
    "rank_one_family",
    "sample_image_points",
    "shift_coordinate_name",
    "shift_coordinate_names",
    "shift_level",
    "shift_stems",
    "ArityError",
    "FamilyFormatError",
    "VarietyError",
]
