"""Schur-functor numerics.

Littlewood–Richardson coefficients, dimensions dim S_λ(K^n) and the
decomposition of symmetric algebras Sym(V_t) up to a degree bound.
"""

from glvar.schur.dimension import count_ssyt, schur_dim
from glvar.schur.exceptions import ImpureTupleError, SchurError
from glvar.schur.expansion import SchurExpansion
from glvar.schur.littlewood_richardson import lr_coefficient, tensor_decompose
from glvar.schur.plethysm import character, schur_power_sums, sym_decompose, z_factor

__all__ = [
    "SchurExpansion",
    "character",
    "count_ssyt",
    "lr_coefficient",
    "schur_dim",
    "schur_power_sums",
    "sym_decompose",
    "tensor_decompose",
    "z_factor",
    "SchurError",
    "ImpureTupleError",
]
