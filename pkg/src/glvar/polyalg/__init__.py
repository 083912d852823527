"""Exact polynomial algebra over the rationals.

Sparse polynomials, a position-annotated parser, reduced Gröbner bases,
elimination, saturation, Krull dimension and rational witness search.
"""

from glvar.polyalg.exceptions import (
    BudgetExceededError,
    IdealFormatError,
    PolynomialError,
    PolynomialSyntaxError,
    RingMismatchError,
    UnknownVariableError,
)
from glvar.polyalg.groebner import GroebnerBasis, groebner, normal_form
from glvar.polyalg.ideal import Ideal
from glvar.polyalg.io import dump_ideal, ideal_from_dict, load_ideal
from glvar.polyalg.operations import (
    eliminate,
    ideal_contains,
    ideal_dimension,
    ideals_equal,
    is_inconsistent,
    saturate,
)
from glvar.polyalg.order import GREVLEX, LEX, Monomial, MonomialOrder, OrderKind
from glvar.polyalg.parser import parse_poly, variables_in
from glvar.polyalg.polynomial import Polynomial, PolynomialRing
from glvar.polyalg.solve import (
    find_rational_point,
    rational_roots,
    search_rational_point,
    triangular_point,
)

__all__ = [
    "GREVLEX",
    "LEX",
    "GroebnerBasis",
    "Ideal",
    "Monomial",
    "MonomialOrder",
    "OrderKind",
    "Polynomial",
    "PolynomialRing",
    "dump_ideal",
    "eliminate",
    "find_rational_point",
    "groebner",
    "ideal_contains",
    "ideal_dimension",
    "ideal_from_dict",
    "ideals_equal",
    "is_inconsistent",
    "load_ideal",
    "normal_form",
    "parse_poly",
    "rational_roots",
    "saturate",
    "search_rational_point",
    "triangular_point",
    "variables_in",
    "BudgetExceededError",
    "IdealFormatError",
    "PolynomialError",
    "PolynomialSyntaxError",
    "RingMismatchError",
    "UnknownVariableError",
]
