"""The shift operation sh_n on tuples and its complement sh_{n,0}."""

from glvar.shift.operations import shift_complement, shift_dimension_check, shift_tuple

__all__ = ["shift_tuple", "shift_complement", "shift_dimension_check"]
