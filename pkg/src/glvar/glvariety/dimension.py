"""The dimension function δ_X(d) = dim X{K^d} and its polynomial fit."""

import logging
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import sympy

from glvar.config import load_settings
from glvar.glvariety.families import LevelFamily
from glvar.polyalg import ideal_dimension

logger = logging.getLogger(__name__)

LEVEL_SYMBOL = sympy.Symbol("d")


def delta(X: LevelFamily, d: int, budget: int | None = None) -> int:
    """Krull dimension of X{K^d}.

    Example:
        >>> from glvar.glvariety.families import affine_family
        >>> delta(affine_family([2]), 3)
        6

    """
    if d < 1:
        raise ValueError(f"level must be at least 1, got {d}")
    value = ideal_dimension(X.ideal_at(d, budget), budget)
    logger.info("delta(%d) = %d for %s", d, value, X)
    return value


def _delta_job(X: LevelFamily, d: int, budget: int | None) -> tuple[int, int]:
    return d, delta(X, d, budget)


def delta_range(
    X: LevelFamily,
    levels: Iterable[int],
    workers: int | None = None,
    budget: int | None = None,
) -> dict[int, int]:
    """δ_X at each level, keyed and ordered by level.

    With more than one worker the levels are computed in a process pool;
    the result does not depend on scheduling.
    """
    wanted = sorted(set(levels))
    if not wanted:
        raise ValueError("levels must not be empty")
    count = workers if workers is not None else load_settings().workers
    if count <= 1 or len(wanted) == 1:
        return {d: delta(X, d, budget) for d in wanted}
    with ProcessPoolExecutor(max_workers=min(count, len(wanted))) as pool:
        futures = [pool.submit(_delta_job, X, d, budget) for d in wanted]
        results = dict(future.result() for future in futures)
    return {d: results[d] for d in wanted}


@dataclass(frozen=True)
class DeltaFit:
    """Interpolating polynomial for δ_X and how it fares on test levels.

    Attributes:
        coefficients: Coefficients in d, constant term first
        expression: Factored form, e.g. ``d*(d + 1)/2``
        fit_values: Measured δ on the fit levels
        test_values: Measured δ on the test levels
        degree_bound: Largest entry size of the tuple

    """

    coefficients: tuple[Fraction, ...]
    expression: str
    fit_values: dict[int, int]
    test_values: dict[int, int]
    degree_bound: int

    @property
    def degree(self) -> int:
        nonzero = [i for i, c in enumerate(self.coefficients) if c]
        return nonzero[-1] if nonzero else 0

    def __call__(self, d: int) -> Fraction:
        return sum((c * d**i for i, c in enumerate(self.coefficients)), Fraction(0))

    @property
    def predictions(self) -> dict[int, Fraction]:
        return {d: self(d) for d in self.test_values}

    @property
    def mismatches(self) -> list[int]:
        return [d for d, v in self.test_values.items() if self(d) != v]

    @property
    def agrees(self) -> bool:
        return not self.mismatches

    @property
    def within_degree_bound(self) -> bool:
        return self.degree <= self.degree_bound


def _check_ranges(fit_range: Sequence[int], test_range: Sequence[int]) -> None:
    if not fit_range:
        raise ValueError("fit range must not be empty")
    if not test_range:
        raise ValueError("test range must not be empty")
    if set(fit_range) & set(test_range):
        raise ValueError("fit and test ranges must be disjoint")
    if min(test_range) <= max(fit_range):
        raise ValueError("test levels must lie above the fit levels")


def fit_delta(
    X: LevelFamily,
    fit_range: Sequence[int],
    test_range: Sequence[int],
    budget: int | None = None,
    workers: int | None = None,
) -> DeltaFit:
    """Interpolate δ_X on ``fit_range`` and compare with ``test_range``.

    A failed comparison or a degree above the tuple degree is reported in
    the result rather than raised.

    Raises:
        ValueError: If a range is empty, they overlap, or the test levels do
            not lie above the fit levels

    Example:
        >>> from glvar.glvariety.families import affine_family
        >>> fit = fit_delta(affine_family([2]), [2, 3, 4], [5])
        >>> fit.expression, fit.agrees
        ('d*(d + 1)/2', True)

    """
    fit_range = sorted(set(fit_range))
    test_range = sorted(set(test_range))
    _check_ranges(fit_range, test_range)
    values = delta_range(X, [*fit_range, *test_range], workers, budget)
    points = [(d, values[d]) for d in fit_range]
    expr = sympy.interpolate(points, LEVEL_SYMBOL) if len(points) > 1 else sympy.Integer(points[0][1])
    poly = sympy.Poly(expr, LEVEL_SYMBOL)
    coefficients = tuple(
        Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())
    )
    fit = DeltaFit(
        coefficients=coefficients,
        expression=str(sympy.factor(expr)),
        fit_values={d: values[d] for d in fit_range},
        test_values={d: values[d] for d in test_range},
        degree_bound=X.degree,
    )
    if not fit.agrees:
        logger.warning("Fitted %s disagrees at levels %s", fit.expression, fit.mismatches)
    if not fit.within_degree_bound:
        logger.warning("Fitted degree %d exceeds the tuple degree %d", fit.degree, fit.degree_bound)
    return fit
