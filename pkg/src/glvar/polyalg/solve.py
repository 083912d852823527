"""Best-effort search for rational solutions of polynomial systems.

Two stages run in turn. The propagation search solves linear equations for
a variable with a constant coefficient, solves univariate equations by
their rational roots, and otherwise guesses small values for the most
frequent variable. The triangular stage computes a lex Gröbner basis and
back-substitutes from the last variable up: univariate constraints are
solved by their rational roots, free variables get a generic value first
and small values after that. Solutions are verified against the original
system before they are returned, so a returned point is always correct;
``None`` only means the search gave up.
"""

import logging
from collections.abc import Sequence
from fractions import Fraction

import sympy

from glvar.config import load_settings
from glvar.polyalg.exceptions import BudgetExceededError
from glvar.polyalg.groebner import groebner
from glvar.polyalg.ideal import Ideal
from glvar.polyalg.order import LEX
from glvar.polyalg.polynomial import Polynomial, PolynomialRing

logger = logging.getLogger(__name__)

GUESSES: tuple[Fraction, ...] = tuple(Fraction(v) for v in (0, 1, -1, 2, -2, Fraction(1, 2)))
GENERIC: tuple[Fraction, ...] = tuple(
    Fraction(p)
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71)
)

Binding = tuple[str, Polynomial]
Point = dict[str, Fraction]
System = Ideal | Sequence[Polynomial]


class _OutOfNodes(Exception):
    pass


def rational_roots(p: Polynomial) -> list[Fraction]:
    """Distinct rational roots of a univariate polynomial, ascending."""
    (name,) = p.variables()
    i = p.ring.index(name)
    degree = p.degree_in(name)
    coeffs = [sympy.Integer(0)] * (degree + 1)
    for m, c in p.terms.items():
        coeffs[degree - m[i]] = sympy.Rational(c.numerator, c.denominator)
    roots = sympy.Poly(coeffs, sympy.Symbol(name), domain="QQ").ground_roots()
    return sorted(Fraction(int(r.p), int(r.q)) for r in roots)


def _simplify(polys: Sequence[Polynomial]) -> list[Polynomial] | None:
    """Drop zeros and duplicates; None if a non-zero constant appears."""
    out: list[Polynomial] = []
    seen: set[Polynomial] = set()
    for p in polys:
        if not p:
            continue
        if p.is_constant:
            return None
        q = p.monic()
        if q not in seen:
            seen.add(q)
            out.append(q)
    out.sort(key=lambda q: (len(q.terms), q.total_degree))
    return out


def _linear_pivot(polys: Sequence[Polynomial]) -> Binding | None:
    for p in polys:
        for name in p.variables():
            if p.degree_in(name) != 1:
                continue
            parts = p.coefficients([name])
            lead = parts[(1,)]
            if lead.is_constant:
                rest = parts.get((0,), p.ring.zero())
                return name, -rest / lead.constant_value()
    return None


def _generators(system: System) -> list[Polynomial]:
    return list(system.generators if isinstance(system, Ideal) else system)


def _origin(system: System) -> Point:
    if isinstance(system, Ideal):
        return {name: Fraction(0) for name in system.ring.variables}
    return {}


def _verified(gens: Sequence[Polynomial], values: Point) -> bool:
    if any(g.evaluate(values) for g in gens):
        logger.warning("Discarding a witness that failed verification")
        return False
    return True


class _Search:
    def __init__(self, ring: PolynomialRing, budget: int) -> None:
        self.ring = ring
        self.budget = budget
        self.nodes = 0

    def run(self, polys: list[Polynomial], bindings: list[Binding]) -> list[Binding] | None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _OutOfNodes
        while True:
            simplified = _simplify(polys)
            if simplified is None:
                return None
            polys = simplified
            if not polys:
                return bindings
            pivot = _linear_pivot(polys)
            if pivot is None:
                break
            name, expr = pivot
            polys = [p.substitute({name: expr}) for p in polys]
            bindings = [*bindings, (name, expr)]

        univariate = next((p for p in polys if len(p.variables()) == 1), None)
        if univariate is not None:
            (name,) = univariate.variables()
            choices = rational_roots(univariate)
        else:
            counts: dict[str, int] = {}
            for p in polys:
                for v in p.variables():
                    counts[v] = counts.get(v, 0) + 1
            name = max(counts, key=lambda v: (counts[v], -self.ring.index(v)))
            choices = list(GUESSES)
        for value in choices:
            result = self.run(
                [p.substitute({name: value}) for p in polys],
                [*bindings, (name, self.ring.constant(value))],
            )
            if result is not None:
                return result
        return None


def search_rational_point(system: System, budget: int | None = None) -> Point | None:
    """Propagation search: linear pivots, rational roots and small guesses.

    Args:
        system: An ideal or a list of polynomials sharing one ring
        budget: Maximum number of search nodes (default: configured
            witness budget)

    Returns:
        A verified assignment for every ring variable, or None

    """
    gens = _generators(system)
    if not gens:
        return _origin(system)
    ring = gens[0].ring
    limit = budget if budget is not None else load_settings().witness_budget
    search = _Search(ring, limit)
    try:
        bindings = search.run(gens, [])
    except _OutOfNodes:
        logger.debug("Propagation search gave up after %d nodes", search.nodes)
        return None
    if bindings is None:
        logger.debug("Propagation search exhausted after %d nodes", search.nodes)
        return None
    values = {name: Fraction(0) for name in ring.variables}
    for name, expr in reversed(bindings):
        values[name] = expr.evaluate(values)
    if not _verified(gens, values):
        return None
    logger.debug("Witness found by propagation after %d nodes", search.nodes)
    return values


def _lex_ring(ring: PolynomialRing, solve_first: Sequence[str]) -> PolynomialRing:
    """``ring`` with the ``solve_first`` variables moved to the end."""
    last = [v for v in dict.fromkeys(solve_first) if v in ring]
    names = [v for v in ring.variables if v not in last] + last
    return PolynomialRing(tuple(names), tuple(ring.weights[ring.index(v)] for v in names))


class _BackSubstitution:
    """Depth-first back-substitution through a lex Gröbner basis.

    A basis element belongs to the largest variable it involves; once every
    smaller variable has a value, it is univariate in that variable.
    """

    def __init__(self, ring: PolynomialRing, basis: Sequence[Polynomial], budget: int) -> None:
        self.ring = ring
        self.budget = budget
        self.nodes = 0
        self.constraints: list[list[Polynomial]] = [[] for _ in ring.variables]
        for p in basis:
            top = min(ring.index(v) for v in p.variables())
            self.constraints[top].append(p)

    def candidates(self, k: int, values: Point) -> list[Fraction]:
        name = self.ring.variables[k]
        remaining: list[Polynomial] = []
        for p in self.constraints[k]:
            known = {v: values[v] for v in p.variables() if v != name}
            q = p.substitute(known) if known else p
            if q.is_constant:
                if q:
                    return []
                continue
            remaining.append(q)
        if not remaining:
            return [GENERIC[k % len(GENERIC)], *GUESSES]
        remaining.sort(key=lambda q: (q.degree_in(name), len(q.terms)))
        head, *rest = remaining
        return [r for r in rational_roots(head) if all(not q.evaluate({name: r}) for q in rest)]

    def run(self, k: int, values: Point) -> Point | None:
        if k < 0:
            return values
        self.nodes += 1
        if self.nodes > self.budget:
            raise _OutOfNodes
        name = self.ring.variables[k]
        for value in self.candidates(k, values):
            result = self.run(k - 1, {**values, name: value})
            if result is not None:
                return result
        return None


def triangular_point(
    system: System,
    budget: int | None = None,
    groebner_budget: int | None = None,
    solve_first: Sequence[str] = (),
) -> Point | None:
    """Look for a rational point through a lex Gröbner basis.

    Args:
        system: An ideal or a list of polynomials sharing one ring
        budget: Maximum number of back-substitution nodes (default:
            configured witness budget)
        groebner_budget: Gröbner step budget for the lex basis
        solve_first: Variables placed last in the lex order, so they are
            fixed before all others

    Returns:
        A verified assignment for every ring variable, or None if the basis
        is {1}, its budget ran out, or no rational branch was found

    Example:
        >>> I = Ideal.from_strings(("x", "y"), ["x^2 - y", "y^2 - 4*y"])
        >>> point = triangular_point(I)
        >>> point["y"] == point["x"] ** 2
        True

    """
    gens = _generators(system)
    if not gens:
        return _origin(system)
    ring = gens[0].ring
    lex_ring = _lex_ring(ring, solve_first)
    try:
        lex_ideal = Ideal(lex_ring, tuple(lex_ring.coerce(g) for g in gens))
        basis = groebner(lex_ideal, LEX, groebner_budget)
    except BudgetExceededError as e:
        logger.debug("Triangular stage skipped: %s", e)
        return None
    if basis.is_unit:
        return None
    limit = budget if budget is not None else load_settings().witness_budget
    walk = _BackSubstitution(lex_ring, basis.polynomials, limit)
    try:
        values = walk.run(lex_ring.nvars - 1, {})
    except _OutOfNodes:
        logger.debug("Back-substitution gave up after %d nodes", walk.nodes)
        return None
    if values is None:
        logger.debug("No rational branch among %d lex basis elements", len(basis))
        return None
    point = {name: values[name] for name in ring.variables}
    if not _verified(gens, point):
        return None
    logger.debug("Witness found by back-substitution after %d nodes", walk.nodes)
    return point


def find_rational_point(
    system: System,
    budget: int | None = None,
    groebner_budget: int | None = None,
    solve_first: Sequence[str] = (),
) -> Point | None:
    """Look for a rational point on the variety of ``system``.

    Runs :func:`search_rational_point`, then :func:`triangular_point`.

    Args:
        system: An ideal or a list of polynomials sharing one ring
        budget: Node budget of each stage (default: configured witness budget)
        groebner_budget: Gröbner step budget of the triangular stage
        solve_first: Variables the triangular stage fixes first

    Returns:
        A verified assignment for every ring variable, or None if none was found

    Example:
        >>> I = Ideal.from_strings(("a", "b"), ["a*b - 2", "a - b - 1"])
        >>> point = find_rational_point(I)
        >>> point is not None and point["a"] * point["b"] == 2
        True

    """
    point = search_rational_point(system, budget)
    if point is not None:
        return point
    return triangular_point(system, budget, groebner_budget, solve_first)
