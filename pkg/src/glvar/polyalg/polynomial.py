"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is a dictionary from exponent vectors to non-zero
``Fraction`` coefficients, tied to a :class:`PolynomialRing` that names the
variables and gives each one a weight.
"""

import re
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from glvar.polyalg.exceptions import PolynomialError, RingMismatchError, UnknownVariableError
from glvar.polyalg.order import GREVLEX, Monomial, MonomialOrder

Scalar = Union[int, Fraction]
Terms = dict[Monomial, Fraction]

_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class PolynomialRing:
    """The ring Q[variables], with a weight per variable.

    Attributes:
        variables: Variable names, in order; each must be an identifier
        weights: Non-negative weight per variable (all ones if omitted)

    Example:
        >>> R = PolynomialRing(("x", "y"))
        >>> str(R.gen("x") * R.gen("y") - 1)
        'x*y - 1'

    """

    variables: tuple[str, ...] = ()
    weights: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        variables = tuple(self.variables)
        weights = tuple(self.weights) if self.weights else (1,) * len(variables)
        if len(weights) != len(variables):
            raise ValueError(f"Got {len(weights)} weights for {len(variables)} variables")
        if len(set(variables)) != len(variables):
            raise ValueError(f"Duplicate variable names in {variables}")
        for name in variables:
            if not _IDENTIFIER.match(name):
                raise ValueError(f"Invalid variable name: {name!r}")
        if any(w < 0 for w in weights):
            raise ValueError(f"Weights must be non-negative: {weights}")
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "weights", weights)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        """Position of a variable.

        Raises:
            UnknownVariableError: If the name is not a variable of this ring

        """
        try:
            return self.variables.index(name)
        except ValueError:
            raise UnknownVariableError(name) from None

    def __contains__(self, name: object) -> bool:
        return name in self.variables

    def zero(self) -> "Polynomial":
        return Polynomial(self)

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, value: Scalar) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: Fraction(value)})

    def gen(self, name: str) -> "Polynomial":
        """The variable ``name`` as a polynomial."""
        i = self.index(name)
        m = [0] * self.nvars
        m[i] = 1
        return Polynomial._raw(self, {tuple(m): Fraction(1)})

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.gen(name) for name in self.variables)

    def extend(self, names: Sequence[str], weights: Sequence[int] | None = None) -> "PolynomialRing":
        """A ring with ``names`` appended after the current variables."""
        extra = tuple(weights) if weights is not None else (1,) * len(names)
        return PolynomialRing(self.variables + tuple(names), self.weights + extra)

    def without(self, names: Iterable[str]) -> "PolynomialRing":
        """The ring with ``names`` removed, other variables keeping their order."""
        drop = set(names)
        for name in drop:
            self.index(name)
        keep = [i for i, v in enumerate(self.variables) if v not in drop]
        return PolynomialRing(
            tuple(self.variables[i] for i in keep), tuple(self.weights[i] for i in keep)
        )

    def rename(self, mapping: Mapping[str, str]) -> "PolynomialRing":
        """Same ring with some variables renamed."""
        return PolynomialRing(tuple(mapping.get(v, v) for v in self.variables), self.weights)

    def fresh_name(self, stem: str) -> str:
        """A variable name starting with ``stem`` that is not in the ring."""
        if stem not in self.variables:
            return stem
        i = 1
        while f"{stem}{i}" in self.variables:
            i += 1
        return f"{stem}{i}"

    def coerce(self, p: "Polynomial") -> "Polynomial":
        """Re-express ``p`` in this ring, matching variables by name.

        Raises:
            UnknownVariableError: If ``p`` uses a variable this ring lacks

        """
        if p.ring == self:
            return p
        used = [i for i in range(p.ring.nvars) if any(m[i] for m in p.terms)]
        targets = [(i, self.index(p.ring.variables[i])) for i in used]
        terms: Terms = {}
        for m, c in p.terms.items():
            nm = [0] * self.nvars
            for i, j in targets:
                nm[j] = m[i]
            terms[tuple(nm)] = c
        return Polynomial._raw(self, terms)

    def parse(self, text: str) -> "Polynomial":
        """Parse polynomial text in this ring (see :func:`parse_poly`)."""
        from glvar.polyalg.parser import parse_poly

        return parse_poly(text, self)

    def __str__(self) -> str:
        return "QQ[" + ",".join(self.variables) + "]"


class Polynomial:
    """An element of a :class:`PolynomialRing`.

    Instances are treated as immutable. Arithmetic with ``int`` and
    ``Fraction`` scalars is supported; combining polynomials from different
    rings raises :class:`RingMismatchError` (use :meth:`PolynomialRing.coerce`).

    Example:
        >>> R = PolynomialRing(("x", "y"))
        >>> x, y = R.gens()
        >>> p = (x + y) ** 2
        >>> str(p)
        'x^2 + 2*x*y + y^2'
        >>> p.evaluate({"x": 1, "y": 2})
        Fraction(9, 1)

    """

    __slots__ = ("ring", "terms")

    ring: PolynomialRing
    terms: Terms

    def __init__(self, ring: PolynomialRing, terms: Mapping[Monomial, Scalar] | None = None) -> None:
        self.ring = ring
        clean: Terms = {}
        for m, c in (terms or {}).items():
            if len(m) != ring.nvars:
                raise PolynomialError(f"Exponent vector {m} does not match {ring}")
            if any(e < 0 for e in m):
                raise PolynomialError(f"Negative exponent in {m}")
            value = Fraction(c)
            if value:
                clean[tuple(m)] = value
        self.terms = clean

    @classmethod
    def _raw(cls, ring: PolynomialRing, terms: Terms) -> "Polynomial":
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        return p

    # -- queries -------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_value(self) -> Fraction:
        """The constant coefficient."""
        return self.terms.get((0,) * self.ring.nvars, Fraction(0))

    def variables(self) -> tuple[str, ...]:
        """Names of the variables that occur, in ring order."""
        return tuple(
            name for i, name in enumerate(self.ring.variables) if any(m[i] for m in self.terms)
        )

    def degree_in(self, name: str) -> int:
        i = self.ring.index(name)
        return max((m[i] for m in self.terms), default=0)

    @property
    def total_degree(self) -> int:
        """Largest total degree of a term; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def weighted_degrees(self) -> set[int]:
        w = self.ring.weights
        return {sum(e * wi for e, wi in zip(m, w, strict=True)) for m in self.terms}

    def is_weighted_homogeneous(self, degree: int | None = None) -> bool:
        """True if every term has the same weighted degree (``degree`` if given)."""
        degrees = self.weighted_degrees()
        if not degrees:
            return True
        if len(degrees) > 1:
            return False
        return degree is None or degrees == {degree}

    def sorted_terms(self, order: MonomialOrder = GREVLEX) -> list[tuple[Monomial, Fraction]]:
        """Terms from largest to smallest monomial."""
        key = order.key_function(self.ring)
        return sorted(self.terms.items(), key=lambda item: key(item[0]), reverse=True)

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> Monomial:
        if not self.terms:
            raise PolynomialError("The zero polynomial has no leading monomial")
        key = order.key_function(self.ring)
        return max(self.terms, key=key)

    def leading_coefficient(self, order: MonomialOrder = GREVLEX) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        return self * (1 / self.leading_coefficient(order))

    # -- arithmetic ----------------------------------------------------------

    def _lift(self, other: object) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"Cannot combine polynomials from {self.ring} and {other.ring}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.ring.constant(other)
        return None

    def __add__(self, other: object) -> "Polynomial":
        q = self._lift(other)
        if q is None:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in q.terms.items():
            v = terms.get(m, Fraction(0)) + c
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return Polynomial._raw(self.ring, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: object) -> "Polynomial":
        q = self._lift(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other: object) -> "Polynomial":
        q = self._lift(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other: object) -> "Polynomial":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            scalar = Fraction(other)
            if not scalar:
                return self.ring.zero()
            return Polynomial._raw(self.ring, {m: c * scalar for m, c in self.terms.items()})
        q = self._lift(other)
        if q is None:
            return NotImplemented
        return Polynomial._raw(self.ring, multiply_terms(self.terms, q.terms))

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "Polynomial":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                raise ZeroDivisionError("Polynomial division by zero")
            return self * (1 / Fraction(other))
        if isinstance(other, Polynomial) and other.is_constant and not other.is_zero:
            return self / other.constant_value()
        raise PolynomialError("Polynomials can only be divided by non-zero constants")

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise PolynomialError(f"Exponent must be a non-negative integer, got {exponent!r}")
        result = self.ring.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                return not self.terms
            return self.is_constant and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- transformations -----------------------------------------------------

    def with_ring(self, ring: PolynomialRing) -> "Polynomial":
        """Reinterpret the exponent vectors in a ring of the same arity."""
        if ring.nvars != self.ring.nvars:
            raise RingMismatchError(f"{ring} and {self.ring} have different arity")
        return Polynomial._raw(ring, dict(self.terms))

    def substitute(
        self,
        mapping: Mapping[str, "Polynomial | Scalar"],
        ring: PolynomialRing | None = None,
    ) -> "Polynomial":
        """Replace variables by polynomials or scalars.

        Args:
            mapping: Images of some variables of ``self.ring``
            ring: Ring of the result (default ``self.ring``). Polynomial images
                must live in it; unmapped variables are matched by name.

        Returns:
            The substituted polynomial in ``ring``

        Raises:
            UnknownVariableError: If an unmapped variable is missing from ``ring``
            RingMismatchError: If an image lives in another ring

        Example:
            >>> R = PolynomialRing(("x", "y"))
            >>> str(R.parse("x^2 - y").substitute({"x": R.parse("y + 1")}))
            'y^2 + y + 1'

        """
        target = ring if ring is not None else self.ring
        src = self.ring
        images: dict[int, Terms] = {}
        for name, image in mapping.items():
            i = src.index(name)
            if isinstance(image, Polynomial):
                if image.ring != target:
                    raise RingMismatchError(f"Image of {name} lives in {image.ring}, expected {target}")
                images[i] = image.terms
            else:
                images[i] = target.constant(image).terms
        sub_idx = sorted(images)
        used = [i for i in range(src.nvars) if i not in images and any(m[i] for m in self.terms)]
        keep = [(i, target.index(src.variables[i])) for i in used]
        powers: dict[tuple[int, int], Terms] = {}

        def power(i: int, e: int) -> Terms:
            cached = powers.get((i, e))
            if cached is None:
                cached = images[i] if e == 1 else multiply_terms(power(i, e - 1), images[i])
                powers[(i, e)] = cached
            return cached

        one: Terms = {(0,) * target.nvars: Fraction(1)}
        products: dict[tuple[int, ...], Terms] = {}
        acc: Terms = {}
        for m, c in self.terms.items():
            sub_key = tuple(m[i] for i in sub_idx)
            prod = products.get(sub_key)
            if prod is None:
                prod = one
                for i, e in zip(sub_idx, sub_key, strict=True):
                    if e:
                        prod = multiply_terms(prod, power(i, e))
                products[sub_key] = prod
            base = [0] * target.nvars
            for i, j in keep:
                base[j] += m[i]
            for pm, pc in prod.items():
                nm = tuple(a + b for a, b in zip(pm, base, strict=True))
                v = acc.get(nm, Fraction(0)) + c * pc
                if v:
                    acc[nm] = v
                else:
                    acc.pop(nm, None)
        return Polynomial._raw(target, acc)

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        """Evaluate at a rational point; every occurring variable must be given."""
        values = []
        for i, name in enumerate(self.ring.variables):
            if name in point:
                values.append(Fraction(point[name]))
            elif any(m[i] for m in self.terms):
                raise UnknownVariableError(name, message=f"No value given for variable '{name}'")
            else:
                values.append(Fraction(0))
        total = Fraction(0)
        for m, c in self.terms.items():
            term = c
            for v, e in zip(values, m, strict=True):
                if e:
                    term *= v**e
            total += term
        return total

    def coefficients(self, names: Sequence[str]) -> dict[Monomial, "Polynomial"]:
        """Coefficients with respect to a subset of the variables.

        Returns:
            Map from exponent vectors in ``names`` to coefficient polynomials
            (in the same ring, free of ``names``)

        Example:
            >>> R = PolynomialRing(("a", "x"))
            >>> c = R.parse("a*x^2 + 3*x^2 - a").coefficients(["x"])
            >>> str(c[(2,)]), str(c[(0,)])
            ('a + 3', '-a')

        """
        idx = [self.ring.index(name) for name in names]
        grouped: dict[Monomial, Terms] = {}
        for m, c in self.terms.items():
            key = tuple(m[i] for i in idx)
            rest = list(m)
            for i in idx:
                rest[i] = 0
            grouped.setdefault(key, {})[tuple(rest)] = c
        return {k: Polynomial._raw(self.ring, v) for k, v in grouped.items()}

    def derivative(self, name: str) -> "Polynomial":
        i = self.ring.index(name)
        terms: Terms = {}
        for m, c in self.terms.items():
            if m[i]:
                nm = list(m)
                nm[i] -= 1
                terms[tuple(nm)] = c * m[i]
        return Polynomial._raw(self.ring, terms)

    def divide_by_variable(self, name: str) -> "Polynomial":
        """Exact division by a variable.

        Raises:
            PolynomialError: If some term is not divisible by the variable

        """
        i = self.ring.index(name)
        terms: Terms = {}
        for m, c in self.terms.items():
            if not m[i]:
                raise PolynomialError(f"{self} is not divisible by {name}")
            nm = list(m)
            nm[i] -= 1
            terms[tuple(nm)] = c
        return Polynomial._raw(self.ring, terms)

    # -- printing ------------------------------------------------------------

    def format(self, order: MonomialOrder = GREVLEX) -> str:
        """Render in the input grammar, largest term first."""
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for k, (m, c) in enumerate(self.sorted_terms(order)):
            mono = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.ring.variables, m, strict=True)
                if e
            )
            magnitude = abs(c)
            if not mono:
                body = str(magnitude)
            elif magnitude == 1:
                body = mono
            else:
                body = f"{magnitude}*{mono}"
            if k == 0:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Polynomial({self.format()!r}, {self.ring})"

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self.terms.items())


def multiply_terms(a: Terms, b: Terms) -> Terms:
    """Product of two term dictionaries."""
    if len(a) > len(b):
        a, b = b, a
    out: Terms = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb, strict=True))
            v = out.get(m, Fraction(0)) + ca * cb
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out
