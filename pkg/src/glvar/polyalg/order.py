"""Monomial orders.

Each order turns an exponent vector into a flat integer tuple that sorts
like the monomials: a larger key means a larger monomial.
"""

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING

from glvar.polyalg.exceptions import UnknownVariableError

if TYPE_CHECKING:
    from glvar.polyalg.polynomial import PolynomialRing

Monomial = tuple[int, ...]
OrderKey = Callable[[Monomial], tuple[int, ...]]


class OrderKind(str, Enum):
    """Supported term orders."""

    GREVLEX = "grevlex"
    LEX = "lex"
    BLOCK = "block"


def _grevlex(m: Monomial) -> tuple[int, ...]:
    return (sum(m), *(-e for e in reversed(m)))


@dataclass(frozen=True)
class MonomialOrder:
    """A term order on the monomials of a ring.

    Attributes:
        kind: Which order
        eliminate: For block orders, the variables of the first block. Any
            monomial involving them is larger than every monomial free of
            them; each block is ordered by grevlex.

    Example:
        >>> MonomialOrder.block(["t"]).kind
        <OrderKind.BLOCK: 'block'>

    """

    kind: OrderKind = OrderKind.GREVLEX
    eliminate: tuple[str, ...] = ()

    @classmethod
    def block(cls, names: Sequence[str]) -> "MonomialOrder":
        return cls(OrderKind.BLOCK, tuple(names))

    def key_function(self, ring: "PolynomialRing") -> OrderKey:
        """Return the sort key for monomials of ``ring``."""
        if self.kind is OrderKind.LEX:
            return lambda m: m
        if self.kind is OrderKind.GREVLEX:
            return _grevlex
        first = [ring.index(name) for name in self.eliminate]
        chosen = set(first)
        first.sort()
        rest = [i for i in range(len(ring.variables)) if i not in chosen]

        def key(m: Monomial) -> tuple[int, ...]:
            head = tuple(m[i] for i in first)
            tail = tuple(m[i] for i in rest)
            return _grevlex(head) + _grevlex(tail)

        return key

    def validate(self, ring: "PolynomialRing") -> None:
        for name in self.eliminate:
            if name not in ring.variables:
                raise UnknownVariableError(name)

    def __str__(self) -> str:
        if self.kind is OrderKind.BLOCK:
            return f"block({','.join(self.eliminate)})"
        return self.kind.value


GREVLEX = MonomialOrder(OrderKind.GREVLEX)
LEX = MonomialOrder(OrderKind.LEX)
