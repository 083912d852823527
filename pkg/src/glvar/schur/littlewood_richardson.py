"""Littlewood–Richardson coefficients.

c^λ_{μν} is the number of skew tableaux of shape λ/μ and content ν whose
reverse reading word is a lattice word. Cells are filled in reading order
(rows top to bottom, each row right to left) and the lattice condition is
checked after every placement, which prunes most of the search.
"""

from functools import lru_cache

from glvar.partitions import Partition, partitions_of
from glvar.schur.expansion import SchurExpansion


def _count_lr_tableaux(outer: tuple[int, ...], inner: tuple[int, ...], content: tuple[int, ...]) -> int:
    def inner_at(r: int) -> int:
        return inner[r] if r < len(inner) else 0

    cells = [(r, c) for r in range(len(outer)) for c in range(outer[r] - 1, inner_at(r) - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * len(content)
    letters = len(content)

    def place(k: int) -> int:
        if k == len(cells):
            return 1
        r, c = cells[k]
        lo = 0
        if r > 0 and c >= inner_at(r - 1):
            lo = filling[(r - 1, c)] + 1
        hi = letters - 1
        right = filling.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= content[v]:
                continue
            if v > 0 and counts[v] >= counts[v - 1]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            total += place(k + 1)
            counts[v] -= 1
            del filling[(r, c)]
        return total

    return place(0)


@lru_cache(maxsize=65536)
def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Multiplicity of S_λ in S_μ ⊗ S_ν.

    Args:
        lam: Outer partition λ
        mu: First factor μ
        nu: Second factor ν

    Returns:
        c^λ_{μν}; zero when ``|μ| + |ν| != |λ|`` or either factor does not fit in λ

    Example:
        >>> lr_coefficient(Partition.of(2, 1), Partition.of(2), Partition.of(1))
        1
        >>> lr_coefficient(Partition.of(1, 1), Partition.of(2), Partition.of(1))
        0

    """
    if mu.size + nu.size != lam.size:
        return 0
    if not lam.contains(mu) or not lam.contains(nu):
        return 0
    if nu.is_empty:
        return 1 if mu == lam else 0
    if mu.is_empty:
        return 1 if nu == lam else 0
    return _count_lr_tableaux(lam.parts, mu.parts, nu.parts)


def tensor_decompose(mu: Partition, nu: Partition) -> SchurExpansion:
    """Decompose S_μ ⊗ S_ν into irreducibles.

    Example:
        >>> t = tensor_decompose(Partition.of(2), Partition.of(1))
        >>> sorted(str(p) for p in t.terms)
        ['[2,1]', '[3]']

    """
    size = mu.size + nu.size
    terms = {}
    for lam in partitions_of(size):
        c = lr_coefficient(lam, mu, nu)
        if c:
            terms[lam] = c
    return SchurExpansion(terms=terms, degree_bound=size)
