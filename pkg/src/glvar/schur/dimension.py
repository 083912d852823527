"""Dimensions of Schur functors evaluated on K^n."""

from itertools import product

from glvar.partitions import Partition


def schur_dim(lam: Partition, n: int) -> int:
    """Dimension of S_λ(K^n) by the hook-content formula.

    Args:
        lam: The partition λ
        n: Dimension of the underlying space

    Returns:
        dim S_λ(K^n); zero when λ has more than ``n`` rows

    Raises:
        ValueError: If ``n`` is negative

    Example:
        >>> schur_dim(Partition.of(2), 3)
        6
        >>> schur_dim(Partition.of(1, 1), 1)
        0

    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if lam.rows > n:
        return 0
    conj = lam.conjugate()
    numerator = 1
    denominator = 1
    for r, length in enumerate(lam.parts):
        for c in range(length):
            numerator *= n + c - r
            denominator *= (length - c - 1) + (conj.parts[c] - r - 1) + 1
    return numerator // denominator


def count_ssyt(lam: Partition, n: int) -> int:
    """Count semistandard tableaux of shape λ with entries in 1..n by brute force.

    Only meant as an independent check on :func:`schur_dim` for small shapes.
    """
    cells = [(r, c) for r, length in enumerate(lam.parts) for c in range(length)]
    if not cells:
        return 1
    count = 0
    for values in product(range(1, n + 1), repeat=len(cells)):
        t = dict(zip(cells, values, strict=True))
        ok = all(
            (c == 0 or t[(r, c - 1)] <= v) and (r == 0 or t[(r - 1, c)] < v)
            for (r, c), v in t.items()
        )
        count += ok
    return count
