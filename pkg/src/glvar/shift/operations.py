"""The shift operation on tuples of partitions.

Restricting S_λ(K^n ⊕ V) along the subgroup that fixes K^n gives

    S_λ(K^n ⊕ V) = ⊕_{μ,ν} c^λ_{μν} · S_μ(K^n) ⊗ S_ν(V)

so ν occurs in sh_n(λ) with multiplicity Σ_μ c^λ_{μν}·dim S_μ(K^n).
"""

from collections import Counter
from functools import lru_cache

from glvar.partitions import Partition, PartitionTuple, sub_partitions
from glvar.schur import lr_coefficient, schur_dim


@lru_cache(maxsize=4096)
def _shift_partition(n: int, lam: Partition) -> tuple[tuple[Partition, int], ...]:
    counts: Counter[Partition] = Counter()
    subs = list(sub_partitions(lam))
    for mu in subs:
        dim = schur_dim(mu, n)
        if dim == 0:
            continue
        for nu in subs:
            if mu.size + nu.size != lam.size:
                continue
            c = lr_coefficient(lam, mu, nu)
            if c:
                counts[nu] += c * dim
    return tuple(sorted(counts.items(), key=lambda item: item[0].sort_key(), reverse=True))


def shift_tuple(n: int, t: PartitionTuple) -> PartitionTuple:
    """Compute sh_n(t).

    Args:
        n: Number of split-off coordinates
        t: Tuple of partitions

    Returns:
        The tuple indexing Sh_n(A^t); it always contains ``t`` itself

    Raises:
        ValueError: If ``n`` is negative

    Example:
        >>> str(shift_tuple(1, PartitionTuple.from_parts([[2]])))
        '[[2],[1],[]]'

    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    counts: Counter[Partition] = Counter()
    for lam in t.entries:
        for nu, mult in _shift_partition(n, lam):
            counts[nu] += mult
    return PartitionTuple.from_counter(counts)


def shift_complement(n: int, t: PartitionTuple) -> PartitionTuple:
    """Compute sh_{n,0}(t), the part of sh_n(t) beyond ``t`` itself.

    Example:
        >>> str(shift_complement(1, PartitionTuple.from_parts([[2]])))
        '[[1],[]]'
        >>> str(shift_complement(3, PartitionTuple.from_parts([[]])))
        '[]'

    """
    return shift_tuple(n, t).difference(t)


def shift_dimension_check(n: int, t: PartitionTuple, d: int) -> bool:
    """Check Σ_{ν ∈ sh_n(t)} dim S_ν(K^d) == Σ_{λ ∈ t} dim S_λ(K^{n+d})."""
    shifted = sum(schur_dim(nu, d) for nu in shift_tuple(n, t).entries)
    direct = sum(schur_dim(lam, n + d) for lam in t.entries)
    return shifted == direct
