"""Integer partitions as plain tuples, plus the orders and counting
helpers the symmetric-function kernel relies on."""

from __future__ import annotations

import math
from collections import Counter
from functools import lru_cache
from typing import Iterator, Sequence


def is_partition(seq: Sequence[int]) -> bool:
    """True when seq is weakly decreasing with all parts positive.

    >>> is_partition((3, 1, 1)), is_partition((1, 2)), is_partition(())
    (True, False, True)
    """
    return all(p > 0 for p in seq) and all(
        seq[i] >= seq[i + 1] for i in range(len(seq) - 1)
    )


def _gen_partitions(n: int, maxpart: int):
    if n == 0:
        yield ()
        return
    for first in range(min(n, maxpart), 0, -1):
        for rest in _gen_partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of n in descending lexicographic order.

    Descending lex refines dominance: if lam dominates mu then lam comes
    first.

    >>> partitions(4)
    ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    """
    if n < 0:
        raise ValueError("partitions of a negative integer requested")
    return tuple(_gen_partitions(n, n if n else 0))


def conjugate(lam: tuple[int, ...]) -> tuple[int, ...]:
    """Transpose of the Young diagram.

    >>> conjugate((3, 1))
    (2, 1, 1)
    """
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Dominance order on partitions of the same size: every prefix sum
    of lam is at least the matching prefix sum of mu."""
    if sum(lam) != sum(mu):
        return False
    total_l = 0
    total_m = 0
    for i in range(max(len(lam), len(mu))):
        total_l += lam[i] if i < len(lam) else 0
        total_m += mu[i] if i < len(mu) else 0
        if total_l < total_m:
            return False
    return True


def pad(lam: Sequence[int], length: int) -> tuple[int, ...]:
    """Right-pad with zeros to the requested length."""
    if len(lam) > length:
        raise ValueError("partition longer than requested padding")
    return tuple(lam) + (0,) * (length - len(lam))


def strip_zeros(vec: Sequence[int]) -> tuple[int, ...]:
    return tuple(p for p in vec if p)


def compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All length-k vectors of nonnegative integers summing to n, in
    ascending lexicographic order (this is the order the compiled
    kernel ranks by)."""
    if k == 0:
        if n == 0:
            yield ()
        return
    if k == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


def distinct_permutations(values: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Every distinct rearrangement of a multiset, ascending lex order.

    >>> list(distinct_permutations((1, 1, 0)))
    [(0, 1, 1), (1, 0, 1), (1, 1, 0)]
    """
    seq = sorted(values)
    n = len(seq)
    if n == 0:
        yield ()
        return
    while True:
        yield tuple(seq)
        i = n - 2
        while i >= 0 and seq[i] >= seq[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while seq[j] <= seq[i]:
            j -= 1
        seq[i], seq[j] = seq[j], seq[i]
        seq[i + 1 :] = reversed(seq[i + 1 :])


def count_distinct_permutations(values: Sequence[int]) -> int:
    """Number of distinct rearrangements (multinomial coefficient)."""
    out = math.factorial(len(values))
    for mult in Counter(values).values():
        out //= math.factorial(mult)
    return out
