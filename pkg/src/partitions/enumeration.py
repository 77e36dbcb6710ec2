"""
Deterministic partition enumeration and counting.

All generators yield partitions in reverse-lexicographic order.
"""

from functools import lru_cache
from typing import Iterator, Optional, Tuple

from src.partitions.partition import Partition
from src.utils.errors import ParameterRangeError


def _rev_lex(n: int, max_part: int, max_length: Optional[int]) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    if max_length == 0:
        return
    rest_length = None if max_length is None else max_length - 1
    for first in range(min(n, max_part), 0, -1):
        if rest_length is not None and first * (rest_length + 1) < n:
            break
        for tail in _rev_lex(n - first, first, rest_length):
            yield (first,) + tail


def _heads(total: int, k: int, cap: int) -> Iterator[Tuple[int, ...]]:
    """Weakly decreasing k-vectors of nonnegative integers summing to at most total, reverse-lex."""
    if k == 0:
        yield ()
        return
    for first in range(min(total, cap), -1, -1):
        for tail in _heads(total - first, k - 1, first):
            yield (first,) + tail


def _durfee_class(n: int, k: int) -> Iterator[Tuple[int, ...]]:
    spare = n - k * k
    if spare < 0:
        return
    for arm in _heads(spare, k, spare):
        leg_total = spare - sum(arm)
        top = tuple(k + x for x in arm)
        for leg in _rev_lex(leg_total, k, None):
            yield top + leg


def enumerate_partitions(
    n: int,
    durfee: Optional[int] = None,
    max_length: Optional[int] = None,
    max_part: Optional[int] = None,
) -> Iterator[Partition]:
    """
    Yield every partition of n exactly once, in reverse-lexicographic order.

    Args:
        n: Size
        durfee: Restrict to D(n, k), partitions with Durfee size exactly k
        max_length: At most this many parts
        max_part: No part larger than this

    Returns:
        Generator of Partition
    """
    if n < 0:
        raise ParameterRangeError(f"cannot enumerate partitions of {n}")
    if durfee is not None:
        source = _durfee_class(n, durfee) if durfee > 0 else (iter([()]) if n == 0 else iter([]))
    else:
        source = _rev_lex(n, n if max_part is None else max_part, max_length)

    for parts in source:
        if max_length is not None and len(parts) > max_length:
            continue
        if max_part is not None and parts and parts[0] > max_part:
            continue
        yield Partition(parts)


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    j = 1
    while True:
        g1 = j * (3 * j - 1) // 2
        if g1 > n:
            break
        sign = 1 if j % 2 else -1
        total += sign * partition_count(n - g1)
        g2 = j * (3 * j + 1) // 2
        if g2 <= n:
            total += sign * partition_count(n - g2)
        j += 1
    return total


@lru_cache(maxsize=None)
def _bounded_part_counts(limit: int, bound: int) -> Tuple[int, ...]:
    """counts[j] = number of partitions of j with parts <= bound, for j <= limit."""
    counts = [1] + [0] * limit
    for part in range(1, bound + 1):
        for j in range(part, limit + 1):
            counts[j] += counts[j - part]
    return tuple(counts)


def durfee_class_size(n: int, k: int) -> int:
    """|D(n, k)|: arm partitions with at most k parts times leg partitions with parts at most k."""
    spare = n - k * k
    if spare < 0:
        return 0
    if k == 0:
        return 1 if n == 0 else 0
    counts = _bounded_part_counts(spare, k)
    return sum(counts[a] * counts[spare - a] for a in range(spare + 1))
