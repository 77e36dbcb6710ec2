"""
S-vector search.

An S-vector x picks x_i columns of length i from the arm of a partition; its target is
sum i * x_i and it induces upsilon = (x_1 + ... + x_k, x_2 + ... + x_k, ..., x_k).
Candidates are enumerated greedily: the count for the first column length in the
search order is maximized first, then the next, with backtracking.
"""

from typing import Callable, Iterator, List, Optional, Sequence

from src.partitions import ArmLegProfile, Partition, SelectVector

UpsilonPredicate = Callable[[Partition], bool]


def search_order(k: int, order: Optional[Sequence[int]] = None) -> List[int]:
    """
    Column lengths in priority order.

    Lengths named in `order` come first; the rest follow from longest to shortest.
    """
    head = [i for i in (order or ()) if 1 <= i <= k]
    if len(set(head)) != len(head):
        raise ValueError(f"search order repeats a column length: {order}")
    return head + [i for i in range(k, 0, -1) if i not in head]


def iter_select_vectors(
    profile: ArmLegProfile,
    target: int,
    predicate: Optional[UpsilonPredicate] = None,
    order: Optional[Sequence[int]] = None,
) -> Iterator[SelectVector]:
    """
    Yield every S-vector of `profile` with the given target, in search order.

    Args:
        profile: Arm/leg profile whose a_i bound the counts
        target: Required sum of i * x_i
        predicate: Optional filter on the induced partition upsilon
        order: Column lengths maximized first (default k, k-1, ..., 1)
    """
    if target < 0:
        return
    k = profile.k
    lengths = search_order(k, order)
    # capacity[j] = weight still available from lengths[j:]
    capacity = [0] * (len(lengths) + 1)
    for j in range(len(lengths) - 1, -1, -1):
        i = lengths[j]
        capacity[j] = capacity[j + 1] + i * profile.a[i - 1]

    x = [0] * k

    def walk(j: int, remaining: int) -> Iterator[SelectVector]:
        if remaining > capacity[j]:
            return
        if j == len(lengths):
            if remaining == 0:
                candidate = SelectVector(tuple(x))
                if predicate is None or predicate(candidate.upsilon):
                    yield candidate
            return
        i = lengths[j]
        for count in range(min(profile.a[i - 1], remaining // i), -1, -1):
            x[i - 1] = count
            yield from walk(j + 1, remaining - i * count)
        x[i - 1] = 0

    if k == 0:
        if target == 0 and (predicate is None or predicate(Partition(()))):
            yield SelectVector(())
        return
    yield from walk(0, target)


def find_select_vector(
    profile: ArmLegProfile,
    target: int,
    predicate: Optional[UpsilonPredicate] = None,
    order: Optional[Sequence[int]] = None,
) -> Optional[SelectVector]:
    """First S-vector in search order, or None."""
    return next(iter_select_vectors(profile, target, predicate, order), None)


def max_length(limit: int) -> UpsilonPredicate:
    """Predicate: upsilon has at most `limit` parts."""
    return lambda upsilon: len(upsilon) <= limit


def dominates_partition(lower: Partition) -> UpsilonPredicate:
    """Predicate: upsilon dominates `lower` (sizes must match)."""
    return lambda upsilon: upsilon.size == lower.size and upsilon.dominates(lower)
