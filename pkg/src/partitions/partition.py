"""
Partition value type.

Partitions are immutable, stored without trailing zeros, and compared structurally,
so they can be used directly as memo keys and set members.
"""

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from typing import Iterable, Iterator, List, Optional, Tuple

from src.utils.errors import PartitionSyntaxError, SizeMismatchError


@lru_cache(maxsize=1 << 16)
def _conjugate_parts(parts: Tuple[int, ...]) -> Tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing sequence of positive integers."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, p in enumerate(parts):
            if p < 1 or (i and parts[i - 1] < p):
                raise ValueError(f"not a partition: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    # ------------------------------------------------------------------
    # Basic queries
    # ------------------------------------------------------------------
    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def __bool__(self) -> bool:
        return bool(self.parts)

    def part(self, i: int) -> int:
        """Row i (0-based), zero past the last row."""
        return self.parts[i] if i < len(self.parts) else 0

    def __str__(self) -> str:
        return format_partition(self)

    def __repr__(self) -> str:
        return f"Partition({format_partition(self)})"

    # ------------------------------------------------------------------
    # Structure
    # ------------------------------------------------------------------
    def conjugate(self) -> "Partition":
        return Partition(_conjugate_parts(self.parts))

    def is_self_conjugate(self) -> bool:
        return _conjugate_parts(self.parts) == self.parts

    def has_distinct_parts(self) -> bool:
        return all(a > b for a, b in zip(self.parts, self.parts[1:]))

    def durfee(self) -> int:
        return sum(1 for i, p in enumerate(self.parts) if p > i)

    def principal_hooks(self) -> "Partition":
        conj = _conjugate_parts(self.parts)
        k = self.durfee()
        return Partition(tuple(self.parts[i] + conj[i] - 2 * i - 1 for i in range(k)))

    def hook_lengths(self) -> List[List[int]]:
        conj = _conjugate_parts(self.parts)
        return [
            [row - j + conj[j] - i - 1 for j in range(row)]
            for i, row in enumerate(self.parts)
        ]

    def column_multiplicities(self, max_length: int) -> Tuple[int, ...]:
        """c_i = number of columns of length i, for 1 <= i <= max_length."""
        counts = [0] * max_length
        for col in _conjugate_parts(self.parts):
            if col <= max_length:
                counts[col - 1] += 1
        return tuple(counts)

    # ------------------------------------------------------------------
    # Orders
    # ------------------------------------------------------------------
    def dominates(self, other: "Partition") -> bool:
        """True iff every prefix sum of self is at least the matching prefix sum of other."""
        if self.size != other.size:
            raise SizeMismatchError(f"dominance needs equal sizes: {self} vs {other}")
        for a, b in zip(accumulate(self.parts), accumulate(other.parts)):
            if a < b:
                return False
        # other may be longer; its remaining prefix sums only grow towards the common total
        return True

    def contains(self, other: "Partition") -> bool:
        """Diagram containment: other is a subdiagram of self."""
        if len(other) > len(self):
            return False
        return all(a >= b for a, b in zip(self.parts, other.parts))

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------
    def __add__(self, other: "Partition") -> "Partition":
        return row_add(self, other)

    def __or__(self, other: "Partition") -> "Partition":
        return vertical_sum(self, other)

    def minus(self, other: "Partition") -> Optional["Partition"]:
        return row_sub(self, other)

    def scale(self, s: int) -> "Partition":
        return Partition(tuple(s * p for p in self.parts))


EMPTY = Partition(())


def conjugate(lam: Partition) -> Partition:
    return lam.conjugate()


def dominates(lam: Partition, mu: Partition) -> bool:
    return lam.dominates(mu)


def durfee_and_principal_hooks(lam: Partition) -> Tuple[int, Partition]:
    """Durfee size and principal hook partition; the empty partition gives (0, empty)."""
    return lam.durfee(), lam.principal_hooks()


def row_add(lam: Partition, mu: Partition) -> Partition:
    width = max(len(lam), len(mu))
    return Partition(tuple(lam.part(i) + mu.part(i) for i in range(width)))


def row_sub(lam: Partition, mu: Partition) -> Optional[Partition]:
    """Rowwise difference, or None when it is not a partition."""
    if len(mu) > len(lam):
        return None
    diff = [lam.part(i) - mu.part(i) for i in range(len(lam))]
    for i, d in enumerate(diff):
        if d < 0 or (i and diff[i - 1] < d):
            return None
    return Partition(tuple(diff))


def vertical_sum(lam: Partition, mu: Partition) -> Partition:
    return Partition(tuple(sorted(lam.parts + mu.parts, reverse=True)))


# ==========================================
# Canonical text form
# ==========================================

_ITEM = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_partition(text: str) -> Partition:
    """
    Parse the bracket/exponent grammar, e.g. ``[3^3,2^2,1]``.

    Args:
        text: Partition text; brackets or parentheses optional, ``[]`` is empty

    Returns:
        Parsed partition

    Raises:
        PartitionSyntaxError: on malformed items or parts that increase
    """
    body = text.strip()
    if body[:1] in "[(" and body[-1:] in "])":
        body = body[1:-1]
    body = body.strip()
    if not body:
        return EMPTY

    parts: List[int] = []
    for item in body.split(","):
        match = _ITEM.match(item)
        if not match:
            raise PartitionSyntaxError(f"bad partition item {item!r} in {text!r}")
        value = int(match.group(1))
        times = int(match.group(2)) if match.group(2) is not None else 1
        parts.extend([value] * times)

    parts = [p for p in parts if p != 0]
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise PartitionSyntaxError(f"parts must be weakly decreasing: {text!r}")
    return Partition(tuple(parts))


def format_partition(lam: Partition) -> str:
    return "[" + ",".join(str(p) for p in lam.parts) + "]"


def as_partition(value) -> Partition:
    """Coerce text, tuples or partitions to a Partition."""
    if isinstance(value, Partition):
        return value
    if isinstance(value, str):
        return parse_partition(value)
    return Partition(tuple(value))


def partitions_from(values: Iterable) -> List[Partition]:
    return [as_partition(v) for v in values]
