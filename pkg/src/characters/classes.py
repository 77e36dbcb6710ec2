"""
Conjugacy classes of S_n: cycle types, centralizer orders, signs, and dimensions.
"""

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Dict, Tuple, Union

from src.partitions import Partition, as_partition, enumerate_partitions


@dataclass(frozen=True)
class CycleType:
    """A partition used as a conjugacy class label."""

    partition: Partition

    @property
    def n(self) -> int:
        return self.partition.size

    @property
    def multiplicities(self) -> Dict[int, int]:
        """m_i = number of cycles of length i."""
        return dict(sorted(Counter(self.partition.parts).items()))

    @property
    def z(self) -> int:
        return class_size(self.partition)

    @property
    def sign(self) -> int:
        return sign(self.partition)

    def __str__(self) -> str:
        return str(self.partition)


ClassLike = Union[CycleType, Partition, str, Tuple[int, ...]]


def as_cycle_type(value: ClassLike) -> Partition:
    """Underlying partition of a class label."""
    if isinstance(value, CycleType):
        return value.partition
    return as_partition(value)


def class_size(mu: ClassLike) -> int:
    """
    Centralizer order z_mu = prod i^(m_i) * m_i!.

    The class itself has n!/z_mu elements.
    """
    mu = as_cycle_type(mu)
    return prod(i ** m * factorial(m) for i, m in Counter(mu.parts).items())


def sign(mu: ClassLike) -> int:
    mu = as_cycle_type(mu)
    return -1 if (mu.size - len(mu)) % 2 else 1


def dimension(lam: Union[Partition, str]) -> int:
    """Hook-length formula n! / prod(hooks)."""
    lam = as_partition(lam)
    hooks = prod(h for row in lam.hook_lengths() for h in row)
    return factorial(lam.size) // hooks


@lru_cache(maxsize=64)
def classes_of(n: int) -> Tuple[Partition, ...]:
    """All cycle types of S_n in reverse-lexicographic order."""
    return tuple(enumerate_partitions(n))


@lru_cache(maxsize=64)
def class_weights(n: int) -> Tuple[int, ...]:
    """n!/z_c for every class c of S_n, in classes_of(n) order."""
    total = factorial(n)
    return tuple(total // class_size(c) for c in classes_of(n))
