"""
Kronecker Coefficient Oracle

Computes g(lambda, mu, nu) = (1/n!) * sum_c (n!/z_c) chi^lambda(c) chi^mu(c) chi^nu(c)
in exact integers, dividing by n! once at the end.
"""

import logging
from dataclasses import dataclass
from math import factorial
from typing import Dict, List, Optional, Set, Tuple

from src.characters import (
    CharacterCache,
    character_value,
    class_size,
    class_weights,
    classes_of,
    default_cache,
    stream_class_sums,
)
from src.partitions import Partition, as_partition, enumerate_partitions
from src.utils.config import config
from src.utils.errors import OracleLimitError, SizeMismatchError

logger = logging.getLogger(__name__)

# Character rows kept per oracle before the row cache is flushed
ROW_CACHE_LIMIT = 4096
# Self-paired queries up to this size are answered from one cached tensor square
SQUARE_CACHE_MAX_N = 24
SQUARE_CACHE_LIMIT = 256


@dataclass(frozen=True)
class KroneckerQuery:
    """Three partitions of a common size n."""

    lam: Partition
    mu: Partition
    nu: Partition

    def __post_init__(self):
        for name in ("lam", "mu", "nu"):
            object.__setattr__(self, name, as_partition(getattr(self, name)))
        if not (self.lam.size == self.mu.size == self.nu.size):
            raise SizeMismatchError(
                f"Kronecker query needs equal sizes: {self.lam}, {self.mu}, {self.nu}"
            )

    @property
    def n(self) -> int:
        return self.lam.size


class KroneckerOracle:
    """
    Ground-truth Kronecker coefficients with cached character rows.

    Args:
        max_n: Largest size evaluated without an explicit override (default from config)
        cache: Character value memo shared with character_value
    """

    def __init__(self, max_n: Optional[int] = None, cache: Optional[CharacterCache] = None):
        self.max_n = config.MAX_N if max_n is None else max_n
        self.cache = cache if cache is not None else default_cache
        self._rows: Dict[Partition, Tuple[int, ...]] = {}
        self._squares: Dict[Partition, Dict[Partition, int]] = {}
        self.evaluations = 0

    def _guard(self, n: int, check_limit: bool) -> None:
        if check_limit and n > self.max_n:
            raise OracleLimitError(f"size {n} exceeds max_n={self.max_n}; raise --max-n to allow it")

    def row(self, lam) -> Tuple[int, ...]:
        """chi^lam on every class of S_n, in reverse-lex class order."""
        lam = as_partition(lam)
        cached = self._rows.get(lam)
        if cached is not None:
            return cached
        if len(self._rows) >= ROW_CACHE_LIMIT:
            self._rows.clear()
        values = tuple(character_value(lam, c, self.cache) for c in classes_of(lam.size))
        self._rows[lam] = values
        return values

    def kronecker(self, lam, mu, nu, check_limit: bool = True) -> int:
        """
        Exact g(lam, mu, nu).

        Raises:
            SizeMismatchError: unequal sizes
            OracleLimitError: size above max_n while check_limit is set
            ArithmeticError: the class sum is not divisible by n!
        """
        query = KroneckerQuery(lam, mu, nu)
        return self.evaluate(query, check_limit=check_limit)

    def evaluate(self, query: KroneckerQuery, check_limit: bool = True) -> int:
        n = query.n
        self._guard(n, check_limit)
        self.evaluations += 1

        if query.lam == query.mu and n <= SQUARE_CACHE_MAX_N:
            return self._square(query.lam).get(query.nu, 0)

        a, b, c = self.row(query.lam), self.row(query.mu), self.row(query.nu)
        total = 0
        for w, x, y, z in zip(class_weights(n), a, b, c):
            if x and y and z:
                total += w * x * y * z

        value, remainder = divmod(total, factorial(n))
        if remainder or value < 0:
            raise ArithmeticError(
                f"inexact Kronecker sum for {query.lam}, {query.mu}, {query.nu}: {total} / {n}!"
            )
        return value

    def is_positive(self, lam, mu, nu, check_limit: bool = True) -> bool:
        return self.kronecker(lam, mu, nu, check_limit=check_limit) > 0

    def tensor_square_multiplicities(self, lam, check_limit: bool = True) -> Dict[Partition, int]:
        """nu -> g(lam, lam, nu) for every nu with a positive coefficient."""
        lam = as_partition(lam)
        n = lam.size
        self._guard(n, check_limit)
        total = factorial(n)

        def weight(mu: Partition, column) -> int:
            chi = column.get(lam.parts, 0)
            return chi * chi * (total // class_size(mu)) if chi else 0

        sums = stream_class_sums(n, weight)
        result: Dict[Partition, int] = {}
        for parts, s in sums.items():
            value, remainder = divmod(s, total)
            if remainder or value < 0:
                raise ArithmeticError(f"inexact tensor square sum for {lam} at {parts}")
            if value:
                result[Partition(parts)] = value
        logger.debug("tensor square of %s: %d constituents", lam, len(result))
        return result

    def _square(self, lam: Partition) -> Dict[Partition, int]:
        cached = self._squares.get(lam)
        if cached is None:
            if len(self._squares) >= SQUARE_CACHE_LIMIT:
                self._squares.clear()
            cached = self.tensor_square_multiplicities(lam, check_limit=False)
            self._squares[lam] = cached
        return cached

    def tensor_square_support(self, lam, check_limit: bool = True) -> Set[Partition]:
        return set(self.tensor_square_multiplicities(lam, check_limit=check_limit))

    def missing_constituents(self, lam, check_limit: bool = True) -> List[Partition]:
        """Partitions of |lam| absent from the tensor square, reverse-lex."""
        lam = as_partition(lam)
        support = self.tensor_square_support(lam, check_limit=check_limit)
        return [nu for nu in enumerate_partitions(lam.size) if nu not in support]

    def clear(self) -> None:
        self._rows.clear()
        self._squares.clear()


# Shared oracle used by the module-level helpers
default_oracle = KroneckerOracle()


def kronecker(lam, mu, nu) -> int:
    return default_oracle.kronecker(lam, mu, nu)


def is_positive(lam, mu, nu) -> bool:
    return default_oracle.is_positive(lam, mu, nu)


def tensor_square_multiplicities(lam) -> Dict[Partition, int]:
    return default_oracle.tensor_square_multiplicities(lam)


def tensor_square_support(lam) -> Set[Partition]:
    return default_oracle.tensor_square_support(lam)


def missing_constituents(lam) -> List[Partition]:
    return default_oracle.missing_constituents(lam)
