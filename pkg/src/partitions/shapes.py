"""
Shape constructors: staircases, staircase strips, chopped squares and carets.
"""

from src.partitions.partition import Partition
from src.utils.errors import ParameterRangeError


def staircase(m: int) -> Partition:
    """rho_m = (m, m-1, ..., 1)."""
    if m < 0:
        raise ParameterRangeError(f"staircase order must be >= 0, got {m}")
    return Partition(tuple(range(m, 0, -1)))


def tau(m: int, i: int) -> Partition:
    """Top i rows of rho_m: (m, m-1, ..., m-i+1)."""
    if m < 0 or i < 0 or i > m + 1:
        raise ParameterRangeError(f"tau needs 0 <= i <= m+1, got m={m}, i={i}")
    return Partition(tuple(m - j for j in range(i)))


def sigma(m: int, i: int) -> Partition:
    """(i^(m-i+1), i-1, ..., 1), the conjugate of tau(m, i)."""
    if m < 0 or i < 0 or i > m + 1:
        raise ParameterRangeError(f"sigma needs 0 <= i <= m+1, got m={m}, i={i}")
    return Partition((i,) * (m - i + 1) + tuple(range(i - 1, 0, -1)))


def chopped_square(k: int) -> Partition:
    """eta_k = (k^(k-1), k-1), of size k^2 - 1."""
    if k < 1:
        raise ParameterRangeError(f"chopped square order must be >= 1, got {k}")
    return Partition((k,) * (k - 1) + (k - 1,))


def caret(k: int) -> Partition:
    """gamma_k = (3k-1, 3k-3, ..., k+1, k, k-1, k-1, ..., 1, 1), self-conjugate of size 3k^2."""
    if k < 1:
        raise ParameterRangeError(f"caret order must be >= 1, got {k}")
    head = tuple(3 * k - 1 - 2 * j for j in range(k))
    tail = tuple(v for j in range(k - 1, 0, -1) for v in (j, j))
    return Partition(head + (k,) + tail)


def rectangle(rows: int, cols: int) -> Partition:
    if rows < 0 or cols < 0:
        raise ParameterRangeError(f"rectangle needs nonnegative sides, got {rows}x{cols}")
    return Partition((cols,) * rows if cols else ())


def hook(n: int, leg: int) -> Partition:
    """(n - leg, 1^leg)."""
    if n < 1 or leg < 0 or leg >= n:
        raise ParameterRangeError(f"hook needs 0 <= leg < n, got n={n}, leg={leg}")
    return Partition((n - leg,) + (1,) * leg)


def staircase_size(m: int) -> int:
    return m * (m + 1) // 2
