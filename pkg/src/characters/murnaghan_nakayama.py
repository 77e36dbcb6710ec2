"""
Exact irreducible characters of S_n by the Murnaghan-Nakayama rule.

Partitions are handled through beta-sets (first-column hook lengths). Removing a border
strip of length r moves one bead from b to b - r; adding one moves a bead from b to b + r.
The sign is (-1) to the number of beads jumped over.

Single values use strip removal with a memo keyed by (partition, remaining cycles).
Whole columns and tables use strip addition, one cycle at a time, which builds the
power-sum expansion p_mu = sum chi^lambda(mu) s_lambda directly.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import numpy as np

from src.characters.cache import CharacterCache, default_cache
from src.characters.classes import ClassLike, as_cycle_type, class_weights, classes_of, dimension
from src.partitions import Partition, as_partition
from src.utils.errors import SizeMismatchError

logger = logging.getLogger(__name__)

Parts = Tuple[int, ...]
Column = Dict[Parts, int]


# ==========================================
# Beta-set strip moves
# ==========================================

def _from_beta(beta: List[int]) -> Parts:
    """Partition parts from a strictly decreasing bead list."""
    length = len(beta)
    parts = [b - (length - 1 - i) for i, b in enumerate(beta)]
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def remove_strips(parts: Parts, r: int) -> Iterator[Tuple[Parts, int]]:
    """Yield (parts after removing a border strip of length r, sign) for every such strip."""
    length = len(parts)
    beta = [p + length - 1 - i for i, p in enumerate(parts)]
    occupied = set(beta)
    for idx, bead in enumerate(beta):
        target = bead - r
        if target < 0 or target in occupied:
            continue
        jumped = sum(1 for c in beta if target < c < bead)
        moved = beta[:idx] + beta[idx + 1:] + [target]
        moved.sort(reverse=True)
        yield _from_beta(moved), (-1 if jumped % 2 else 1)


def add_strips(parts: Parts, r: int) -> Iterator[Tuple[Parts, int]]:
    """Yield (parts after adding a border strip of length r, sign) for every such strip."""
    # r extra zero rows leave room for a vertical strip below the diagram
    length = len(parts) + r
    beta = [(parts[i] if i < len(parts) else 0) + length - 1 - i for i in range(length)]
    occupied = set(beta)
    for idx, bead in enumerate(beta):
        target = bead + r
        if target in occupied:
            continue
        jumped = sum(1 for c in beta if bead < c < target)
        moved = beta[:idx] + beta[idx + 1:] + [target]
        moved.sort(reverse=True)
        yield _from_beta(moved), (-1 if jumped % 2 else 1)


# ==========================================
# Single values
# ==========================================

def _chi(parts: Parts, cycles: Parts, cache: CharacterCache) -> int:
    if not cycles:
        return 1 if not parts else 0
    if cycles[0] == 1:
        # Only fixed points remain: the value is the degree
        return dimension(Partition(parts))

    key = (parts, cycles)
    hit = cache.get(key)
    if hit is not None:
        return hit

    rest = cycles[1:]
    total = 0
    for smaller, sgn in remove_strips(parts, cycles[0]):
        total += sgn * _chi(smaller, rest, cache)
    cache.put(key, total)
    return total


def character_value(lam, mu: ClassLike, cache: Optional[CharacterCache] = None) -> int:
    """
    Exact chi^lam(mu).

    Args:
        lam: Irreducible label (Partition or canonical text)
        mu: Class label of the same size
        cache: Memo to use; the shared process-wide cache by default

    Returns:
        Character value as a Python int

    Raises:
        SizeMismatchError: if |lam| != |mu|
    """
    lam = as_partition(lam)
    mu = as_cycle_type(mu)
    if lam.size != mu.size:
        raise SizeMismatchError(f"character needs |lambda| = |mu|: {lam} vs {mu}")
    return _chi(lam.parts, mu.parts, cache if cache is not None else default_cache)


# ==========================================
# Columns
# ==========================================

def _extend(column: Column, r: int) -> Column:
    grown: Dict[Parts, int] = defaultdict(int)
    for parts, value in column.items():
        for bigger, sgn in add_strips(parts, r):
            grown[bigger] += sgn * value
    return {p: v for p, v in grown.items() if v}


def character_column(mu: ClassLike) -> Dict[Partition, int]:
    """
    All nonzero chi^lambda(mu) for lambda of size |mu|.

    Partitions with a vanishing character are absent from the mapping.
    """
    mu = as_cycle_type(mu)
    column: Column = {(): 1}
    for r in sorted(mu.parts):
        column = _extend(column, r)
    return {Partition(p): v for p, v in column.items()}


def iter_character_columns(n: int) -> Iterator[Tuple[Partition, Column]]:
    """
    Yield (class, column) for every class of S_n.

    Cycle types are walked depth-first as ascending part sequences so that classes
    sharing their smallest parts share the partial columns. Columns map raw parts tuples
    to nonzero values. Order of classes is the walk order, not reverse-lex.
    """
    if n == 0:
        yield Partition(()), {(): 1}
        return

    stack: List[Tuple[int, int, Parts, Column]] = [(n, 1, (), {(): 1})]
    while stack:
        remaining, smallest, prefix, column = stack.pop()
        if remaining == 0:
            yield Partition(tuple(reversed(prefix))), column
            continue
        for r in range(remaining, smallest - 1, -1):
            left = remaining - r
            if left and left < r:
                continue
            stack.append((left, r, prefix + (r,), _extend(column, r)))


@dataclass
class CharacterTable:
    """Character table of S_n with exact integer entries."""

    n: int
    partitions: Tuple[Partition, ...]
    classes: Tuple[Partition, ...]
    values: np.ndarray
    _row_index: Dict[Partition, int] = field(default_factory=dict, repr=False)
    _col_index: Dict[Partition, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._row_index = {lam: i for i, lam in enumerate(self.partitions)}
        self._col_index = {mu: j for j, mu in enumerate(self.classes)}

    def value(self, lam, mu) -> int:
        return self.values[self._row_index[as_partition(lam)], self._col_index[as_cycle_type(mu)]]

    def row(self, lam) -> np.ndarray:
        return self.values[self._row_index[as_partition(lam)], :]

    def column(self, mu) -> np.ndarray:
        return self.values[:, self._col_index[as_cycle_type(mu)]]

    def class_weights(self) -> np.ndarray:
        """n!/z_c per column, object dtype."""
        return np.array(class_weights(self.n), dtype=object)


@lru_cache(maxsize=8)
def character_table(n: int) -> CharacterTable:
    """
    Full character table of S_n, rows and columns in reverse-lexicographic order.

    Args:
        n: Size of the symmetric group

    Returns:
        CharacterTable with an object-dtype numpy matrix of Python ints
    """
    partitions = classes_of(n)
    index = {lam.parts: i for i, lam in enumerate(partitions)}
    col_index = {mu: j for j, mu in enumerate(partitions)}

    values = np.zeros((len(partitions), len(partitions)), dtype=object)
    for mu, column in iter_character_columns(n):
        j = col_index[mu]
        for parts, value in column.items():
            values[index[parts], j] = value
    logger.debug("character table of S_%d built (%d classes)", n, len(partitions))
    return CharacterTable(n=n, partitions=partitions, classes=partitions, values=values)


def stream_class_sums(
    n: int,
    weight: Callable[[Partition, Column], int],
) -> Dict[Parts, int]:
    """
    Accumulate sum_c weight(c) * chi^nu(c) for every nu, over all classes c of S_n.

    Classes with zero weight are skipped; the result maps raw parts to totals and omits zeros.
    """
    totals: Dict[Parts, int] = defaultdict(int)
    for mu, column in iter_character_columns(n):
        w = weight(mu, column)
        if not w:
            continue
        for parts, value in column.items():
            totals[parts] += w * value
    return {p: v for p, v in totals.items() if v}
