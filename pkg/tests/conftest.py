"""
Shared fixtures for the saxlkit test suite.

The brute-force character table works at the level of permutations: permutation
characters of Young subgroups are counted tabloid by tabloid and then unwound with
Kostka numbers counted filling by filling. It is independent of the border-strip code
and only meant for n <= 6.
"""

from functools import lru_cache
from itertools import permutations
from typing import Dict, List, Tuple

import pytest

from src.certificates import RulePolicy
from src.kronecker import KroneckerOracle
from src.partitions import Partition, enumerate_partitions


def _permutation_of_type(mu: Partition) -> List[int]:
    """A permutation of {0..n-1} whose cycles have the lengths of mu."""
    perm = []
    start = 0
    for length in mu.parts:
        block = list(range(start, start + length))
        perm.extend(block[1:] + block[:1])
        start += length
    return perm


@lru_cache(maxsize=None)
def _tabloids(shape: Partition) -> List[Tuple[frozenset, ...]]:
    seen = set()
    n = shape.size
    for order in permutations(range(n)):
        rows = []
        start = 0
        for length in shape.parts:
            rows.append(frozenset(order[start:start + length]))
            start += length
        seen.add(tuple(rows))
    return list(seen)


def _permutation_character(shape: Partition, mu: Partition) -> int:
    perm = _permutation_of_type(mu)
    return sum(
        1
        for rows in _tabloids(shape)
        if all(frozenset(perm[x] for x in row) == row for row in rows)
    )


@lru_cache(maxsize=None)
def _kostka(shape: Partition, content: Partition) -> int:
    """Semistandard fillings of `shape` with content `content`, counted directly."""
    word = [value for value, count in enumerate(content.parts) for _ in range(count)]
    cells = [(i, j) for i, row in enumerate(shape.parts) for j in range(row)]
    count = 0
    for filling in set(permutations(word)):
        grid = dict(zip(cells, filling))
        rows_ok = all(grid[(i, j)] <= grid[(i, j + 1)] for (i, j) in cells if (i, j + 1) in grid)
        cols_ok = all(grid[(i, j)] < grid[(i + 1, j)] for (i, j) in cells if (i + 1, j) in grid)
        if rows_ok and cols_ok:
            count += 1
    return count


@lru_cache(maxsize=None)
def brute_force_table(n: int) -> Dict[Tuple[Partition, Partition], int]:
    """{(lambda, mu): chi^lambda(mu)} for every pair of partitions of n."""
    shapes = list(enumerate_partitions(n))
    table: Dict[Tuple[Partition, Partition], int] = {}
    # reverse-lex order extends dominance, so every kappa dominating lam is done first
    for index, lam in enumerate(shapes):
        for mu in shapes:
            value = _permutation_character(lam, mu)
            for kappa in shapes[:index]:
                value -= _kostka(kappa, lam) * table[(kappa, mu)]
            table[(lam, mu)] = value
    return table


# Independent n <= 6 cross-check for the Murnaghan-Nakayama code; no border strips.
@pytest.fixture(scope="session")
def brute_characters():
    """Callable n -> {(lambda, mu): value}, permutation-level, n <= 6."""
    return brute_force_table


@pytest.fixture(scope="session")
def oracle():
    """A private oracle so tests do not depend on the CLI's global limits."""
    return KroneckerOracle(max_n=40)


@pytest.fixture
def policy():
    """Default trust settings, spelled out so environment overrides cannot leak in."""
    return RulePolicy(brute_force_size_cap=36, audit_cap=11, extended=False, leaf_size=21)


@pytest.fixture
def small_policy():
    """Oracle leaves only up to rho_4, so the reducer has to decompose."""
    return RulePolicy(brute_force_size_cap=36, audit_cap=8, extended=False, leaf_size=10)
