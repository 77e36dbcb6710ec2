"""
Dominance statistics, graphical and conjugate-upward partitions, and the counting
bounds used by the Durfee-k reduction.
"""

import logging
from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import accumulate
from typing import List, Optional, Tuple, Union

import numpy as np
import pandas as pd

from src.partitions import (
    Partition,
    arm_leg_profile,
    as_partition,
    enumerate_partitions,
    from_profile,
    staircase,
    staircase_size,
)
from src.utils.errors import ParameterRangeError

logger = logging.getLogger(__name__)


def is_graphical(lam: Partition) -> bool:
    """Even size and sum_(j<=i) lam'_j >= sum_(j<=i) lam_j + i for 1 <= i <= d(lam)."""
    if lam.size % 2:
        return False
    conj = lam.conjugate()
    rows = list(accumulate(lam.parts))
    cols = list(accumulate(conj.parts))
    return all(cols[i - 1] >= rows[i - 1] + i for i in range(1, lam.durfee() + 1))


def is_conjugate_upward(lam: Partition) -> bool:
    return lam.conjugate().dominates(lam)


@dataclass(frozen=True)
class DominanceStats:
    """Counts over P(n) relative to a reference partition."""

    reference: str
    n: int
    partitions: int
    below: int
    above: int
    comparable: int
    conjugate_upward: int
    graphical: int

    @property
    def comparable_ratio(self) -> Fraction:
        return Fraction(self.comparable, self.partitions)

    def to_dict(self) -> dict:
        row = asdict(self)
        row["comparable_ratio"] = float(self.comparable_ratio)
        return row


def dominance_stats(target: Union[int, Partition, str]) -> DominanceStats:
    """
    Exact counts by enumeration of P(n).

    Args:
        target: A partition lambda, or a size n (reference is then the staircase if n is
            triangular, otherwise the one-row partition)
    """
    if isinstance(target, int):
        m = 0
        while staircase_size(m + 1) <= target:
            m += 1
        lam = staircase(m) if staircase_size(m) == target else Partition((target,))
    else:
        lam = as_partition(target)

    below = above = upward = graphical = total = 0
    for mu in enumerate_partitions(lam.size):
        total += 1
        if lam.dominates(mu):
            below += 1
        if mu.dominates(lam):
            above += 1
        if is_conjugate_upward(mu):
            upward += 1
        if is_graphical(mu):
            graphical += 1
    return DominanceStats(
        reference=str(lam),
        n=lam.size,
        partitions=total,
        below=below,
        above=above,
        comparable=below + above - 1,
        conjugate_upward=upward,
        graphical=graphical,
    )


def dominance_table(m_max: int, m_min: int = 1) -> pd.DataFrame:
    """Statistics for the staircase series rho_m, m_min <= m <= m_max."""
    rows = []
    for m in range(m_min, m_max + 1):
        stats = dominance_stats(staircase(m))
        row = {"m": m, "two_power": 2 ** m}
        row.update(stats.to_dict())
        rows.append(row)
        logger.debug("rho_%d: comparable=%d of %d", m, stats.comparable, stats.partitions)
    columns = [
        "m", "n", "partitions", "below", "above", "comparable", "two_power",
        "comparable_ratio", "conjugate_upward", "graphical",
    ]
    return pd.DataFrame(rows)[columns]


# ==========================================
# Durfee-k reduction bounds
# ==========================================

def reduction_bound(k: int) -> int:
    """Largest m reached by the Durfee-k pigeonhole argument: 4k^2 + 4k - 2."""
    return 4 * k * k + 4 * k - 2


def weight_threshold(m: int, k: int) -> int:
    """Arm weight above which a Durfee-k target is directly decomposable."""
    if k == 3:
        return 4 * m - 6
    if k == 4:
        return 8 * m - 28
    raise ParameterRangeError(f"weight thresholds are known for k = 3, 4 only, got k={k}")


def pigeonhole_witness(mu: Partition, m: int) -> Optional[Tuple[str, int]]:
    """("arm" | "leg", i) with a_i or b_i >= 2m - 2i + 1, or None."""
    profile = arm_leg_profile(mu)
    for i in range(1, profile.k + 1):
        bound = 2 * m - 2 * i + 1
        if profile.a[i - 1] >= bound:
            return "arm", i
        if profile.b[i - 1] >= bound:
            return "leg", i
    return None


def _random_multiplicities(total: int, k: int, rng: np.random.Generator) -> List[int]:
    counts = [0] * k
    remaining = total
    for i in range(k, 1, -1):
        counts[i - 1] = int(rng.integers(0, remaining // i + 1))
        remaining -= i * counts[i - 1]
    counts[0] = remaining
    return counts


def random_durfee_partition(m: int, k: int, rng: Optional[np.random.Generator] = None) -> Partition:
    """
    A random element of S(m, k): Durfee size k and size |rho_m|.

    The arm/leg split is uniform and the multiplicities are filled greedily from the longest
    columns, so the distribution is not uniform over S(m, k).
    """
    n = staircase_size(m)
    if k < 1 or k * k > n:
        raise ParameterRangeError(f"S({m},{k}) is empty")
    rng = rng if rng is not None else np.random.default_rng()
    spare = n - k * k
    arm_weight = int(rng.integers(0, spare + 1))
    a = _random_multiplicities(arm_weight, k, rng)
    b = _random_multiplicities(spare - arm_weight, k, rng)
    return from_profile(k, tuple(a), tuple(b))
