"""
Column statistics: vanishing counts N(mu) and CSV column dumps.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import IO, List, Union

import pandas as pd

from src.characters.classes import ClassLike, as_cycle_type
from src.characters.murnaghan_nakayama import character_column
from src.partitions import Partition, enumerate_partitions, partition_count, staircase

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ColumnStats:
    """Zero/nonzero split of one character table column."""

    cycle_type: Partition
    zero_count: int
    nonzero_count: int
    total: int

    def to_dict(self) -> dict:
        return {
            "class": str(self.cycle_type),
            "zero_count": self.zero_count,
            "nonzero_count": self.nonzero_count,
            "total": self.total,
        }


def vanishing_count(mu: ClassLike) -> ColumnStats:
    """N(mu): how many irreducible characters vanish on the class mu."""
    mu = as_cycle_type(mu)
    nonzero = len(character_column(mu))
    total = partition_count(mu.size)
    return ColumnStats(cycle_type=mu, zero_count=total - nonzero, nonzero_count=nonzero, total=total)


def principal_hook_class(lam) -> Partition:
    """The principal hook partition of lam, read as a cycle type."""
    return as_cycle_type(lam).principal_hooks()


def vanishing_table(m_max: int, m_min: int = 1) -> pd.DataFrame:
    """
    N(rho_m) against N of the principal hook class of rho_m, for m_min <= m <= m_max.

    Returns:
        DataFrame with columns m, n, classes, N_rho, N_hat_rho
    """
    rows: List[dict] = []
    for m in range(m_min, m_max + 1):
        rho = staircase(m)
        plain = vanishing_count(rho)
        hooks = vanishing_count(principal_hook_class(rho))
        rows.append({
            "m": m,
            "n": rho.size,
            "classes": plain.total,
            "N_rho": plain.zero_count,
            "N_hat_rho": hooks.zero_count,
        })
        logger.debug("m=%d N(rho)=%d N(hat rho)=%d", m, plain.zero_count, hooks.zero_count)
    return pd.DataFrame(rows, columns=["m", "n", "classes", "N_rho", "N_hat_rho"])


def column_frame(mu: ClassLike) -> pd.DataFrame:
    """One row per lambda of size |mu| (reverse-lex), zeros included."""
    mu = as_cycle_type(mu)
    column = character_column(mu)
    label = str(mu)
    rows = [
        {"class": label, "partition": str(lam), "value": column.get(lam, 0)}
        for lam in enumerate_partitions(mu.size)
    ]
    return pd.DataFrame(rows, columns=["class", "partition", "value"])


def write_column_csv(mu: ClassLike, target: Union[str, Path, IO[str]]) -> None:
    """Write the column of mu as CSV with header class,partition,value."""
    frame = column_frame(mu)
    # Values may exceed 64 bits; keep them as exact Python ints in text form
    frame["value"] = frame["value"].map(str)
    frame.to_csv(target, index=False, lineterminator="\n")
