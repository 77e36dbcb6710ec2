"""
Verification reports: one row per target with status, certificate path and timing.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Dict, List, Optional, Union

import pandas as pd

from src.partitions import Partition

logger = logging.getLogger(__name__)

CERTIFIED = "certified"
BRUTE_FORCED = "brute-forced"
FAILED = "failed"
STATUSES = (CERTIFIED, BRUTE_FORCED, FAILED)

COLUMNS = ["target", "status", "certificate_path", "millis"]


@dataclass(frozen=True)
class TargetRecord:
    target: str
    status: str
    certificate_path: str = ""
    millis: int = 0
    detail: str = ""


@dataclass
class VerificationReport:
    """
    Per-run record for one family over a parameter range.

    Attributes:
        family: Family label, e.g. "triple_hooks" or "audit"
        start, end: Inclusive parameter range
        report_timings: When False every millis entry is written as 0
    """

    family: str
    start: int
    end: int
    report_timings: bool = True
    records: List[TargetRecord] = field(default_factory=list)

    def add(
        self,
        target: Union[str, Partition],
        status: str,
        certificate_path: str = "",
        millis: int = 0,
        detail: str = "",
    ) -> None:
        if status not in STATUSES:
            raise ValueError(f"unknown status {status!r}")
        self.records.append(TargetRecord(
            target=str(target),
            status=status,
            certificate_path=certificate_path,
            millis=int(millis) if self.report_timings else 0,
            detail=detail,
        ))

    def extend(self, records: List[TargetRecord]) -> None:
        for record in records:
            self.add(record.target, record.status, record.certificate_path, record.millis, record.detail)

    # ------------------------------------------------------------------
    def counts(self) -> Dict[str, int]:
        counts = {status: 0 for status in STATUSES}
        for record in self.records:
            counts[record.status] += 1
        return counts

    @property
    def failed_targets(self) -> List[str]:
        return [r.target for r in self.records if r.status == FAILED]

    @property
    def succeeded(self) -> bool:
        return not self.failed_targets

    def __len__(self) -> int:
        return len(self.records)

    # ------------------------------------------------------------------
    def to_frame(self) -> pd.DataFrame:
        rows = [
            {"target": r.target, "status": r.status, "certificate_path": r.certificate_path, "millis": r.millis}
            for r in self.records
        ]
        return pd.DataFrame(rows, columns=COLUMNS)

    def to_csv(self, target: Union[str, Path, IO[str], None] = None) -> Optional[str]:
        """Write target,status,certificate_path,millis; returns the text when target is None."""
        if isinstance(target, (str, Path)):
            Path(target).parent.mkdir(parents=True, exist_ok=True)
        return self.to_frame().to_csv(target, index=False, lineterminator="\n")

    def summary_line(self) -> str:
        counts = self.counts()
        return (
            f"family={self.family} range={self.start}..{self.end} targets={len(self.records)} "
            f"certified={counts[CERTIFIED]} brute_forced={counts[BRUTE_FORCED]} failed={counts[FAILED]}"
        )
