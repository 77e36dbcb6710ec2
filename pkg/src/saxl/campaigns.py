"""
Verification campaigns over partition families.

Targets are processed in fixed chunks on a joblib worker pool; each chunk owns its
reducer, family builder and checker, and chunk results are merged in target order, so
reports do not depend on the number of workers.
"""

import logging
import math
import time
from dataclasses import dataclass
from itertools import islice
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from joblib import Parallel, delayed
from tqdm import tqdm

from src.certificates import (
    CERT_SUFFIX,
    Certificate,
    CertificateChecker,
    Rule,
    RulePolicy,
    save_certificate,
)
from src.partitions import Partition, durfee_class_size, enumerate_partitions, staircase_size
from src.saxl.families import FamilyBuilder
from src.saxl.reduction import StaircaseReducer
from src.saxl.report import BRUTE_FORCED, CERTIFIED, FAILED, TargetRecord, VerificationReport
from src.utils.config import config
from src.utils.errors import SaxlkitError

logger = logging.getLogger(__name__)

CHUNK_SIZE = 2000


@dataclass(frozen=True)
class Family:
    """A family label, the size of its shape at a parameter, and the Durfee size of its targets."""

    name: str
    size: Callable[[int], int]
    durfee: int
    description: str


FAMILIES: Dict[str, Family] = {
    "staircase_hooks": Family("staircase_hooks", staircase_size, 1, "hooks paired with rho_m"),
    "triple_hooks": Family("triple_hooks", staircase_size, 3, "S(m,3) paired with rho_m"),
    "chopped_hooks": Family("chopped_hooks", lambda k: k * k - 1, 1, "hooks paired with eta_k"),
    "chopped_double": Family("chopped_double", lambda k: k * k - 1, 2, "double hooks paired with eta_k"),
    "caret_hooks": Family("caret_hooks", lambda k: 3 * k * k, 1, "hooks paired with gamma_k"),
    "caret_double": Family("caret_double", lambda k: 3 * k * k, 2, "double hooks paired with gamma_k"),
}


def family_targets(family: str, parameter: int) -> List[Partition]:
    """Targets of a family at one parameter value, reverse-lex."""
    fam = _family(family)
    return list(enumerate_partitions(fam.size(parameter), durfee=fam.durfee))


def _family(family: str) -> Family:
    try:
        return FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None


def certificate_filename(target: Partition) -> str:
    """Filesystem-safe name: [3,3,2] -> 3-3-2.kcert.json; the empty partition is 'empty'."""
    stem = "-".join(str(p) for p in target.parts) or "empty"
    return stem + CERT_SUFFIX


def certificate_path(certs_dir: Path, family: str, parameter: int, target: Partition) -> Path:
    """certs/<family>/<parameter>/<partition>.kcert.json"""
    return Path(certs_dir) / family / str(parameter) / certificate_filename(target)


def _builder(family: str, parameter: int, policy: RulePolicy):
    """Callable target -> certificate for the family at this parameter."""
    if family == "triple_hooks":
        reducer = StaircaseReducer(policy)
        return lambda nu: reducer.certify(parameter, nu)
    builder = FamilyBuilder(policy)
    method = {
        "staircase_hooks": builder.staircase_hook,
        "chopped_hooks": builder.chopped_hook,
        "chopped_double": builder.chopped_double,
        "caret_hooks": builder.caret_hook,
        "caret_double": builder.caret_double,
    }[family]
    return lambda nu: method(parameter, nu)


def _status(cert: Certificate) -> str:
    return BRUTE_FORCED if cert.rule is Rule.BRUTE_FORCE else CERTIFIED


def _run_chunk(
    family: str,
    parameter: int,
    targets: List[Partition],
    policy: RulePolicy,
    certs_dir: Optional[Path],
) -> List[TargetRecord]:
    build = _builder(family, parameter, policy)
    checker = CertificateChecker(policy)
    records = []
    for target in targets:
        started = time.monotonic()
        path = ""
        try:
            cert = build(target)
            result = checker.verify(cert)
            if not result.ok:
                raise SaxlkitError(result.explain())
            if certs_dir is not None:
                written = certificate_path(certs_dir, family, parameter, target)
                save_certificate(cert, written)
                path = written.as_posix()
            status, detail = _status(cert), ""
        except (SaxlkitError, ValueError) as exc:
            logger.warning("%s m=%d %s failed: %s", family, parameter, target, exc)
            status, detail = FAILED, str(exc)
        millis = int((time.monotonic() - started) * 1000)
        records.append(TargetRecord(str(target), status, path, millis, detail))
    return records


def _chunks(family: str, start: int, end: int) -> Iterable[Tuple[int, List[Partition]]]:
    fam = _family(family)
    for parameter in range(start, end + 1):
        targets = enumerate_partitions(fam.size(parameter), durfee=fam.durfee)
        while True:
            chunk = list(islice(targets, CHUNK_SIZE))
            if not chunk:
                break
            yield parameter, chunk


def verify_family(
    family: str,
    start: int,
    end: int,
    policy: Optional[RulePolicy] = None,
    threads: Optional[int] = None,
    certs_dir: Optional[Path] = None,
    report_timings: Optional[bool] = None,
    progress: bool = False,
) -> VerificationReport:
    """
    Certify every target of a family for parameters start..end.

    Args:
        family: One of FAMILIES
        start, end: Inclusive parameter range (m for staircases, k for eta/gamma)
        policy: Rule policy; defaults from config
        threads: Worker count (0/None = logical cores)
        certs_dir: When set, certificates are written under certs_dir/<family>/<parameter>/
        report_timings: Record wall-clock millis (default from config)
        progress: Show a tqdm bar on stderr

    Returns:
        VerificationReport; failed rows list targets without a valid certificate
    """
    _family(family)
    if start > end:
        raise ValueError(f"empty range {start}..{end}")
    policy = policy or RulePolicy.from_config()
    timings = config.REPORT_TIMINGS if report_timings is None else report_timings
    report = VerificationReport(family, start, end, report_timings=timings)

    total = expected_chunks(family, start, end)
    n_jobs = config.resolved_threads(threads)
    logger.info(
        "%s %d..%d: %d targets in %d chunks on %d workers",
        family, start, end, campaign_size(family, start, end), total, n_jobs,
    )

    started = time.monotonic()
    chunks = _chunks(family, start, end)
    if n_jobs == 1:
        results = (_run_chunk(family, p, targets, policy, certs_dir) for p, targets in chunks)
    else:
        jobs = (delayed(_run_chunk)(family, p, targets, policy, certs_dir) for p, targets in chunks)
        results = Parallel(n_jobs=n_jobs, backend=config.BACKEND, return_as="generator")(jobs)
    for records in tqdm(results, total=total, desc=family, disable=not progress):
        report.extend(records)

    elapsed = time.monotonic() - started
    logger.info("%s (%.1fs)", report.summary_line(), elapsed)
    return report


def campaign_size(family: str, start: int, end: int) -> int:
    """Total number of targets, counted without enumeration."""
    fam = _family(family)
    return sum(durfee_class_size(fam.size(p), fam.durfee) for p in range(start, end + 1))


def expected_chunks(family: str, start: int, end: int) -> int:
    fam = _family(family)
    return sum(
        math.ceil(durfee_class_size(fam.size(p), fam.durfee) / CHUNK_SIZE) for p in range(start, end + 1)
    )
