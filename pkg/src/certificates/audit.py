"""
Axiom audits: re-verify every allowlisted axiom instance up to the audit cap by the oracle.

A failed row would mean a transcription bug in the axiom's precondition.
"""

import logging
import time
from typing import Iterator, Optional, Tuple

from src.certificates.model import RulePolicy, dominance_applies, sigma_two_applies
from src.kronecker import KroneckerOracle, default_oracle
from src.partitions import Partition, enumerate_partitions, sigma
from src.saxl.report import BRUTE_FORCED, FAILED, VerificationReport

logger = logging.getLogger(__name__)


def sigma_two_instances(cap: int) -> Iterator[Tuple[Partition, Partition]]:
    """(sigma(m, 2), beta) for every beta of size 2m - 1 <= cap with at most 4 parts."""
    m = 1
    while 2 * m - 1 <= cap:
        alpha = sigma(m, 2)
        for beta in enumerate_partitions(2 * m - 1, max_length=4):
            if sigma_two_applies(alpha, beta):
                yield alpha, beta
        m += 1


def dominance_instances(cap: int) -> Iterator[Tuple[Partition, Partition]]:
    """(alpha, beta) with alpha of distinct parts and beta dominating alpha, sizes 1..cap."""
    for n in range(1, cap + 1):
        everything = list(enumerate_partitions(n))
        for alpha in everything:
            if not alpha.has_distinct_parts():
                continue
            for beta in everything:
                if dominance_applies(alpha, beta):
                    yield alpha, beta


AUDITS = {
    "Dominance": dominance_instances,
    "SigmaTwo": sigma_two_instances,
}


def audit_axioms(
    policy: Optional[RulePolicy] = None,
    oracle: Optional[KroneckerOracle] = None,
    report_timings: bool = True,
) -> VerificationReport:
    """
    Check every allowlisted axiom instance with size <= audit_cap.

    Returns:
        VerificationReport with family "audit"; targets read "<axiom> <alpha> <beta>"
    """
    policy = policy or RulePolicy.from_config()
    oracle = oracle or default_oracle
    report = VerificationReport("audit", 1, policy.audit_cap, report_timings=report_timings)

    for name in sorted(policy.axiom_allowlist):
        checked = 0
        for alpha, beta in AUDITS[name](policy.audit_cap):
            started = time.monotonic()
            value = oracle.kronecker(alpha, alpha, beta, check_limit=False)
            millis = int((time.monotonic() - started) * 1000)
            status = BRUTE_FORCED if value > 0 else FAILED
            if status == FAILED:
                logger.warning("axiom %s fails at (%s, %s)", name, alpha, beta)
            report.add(f"{name} {alpha} {beta}", status, millis=millis, detail=str(value))
            checked += 1
        logger.info("audited %d instances of %s", checked, name)
    return report
