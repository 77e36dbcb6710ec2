"""
Independent certificate checker.

Every node is re-validated against its rule; oracle leaves within the brute-force cap
are recomputed and axiom leaves within the audit cap are re-executed. Failures are
returned as values naming the offending node path.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from src.certificates.manifest import Manifest, load_manifest
from src.certificates.model import (
    AXIOM_PRECONDITIONS,
    SOURCE_MANIFEST,
    SOURCE_ORACLE,
    Certificate,
    Rule,
    RulePolicy,
)
from src.kronecker import KroneckerOracle, default_oracle

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a check; path is the tuple of child indices from the root."""

    ok: bool
    path: Tuple[int, ...] = ()
    reason: str = ""

    @property
    def path_text(self) -> str:
        return "/".join(["root"] + [str(i) for i in self.path])

    def __bool__(self) -> bool:
        return self.ok

    def explain(self) -> str:
        return "valid" if self.ok else f"invalid at {self.path_text}: {self.reason}"


VALID = CheckResult(True)


class CertificateChecker:
    """
    Checks certificates under a RulePolicy.

    Verified subtrees are remembered by fingerprint, so shared subproofs are checked once.
    """

    def __init__(
        self,
        policy: Optional[RulePolicy] = None,
        oracle: Optional[KroneckerOracle] = None,
        manifest: Optional[Manifest] = None,
    ):
        self.policy = policy or RulePolicy.from_config()
        self.oracle = oracle or default_oracle
        self.manifest = manifest if manifest is not None else load_manifest()
        self._verified: Dict[str, bool] = {}

    def verify(self, cert: Certificate) -> CheckResult:
        result = self._check(cert, ())
        if not result.ok:
            logger.debug("certificate rejected: %s", result.explain())
        return result

    def check(self, cert: Certificate) -> bool:
        return self.verify(cert).ok

    # ------------------------------------------------------------------
    def _fail(self, path: Tuple[int, ...], reason: str) -> CheckResult:
        return CheckResult(False, path, reason)

    def _positive(self, node: Certificate) -> int:
        return self.oracle.kronecker(node.alpha, node.alpha, node.beta, check_limit=False)

    def _check(self, node: Certificate, path: Tuple[int, ...]) -> CheckResult:
        if node.fingerprint in self._verified:
            return VALID

        if node.alpha.size != node.beta.size:
            return self._fail(path, f"size mismatch |{node.alpha}| != |{node.beta}|")

        if node.rule in (Rule.SEMIGROUP, Rule.VERTICAL_SUM, Rule.TRANSPOSE):
            expected_children = 1 if node.rule is Rule.TRANSPOSE else 2
            if len(node.children) != expected_children:
                return self._fail(path, f"{node.rule.value} needs {expected_children} children")
            for index, child in enumerate(node.children):
                result = self._check(child, path + (index,))
                if not result.ok:
                    return result
            reason = self._combination_error(node)
        else:
            if node.children:
                return self._fail(path, f"{node.rule.value} leaf has children")
            reason = self._leaf_error(node)

        if reason:
            return self._fail(path, reason)
        self._verified[node.fingerprint] = True
        return VALID

    def _combination_error(self, node: Certificate) -> Optional[str]:
        if node.rule is Rule.SEMIGROUP:
            first, second = node.children
            if node.alpha != first.alpha + second.alpha or node.beta != first.beta + second.beta:
                return "semigroup conclusion is not the rowwise sum of its children"
        elif node.rule is Rule.VERTICAL_SUM:
            first, second = node.children
            if node.alpha != (first.alpha | second.alpha) or node.beta != first.beta + second.beta:
                return "vertical sum conclusion is not (alpha1 | alpha2, beta1 + beta2)"
        else:
            (child,) = node.children
            if not node.alpha.is_self_conjugate():
                return f"transpose needs self-conjugate alpha, got {node.alpha}"
            if child.alpha != node.alpha or child.beta != node.beta.conjugate():
                return "transpose child must conclude (alpha, beta')"
        return None

    def _leaf_error(self, node: Certificate) -> Optional[str]:
        policy = self.policy
        if node.rule is Rule.BRUTE_FORCE:
            if node.source == SOURCE_MANIFEST:
                if policy.extended:
                    return None if self._positive(node) > 0 else "manifest leaf is zero under recomputation"
                if not self.manifest.covers(node.alpha, node.beta):
                    return "manifest leaf not covered by the loaded manifest"
                return None
            if node.source not in (None, SOURCE_ORACLE):
                return f"unknown leaf source {node.source!r}"
            if node.size > policy.brute_force_size_cap:
                return f"oracle leaf size {node.size} exceeds cap {policy.brute_force_size_cap}"
            value = self._positive(node)
            if value <= 0:
                return "oracle coefficient is zero"
            if node.value is not None and node.value != value:
                return f"recorded coefficient {node.value} != recomputed {value}"
            return None

        name = node.citation if node.rule is Rule.AXIOM else node.rule.value
        if name not in AXIOM_PRECONDITIONS:
            return f"unknown axiom {name!r}"
        if name not in policy.axiom_allowlist:
            return f"axiom {name} is not on the allowlist"
        if not AXIOM_PRECONDITIONS[name](node.alpha, node.beta):
            return f"axiom {name} precondition fails for ({node.alpha}, {node.beta})"
        if node.size <= policy.audit_cap and self._positive(node) <= 0:
            return f"axiom {name} instance is zero under audit"
        return None


def verify_certificate(
    cert: Certificate,
    policy: Optional[RulePolicy] = None,
    checker: Optional[CertificateChecker] = None,
) -> CheckResult:
    """Check a certificate and return the detailed result."""
    checker = checker or CertificateChecker(policy)
    return checker.verify(cert)


def check_certificate(cert: Certificate, policy: Optional[RulePolicy] = None) -> bool:
    return verify_certificate(cert, policy).ok
