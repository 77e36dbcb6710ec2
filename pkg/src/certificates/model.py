"""
Certificate data model and constructors.

A certificate concludes (alpha, beta) in K, i.e. g(alpha, alpha, beta) > 0. Leaves are
oracle computations, manifest entries or instances of an allowlisted axiom; internal
nodes combine children by the semigroup, vertical-sum and transpose rules.
"""

import hashlib
import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Dict, FrozenSet, Optional, Tuple

from src.kronecker import default_oracle
from src.partitions import Partition, as_partition, sigma
from src.utils.config import config
from src.utils.errors import CertificateError, OracleLimitError

logger = logging.getLogger(__name__)


class Rule(str, Enum):
    BRUTE_FORCE = "BruteForce"
    AXIOM = "Axiom"
    SEMIGROUP = "Semigroup"
    VERTICAL_SUM = "VerticalSum"
    DOMINANCE = "Dominance"
    SIGMA_TWO = "SigmaTwo"
    TRANSPOSE = "Transpose"


LEAF_RULES = frozenset({Rule.BRUTE_FORCE, Rule.AXIOM, Rule.DOMINANCE, Rule.SIGMA_TWO})

SOURCE_ORACLE = "oracle"
SOURCE_MANIFEST = "manifest"

# Cited external results the checker may trust without computation
AXIOM_CITATIONS: Dict[str, str] = {
    "Dominance": "alpha with distinct parts and beta dominating alpha give g(alpha,alpha,beta) > 0",
    "SigmaTwo": "alpha = (2^(m-1),1) and beta of size 2m-1 with at most 4 parts give g(alpha,alpha,beta) > 0",
}


# ==========================================
# Axiom preconditions
# ==========================================

def dominance_applies(alpha: Partition, beta: Partition) -> bool:
    """Distinct row lengths in alpha and alpha dominated by beta."""
    return (
        alpha.size == beta.size
        and alpha.size > 0
        and alpha.has_distinct_parts()
        and beta.dominates(alpha)
    )


def sigma_two_order(alpha: Partition) -> Optional[int]:
    """m with alpha = sigma(m, 2), or None."""
    if alpha.size < 1 or alpha.size % 2 == 0:
        return None
    m = (alpha.size + 1) // 2
    return m if alpha == sigma(m, 2) else None


def sigma_two_applies(alpha: Partition, beta: Partition) -> bool:
    m = sigma_two_order(alpha)
    return m is not None and beta.size == 2 * m - 1 and len(beta) <= 4


AXIOM_PRECONDITIONS = {
    "Dominance": dominance_applies,
    "SigmaTwo": sigma_two_applies,
}


# ==========================================
# Policy
# ==========================================

@dataclass(frozen=True)
class RulePolicy:
    """
    Trust settings for building and checking certificates.

    Args:
        brute_force_size_cap: Largest size re-executed by the oracle
        axiom_allowlist: Axiom names the checker accepts
        audit_cap: Axiom leaves up to this size are also re-executed
        extended: Re-execute manifest leaves instead of trusting the manifest
        leaf_size: Staircase sizes closed by the oracle during reduction
    """

    brute_force_size_cap: int = 36
    axiom_allowlist: FrozenSet[str] = frozenset(AXIOM_CITATIONS)
    audit_cap: int = 11
    extended: bool = False
    leaf_size: int = 21

    def __post_init__(self):
        if self.brute_force_size_cap < 1:
            raise ValueError("brute_force_size_cap must be >= 1")
        unknown = set(self.axiom_allowlist) - set(AXIOM_CITATIONS)
        if unknown:
            raise ValueError(f"unknown axioms in allowlist: {sorted(unknown)}")

    @classmethod
    def from_config(cls, **overrides) -> "RulePolicy":
        values = {
            "brute_force_size_cap": config.BRUTE_FORCE_SIZE_CAP,
            "axiom_allowlist": frozenset(config.AXIOM_ALLOWLIST),
            "audit_cap": config.AUDIT_CAP,
            "extended": config.EXTENDED,
            "leaf_size": config.LEAF_SIZE,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


# ==========================================
# Certificate
# ==========================================

@dataclass(frozen=True)
class Certificate:
    """Proof node concluding (alpha, beta) in K."""

    alpha: Partition
    beta: Partition
    rule: Rule
    children: Tuple["Certificate", ...] = ()
    value: Optional[int] = None
    source: Optional[str] = None
    citation: Optional[str] = None

    @property
    def size(self) -> int:
        return self.alpha.size

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @cached_property
    def fingerprint(self) -> str:
        """Structural hash; equal trees have equal fingerprints."""
        h = hashlib.sha256()
        h.update(
            "|".join([
                str(self.alpha), str(self.beta), self.rule.value,
                "" if self.value is None else str(self.value),
                self.source or "", self.citation or "",
            ]).encode("utf-8")
        )
        for child in self.children:
            h.update(child.fingerprint.encode("ascii"))
        return h.hexdigest()

    def __hash__(self) -> int:
        return hash(self.fingerprint)

    @cached_property
    def node_count(self) -> int:
        return 1 + sum(child.node_count for child in self.children)

    @cached_property
    def depth(self) -> int:
        return 1 + max((child.depth for child in self.children), default=0)

    def rule_histogram(self) -> Dict[str, int]:
        """Leaf rules by count, each distinct subtree counted once."""
        counts: Counter = Counter()
        seen = set()
        stack = [self]
        while stack:
            node = stack.pop()
            if id(node) in seen:
                continue
            seen.add(id(node))
            if node.is_leaf:
                counts[node.rule.value] += 1
            stack.extend(node.children)
        return dict(sorted(counts.items()))

    def __str__(self) -> str:
        return f"{self.rule.value}({self.alpha}, {self.beta})"


# ==========================================
# Constructors
# ==========================================

def leaf_from_oracle(alpha, beta, policy: Optional[RulePolicy] = None, oracle=None) -> Certificate:
    """
    BruteForce leaf storing the exact coefficient.

    Raises:
        OracleLimitError: size above the policy's brute-force cap
        CertificateError: the coefficient is zero
    """
    policy = policy or RulePolicy.from_config()
    alpha, beta = as_partition(alpha), as_partition(beta)
    if alpha.size > policy.brute_force_size_cap:
        raise OracleLimitError(
            f"oracle leaf ({alpha}, {beta}) has size {alpha.size} > cap {policy.brute_force_size_cap}"
        )
    value = (oracle or default_oracle).kronecker(alpha, alpha, beta, check_limit=False)
    if value <= 0:
        raise CertificateError(f"g({alpha},{alpha},{beta}) = 0; not a positivity leaf")
    return Certificate(alpha, beta, Rule.BRUTE_FORCE, value=value, source=SOURCE_ORACLE)


def manifest_leaf(alpha, beta, manifest) -> Certificate:
    """BruteForce leaf backed by a shipped manifest entry."""
    alpha, beta = as_partition(alpha), as_partition(beta)
    entry = manifest.lookup(alpha, beta)
    if entry is None:
        raise CertificateError(f"({alpha}, {beta}) is not covered by the manifest")
    return Certificate(alpha, beta, Rule.BRUTE_FORCE, source=SOURCE_MANIFEST, citation=entry.citation)


def axiom_leaf(name: str, alpha, beta, policy: Optional[RulePolicy] = None) -> Certificate:
    """
    Leaf instance of an allowlisted axiom, tagged with the axiom's own rule.

    Raises:
        CertificateError: name not allowlisted or precondition fails
    """
    policy = policy or RulePolicy.from_config()
    alpha, beta = as_partition(alpha), as_partition(beta)
    if name not in policy.axiom_allowlist:
        raise CertificateError(f"axiom {name!r} is not on the allowlist")
    if not AXIOM_PRECONDITIONS[name](alpha, beta):
        raise CertificateError(f"axiom {name} does not apply to ({alpha}, {beta})")
    return Certificate(alpha, beta, Rule(name), citation=AXIOM_CITATIONS[name])


def semigroup(first: Certificate, second: Certificate) -> Certificate:
    """(a1 + a2, b1 + b2) from (a1, b1) and (a2, b2)."""
    return Certificate(
        first.alpha + second.alpha,
        first.beta + second.beta,
        Rule.SEMIGROUP,
        children=(first, second),
    )


def vertical_sum(first: Certificate, second: Certificate) -> Certificate:
    """(a1 | a2, b1 + b2) from (a1, b1) and (a2, b2)."""
    return Certificate(
        first.alpha | second.alpha,
        first.beta + second.beta,
        Rule.VERTICAL_SUM,
        children=(first, second),
    )


def transpose(child: Certificate) -> Certificate:
    """(alpha, beta') from (alpha, beta); alpha must be self-conjugate."""
    if not child.alpha.is_self_conjugate():
        raise CertificateError(f"transpose needs a self-conjugate alpha, got {child.alpha}")
    return Certificate(child.alpha, child.beta.conjugate(), Rule.TRANSPOSE, children=(child,))


def derive_scalar_multiple(base: Certificate, s: int) -> Certificate:
    """s * (alpha, beta) as a chain of s - 1 Semigroup nodes."""
    if s < 1:
        raise CertificateError(f"scalar multiple needs s >= 1, got {s}")
    result = base
    for _ in range(s - 1):
        result = semigroup(result, base)
    return result


def derive_vertical_multiple(base: Certificate, s: int) -> Certificate:
    """(alpha | ... | alpha, s * beta) as a chain of s - 1 VerticalSum nodes."""
    if s < 1:
        raise CertificateError(f"vertical multiple needs s >= 1, got {s}")
    result = base
    for _ in range(s - 1):
        result = vertical_sum(result, base)
    return result
