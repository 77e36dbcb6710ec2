"""
Durfee-k reduction of (rho_m, mu) down to oracle-sized staircases.

The reducer tries direct dominance, then every decomposition step in search order,
recursing on (rho_(m-i), remainder) with memoized successes and failures. At m = 10
a dedicated handler covers the cases the generic search cannot close; below the
brute-force cap a stuck target is closed by the oracle.
"""

import logging
from typing import Dict, Optional, Tuple

from src.certificates import (
    Certificate,
    RulePolicy,
    axiom_leaf,
    leaf_from_oracle,
    load_manifest,
    manifest_leaf,
    semigroup,
    transpose,
    vertical_sum,
)
from src.certificates.manifest import Manifest
from src.kronecker import KroneckerOracle, default_oracle
from src.partitions import (
    Partition,
    chopped_square,
    parse_partition,
    row_sub,
    sigma,
    staircase,
    staircase_size,
)
from src.saxl.decomposition import iter_decompositions, lemma_tau_three_certificate
from src.utils.errors import CertificateError, OracleLimitError, ReductionError, SizeMismatchError

logger = logging.getLogger(__name__)

# Explicit rho_10 cases: mu_i = (7,7,7) + upsilon_i with (sigma_10^4, upsilon_i) in K
HARD_CASES_M10: Dict[Partition, Partition] = {
    parse_partition("[11,11,10,3^7,2]"): parse_partition("[4^2,3^8,2]"),
    parse_partition("[12,12,11,3^6,2]"): parse_partition("[5^2,4,3^6,2]"),
    parse_partition("[12,12,11,3^4,2^4]"): parse_partition("[5^2,4,3^4,2^4]"),
    parse_partition("[12,12,11,3^2,2^7]"): parse_partition("[5^2,4,3^2,2^7]"),
}

RHO4_PAIR = parse_partition("[5,5]")


class StaircaseReducer:
    """
    Builds certificates for (rho_m, mu).

    Args:
        policy: Caps and allowlist; leaf_size bounds the staircases closed by the oracle
        oracle: Kronecker oracle for leaves
        manifest: Manifest consulted for hours-scale leaves
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
        self._memo: Dict[Tuple[int, Partition], Optional[Certificate]] = {}
        self._tau_three: Dict[int, Certificate] = {}
        self._leaves: Dict[Tuple[Partition, Partition], Certificate] = {}

    # ------------------------------------------------------------------
    # Leaves
    # ------------------------------------------------------------------
    def leaf(self, alpha: Partition, beta: Partition) -> Certificate:
        """Oracle leaf, or a manifest leaf when the pair is covered and not recomputed."""
        key = (alpha, beta)
        cached = self._leaves.get(key)
        if cached is not None:
            return cached
        if not self.policy.extended and self.manifest.covers(alpha, beta):
            cert = manifest_leaf(alpha, beta, self.manifest)
        else:
            cert = leaf_from_oracle(alpha, beta, self.policy, self.oracle)
        self._leaves[key] = cert
        return cert

    def tau_three(self, m: int) -> Certificate:
        if m not in self._tau_three:
            self._tau_three[m] = lemma_tau_three_certificate(m, self.policy, self.oracle)
        return self._tau_three[m]

    # ------------------------------------------------------------------
    # Reduction
    # ------------------------------------------------------------------
    def certify(self, m: int, mu: Partition) -> Certificate:
        """
        Certificate for (rho_m, mu).

        Raises:
            SizeMismatchError: |mu| != |rho_m|
            ReductionError: no certificate found; carries the stuck (m, mu)
        """
        if mu.size != staircase_size(m):
            raise SizeMismatchError(f"{mu} does not have size |rho_{m}| = {staircase_size(m)}")
        cert = self._reduce(m, mu)
        if cert is None:
            raise ReductionError(m, mu)
        return cert

    def _reduce(self, m: int, mu: Partition) -> Optional[Certificate]:
        key = (m, mu)
        if key in self._memo:
            return self._memo[key]
        cert = self._search(m, mu)
        if cert is None:
            logger.debug("no reduction for m=%d mu=%s", m, mu)
        self._memo[key] = cert
        return cert

    def _search(self, m: int, mu: Partition) -> Optional[Certificate]:
        rho = staircase(m)
        if rho.size <= self.policy.leaf_size:
            try:
                return self.leaf(rho, mu)
            except (CertificateError, OracleLimitError):
                return None

        if "Dominance" in self.policy.axiom_allowlist:
            if mu.dominates(rho):
                return axiom_leaf("Dominance", rho, mu, self.policy)
            conj = mu.conjugate()
            if conj.dominates(rho):
                return transpose(axiom_leaf("Dominance", rho, conj, self.policy))

        for step in iter_decompositions(mu, m, self.policy):
            sub = self._reduce(step.reduced_m, step.remainder)
            if sub is None:
                continue
            try:
                if step.leaf_rule == "TauThree":
                    leaf = self.tau_three(m)
                else:
                    leaf = step.leaf(self.policy, self.oracle)
            except (CertificateError, OracleLimitError) as exc:
                logger.debug("step %s at m=%d rejected: %s", step.leaf_rule, m, exc)
                continue
            return step.combine(leaf, sub)

        if m == 10:
            cert = self.hard_case_m10(mu)
            if cert is None:
                # rho_10 is self-conjugate, so the handler also applies to mu'
                flipped = self.hard_case_m10(mu.conjugate())
                if flipped is not None:
                    cert = transpose(flipped)
            if cert is not None:
                return cert
        if rho.size <= self.policy.brute_force_size_cap:
            try:
                return self.leaf(rho, mu)
            except (CertificateError, OracleLimitError):
                return None
        return None

    # ------------------------------------------------------------------
    # rho_10 special cases
    # ------------------------------------------------------------------
    def hard_case_m10(self, mu: Partition) -> Optional[Certificate]:
        """
        Certificates for the rho_10 targets the generic search does not close.

        The four explicit partitions use (sigma_10^4, upsilon_i) leaves with remainder
        (7,7,7). Otherwise, when mu - (10,10) is a partition nu, rho_10 is split as
        (eta_6 | rho_4) + rho_4 with leaves (eta_6, nu) and twice (rho_4, (5,5)).

        The split is not limited to the Case 6 targets with 23 <= A_2 < 34: every mu
        with mu - (10,10) a partition gets it, since the manifest covers (eta_6, *).
        The caller tries mu' and transposes when mu itself gives None.
        """
        upsilon = HARD_CASES_M10.get(mu)
        try:
            if upsilon is not None:
                rest = row_sub(mu, upsilon)
                strip = self.leaf(sigma(10, 4), upsilon)
                sub = self._reduce(6, rest)
                if sub is None:
                    return None
                return semigroup(sub, strip)

            nu = row_sub(mu, Partition((10, 10)))
            if nu is None:
                return None
            eta = self.leaf(chopped_square(6), nu)
            small = self.leaf(staircase(4), RHO4_PAIR)
            return semigroup(vertical_sum(eta, small), small)
        except (CertificateError, OracleLimitError) as exc:
            logger.warning("rho_10 handler failed for %s: %s", mu, exc)
            return None

    def stats(self) -> Dict[str, int]:
        solved = sum(1 for v in self._memo.values() if v is not None)
        return {"subproblems": len(self._memo), "solved": solved, "leaves": len(self._leaves)}


def reduce_durfee_k(
    m: int,
    mu: Partition,
    k: Optional[int] = None,
    policy: Optional[RulePolicy] = None,
    reducer: Optional[StaircaseReducer] = None,
) -> Certificate:
    """
    Certificate for (rho_m, mu) with mu of Durfee size k.

    Raises:
        ValueError: mu does not have Durfee size k
        ReductionError: the reduction gets stuck
    """
    if k is not None and mu.durfee() != k:
        raise ValueError(f"{mu} has Durfee size {mu.durfee()}, expected {k}")
    reducer = reducer or StaircaseReducer(policy)
    return reducer.certify(m, mu)


def hard_case_m10(mu: Partition, policy: Optional[RulePolicy] = None) -> Optional[Certificate]:
    """Module-level entry to the rho_10 handler."""
    return StaircaseReducer(policy).hard_case_m10(mu)
