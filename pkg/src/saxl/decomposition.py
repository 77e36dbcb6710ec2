"""
i-decompositions of a partition against the staircase rho_m.

A step writes mu (arm side) or mu' (leg side) as upsilon + remainder, where
(strip, upsilon) is in K for a strip of rho_m and remainder has size |rho_(m-i)|:

  SigmaTwo   rho_m = rho_(m-2) + sigma_m^2, leaf (sigma_m^2, upsilon), len(upsilon) <= 4
  TauThree   rho_m = tau_m^3 | rho_(m-3), upsilon = (m-1, m-1, m-1)
  Dominance  rho_m = tau_m^i | rho_(m-i), leaf (tau_m^i, upsilon) with tau_m^i dominated by upsilon

Leg-side steps certify (rho_m, mu') and finish with a Transpose node.
"""

import logging
from dataclasses import dataclass
from typing import Iterator, Optional

from src.certificates import (
    Certificate,
    RulePolicy,
    axiom_leaf,
    derive_scalar_multiple,
    leaf_from_oracle,
    semigroup,
    transpose,
    vertical_sum,
)
from src.partitions import (
    Partition,
    SelectVector,
    arm_leg_profile,
    rectangle,
    row_sub,
    sigma,
    staircase_size,
    tau,
)
from src.saxl.select_vector import iter_select_vectors
from src.utils.errors import SizeMismatchError

logger = logging.getLogger(__name__)

ARM = "arm"
LEG = "leg"

SIGMA_TWO = "SigmaTwo"
TAU_THREE = "TauThree"
DOMINANCE = "Dominance"


@dataclass(frozen=True)
class DecompositionStep:
    """One reduction step from rho_m to rho_(m-i)."""

    m: int
    side: str
    i: int
    upsilon: Partition
    s_vector: Optional[SelectVector]
    leaf_rule: str
    remainder: Partition

    @property
    def reduced_m(self) -> int:
        return self.m - self.i

    def strip(self) -> Partition:
        """The piece of rho_m paired with upsilon."""
        return sigma(self.m, 2) if self.leaf_rule == SIGMA_TWO else tau(self.m, self.i)

    def leaf(self, policy: RulePolicy, oracle=None) -> Certificate:
        if self.leaf_rule == SIGMA_TWO:
            return axiom_leaf("SigmaTwo", self.strip(), self.upsilon, policy)
        if self.leaf_rule == TAU_THREE:
            return lemma_tau_three_certificate(self.m, policy, oracle)
        return axiom_leaf("Dominance", self.strip(), self.upsilon, policy)

    def combine(self, leaf: Certificate, sub: Certificate) -> Certificate:
        """Join the strip leaf with the certificate of (rho_(m-i), remainder)."""
        if self.leaf_rule == SIGMA_TWO:
            joined = semigroup(sub, leaf)
        else:
            joined = vertical_sum(leaf, sub)
        return transpose(joined) if self.side == LEG else joined


def lemma_tau_three_certificate(m: int, policy: Optional[RulePolicy] = None, oracle=None) -> Certificate:
    """
    (tau_m^3, (m-1, m-1, m-1)) in K.

    With m - 2 = 3s + t and t in {0, 1, 2}: s copies of ((3,3,3),(3,3,3)) plus the
    oracle leaf ((t+2, t+1, t), (t+1, t+1, t+1)).
    """
    if m < 2:
        raise ValueError(f"tau_m^3 construction needs m >= 2, got {m}")
    policy = policy or RulePolicy.from_config()
    s, t = divmod(m - 2, 3)
    base = leaf_from_oracle(Partition((t + 2, t + 1, t)), rectangle(3, t + 1), policy, oracle)
    if s == 0:
        return base
    cube = leaf_from_oracle(rectangle(3, 3), rectangle(3, 3), policy, oracle)
    return semigroup(derive_scalar_multiple(cube, s), base)


def classify_strip(m: int, i: int, upsilon: Partition, policy: RulePolicy) -> Optional[str]:
    """Leaf rule justifying (strip of order i, upsilon), or None."""
    if i == 2 and len(upsilon) <= 4 and "SigmaTwo" in policy.axiom_allowlist:
        return SIGMA_TWO
    if i == 3 and upsilon == rectangle(3, m - 1):
        return TAU_THREE
    if "Dominance" in policy.axiom_allowlist and upsilon.dominates(tau(m, i)):
        return DOMINANCE
    return None


def iter_decompositions(
    mu: Partition,
    m: int,
    policy: Optional[RulePolicy] = None,
) -> Iterator[DecompositionStep]:
    """
    Every decomposition step for (rho_m, mu), in search order.

    Strip order i runs from m down to 2, the arm side before the leg side, and S-vectors
    in default order over the profile extended by the free Durfee columns.

    Raises:
        SizeMismatchError: |mu| != |rho_m|
    """
    if mu.size != staircase_size(m):
        raise SizeMismatchError(f"{mu} does not have size |rho_{m}| = {staircase_size(m)}")
    policy = policy or RulePolicy.from_config()
    sides = ((ARM, mu), (LEG, mu.conjugate()))
    profiles = {side: arm_leg_profile(shape).with_durfee_columns() for side, shape in sides}

    for i in range(m, 1, -1):
        target = staircase_size(m) - staircase_size(m - i)
        for side, shape in sides:
            for x in iter_select_vectors(profiles[side], target):
                upsilon = x.upsilon
                rule = classify_strip(m, i, upsilon, policy)
                if rule is None:
                    continue
                remainder = row_sub(shape, upsilon)
                if remainder is None:
                    continue
                yield DecompositionStep(m, side, i, upsilon, x, rule, remainder)


def decompose(mu: Partition, m: int, policy: Optional[RulePolicy] = None) -> Optional[DecompositionStep]:
    """First decomposition step in search order, or None."""
    return next(iter_decompositions(mu, m, policy), None)
