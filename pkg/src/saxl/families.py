"""
Family inductions for hooks and double hooks paired with staircases, chopped squares
and carets.

Each builder peels a row (or two rows) off the target, pairs the peeled piece with a
strip of the shape through fixed leaves, and recurses on the smaller shape. Targets whose
leg carries the weight are handled on the conjugate and finished with a Transpose node.
Anything the inductions cannot reach falls back to an oracle or manifest leaf.
"""

import logging
from typing import Callable, Dict, Optional, Tuple

from src.certificates import (
    Certificate,
    RulePolicy,
    axiom_leaf,
    derive_scalar_multiple,
    derive_vertical_multiple,
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
    arm_leg_profile,
    caret,
    chopped_square,
    rectangle,
    row_sub,
    staircase,
    staircase_size,
)
from src.utils.errors import CertificateError, OracleLimitError, ParameterRangeError, SizeMismatchError

logger = logging.getLogger(__name__)


def _row(*parts: int) -> Partition:
    return Partition(tuple(parts))


def _column(length: int) -> Partition:
    return rectangle(length, 1)


class FamilyBuilder:
    """Shared leaf cache and fallbacks for the family inductions."""

    def __init__(
        self,
        policy: Optional[RulePolicy] = None,
        oracle: Optional[KroneckerOracle] = None,
        manifest: Optional[Manifest] = None,
    ):
        self.policy = policy or RulePolicy.from_config()
        self.oracle = oracle or default_oracle
        self.manifest = manifest if manifest is not None else load_manifest()
        self._leaves: Dict[Tuple[Partition, Partition], Certificate] = {}
        self._memo: Dict[Tuple[str, int, Partition], Certificate] = {}

    def leaf(self, alpha: Partition, beta: Partition) -> Certificate:
        key = (alpha, beta)
        if key not in self._leaves:
            if not self.policy.extended and self.manifest.covers(alpha, beta):
                self._leaves[key] = manifest_leaf(alpha, beta, self.manifest)
            else:
                self._leaves[key] = leaf_from_oracle(alpha, beta, self.policy, self.oracle)
        return self._leaves[key]

    def _memoized(self, family: str, k: int, nu: Partition, build: Callable[[], Certificate]) -> Certificate:
        key = (family, k, nu)
        if key not in self._memo:
            self._memo[key] = build()
        return self._memo[key]

    # ------------------------------------------------------------------
    # Hooks
    # ------------------------------------------------------------------
    def staircase_hook(self, m: int, nu: Partition) -> Certificate:
        """(rho_m, nu) for a hook nu: strip row (m) against the leaf ((1^m), (m))."""
        _expect(nu, staircase_size(m), durfee=1)
        return self._memoized("staircase_hooks", m, nu, lambda: self._staircase_hook(m, nu))

    def _staircase_hook(self, m: int, nu: Partition) -> Certificate:
        if m <= 2:
            return self.leaf(staircase(m), nu)
        profile = arm_leg_profile(nu)
        if profile.a[0] >= m:
            rest = row_sub(nu, _row(m))
            sub = self.staircase_hook(m - 1, rest)
            return semigroup(sub, self.leaf(_column(m), _row(m)))
        if profile.b[0] >= m:
            return transpose(self.staircase_hook(m, nu.conjugate()))
        return self.leaf(staircase(m), nu)

    def chopped_hook(self, k: int, nu: Partition) -> Certificate:
        """(eta_k, nu) for a hook nu, peeling 2k - 1 boxes off the first row."""
        _expect(nu, k * k - 1, durfee=1)
        return self._memoized("chopped_hooks", k, nu, lambda: self._chopped_hook(k, nu))

    def _chopped_hook(self, k: int, nu: Partition) -> Certificate:
        if k <= 3:
            return self.leaf(chopped_square(k), nu)
        profile = arm_leg_profile(nu)
        if profile.a[0] >= 2 * k - 1:
            rest = row_sub(nu, _row(2 * k - 1))
            return self._peel_first_row(
                self.chopped_hook(k - 1, rest),
                self.leaf(_column(k - 1), _row(k - 1)),
                self.leaf(_row(k), _row(k)),
            )
        if profile.b[0] >= 2 * k - 1:
            return transpose(self.chopped_hook(k, nu.conjugate()))
        return self.leaf(chopped_square(k), nu)

    def caret_hook(self, k: int, nu: Partition) -> Certificate:
        """(gamma_k, nu) for a hook nu, peeling 6k - 3 boxes off the first row."""
        _expect(nu, 3 * k * k, durfee=1)
        return self._memoized("caret_hooks", k, nu, lambda: self._caret_hook(k, nu))

    def _caret_hook(self, k: int, nu: Partition) -> Certificate:
        if k <= 3:
            return self.leaf(caret(k), nu)
        profile = arm_leg_profile(nu)
        if profile.a[0] >= 6 * k - 3:
            rest = row_sub(nu, _row(6 * k - 3))
            return self._peel_first_row(
                self.caret_hook(k - 1, rest),
                self.leaf(_column(3 * k - 2), _row(3 * k - 2)),
                self.leaf(_row(3 * k - 1), _row(3 * k - 1)),
            )
        if profile.b[0] >= 6 * k - 3:
            return transpose(self.caret_hook(k, nu.conjugate()))
        return self.leaf(caret(k), nu)

    @staticmethod
    def _peel_first_row(sub: Certificate, column_leaf: Certificate, row_leaf: Certificate) -> Certificate:
        """((shape + column) | row, rest + both leaf betas)."""
        return vertical_sum(row_leaf, semigroup(sub, column_leaf))

    # ------------------------------------------------------------------
    # Double hooks
    # ------------------------------------------------------------------
    def chopped_double(self, k: int, nu: Partition) -> Certificate:
        """(eta_k, nu) for nu of Durfee size 2."""
        _expect(nu, k * k - 1, durfee=2)
        return self._memoized("chopped_double", k, nu, lambda: self._chopped_double(k, nu))

    def _chopped_double(self, k: int, nu: Partition) -> Certificate:
        shape = chopped_square(k)
        if k <= 3:
            return self.leaf(shape, nu)
        for side, target in (("arm", nu), ("leg", nu.conjugate())):
            cert = self._chopped_double_arm(k, target)
            if cert is not None:
                return cert if side == "arm" else transpose(cert)
        return self._fallback(shape, nu)

    def _chopped_double_arm(self, k: int, nu: Partition) -> Optional[Certificate]:
        profile = arm_leg_profile(nu)
        a1, a2 = profile.a[0], 2 * profile.a[1]
        try:
            if a1 >= 2 * k - 1:
                rest = row_sub(nu, _row(2 * k - 1))
                return self._peel_first_row(
                    self._dispatch_chopped(k - 1, rest),
                    self.leaf(_column(k - 1), _row(k - 1)),
                    self.leaf(_row(k), _row(k)),
                )
            if k % 2 == 0 and a2 >= 4 * k - 4:
                rest = row_sub(nu, _row(2 * k - 2, 2 * k - 2))
                return vertical_sum(
                    self.leaf(_row(k, k), _row(k, k)),
                    semigroup(
                        self._dispatch_chopped(k - 2, rest),
                        self.leaf(rectangle(k - 2, 2), _row(k - 2, k - 2)),
                    ),
                )
            if k % 2 == 1 and k >= 7 and a2 >= 8 * k - 16:
                rest = row_sub(nu, _row(4 * k - 8, 4 * k - 8))
                return vertical_sum(
                    self.odd_square_columns(k),
                    semigroup(self._dispatch_chopped(k - 4, rest), self.four_columns(k - 4)),
                )
        except (CertificateError, OracleLimitError) as exc:
            logger.debug("chopped double reduction for k=%d nu=%s failed: %s", k, nu, exc)
        return None

    def _dispatch_chopped(self, k: int, nu: Partition) -> Certificate:
        if nu.durfee() == 1:
            return self.chopped_hook(k, nu)
        if nu.durfee() == 2:
            return self.chopped_double(k, nu)
        return self._fallback(chopped_square(k), nu)

    def odd_square_columns(self, k: int) -> Certificate:
        """((k^4), (2k, 2k)) for odd k = 2s + 1 as (s-1)((2^4),(4,4)) + ((3^4),(6,6))."""
        s = (k - 1) // 2
        base = self.leaf(rectangle(4, 3), _row(6, 6))
        if s == 1:
            return base
        return semigroup(derive_scalar_multiple(self.leaf(rectangle(4, 2), _row(4, 4)), s - 1), base)

    def four_columns(self, j: int) -> Certificate:
        """((4^j), (2j, 2j)) from vertical copies of ((4,4),(4,4)) and one ((4^3),(6,6)) when j is odd."""
        if j < 2:
            raise ParameterRangeError(f"((4^j),(2j,2j)) needs j >= 2, got {j}")
        pair = self.leaf(_row(4, 4), _row(4, 4))
        if j % 2 == 0:
            return derive_vertical_multiple(pair, j // 2)
        odd = self.leaf(rectangle(3, 4), _row(6, 6))
        if j == 3:
            return odd
        return vertical_sum(odd, derive_vertical_multiple(pair, (j - 3) // 2))

    def caret_double(self, k: int, nu: Partition) -> Certificate:
        """(gamma_k, nu) for nu of Durfee size 2."""
        _expect(nu, 3 * k * k, durfee=2)
        return self._memoized("caret_double", k, nu, lambda: self._caret_double(k, nu))

    def _caret_double(self, k: int, nu: Partition) -> Certificate:
        shape = caret(k)
        if k <= 3:
            return self.leaf(shape, nu)
        for side, target in (("arm", nu), ("leg", nu.conjugate())):
            cert = self._caret_double_arm(k, target)
            if cert is not None:
                return cert if side == "arm" else transpose(cert)
        return self._fallback(shape, nu)

    def _caret_double_arm(self, k: int, nu: Partition) -> Optional[Certificate]:
        profile = arm_leg_profile(nu)
        a1, a2 = profile.a[0], 2 * profile.a[1]
        try:
            if a1 >= 6 * k - 3:
                rest = row_sub(nu, _row(6 * k - 3))
                return self._peel_first_row(
                    self._dispatch_caret(k - 1, rest),
                    self.leaf(_column(3 * k - 2), _row(3 * k - 2)),
                    self.leaf(_row(3 * k - 1), _row(3 * k - 1)),
                )
            if k % 2 == 0 and a2 >= 12 * k - 12:
                rest = row_sub(nu, _row(6 * k - 6, 6 * k - 6))
                strip = Partition((2,) * (3 * k - 5) + (1, 1))
                return vertical_sum(
                    self.leaf(_row(3 * k - 1, 3 * k - 3), _row(3 * k - 2, 3 * k - 2)),
                    semigroup(self._dispatch_caret(k - 2, rest), self.leaf(strip, _row(3 * k - 4, 3 * k - 4))),
                )
            if k % 2 == 1 and k >= 5 and a2 >= 24 * k - 48:
                rest = row_sub(nu, _row(12 * k - 24, 12 * k - 24))
                strip = Partition((4,) * (3 * k - 11) + (3, 3, 2, 2, 1, 1))
                top = _row(3 * k - 1, 3 * k - 3, 3 * k - 5, 3 * k - 7)
                return vertical_sum(
                    axiom_leaf("Dominance", top, _row(6 * k - 8, 6 * k - 8), self.policy),
                    semigroup(self._dispatch_caret(k - 4, rest), self.leaf(strip, _row(6 * k - 16, 6 * k - 16))),
                )
        except (CertificateError, OracleLimitError) as exc:
            logger.debug("caret double reduction for k=%d nu=%s failed: %s", k, nu, exc)
        return None

    def _dispatch_caret(self, k: int, nu: Partition) -> Certificate:
        if nu.durfee() == 1:
            return self.caret_hook(k, nu)
        if nu.durfee() == 2:
            return self.caret_double(k, nu)
        return self._fallback(caret(k), nu)

    def _fallback(self, shape: Partition, nu: Partition) -> Certificate:
        return self.leaf(shape, nu)


def _expect(nu: Partition, size: int, durfee: int) -> None:
    if nu.size != size:
        raise SizeMismatchError(f"{nu} does not have size {size}")
    if nu.durfee() != durfee:
        raise ValueError(f"{nu} has Durfee size {nu.durfee()}, expected {durfee}")


# ==========================================
# Module-level entry points
# ==========================================

def staircase_hook_certificate(m: int, nu: Partition, policy: Optional[RulePolicy] = None) -> Certificate:
    return FamilyBuilder(policy).staircase_hook(m, nu)


def chopped_hook_certificate(k: int, nu: Partition, policy: Optional[RulePolicy] = None) -> Certificate:
    return FamilyBuilder(policy).chopped_hook(k, nu)


def caret_hook_certificate(k: int, nu: Partition, policy: Optional[RulePolicy] = None) -> Certificate:
    return FamilyBuilder(policy).caret_hook(k, nu)


def chopped_double_certificate(k: int, nu: Partition, policy: Optional[RulePolicy] = None) -> Certificate:
    return FamilyBuilder(policy).chopped_double(k, nu)


def caret_double_certificate(k: int, nu: Partition, policy: Optional[RulePolicy] = None) -> Certificate:
    return FamilyBuilder(policy).caret_double(k, nu)
