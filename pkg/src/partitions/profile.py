"""
Arm/leg profiles and select vectors.

For a partition with Durfee size k, a_i counts the columns of length i to the right of
the Durfee square and b_i the rows of length i below it, so that n = k^2 + A + B.
"""

from dataclasses import dataclass
from typing import Tuple

from src.partitions.partition import Partition
from src.utils.errors import ParameterRangeError


@dataclass(frozen=True)
class ArmLegProfile:
    """Durfee size plus arm column and leg row multiplicities."""

    k: int
    a: Tuple[int, ...]
    b: Tuple[int, ...]

    @property
    def A(self) -> int:
        return sum((i + 1) * x for i, x in enumerate(self.a))

    @property
    def B(self) -> int:
        return sum((i + 1) * x for i, x in enumerate(self.b))

    @property
    def size(self) -> int:
        return self.k * self.k + self.A + self.B

    def weight(self, i: int) -> int:
        """A_i = i * a_i."""
        return i * self.a[i - 1]

    @property
    def free_durfee_columns(self) -> int:
        """Durfee square columns of length exactly k; they may join the arm's length-k columns."""
        deepest = max((i + 1 for i, x in enumerate(self.b) if x > 0), default=0)
        return self.k - deepest

    def with_durfee_columns(self) -> "ArmLegProfile":
        """Profile whose length-k column count includes the free Durfee columns."""
        if self.k == 0:
            return self
        a = list(self.a)
        a[-1] += self.free_durfee_columns
        return ArmLegProfile(self.k, tuple(a), self.b)

    def transpose(self) -> "ArmLegProfile":
        return ArmLegProfile(self.k, self.b, self.a)


def arm_leg_profile(mu: Partition) -> ArmLegProfile:
    k = mu.durfee()
    a = [0] * k
    b = [0] * k
    for col in mu.conjugate().parts[k:]:
        a[col - 1] += 1
    for row in mu.parts[k:]:
        b[row - 1] += 1
    return ArmLegProfile(k, tuple(a), tuple(b))


def from_profile(k: int, a: Tuple[int, ...], b: Tuple[int, ...]) -> Partition:
    """Inverse of arm_leg_profile."""
    if len(a) != k or len(b) != k or any(x < 0 for x in a + b):
        raise ParameterRangeError(f"profile vectors must have length k={k} and be nonnegative")
    rows = [k + sum(a[i:]) for i in range(k)]
    for length in range(k, 0, -1):
        rows.extend([length] * b[length - 1])
    return Partition(tuple(rows))


@dataclass(frozen=True)
class SelectVector:
    """Column selection counts x_1..x_k; x_i columns of length i are taken."""

    x: Tuple[int, ...]

    @property
    def target(self) -> int:
        return sum((i + 1) * v for i, v in enumerate(self.x))

    @property
    def upsilon(self) -> Partition:
        return Partition(tuple(sum(self.x[i:]) for i in range(len(self.x))))

    def fits(self, profile: ArmLegProfile) -> bool:
        return len(self.x) == profile.k and all(0 <= x <= a for x, a in zip(self.x, profile.a))
