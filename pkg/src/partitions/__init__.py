# Partitions Module - Value Type, Profiles, Shapes, Enumeration
from src.partitions.partition import (
    EMPTY,
    Partition,
    as_partition,
    conjugate,
    dominates,
    durfee_and_principal_hooks,
    format_partition,
    parse_partition,
    row_add,
    row_sub,
    vertical_sum,
)
from src.partitions.profile import ArmLegProfile, SelectVector, arm_leg_profile, from_profile
from src.partitions.shapes import (
    caret,
    chopped_square,
    hook,
    rectangle,
    sigma,
    staircase,
    staircase_size,
    tau,
)
from src.partitions.enumeration import durfee_class_size, enumerate_partitions, partition_count

__all__ = [
    "EMPTY", "Partition", "as_partition", "conjugate", "dominates", "durfee_and_principal_hooks",
    "format_partition", "parse_partition", "row_add", "row_sub", "vertical_sum",
    "ArmLegProfile", "SelectVector", "arm_leg_profile", "from_profile",
    "caret", "chopped_square", "hook", "rectangle", "sigma", "staircase", "staircase_size", "tau",
    "durfee_class_size", "enumerate_partitions", "partition_count",
]
