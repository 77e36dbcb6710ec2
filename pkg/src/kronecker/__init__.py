# Kronecker Module - Exact Coefficients, Positivity, Tensor-Square Support
from src.kronecker.oracle import (
    KroneckerOracle,
    KroneckerQuery,
    default_oracle,
    is_positive,
    kronecker,
    missing_constituents,
    tensor_square_multiplicities,
    tensor_square_support,
)

__all__ = [
    "KroneckerOracle", "KroneckerQuery", "default_oracle", "is_positive", "kronecker",
    "missing_constituents", "tensor_square_multiplicities", "tensor_square_support",
]
