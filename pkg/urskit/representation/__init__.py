from .intertwiner import find_matching_units, fiber_transport_check, intertwiner_check
from .norms import LowerBound, NormEstimate, norm_estimate, norm_lower_bound, norm_upper_bounds
from .truncate import TruncatedOperator, hermitian_check, interior_block, product_check, truncate

__all__ = [
    "LowerBound",
    "NormEstimate",
    "TruncatedOperator",
    "fiber_transport_check",
    "find_matching_units",
    "hermitian_check",
    "interior_block",
    "intertwiner_check",
    "norm_estimate",
    "norm_lower_bound",
    "norm_upper_bounds",
    "product_check",
    "truncate",
]
