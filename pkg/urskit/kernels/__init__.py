from .dictionary import identity_suite, star, times
from .gaussian import Gaussian
from .kernel import (
    LocalKernel,
    add,
    adjacency_kernel,
    adjoint,
    convolve,
    eval_kernel,
    from_groupoid_function,
    identity_kernel,
    kernel_from_dict,
    kernel_to_dict,
    kernels_equal,
    lift,
    random_kernel,
    reduce_width,
    scale,
    sup_norm,
    support_depth,
    to_groupoid_function,
)

__all__ = [
    "Gaussian",
    "LocalKernel",
    "add",
    "adjacency_kernel",
    "adjoint",
    "convolve",
    "eval_kernel",
    "from_groupoid_function",
    "identity_kernel",
    "identity_suite",
    "kernel_from_dict",
    "kernel_to_dict",
    "kernels_equal",
    "lift",
    "random_kernel",
    "reduce_width",
    "scale",
    "star",
    "sup_norm",
    "support_depth",
    "times",
    "to_groupoid_function",
]
