"""urskit kernel show|identities|norm."""

from __future__ import annotations

from urskit.commands import norm
from urskit.commands.common import kernel_setup, load_oracle, report
from urskit.config import RunConfig
from urskit.kernels import adjacency_kernel, identity_suite, kernel_to_dict, reduce_width, sup_norm
from urskit.reports import Outcome
from urskit.utils import emit


def run(args, config: RunConfig) -> Outcome:
    if args.op == "norm":
        return norm.run(args, config)

    oracle = load_oracle(config)
    if args.op == "show":
        ls, K = kernel_setup(args, config, oracle)
        reduced = reduce_width(ls, K)
        doc = kernel_to_dict(reduced)
        doc["stored_width"] = K.width
        doc["sup"] = sup_norm(reduced)
        emit(doc, config.output, "json")
        return Outcome.PASS

    ls, K = kernel_setup(args, config, oracle, factor=4)
    kernels = {"A": adjacency_kernel(ls), "K": K}
    return report(config, [identity_suite(ls, kernels, oracle, budget=config.budget)])
