"""urskit propa check|construct|bridge."""

from __future__ import annotations

from urskit.amenability import (
    PropAWitness,
    backward_bridge,
    ball_indicator_witness,
    check_witness,
    forward_bridge,
    witness_to_functions,
)
from urskit.commands.common import level_system, load_oracle, report
from urskit.config import RunConfig
from urskit.errors import ConfigError, LevelMismatch
from urskit.reports import Outcome
from urskit.utils import load_json


def run(args, config: RunConfig) -> Outcome:
    oracle = load_oracle(config)
    n = args.n
    L = n if args.length is None else args.length

    if args.witness:
        # a construct report carries the witness under "witness"; bare documents work too
        doc = load_json(args.witness)
        w = PropAWitness.from_dict(doc.get("witness", doc) if isinstance(doc, dict) else doc)
        n = w.n
        L = n if args.length is None else args.length
        if w.level_hash != oracle.content_hash():
            raise LevelMismatch(f"witness built over {w.level_hash}, action is {oracle.content_hash()}")
        k = w.radius
    elif args.op == "check":
        raise ConfigError("propa check needs --witness")
    else:
        k = n ** 3 if args.k is None else args.k

    ls = level_system(config, oracle, nmax=max(config.nmax, k + max(n, L)))
    if not args.witness:
        w = ball_indicator_witness(ls, n, k)

    if args.op == "bridge":
        reports = [forward_bridge(ls, w, L, config.tol),
                   backward_bridge(ls, witness_to_functions(ls, w), tol=config.tol)]
    else:
        reports = [check_witness(ls, w, tol=config.tol)]
    extra = {"witness": w.to_dict()} if args.op == "construct" else None
    return report(config, reports, extra)
