"""urskit ball — the canonical ball around a vertex, as JSON or DOT."""

from __future__ import annotations

from urskit.balls import ball_to_dict, ball_type, to_dot
from urskit.commands.common import load_oracle
from urskit.config import RunConfig
from urskit.reports import Outcome
from urskit.utils import emit


def run(args, config: RunConfig) -> Outcome:
    oracle = load_oracle(config)
    vertex = oracle.parse_vertex(args.vertex) if args.vertex else oracle.base
    t = ball_type(oracle, vertex, config.radius, config.budget)
    if config.format == "dot":
        emit(to_dot(t, oracle.generators), config.output, "dot")
    else:
        doc = {"vertex": oracle.serialize(vertex), "type": t.serialize(), **ball_to_dict(t, oracle.generators)}
        emit(doc, config.output, "json")
    return Outcome.PASS
