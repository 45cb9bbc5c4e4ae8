"""JSON and DOT views of balls and level systems."""

from __future__ import annotations

import networkx as nx

from urskit.actions.oracles import ActionOracle
from urskit.actions.words import GeneratorSystem, format_word
from urskit.balls.ball_type import BallType
from urskit.balls.levels import Level, LevelSystem


def ball_graph(t: BallType, gs: GeneratorSystem) -> nx.MultiDiGraph:
    """Directed multigraph with one edge v -> q.v per symbol q inside the ball."""
    g = nx.MultiDiGraph(radius=t.radius)
    for i in range(len(t)):
        g.add_node(i, word=format_word(gs, t.representative(i)), depth=t.depth[i], root=(i == 0))
    for i, row in enumerate(t.neighbors):
        for q, j in enumerate(row):
            if j >= 0:
                g.add_edge(i, j, key=gs.symbols[q], label=gs.symbols[q])
    return g


def to_dot(t: BallType, gs: GeneratorSystem, name: str = "ball") -> str:
    """DOT text: nodes labeled by representative word, root double-circled.

    Each undirected edge is drawn once, along the symbol that comes first in
    the declared order.
    """
    g = ball_graph(t, gs)
    dot = f"digraph {name} {{\n"
    for i, data in g.nodes(data=True):
        shape = "doublecircle" if data["root"] else "circle"
        dot += f"    v{i} [label=\"{data['word']}\", shape={shape}];\n"
    drawn = set()
    for i, j, key in g.edges(keys=True):
        q = gs.symbols.index(key)
        partner = gs.inv(q)
        edge = (min((i, q), (j, partner)), max((i, q), (j, partner)))
        if edge in drawn:
            continue
        drawn.add(edge)
        if q > partner:
            i, j, key = j, i, gs.symbols[partner]
        dot += f"    v{i} -> v{j} [label=\"{key}\"];\n"
    dot += "}\n"
    return dot


def ball_to_dict(t: BallType, gs: GeneratorSystem) -> dict:
    return {
        "radius": t.radius,
        "vertices": [
            {"index": i, "word": format_word(gs, t.representative(i)), "depth": t.depth[i]}
            for i in range(len(t))
        ],
        "neighbors": [list(row) for row in t.neighbors],
        "boundary_edges": [
            [i, gs.symbols[q], j] for i, q, j in sorted(t.boundary_edges())
        ],
    }


def level_system_to_dict(ls: LevelSystem, oracle: ActionOracle) -> dict:
    return {
        "oracle_hash": ls.oracle_hash,
        "generators": ls.generators.to_dict(),
        "levels": [
            {
                "n": level.n,
                "classes": [t.serialize() for t in level.classes],
                "e_map": level.e_map,
                "witness_vertices": [oracle.serialize(v) for v in level.witnesses],
                "saturated": level.saturated,
                "explore_radius": level.explore_radius,
            }
            for level in ls.levels
        ],
    }


def level_system_from_dict(doc: dict, oracle: ActionOracle) -> LevelSystem:
    gs = GeneratorSystem.from_names(doc["generators"]["symbols"], doc["generators"]["inverses"])
    levels = [
        Level(
            n=entry["n"],
            classes=[BallType.parse(s) for s in entry["classes"]],
            e_map=list(entry["e_map"]),
            witnesses=[oracle.parse_vertex(s) for s in entry["witness_vertices"]],
            saturated=bool(entry["saturated"]),
            explore_radius=int(entry["explore_radius"]),
        )
        for entry in doc["levels"]
    ]
    return LevelSystem(doc["oracle_hash"], gs, levels)
