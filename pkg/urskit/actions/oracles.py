"""
Action oracles: computable generator actions on a vertex domain.

Every oracle is immutable after construction (with_base returns a copy), its
apply is pure, and its vertices are hashable with an injective serialization.
"""

from __future__ import annotations

import copy
import json
from typing import Any, Hashable

from urskit.actions.words import GeneratorSystem, Word
from urskit.errors import ActionError, ConfigError
from urskit.utils import content_hash

Vertex = Hashable


class ActionOracle:
    """Symmetric generator action with a distinguished base vertex."""

    kind: str = "abstract"

    def __init__(self, generators: GeneratorSystem, base: Vertex, document: dict):
        self.generators = generators
        self.base = base
        self.document = document

    def apply(self, q: int, v: Vertex) -> Vertex:
        raise NotImplementedError

    def serialize(self, v: Vertex) -> str:
        return json.dumps(v)

    def parse_vertex(self, text: str) -> Vertex:
        return json.loads(text)

    def with_base(self, v: Vertex) -> "ActionOracle":
        clone = copy.copy(self)
        clone.base = v
        return clone

    def content_hash(self) -> str:
        """Hash of the action document together with the base vertex."""
        return content_hash({"document": self.document, "base": self.serialize(self.base)})

    def __repr__(self) -> str:
        return f"<{type(self).__name__} |Q|={self.generators.size} base={self.serialize(self.base)}>"


def apply_word(oracle: ActionOracle, w: Word, v: Vertex) -> Vertex:
    """w . v, rightmost letter first."""
    for q in reversed(w):
        v = oracle.apply(q, v)
    return v


# ------------------------------------------------------------------
# integers: Z acting on itself by translation
# ------------------------------------------------------------------

class IntegersAction(ActionOracle):
    kind = "integers"

    def __init__(self, base: int = 0, document: dict | None = None):
        super().__init__(GeneratorSystem(("a", "A"), (1, 0)), int(base), document or {"kind": "integers"})

    def apply(self, q: int, v: int) -> int:
        return v + 1 if q == 0 else v - 1


# ------------------------------------------------------------------
# free group of rank r acting on itself (vertices are reduced words)
# ------------------------------------------------------------------

_FREE_LETTERS = "abcdefghijklmnopqrstuvwxyz"


class FreeAction(ActionOracle):
    kind = "free"

    def __init__(self, rank: int, base: tuple[int, ...] = (), document: dict | None = None):
        if not 1 <= rank <= len(_FREE_LETTERS):
            raise ConfigError(f"free rank must lie in 1..{len(_FREE_LETTERS)}")
        symbols: list[str] = []
        inverse: list[int] = []
        for i in range(rank):
            symbols += [_FREE_LETTERS[i], _FREE_LETTERS[i].upper()]
            inverse += [2 * i + 1, 2 * i]
        super().__init__(GeneratorSystem(tuple(symbols), tuple(inverse)), tuple(base),
                         document or {"kind": "free", "rank": rank})
        self.rank = rank

    def apply(self, q: int, v: tuple[int, ...]) -> tuple[int, ...]:
        if v and v[0] == self.generators.inv(q):
            return v[1:]
        return (q,) + v

    def serialize(self, v: tuple[int, ...]) -> str:
        return json.dumps(list(v))

    def parse_vertex(self, text: str) -> tuple[int, ...]:
        return tuple(json.loads(text))


# ------------------------------------------------------------------
# finite Schreier graph given by a labeled edge list
# ------------------------------------------------------------------

class FiniteSchreierAction(ActionOracle):
    kind = "finite-schreier"

    def __init__(self, generators: GeneratorSystem, vertices: int, edges: list[Any],
                 base: int = 0, document: dict | None = None):
        super().__init__(generators, int(base), document or {})
        if vertices <= 0:
            raise ConfigError("finite-schreier action needs at least one vertex")
        if not 0 <= self.base < vertices:
            raise ConfigError(f"base {base} outside 0..{vertices - 1}")
        table: list[list[int | None]] = [[None] * vertices for _ in range(generators.size)]

        def _set(q: int, v: int, w: int) -> None:
            current = table[q][v]
            if current is not None and current != w:
                raise ActionError(
                    f"conflicting edges: {generators.symbols[q]}.{v} is both {current} and {w}")
            table[q][v] = w

        for edge in edges:
            try:
                v, q_name, w = edge
            except (TypeError, ValueError):
                raise ConfigError(f"edge {edge!r} is not a [v, q, w] triple") from None
            q = generators.index(q_name)
            if not (0 <= v < vertices and 0 <= w < vertices):
                raise ConfigError(f"edge {edge!r} references an unknown vertex")
            _set(q, v, w)
            _set(generators.inv(q), w, v)

        for q, row in enumerate(table):
            missing = [v for v, w in enumerate(row) if w is None]
            if missing:
                raise ActionError(
                    f"symbol {generators.symbols[q]} undefined on vertices {missing[:5]}")
        self.vertices = vertices
        self.table: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in table)  # type: ignore[arg-type]

    def apply(self, q: int, v: int) -> int:
        return self.table[q][v]
