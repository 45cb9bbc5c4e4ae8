"""
Mealy automaton actions on eventually periodic sequences.

A vertex is a PeriodicSequence(prefix, period) standing for
prefix + period + period + ... . Sequences are kept canonical: the period
is primitive and the prefix is as short as possible, so equal sequences have
equal representations.

Each generator symbol acts through an automaton state, either forward or as
the inverse of that state. Inverses are derived from invertibility:
    s^-1 on letter y outputs x = sigma_s^-1(y) and moves to (s|_x)^-1.
"""

from __future__ import annotations

import json
from typing import NamedTuple, Sequence

from urskit.actions.oracles import ActionOracle
from urskit.actions.words import GeneratorSystem
from urskit.errors import ActionError, ConfigError


class PeriodicSequence(NamedTuple):
    prefix: tuple[int, ...]
    period: tuple[int, ...]

    def letters(self, count: int) -> tuple[int, ...]:
        """First `count` letters of the infinite sequence."""
        out = list(self.prefix[:count])
        while len(out) < count:
            out.extend(self.period)
        return tuple(out[:count])

    def __str__(self) -> str:
        return f"{''.join(map(str, self.prefix))}({''.join(map(str, self.period))})^inf"


def canonical_sequence(prefix: Sequence[int], period: Sequence[int]) -> PeriodicSequence:
    """Minimize the period, then roll the prefix into it."""
    prefix = list(prefix)
    period = list(period)
    if not period:
        raise ConfigError("periodic part must be non-empty")
    size = len(period)
    for d in range(1, size + 1):
        if size % d == 0 and period == period[:d] * (size // d):
            period = period[:d]
            break
    while prefix and prefix[-1] == period[-1]:
        prefix.pop()
        period = period[-1:] + period[:-1]
    return PeriodicSequence(tuple(prefix), tuple(period))


def _letters(spec: str | Sequence[int]) -> list[int]:
    if isinstance(spec, str):
        return [int(ch) for ch in spec]
    return [int(x) for x in spec]


class MealyAction(ActionOracle):
    kind = "mealy"

    def __init__(self, generators: GeneratorSystem, alphabet: int,
                 transitions: dict[str, list[str]], outputs: dict[str, list[int]],
                 base: PeriodicSequence, document: dict | None = None):
        super().__init__(generators, base, document or {})
        self.alphabet = alphabet
        states = sorted(transitions)
        if set(states) != set(outputs):
            raise ConfigError("transitions and outputs must name the same states")
        self._state_index = {name: i for i, name in enumerate(states)}
        self._next: list[tuple[int, ...]] = []
        self._out: list[tuple[int, ...]] = []
        self._out_inv: list[tuple[int, ...]] = []
        for name in states:
            nxt, out = transitions[name], outputs[name]
            if len(nxt) != alphabet or len(out) != alphabet:
                raise ConfigError(f"state {name} must list one entry per letter")
            if sorted(out) != list(range(alphabet)):
                raise ActionError(f"state {name} output {out} is not a permutation of the alphabet")
            try:
                self._next.append(tuple(self._state_index[s] for s in nxt))
            except KeyError as exc:
                raise ConfigError(f"state {name} transitions to unknown state {exc.args[0]}") from None
            self._out.append(tuple(int(y) for y in out))
            inv = [0] * alphabet
            for x, y in enumerate(out):
                inv[int(y)] = x
            self._out_inv.append(tuple(inv))

        # symbol -> (state, inverted)
        self._symbol_state: list[tuple[int, bool]] = []
        for q, name in enumerate(generators.symbols):
            if name in self._state_index:
                self._symbol_state.append((self._state_index[name], False))
                continue
            partner = generators.symbols[generators.inv(q)]
            if partner not in self._state_index:
                raise ConfigError(f"symbol {name} is neither a state nor the inverse of one")
            self._symbol_state.append((self._state_index[partner], True))

        for ch in base.prefix + base.period:
            if not 0 <= ch < alphabet:
                raise ConfigError(f"base letter {ch} outside the alphabet")

    # ── automaton steps ──────────────────────────────────────────────────────

    def _step(self, state: tuple[int, bool], x: int) -> tuple[int, tuple[int, bool]]:
        s, inverted = state
        if inverted:
            y = self._out_inv[s][x]
            return y, (self._next[s][y], True)
        return self._out[s][x], (self._next[s][x], False)

    def _run(self, state: tuple[int, bool], letters: Sequence[int]) -> tuple[list[int], tuple[int, bool]]:
        out = []
        for x in letters:
            y, state = self._step(state, x)
            out.append(y)
        return out, state

    def apply(self, q: int, v: PeriodicSequence) -> PeriodicSequence:
        state = self._symbol_state[q]
        head, state = self._run(state, v.prefix)
        # pass-start states become periodic after finitely many passes
        seen: dict[tuple[int, bool], int] = {}
        passes: list[list[int]] = []
        while state not in seen:
            seen[state] = len(passes)
            out, state = self._run(state, v.period)
            passes.append(out)
        start = seen[state]
        prefix = head + [y for chunk in passes[:start] for y in chunk]
        period = [y for chunk in passes[start:] for y in chunk]
        return canonical_sequence(prefix, period)

    def serialize(self, v: PeriodicSequence) -> str:
        return json.dumps({"prefix": list(v.prefix), "period": list(v.period)}, separators=(",", ":"))

    def parse_vertex(self, text: str) -> PeriodicSequence:
        doc = json.loads(text)
        return canonical_sequence(_letters(doc["prefix"]), _letters(doc["period"]))


def sequence_from_doc(doc: dict) -> PeriodicSequence:
    return canonical_sequence(_letters(doc.get("prefix", "")), _letters(doc["period"]))
