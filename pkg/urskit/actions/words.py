"""
Generator systems and words.

A word is a tuple of symbol indices. The rightmost letter acts first:
    (q1, q2, q3) . v  ==  q1 . (q2 . (q3 . v))

Shortlex order compares length first, then letters left to right by the
declared symbol order. The position of a word in that order is its
word-index, so the words of length <= n are a prefix of those of length <= n+1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from urskit.errors import ConfigError

Word = tuple[int, ...]
IDENTITY: Word = ()


@dataclass(frozen=True)
class GeneratorSystem:
    symbols: tuple[str, ...]
    inverse: tuple[int, ...]

    def __post_init__(self) -> None:
        k = len(self.symbols)
        if k == 0:
            raise ConfigError("generator system needs at least one symbol")
        if len(set(self.symbols)) != k:
            raise ConfigError(f"duplicate symbol names in {self.symbols}")
        if len(self.inverse) != k:
            raise ConfigError("inverse pairing must cover every symbol")
        for q, p in enumerate(self.inverse):
            if not 0 <= p < k or self.inverse[p] != q:
                raise ConfigError(f"inverse pairing is not an involution at {self.symbols[q]}")

    @classmethod
    def from_names(cls, symbols: Sequence[str], inverses: Sequence[str | int]) -> "GeneratorSystem":
        symbols = tuple(str(s) for s in symbols)
        lookup = {name: i for i, name in enumerate(symbols)}
        pairing = []
        for entry in inverses:
            if isinstance(entry, int):
                pairing.append(entry)
            elif entry in lookup:
                pairing.append(lookup[entry])
            else:
                raise ConfigError(f"unknown inverse symbol {entry!r}")
        return cls(symbols, tuple(pairing))

    @property
    def size(self) -> int:
        return len(self.symbols)

    def inv(self, q: int) -> int:
        return self.inverse[q]

    def index(self, name: str | int) -> int:
        if isinstance(name, int):
            if not 0 <= name < self.size:
                raise ConfigError(f"symbol index {name} out of range")
            return name
        try:
            return self.symbols.index(name)
        except ValueError:
            raise ConfigError(f"unknown symbol {name!r}") from None

    def to_dict(self) -> dict:
        return {"symbols": list(self.symbols), "inverses": [self.symbols[p] for p in self.inverse]}


def invert_word(gs: GeneratorSystem, w: Word) -> Word:
    """Reverse the letters and replace each by its inverse symbol."""
    return tuple(gs.inv(q) for q in reversed(w))


def reduce_word(gs: GeneratorSystem, w: Word) -> Word:
    """Free reduction: cancel adjacent q q^-1 pairs."""
    out: list[int] = []
    for q in w:
        if out and out[-1] == gs.inv(q):
            out.pop()
        else:
            out.append(q)
    return tuple(out)


def words_of_length(gs: GeneratorSystem, length: int) -> Iterator[Word]:
    return itertools.product(range(gs.size), repeat=length)


def word_enumerate(gs: GeneratorSystem, n: int) -> list[Word]:
    """All words of length <= n in shortlex order."""
    if n < 0:
        raise ValueError("radius must be non-negative")
    words: list[Word] = []
    for length in range(n + 1):
        words.extend(words_of_length(gs, length))
    return words


def word_count(gs: GeneratorSystem, n: int) -> int:
    """|W_n| = 1 + k + ... + k^n."""
    return sum(gs.size ** length for length in range(n + 1))


def word_index(gs: GeneratorSystem, w: Word) -> int:
    offset = word_count(gs, len(w) - 1) if w else 0
    rank = 0
    for q in w:
        rank = rank * gs.size + q
    return offset + rank


def word_at(gs: GeneratorSystem, index: int) -> Word:
    length = 0
    while index >= gs.size ** length:
        index -= gs.size ** length
        length += 1
    letters = []
    for _ in range(length):
        index, q = divmod(index, gs.size)
        letters.append(q)
    return tuple(reversed(letters))


def shortlex_key(w: Word) -> tuple[int, Word]:
    return (len(w), w)


def parse_word(gs: GeneratorSystem, text: str) -> Word:
    """Parse whitespace-separated symbol names; `e` or "" is the identity.

    A trailing `^-1` selects the paired inverse symbol.
    """
    letters = []
    for token in text.split():
        if token == "e":
            continue
        if token.endswith("^-1"):
            letters.append(gs.inv(gs.index(token[:-3])))
        else:
            letters.append(gs.index(token))
    return tuple(letters)


def format_word(gs: GeneratorSystem, w: Word) -> str:
    if not w:
        return "e"
    return " ".join(gs.symbols[q] for q in w)
