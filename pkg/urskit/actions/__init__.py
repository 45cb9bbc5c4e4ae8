from .loader import builtin_actions, load_action
from .mealy import MealyAction, PeriodicSequence, canonical_sequence
from .oracles import ActionOracle, FiniteSchreierAction, FreeAction, IntegersAction, Vertex, apply_word
from .region import SchreierRegion, explore
from .words import (
    IDENTITY,
    GeneratorSystem,
    Word,
    format_word,
    invert_word,
    parse_word,
    reduce_word,
    word_at,
    word_count,
    word_enumerate,
    word_index,
)

__all__ = [
    "IDENTITY",
    "ActionOracle",
    "FiniteSchreierAction",
    "FreeAction",
    "GeneratorSystem",
    "IntegersAction",
    "MealyAction",
    "PeriodicSequence",
    "SchreierRegion",
    "Vertex",
    "Word",
    "apply_word",
    "builtin_actions",
    "canonical_sequence",
    "explore",
    "format_word",
    "invert_word",
    "load_action",
    "parse_word",
    "reduce_word",
    "word_at",
    "word_count",
    "word_enumerate",
    "word_index",
]
