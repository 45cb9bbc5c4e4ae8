"""Build action oracles from action-description documents."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from urskit.actions.mealy import MealyAction, sequence_from_doc
from urskit.actions.oracles import ActionOracle, FiniteSchreierAction, FreeAction, IntegersAction
from urskit.actions.words import GeneratorSystem
from urskit.errors import ConfigError
from urskit.utils import get_logger

logger = get_logger("urskit.actions")

ACTIONS_DIR = Path(__file__).resolve().parents[2] / "data" / "actions"

_REQUIRED_KEYS: dict[str, list[str]] = {
    "integers": [],
    "free": ["rank"],
    "finite-schreier": ["symbols", "inverses", "vertices", "edges"],
    "mealy": ["symbols", "inverses", "alphabet", "transitions", "outputs", "base"],
}


def builtin_actions() -> list[str]:
    return sorted(p.stem for p in ACTIONS_DIR.glob("*.json"))


def _read_document(source: str | Path) -> dict:
    path = Path(source)
    if not path.exists() and not path.suffix:
        path = ACTIONS_DIR / f"{source}.json"
    if not path.exists():
        raise ConfigError(f"no action document at {source} (built-ins: {builtin_actions()})")
    with open(path) as f:
        try:
            return json.load(f)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: {exc}") from None


def load_action(config: dict[str, Any] | str | Path) -> ActionOracle:
    """Validate an action document (or a path/built-in name) and build its oracle."""
    doc = config if isinstance(config, dict) else _read_document(config)
    kind = doc.get("kind")
    if kind not in _REQUIRED_KEYS:
        raise ConfigError(f"unknown action kind {kind!r}; expected one of {sorted(_REQUIRED_KEYS)}")
    missing = [key for key in _REQUIRED_KEYS[kind] if key not in doc]
    if missing:
        raise ConfigError(f"{kind} action document is missing {missing}")

    if kind == "integers":
        oracle: ActionOracle = IntegersAction(doc.get("base", 0), document=doc)
    elif kind == "free":
        oracle = FreeAction(int(doc["rank"]), tuple(doc.get("base", ())), document=doc)
    elif kind == "finite-schreier":
        gs = GeneratorSystem.from_names(doc["symbols"], doc["inverses"])
        oracle = FiniteSchreierAction(gs, int(doc["vertices"]), doc["edges"], doc.get("base", 0), document=doc)
    else:
        gs = GeneratorSystem.from_names(doc["symbols"], doc["inverses"])
        oracle = MealyAction(gs, int(doc["alphabet"]), doc["transitions"],
                             {s: [int(y) for y in out] for s, out in doc["outputs"].items()},
                             sequence_from_doc(doc["base"]), document=doc)

    logger.debug("Loaded %s action with %d symbols", kind, oracle.generators.size)
    return oracle
