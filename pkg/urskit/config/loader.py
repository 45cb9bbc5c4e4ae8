"""Configuration loader with YAML support and env var overrides."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Any

import yaml
from dotenv import load_dotenv

from urskit.errors import ConfigError
from urskit.utils import get_logger

logger = get_logger("urskit.config")

_config: dict = {}


def load_config(path: str | None = None) -> dict:
    """Load config from YAML file. Falls back to defaults if file missing."""
    global _config

    if path is None:
        path = os.environ.get(
            "URSKIT_CONFIG",
            str(Path(__file__).parent / "config.yaml"),
        )

    config_path = Path(path)
    load_dotenv(config_path.parent / ".env")
    if config_path.exists():
        with open(config_path) as f:
            _config = {**_defaults(), **(yaml.safe_load(f) or {})}
    else:
        logger.warning("Config file not found at %s, using defaults.", path)
        _config = _defaults()

    _apply_env_overrides(_config)
    return _config


def get_config() -> dict:
    """Return currently loaded config, loading defaults if not yet initialised."""
    if not _config:
        load_config()
    return _config


def _defaults() -> dict:
    return {
        "action": "integers",
        "nmax": 6,
        "radius": 16,
        "budget": 200_000,
        "bound": None,
        "tol": 1e-9,
        "max_iter": 100_000,
        "output": None,
        "format": "json",
        "threads": 1,
        "log_level": "INFO",
    }


def _apply_env_overrides(cfg: dict) -> None:
    """Allow URSKIT_THREADS and URSKIT_LOG_LEVEL to override config."""
    threads = os.environ.get("URSKIT_THREADS")
    if threads:
        cfg["threads"] = int(threads)
    else:
        # parallel_map reads the env var, so push the configured value there
        os.environ["URSKIT_THREADS"] = str(cfg.get("threads", 1))

    level = os.environ.get("URSKIT_LOG_LEVEL")
    if level:
        cfg["log_level"] = level


# ── run configuration ────────────────────────────────────────────────────────

@dataclass
class RunConfig:
    action: str = "integers"
    nmax: int = 6
    radius: int = 16
    budget: int = 200_000
    bound: int | None = None
    tol: float = 1e-9
    max_iter: int = 100_000
    output: str | None = None
    format: str = "json"

    @classmethod
    def from_sources(cls, config: dict, overrides: dict[str, Any] | None = None) -> "RunConfig":
        """Defaults, then the config document, then non-None overrides (CLI flags)."""
        names = {f.name for f in fields(cls)}
        values = {k: v for k, v in config.items() if k in names}
        for key, value in (overrides or {}).items():
            if key in names and value is not None:
                values[key] = value
        run = cls(**values)
        run.validate()
        return run

    def validate(self) -> None:
        problems = []
        for key in ("nmax", "radius", "budget", "max_iter"):
            if int(getattr(self, key)) <= 0:
                problems.append(f"{key} must be positive")
        if not 0 < float(self.tol) < 1:
            problems.append("tol must lie in (0, 1)")
        if self.bound is not None and int(self.bound) < 0:
            problems.append("bound must be non-negative")
        if self.format not in ("json", "dot"):
            problems.append("format must be json or dot")
        for problem in problems:
            logger.error("Invalid run config: %s", problem)
        if problems:
            raise ConfigError("; ".join(problems))
