"""
Shared utilities for urskit.

Centralizes logging, the worker pool, content hashing and report emission
so every module uses a single source of truth.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Any, Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")

_LOG_FORMAT = "%(asctime)s [%(name)s] %(levelname)s %(message)s"
_LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def get_logger(name: str) -> logging.Logger:
    """Return a named logger with consistent formatting.

    Console output goes to stderr. When URSKIT_LOG_FILE is set, everything
    at DEBUG and above is also written to a rotating log file.
    """
    logger = logging.getLogger(name)
    if logger.handlers:
        return logger

    logger.setLevel(logging.DEBUG)
    logger.propagate = False

    # Console handler
    console = logging.StreamHandler(sys.stderr)
    console.setLevel(os.environ.get("URSKIT_LOG_LEVEL", "INFO").upper())
    console.setFormatter(logging.Formatter(_LOG_FORMAT, datefmt=_LOG_DATE_FORMAT))
    logger.addHandler(console)

    log_path = os.environ.get("URSKIT_LOG_FILE")
    if log_path:
        try:
            fh = RotatingFileHandler(log_path, maxBytes=5_000_000, backupCount=2)
            fh.setLevel(logging.DEBUG)
            fh.setFormatter(logging.Formatter(_LOG_FORMAT, datefmt=_LOG_DATE_FORMAT))
            logger.addHandler(fh)
        except OSError:
            logger.warning("Cannot open log file %s, console only.", log_path)

    return logger


def set_console_level(level: str) -> None:
    """Adjust the console level of every urskit logger created so far."""
    for name, obj in logging.root.manager.loggerDict.items():
        if not name.startswith("urskit") or not isinstance(obj, logging.Logger):
            continue
        for handler in obj.handlers:
            if isinstance(handler, logging.StreamHandler) and not isinstance(handler, RotatingFileHandler):
                handler.setLevel(level.upper())


# ── worker pool ──────────────────────────────────────────────────────────────

def max_threads() -> int:
    """Worker cap from URSKIT_THREADS (default 1, i.e. sequential)."""
    raw = os.environ.get("URSKIT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def parallel_map(fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
    """Map fn over items, fanning out when URSKIT_THREADS > 1.

    Results always come back in input order, so callers merge deterministically.
    """
    items = list(items)
    workers = min(max_threads(), len(items))
    if workers <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


# ── hashing and documents ────────────────────────────────────────────────────

def content_hash(document: Any) -> str:
    """Short stable hash of a JSON-serializable document."""
    blob = json.dumps(document, sort_keys=True, separators=(",", ":"), default=str)
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()[:16]


def fraction_str(value: Fraction | int) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def load_json(path: str | Path) -> Any:
    with open(path) as f:
        return json.load(f)


def emit(payload: Any, out: str | None = None, fmt: str = "json") -> str:
    """Serialize a report and write it to `out` (or stdout when out is None)."""
    if fmt == "dot" and isinstance(payload, str):
        text = payload
    else:
        text = json.dumps(payload, indent=2, default=str)
    if out:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        with open(out, "w") as f:
            f.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return text
