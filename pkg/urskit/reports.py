"""Three-valued outcomes and the generic check report."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Iterable


class Outcome(enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    UNDECIDED = "UNDECIDED"

    @property
    def exit_code(self) -> int:
        return {"PASS": 0, "FAIL": 1, "UNDECIDED": 2}[self.value]

    @classmethod
    def of(cls, passed: bool) -> "Outcome":
        return cls.PASS if passed else cls.FAIL


def combine(outcomes: Iterable[Outcome]) -> Outcome:
    """FAIL dominates UNDECIDED, which dominates PASS."""
    outcomes = list(outcomes)
    if Outcome.FAIL in outcomes:
        return Outcome.FAIL
    if Outcome.UNDECIDED in outcomes:
        return Outcome.UNDECIDED
    return Outcome.PASS


@dataclass
class CheckReport:
    name: str
    outcome: Outcome
    details: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.outcome is Outcome.PASS

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.name,
            "outcome": self.outcome.value,
            "details": self.details,
            "witnesses": self.witnesses[:50],
        }

    def __str__(self) -> str:
        if self.passed:
            return f"[{self.name}] OK"
        return f"[{self.name}] {self.outcome.value}: {self.witnesses[:3]}"
