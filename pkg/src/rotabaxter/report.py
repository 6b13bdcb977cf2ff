"""Uniform pass/fail results with a deterministic first witness."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


@dataclass(frozen=True)
class CheckReport:
    name: str
    passed: bool
    witness: Any = None
    residual: Any = None
    details: tuple = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return self.passed

    @classmethod
    def ok(cls, name: str, details=()) -> "CheckReport":
        return cls(name, True, None, None, tuple(details))

    @classmethod
    def fail(cls, name: str, witness, residual, details=()) -> "CheckReport":
        return cls(name, False, witness, residual, tuple(details))

    def failures(self) -> list["CheckReport"]:
        """Leaf reports that failed, depth first."""
        if self.passed:
            return []
        if not self.details:
            return [self]
        out = []
        for d in self.details:
            out.extend(d.failures())
        return out or [self]

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "pass": self.passed,
            "witness": jsonable(self.witness),
            "residual": jsonable(self.residual),
        }

    def flatten(self) -> list["CheckReport"]:
        if not self.details:
            return [self]
        out = []
        for d in self.details:
            out.extend(d.flatten())
        return out


def combine(name: str, reports) -> CheckReport:
    """All-of: passes iff every part passes; witness taken from the first failure."""
    reports = tuple(reports)
    for r in reports:
        if not r.passed:
            return CheckReport(name, False, (r.name, r.witness), r.residual, reports)
    return CheckReport(name, True, None, None, reports)


def jsonable(value):
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, float):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if hasattr(value, "tolist"):
        return jsonable(value.tolist())
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if hasattr(value, "item"):
        return jsonable(value.item())
    return str(value)
