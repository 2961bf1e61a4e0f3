"""Validation results: faults found in a candidate structure, as data."""
from dataclasses import dataclass, field
from typing import List, Tuple

__all__ = ["Violation", "Validation"]


@dataclass(frozen=True)
class Violation:
    """One failed requirement.

    kind names the requirement (e.g. "union", "aura-membership"),
    subjects are the point indices or set bitmasks it concerns.
    """
    kind: str
    message: str
    subjects: Tuple[int, ...] = ()


@dataclass
class Validation:
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, message: str, *subjects: int):
        self.violations.append(Violation(kind, message, tuple(subjects)))

    def extend(self, other: "Validation"):
        self.violations.extend(other.violations)

    def summary(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(v.message for v in self.violations)

    def __bool__(self):
        return self.ok
