from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class CheckReport:
    """Outcome of a named identity suite.

    ``verdicts`` holds one (label, passed) entry per checked case; the first
    failing case is copied into ``counterexample``.  ``info`` carries
    suite-specific data such as a chosen convention or observed margins.
    """

    name: str
    verdicts: list[tuple[str, bool]] = field(default_factory=list)
    counterexample: dict[str, Any] | None = None
    info: dict[str, Any] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.verdicts)

    def record(self, label: str, ok: bool, **detail: Any) -> bool:
        self.verdicts.append((label, ok))
        if not ok and self.counterexample is None:
            self.counterexample = {"case": label, **detail}
        return ok

    def merge(self, other: CheckReport) -> None:
        for label, ok in other.verdicts:
            self.verdicts.append((f"{other.name}:{label}", ok))
        if self.counterexample is None and other.counterexample is not None:
            self.counterexample = {"suite": other.name, **other.counterexample}
        self.notes.extend(other.notes)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name}: {status} ({len(self.verdicts)} cases)"
