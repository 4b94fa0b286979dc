"""Pass/fail records produced by the verification sweeps."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, describe) -> None:
        """Count one check; ``describe`` is called only on failure."""
        self.checked += 1
        if not ok:
            self.failures.append(describe() if callable(describe) else str(describe))

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.name}: {self.checked} checks"
        if self.failures:
            line += f", {len(self.failures)} failed; first: {self.failures[0]}"
        return line

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": self.failures[:20],
            "details": self.details,
        }
