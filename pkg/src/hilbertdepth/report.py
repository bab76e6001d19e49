"""Deterministic verification reports with replayable case descriptors."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    case: str
    expected: str
    actual: str

    def __str__(self) -> str:
        return f"{self.case}: expected {self.expected}, got {self.actual}"


@dataclass
class VerificationReport:
    battery: str
    cases_run: int
    violations: list[Violation] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def summary_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{self.battery:<16} {self.cases_run:>7} cases "
            f"{len(self.violations):>5} violations  {self.elapsed:7.2f}s  {status}"
        )

    # elapsed is omitted on purpose: JSON output must be byte-identical
    # across runs with the same seed and flags.
    def to_json_dict(self) -> dict:
        return {
            "battery": self.battery,
            "casesRun": self.cases_run,
            "violations": [
                {"case": v.case, "expected": v.expected, "actual": v.actual}
                for v in self.violations
            ],
        }
