from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any


@dataclass
class VerificationReport:
    """Outcome of checking one relation exhaustively at one prime.

    ``expected_cases`` is the predicted size of the valid input set, when a
    closed form for it exists; ``cases_checked`` is what the loop actually saw.
    """

    prime: int
    relation_name: str
    cases_checked: int = 0
    violations: list[tuple] = field(default_factory=list)
    elapsed: float = 0.0
    expected_cases: int | None = None

    @property
    def passed(self) -> bool:
        return not self.violations and (
            self.expected_cases is None or self.expected_cases == self.cases_checked
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "prime": self.prime,
            "relation": self.relation_name,
            "cases_checked": self.cases_checked,
            "expected_cases": self.expected_cases,
            "violations": [list(map(int, v)) for v in self.violations[:20]],
            "violation_count": len(self.violations),
            "passed": self.passed,
            "elapsed": round(self.elapsed, 6),
        }


@contextmanager
def timed(report: VerificationReport):
    start = time.perf_counter()
    try:
        yield report
    finally:
        report.elapsed = time.perf_counter() - start
