"""Verification reports shared by the identity-checking suites."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class WeylReport:
    suite: str
    cartan: str
    trials: int = 0
    seed: int | None = None
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, input_desc, lhs, rhs):
        self.failures.append({"input": input_desc, "lhs": lhs, "rhs": rhs})

    def check(self, input_desc, lhs, rhs) -> bool:
        """Count a trial; on mismatch serialize both sides into the report."""
        self.trials += 1
        if lhs != rhs:
            self.record(
                input_desc,
                lhs.to_dict() if hasattr(lhs, "to_dict") else lhs,
                rhs.to_dict() if hasattr(rhs, "to_dict") else rhs,
            )
            return False
        return True

    def to_dict(self):
        return {
            "suite": self.suite,
            "type": self.cartan,
            "trials": self.trials,
            "seed": self.seed,
            "failures": self.failures,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
