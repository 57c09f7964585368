"""Run reports for the verification subcommands.

A report collects named checks with pass/fail status, an optional
counterexample payload, and wall time. Text rendering omits the times
so identical inputs give identical bytes; JSON includes them.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field


@dataclass
class CheckItem:
    name: str
    passed: bool
    counterexamples: list
    seconds: float


@dataclass
class RunReport:
    command: str
    items: list = field(default_factory=list)

    def add(self, name, failures, seconds=0.0):
        failures = list(failures or [])
        self.items.append(CheckItem(name, not failures, failures, seconds))
        return not failures

    def run(self, name, fn):
        """Time a callable returning a list of failure strings."""
        t0 = time.monotonic()
        failures = fn()
        return self.add(name, failures, time.monotonic() - t0)

    @property
    def passed(self):
        return all(item.passed for item in self.items)

    @property
    def exit_code(self):
        return 0 if self.passed else 1

    def render_text(self):
        lines = []
        for item in self.items:
            status = "PASS" if item.passed else "FAIL"
            lines.append(f"{status} {item.name}")
            for ce in item.counterexamples[:5]:
                lines.append(f"  counterexample: {ce}")
            extra = len(item.counterexamples) - 5
            if extra > 0:
                lines.append(f"  ... and {extra} more")
        lines.append("all checks passed" if self.passed
                     else "some checks FAILED")
        return "\n".join(lines)

    def to_json(self):
        return json.dumps({
            "command": self.command,
            "passed": self.passed,
            "checks": [{
                "name": item.name,
                "passed": item.passed,
                "counterexamples": item.counterexamples,
                "seconds": round(item.seconds, 4),
            } for item in self.items],
        }, indent=2)
