"""Structured pass/fail reports for the verification commands.

Each check records the identity it tested, stated as a formula, plus a
short witness description when it failed.  Reports are plain data so
the CLI can serialize them and tests can assert on individual checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Tuple


@dataclass(frozen=True)
class Check:
    name: str
    statement: str
    passed: bool
    witness: str = ""


@dataclass
class VerificationReport:
    subject: str
    checks: List[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, statement: str, passed: bool, witness: str = "") -> bool:
        self.checks.append(Check(name, statement, bool(passed), witness))
        return bool(passed)

    def failed_checks(self) -> Tuple[Check, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "pass": self.passed,
            "checks": [
                {
                    "name": c.name,
                    "statement": c.statement,
                    "pass": c.passed,
                    "witness": c.witness,
                }
                for c in self.checks
            ],
        }

    def __str__(self) -> str:
        lines = [f"[{'PASS' if self.passed else 'FAIL'}] {self.subject}"]
        for c in self.checks:
            mark = "ok " if c.passed else "FAIL"
            suffix = f"  ({c.witness})" if c.witness and not c.passed else ""
            lines.append(f"  {mark} {c.name}: {c.statement}{suffix}")
        return "\n".join(lines)
