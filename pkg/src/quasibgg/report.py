"""Verification reports produced by the checking harness."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Case:
    identity_id: str
    parameters: dict[str, Any]
    passed: bool
    witness: Any = None

    def __post_init__(self):
        if not self.passed and self.witness is None:
            self.witness = {"note": "no counterexample data recorded"}

    def to_json(self) -> dict:
        out = {"identity_id": self.identity_id, "parameters": self.parameters, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        return out

    @classmethod
    def from_json(cls, d: dict) -> "Case":
        return cls(d["identity_id"], d["parameters"], d["pass"], d.get("witness"))


@dataclass
class VerificationReport:
    suite: str
    cases: list[Case] = field(default_factory=list)
    timing_ms: float | None = None
    skipped: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def failures(self) -> list[Case]:
        return [c for c in self.cases if not c.passed]

    def extend(self, cases) -> None:
        self.cases.extend(cases)

    def to_json(self, timing: bool = False) -> dict:
        out: dict[str, Any] = {
            "suite": self.suite,
            "pass": self.passed,
            "cases": [c.to_json() for c in self.cases],
        }
        if self.skipped:
            out["skipped"] = list(self.skipped)
        if timing and self.timing_ms is not None:
            out["timing_ms"] = round(self.timing_ms, 3)
        return out

    def dumps(self, timing: bool = False, pretty: bool = False) -> str:
        return json.dumps(self.to_json(timing), indent=2 if pretty else None, sort_keys=True)

    @classmethod
    def from_json(cls, d: dict) -> "VerificationReport":
        return cls(
            d["suite"],
            [Case.from_json(c) for c in d["cases"]],
            d.get("timing_ms"),
            list(d.get("skipped", [])),
        )

    def summary_line(self) -> str:
        n = len(self.cases)
        bad = len(self.failures())
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.suite}: {n - bad}/{n} cases"
