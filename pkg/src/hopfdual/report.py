"""Check reports shared by the verifiers and the command line."""
from __future__ import annotations

from dataclasses import dataclass, field


class VerificationError(ValueError):
    """Raised when a constructed object fails its own verification."""

    def __init__(self, msg, report=None):
        super().__init__(msg)
        self.report = report


@dataclass
class Check:
    name: str
    passed: bool
    witness: dict | None = None
    seconds: float = 0.0

    def as_json(self, timings=True) -> dict:
        out = {"name": self.name, "status": "pass" if self.passed else "fail"}
        if self.witness is not None:
            out["witness"] = self.witness
        if timings:
            out["seconds"] = round(self.seconds, 4)
        return out


@dataclass
class Report:
    checks: list = field(default_factory=list)

    def add(self, name, passed, witness=None, seconds=0.0) -> Check:
        c = Check(name, bool(passed), witness, seconds)
        self.checks.append(c)
        return c

    def extend(self, other: Report, prefix: str = "") -> Report:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.witness, c.seconds))
        return self

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.ok

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self):
        return [c.name for c in self.checks]

    def summary(self) -> str:
        lines = [f"{c.name}: {'pass' if c.passed else 'FAIL'}" for c in self.checks]
        return "\n".join(lines)

    def require(self, what: str):
        """Raise VerificationError unless every check passed."""
        if not self.ok:
            bad = ", ".join(c.name for c in self.failures)
            raise VerificationError(f"{what} failed: {bad}", self)
        return self
