"""Verification reports: one entry per checked identity instance."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field


@dataclass
class Entry:
    identity: str
    anchor: str
    instance: str
    passed: bool
    witness: str = ""

    @property
    def status(self):
        return "pass" if self.passed else "FAIL"


@dataclass
class Report:
    suite: str
    config: dict = field(default_factory=dict)
    entries: list = field(default_factory=list)

    def add(self, identity, anchor, instance, passed, witness=""):
        self.entries.append(Entry(identity, anchor, str(instance), bool(passed),
                                  "" if passed else str(witness)))

    def check_zero(self, identity, anchor, instance, diff):
        """Record ``diff == 0``; the witness is ``diff`` itself when it is not."""
        zero = (not diff) if not hasattr(diff, "is_zero") else diff.is_zero()
        self.add(identity, anchor, instance, zero, diff)

    def extend(self, other):
        self.entries.extend(other.entries)
        return self

    @property
    def passed(self):
        return all(e.passed for e in self.entries)

    @property
    def failures(self):
        return [e for e in self.entries if not e.passed]

    def summary(self):
        n = len(self.entries)
        bad = len(self.failures)
        return f"{self.suite}: {n - bad}/{n} passed"

    def to_text(self):
        lines = [f"suite {self.suite}"]
        if self.config:
            lines.append("config " + " ".join(f"{k}={v}" for k, v in sorted(self.config.items())))
        for e in self.entries:
            line = f"{e.status:4}  {e.identity:28} {e.anchor:24} {e.instance}"
            lines.append(line.rstrip())
            if e.witness:
                lines.append(f"      witness: {e.witness}")
        lines.append(self.summary())
        return "\n".join(lines) + "\n"

    def to_json(self):
        data = {
            "suite": self.suite,
            "config": dict(sorted(self.config.items())),
            "passed": self.passed,
            "entries": [dict(asdict(e), status=e.status) for e in self.entries],
        }
        return json.dumps(data, indent=2, sort_keys=True) + "\n"
