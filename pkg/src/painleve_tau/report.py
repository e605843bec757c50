"""Verification reports: one boolean per identity per index."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field


@dataclass(frozen=True)
class Check:
    identity: str
    index: object
    ok: bool


@dataclass
class Report:
    checks: list = field(default_factory=list)

    def add(self, identity: str, index, ok) -> bool:
        self.checks.append(Check(identity, index, bool(ok)))
        return bool(ok)

    def extend(self, other: "Report") -> "Report":
        self.checks.extend(other.checks)
        return self

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def by_identity(self, identity: str):
        return [c for c in self.checks if c.identity == identity]

    def __len__(self):
        return len(self.checks)

    def __iter__(self):
        return iter(self.checks)

    def to_json(self) -> str:
        return json.dumps([asdict(c) for c in self.checks], separators=(",", ":"))
