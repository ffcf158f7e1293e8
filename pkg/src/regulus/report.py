"""Machine-readable outcome of a verification sweep."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

PASS = "pass"
FAIL = "fail"
VACUOUS = "vacuous"
SKIPPED = "skipped"


@dataclass
class VerificationReport:
    id: str
    status: str = PASS
    params_swept: dict[str, Any] = field(default_factory=dict)
    indices_checked: int = 0
    violations: list[dict[str, Any]] = field(default_factory=list)
    ms: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def record(self, index: int, value: Any, **params: Any) -> None:
        self.status = FAIL
        self.violations.append({"index": index, "value": value, "params": params})

    def finish(self) -> "VerificationReport":
        if self.status == FAIL and not self.violations:
            raise ValueError("fail status without recorded violations")
        return self

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "status": self.status,
            "params_swept": self.params_swept,
            "indices_checked": self.indices_checked,
            "violations": self.violations,
            "ms": self.ms,
            "notes": self.notes,
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "VerificationReport":
        return cls(
            id=d["id"],
            status=d["status"],
            params_swept=d["params_swept"],
            indices_checked=d["indices_checked"],
            violations=d["violations"],
            ms=d["ms"],
            notes=d.get("notes", []),
        )
