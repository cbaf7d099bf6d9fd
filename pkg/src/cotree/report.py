"""Report-style results for validators."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Finding:
    check: str
    location: Any
    message: str


@dataclass
class ValidationReport:
    """Ordered list of findings. An empty report means the object passed."""

    findings: list[Finding] = field(default_factory=list)

    def add(self, check: str, location: Any, message: str) -> None:
        self.findings.append(Finding(check, location, message))

    def extend(self, other: "ValidationReport") -> None:
        self.findings.extend(other.findings)

    @property
    def ok(self) -> bool:
        return not self.findings

    def __bool__(self) -> bool:
        return self.ok

    def __len__(self) -> int:
        return len(self.findings)

    def checks(self) -> set[str]:
        return {f.check for f in self.findings}

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "findings": [
                {"check": f.check, "location": _jsonable(f.location), "message": f.message}
                for f in self.findings
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self, limit: int | None = 50) -> str:
        if self.ok:
            return "OK"
        lines = [f"{len(self.findings)} finding(s)"]
        shown = self.findings if limit is None else self.findings[:limit]
        for f in shown:
            lines.append(f"  [{f.check}] at {f.location}: {f.message}")
        if limit is not None and len(self.findings) > limit:
            lines.append(f"  ... {len(self.findings) - limit} more")
        return "\n".join(lines)


def _jsonable(x: Any) -> Any:
    if isinstance(x, (tuple, list)):
        return [_jsonable(y) for y in x]
    return x
