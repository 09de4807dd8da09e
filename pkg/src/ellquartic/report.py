"""Check records and the versioned JSON report emitted by the command line."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import jsonschema

SCHEMA_VERSION = "report-v1"
STATUSES = ("pass", "fail", "skip")

REPORT_SCHEMA = {
    "type": "object",
    "required": ["schema", "command", "suite", "params", "checks", "summary", "exit_status"],
    "additionalProperties": False,
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "command": {"type": "string"},
        "suite": {"type": "string"},
        "params": {"type": "object"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "status", "detail"],
                "additionalProperties": False,
                "properties": {
                    "id": {"type": "string"},
                    "status": {"enum": list(STATUSES)},
                    "detail": {"type": "string"},
                },
            },
        },
        "result": {},
        "summary": {
            "type": "object",
            "required": list(STATUSES),
            "properties": {s: {"type": "integer", "minimum": 0} for s in STATUSES},
        },
        "exit_status": {"enum": [0, 1]},
    },
}


@dataclass(frozen=True)
class Check:
    id: str
    status: str
    detail: str = ""

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")


def check(id: str, ok: bool, detail: str = "") -> Check:
    return Check(id, "pass" if ok else "fail", detail)


@dataclass
class Report:
    command: str
    suite: str
    params: dict
    checks: list[Check] = field(default_factory=list)
    result: object = None

    def sorted_checks(self) -> list[Check]:
        return sorted(self.checks, key=lambda c: c.id)

    @property
    def exit_status(self) -> int:
        return 1 if any(c.status == "fail" for c in self.checks) else 0

    def to_dict(self) -> dict:
        d = {
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "suite": self.suite,
            "params": dict(self.params),
            "checks": [{"id": c.id, "status": c.status, "detail": c.detail} for c in self.sorted_checks()],
            "summary": {s: sum(c.status == s for c in self.checks) for s in STATUSES},
            "exit_status": self.exit_status,
        }
        if self.result is not None:
            d["result"] = self.result
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)

    def to_text(self) -> str:
        lines = [f"{self.command} {self.suite} " + " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))]
        for c in self.sorted_checks():
            lines.append(f"{c.status.upper():4}  {c.id}" + (f"  {c.detail}" if c.detail else ""))
        if self.result is not None:
            lines.append(json.dumps(self.result, sort_keys=True, ensure_ascii=False))
        s = self.to_dict()["summary"]
        lines.append(f"{s['pass']} passed, {s['fail']} failed, {s['skip']} skipped")
        return "\n".join(lines)

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        jsonschema.validate(d, REPORT_SCHEMA)
        checks = [Check(c["id"], c["status"], c["detail"]) for c in d["checks"]]
        return cls(d["command"], d["suite"], d["params"], checks, d.get("result"))


def validate_report(d: dict) -> None:
    jsonschema.validate(d, REPORT_SCHEMA)
