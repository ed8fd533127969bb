"""JSON reports emitted by the command line tool."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from . import __version__

SCHEMA = {
    "type": "object",
    "required": ["check", "params", "status", "payload", "elapsed_ms", "version", "seed"],
    "additionalProperties": False,
    "properties": {
        "check": {"type": "string"},
        "params": {"type": "object"},
        "status": {"enum": ["verified", "violated", "not-found-within-bounds"]},
        "payload": {"type": "array"},
        "elapsed_ms": {"type": "number"},
        "version": {"type": "string"},
        "seed": {"type": ["integer", "null"]},
    },
}


def _default(o):
    if isinstance(o, Fraction):
        return str(o)
    if isinstance(o, (set, frozenset)):
        return sorted(o)
    return str(o)


@dataclass
class Report:
    check: str
    params: dict[str, Any]
    payload: list[dict[str, Any]] = field(default_factory=list)
    elapsed_ms: float = 0.0
    seed: int | None = None
    status_override: str | None = None

    @property
    def violations(self) -> int:
        return sum(1 for item in self.payload if item.get("violation"))

    @property
    def status(self) -> str:
        if self.violations:
            return "violated"
        return self.status_override or "verified"

    @property
    def exit_code(self) -> int:
        return 1 if self.status == "violated" else 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "params": self.params,
            "status": self.status,
            "payload": self.payload,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "version": __version__,
            "seed": self.seed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, default=_default)


def scan_payload(scan) -> list[dict[str, Any]]:
    """A summary entry followed by one entry per violation."""
    d = scan.to_dict()
    items = [{"kind": "summary", "name": d["name"], "details": d["details"],
              "violation": False}]
    items += [{"kind": "counterexample", "tuple": v, "violation": True} for v in d["violations"]]
    return items
