"""Claim reports and their JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

SCHEMA_VERSION = "1"


@dataclass
class Instance:
    group: str
    status: str  # "pass", "fail" or "skip"
    detail: str = ""
    witness: dict | None = None
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {"group": self.group, "status": self.status}
        if self.detail:
            out["detail"] = self.detail
        if self.witness is not None:
            out["witness"] = self.witness
        for k in sorted(self.extra):
            out[k] = self.extra[k]
        return out


@dataclass
class ClaimReport:
    claim: str
    description: str
    scope: list
    instances: list
    notes: list = field(default_factory=list)
    elapsed: float = 0.0  # seconds; never serialized into the verdict body

    @property
    def checked(self) -> int:
        return sum(1 for i in self.instances if i.status != "skip")

    @property
    def failures(self) -> list:
        return [i for i in self.instances if i.status == "fail"]

    @property
    def verdict(self) -> str:
        return "fail" if self.failures else "pass"

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    @property
    def vacuous(self) -> bool:
        return self.checked == 0

    def summary(self) -> str:
        if self.vacuous and self.passed:
            return "pass (vacuous, n=0)"
        return f"{self.verdict} (n={self.checked}, failures={len(self.failures)})"

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "claim": self.claim,
            "scope": list(self.scope),
            "verdict": self.verdict,
            "instances": [i.to_dict() for i in self.instances],
            "meta": {
                "description": self.description,
                "checked": self.checked,
                "vacuous": self.vacuous,
                "notes": list(self.notes),
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    def to_text(self, verbose: bool = False) -> str:
        lines = [f"{self.claim}: {self.summary()}  -- {self.description}"]
        skipped = 0
        for inst in self.instances:
            if inst.status == "skip" and not verbose:
                skipped += 1
                continue
            line = f"  [{inst.status}] {inst.group}"
            if inst.detail:
                line += f": {inst.detail}"
            if inst.witness is not None:
                w = inst.witness
                line += f" (witness #{w['index']}, order {w['order']}, {w.get('name') or '?'})"
            lines.append(line)
        if skipped:
            lines.append(f"  ({skipped} skipped: hypothesis not met)")
        for note in self.notes:
            lines.append(f"  note: {note}")
        return "\n".join(lines)


def reports_to_json(reports) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, ensure_ascii=False)
