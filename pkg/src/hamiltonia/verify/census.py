"""Predicate census over a scope: one row per group, both families."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..errors import CapExceeded
from .context import Workspace

FAMILY_NAMES = ("abelian", "nilpotent")


@dataclass
class CensusRow:
    label: str
    order: int
    primes: list[int] = field(default_factory=list)
    name: str | None = None
    flags: dict = field(default_factory=dict)  # family -> {flag: bool}
    skipped: str | None = None

    def to_dict(self) -> dict:
        d = {"label": self.label, "order": self.order, "primes": self.primes, "name": self.name}
        if self.skipped:
            d["skipped"] = self.skipped
        else:
            d["flags"] = self.flags
        return d


@dataclass
class CensusTable:
    rows: list[CensusRow]
    families: tuple = FAMILY_NAMES
    violations: list[str] = field(default_factory=list)

    def row(self, label: str) -> CensusRow:
        for r in self.rows:
            if r.label == label:
                return r
        raise KeyError(label)

    def to_json(self) -> str:
        return json.dumps(
            {
                "schema": "1",
                "families": list(self.families),
                "rows": [r.to_dict() for r in self.rows],
                "violations": self.violations,
            },
            indent=2,
        )

    def to_text(self) -> str:
        short = {"in_family": "in", "minimal_non": "min", "biminimal_non": "bimin",
                 "meta_hamiltonian": "meta", "para_hamiltonian": "para"}
        lines = []
        for r in self.rows:
            pi = "{" + ",".join(map(str, r.primes)) + "}"
            head = f"{r.order:>5}  {r.label:<12} {pi:<12} {r.name or '?':<14}"
            if r.skipped:
                lines.append(f"{head} skipped: {r.skipped}")
                continue
            parts = []
            for fam in self.families:
                on = [short[k] for k in short if r.flags[fam][k]]
                parts.append(f"{fam[:3]}[{' '.join(on)}]")
            nf = r.flags[self.families[0]]
            extra = [k for k in ("soluble", "perfect", "simple", "dedekind") if nf[k]]
            lines.append(f"{head} {' '.join(parts)} {' '.join(extra)}")
        for v in self.violations:
            lines.append(f"violation: {v}")
        return "\n".join(lines)


def _implication_failures(row: CensusRow) -> list[str]:
    out = []
    f = row.flags
    for fam, flags in f.items():
        if flags["minimal_non"] and flags["in_family"]:
            out.append(f"{row.label}: minimal non-{fam} but in {fam}")
        if flags["biminimal_non"] and (flags["minimal_non"] or flags["in_family"]):
            out.append(f"{row.label}: biminimal non-{fam} but in {fam} or minimal non-{fam}")
        if flags["dedekind"] and not flags["meta_hamiltonian"]:
            out.append(f"{row.label}: Dedekind but not meta-{fam}-Hamiltonian")
        if flags["para_hamiltonian"] and flags["in_family"]:
            out.append(f"{row.label}: para-{fam}-Hamiltonian but in {fam}")
    if "abelian" in f and "nilpotent" in f and f["abelian"]["in_family"] and not f["nilpotent"]["in_family"]:
        out.append(f"{row.label}: abelian but not nilpotent")
    return out


def validate_census(table: CensusTable) -> list[str]:
    out = []
    for r in table.rows:
        if not r.skipped:
            out += _implication_failures(r)
    return out


def run_census(scope, families=FAMILY_NAMES, workspace: Workspace | None = None, strict: bool = False) -> CensusTable:
    """One row per scope group, sorted by (order, label). A group over the
    lattice cap becomes a skipped row unless ``strict``."""
    ws = workspace or Workspace()
    families = tuple(families)
    rows = []
    for entry in sorted(scope, key=lambda e: (e.order, e.label)):
        data = ws.get(entry)
        row = CensusRow(entry.label, entry.order, list(data.primes))
        try:
            row.flags = {fam: dict(data.predicates(fam).flags) for fam in families}
            row.name = data.name
        except CapExceeded as exc:
            if strict:
                raise
            row.skipped = str(exc)
        rows.append(row)
    table = CensusTable(rows, families)
    table.violations = validate_census(table)
    return table
