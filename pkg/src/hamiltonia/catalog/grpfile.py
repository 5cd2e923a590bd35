"""Line-oriented ``.grp`` group files.

    # comment
    name S3
    degree 3
    gen (1 2)
    gen (1 2 3)
"""

from __future__ import annotations

from pathlib import Path

from ..errors import DegreeMismatch, ParseError
from ..group import PermGroup
from ..perm import Permutation, format_cycles, parse_cycles
from .builders import CatalogEntry, GroupRecipe


def parse_group_file(text: str, default_label: str = "group") -> tuple[str, int, list[Permutation]]:
    label = None
    degree = None
    gens: list[tuple[int, list]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "name":
            if not rest:
                raise ParseError("empty name", lineno)
            label = rest
        elif key == "degree":
            if degree is not None:
                raise ParseError("duplicate degree line", lineno)
            try:
                degree = int(rest)
            except ValueError:
                raise ParseError(f"bad degree {rest!r}", lineno) from None
            if degree < 1:
                raise ParseError("degree must be positive", lineno)
        elif key == "gen":
            try:
                gens.append((lineno, parse_cycles(rest)))
            except ParseError as exc:
                raise ParseError(str(exc), lineno) from None
        else:
            raise ParseError(f"unknown keyword {key!r}", lineno)
    if degree is None:
        raise ParseError("missing degree line")
    perms = []
    for lineno, cycles in gens:
        top = max((p for c in cycles for p in c), default=1)
        if top > degree:
            raise DegreeMismatch(f"line {lineno}: point {top} exceeds degree {degree}")
        perms.append(Permutation.from_cycles(degree, cycles))
    return label or default_label, degree, perms


def load_group_file(path) -> CatalogEntry:
    path = Path(path)
    label, degree, gens = parse_group_file(path.read_text(encoding="utf-8"), default_label=path.stem)
    group = PermGroup(degree, gens, label=label)
    return CatalogEntry(GroupRecipe("file", (str(path),), label), group, provenance=str(path))


def dump_group_file(group: PermGroup, label: str | None = None) -> str:
    """Canonical text: name, degree, then one ``gen`` per distinct generator."""
    lines = []
    name = label or group.label
    if name:
        lines.append(f"name {name}")
    lines.append(f"degree {group.degree}")
    seen = set()
    for g in group.generators:
        text = format_cycles(g)
        if text not in seen:
            seen.add(text)
            lines.append(f"gen {text}")
    return "\n".join(lines) + "\n"
