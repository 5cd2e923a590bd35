"""Complete subgroup lattices of small groups."""

from __future__ import annotations

import hashlib
import json
import logging
from functools import cached_property
from pathlib import Path

from ..errors import CapExceeded, ForeignSubgroup, GroupError
from ..group import PermGroup, iter_bits
from .subgroups import (
    LATTICE_CAP,
    SubgroupHandle,
    conjugate_bits,
    from_bits,
    whole,
)

log = logging.getLogger(__name__)

CACHE_VERSION = 1


class SubgroupLattice:
    """All subgroups of ``parent`` in canonical order (order, then sorted
    element indices), with inclusion, conjugacy classes and normality."""

    def __init__(self, parent: PermGroup, subgroups: list[SubgroupHandle]):
        self.parent = parent
        self.subgroups = sorted(subgroups, key=SubgroupHandle.sort_key)
        self.position = {h.bits: i for i, h in enumerate(self.subgroups)}
        self._classify()

    def __len__(self):
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def __getitem__(self, i) -> SubgroupHandle:
        return self.subgroups[i]

    def index(self, H: SubgroupHandle) -> int:
        if H.parent is not self.parent or H.bits not in self.position:
            raise ForeignSubgroup("subgroup does not belong to this lattice")
        return self.position[H.bits]

    @property
    def top(self) -> int:
        return len(self.subgroups) - 1

    def _classify(self):
        T = self.parent.table
        ggens = whole(self.parent).generators
        class_of = [-1] * len(self.subgroups)
        classes = []
        for i, H in enumerate(self.subgroups):
            if class_of[i] >= 0:
                continue
            orbit = [i]
            class_of[i] = len(classes)
            for j in orbit:
                bits = self.subgroups[j].bits
                for g in ggens:
                    k = self.position[conjugate_bits(T, bits, g)]
                    if class_of[k] < 0:
                        class_of[k] = len(classes)
                        orbit.append(k)
            classes.append(sorted(orbit))
        self.conjugacy_classes = classes
        self.class_of = class_of
        self.normal_flags = [len(classes[c]) == 1 for c in class_of]

    @cached_property
    def below(self) -> list[int]:
        """``below[i]``: bitmask over lattice positions of subgroups of H_i."""
        subs = self.subgroups
        out = []
        for i, H in enumerate(subs):
            mask = 0
            for j in range(i + 1):
                if subs[j].bits & H.bits == subs[j].bits:
                    mask |= 1 << j
            out.append(mask)
        return out

    def inclusion(self):
        """All pairs ``(i, j)`` with H_i <= H_j."""
        for j, mask in enumerate(self.below):
            for i in iter_bits(mask):
                yield (i, j)

    def subgroups_of(self, i: int) -> list[int]:
        return list(iter_bits(self.below[i]))

    def maximal_in(self, i: int) -> list[int]:
        """Positions of maximal subgroups of H_i."""
        below = self.below
        proper = below[i] & ~(1 << i)
        out = []
        for j in iter_bits(proper):
            # j is maximal unless some other proper subgroup of H_i contains it
            if not any((below[k] >> j) & 1 for k in iter_bits(proper) if k != j):
                out.append(j)
        return out

    def is_maximal_in(self, i: int, j: int) -> bool:
        return i in self.maximal_in(j) if i != j else False

    def normal_subgroups(self) -> list[int]:
        return [i for i, f in enumerate(self.normal_flags) if f]

    def subgroup_bits(self) -> list[int]:
        return [h.bits for h in self.subgroups]


def _cyclic_seeds(G: PermGroup) -> list[SubgroupHandle]:
    T = G.table
    seen = {}
    for x in range(T.n):
        bits = T.closure([x])
        if bits not in seen:
            seen[bits] = from_bits(G, bits, [x] if x else [])
    return list(seen.values())


def subgroup_lattice(G: PermGroup, cap: int = LATTICE_CAP) -> SubgroupLattice:
    """Seed with the cyclic subgroups, then repeatedly join every known
    subgroup with every cyclic subgroup until nothing new appears."""
    if G.order > cap:
        raise CapExceeded("lattice group order", G.order, cap)
    T = G.table
    cyclic = _cyclic_seeds(G)
    found = {c.bits: c for c in cyclic}
    layer = sorted(found.values(), key=SubgroupHandle.sort_key)
    while layer:
        fresh = {}
        for H in layer:
            if H.bits == T.full:
                continue
            for C in cyclic:
                if C.bits & H.bits == C.bits:
                    continue
                g = C.generators[0]
                bits = T.closure(list(H.generators) + [g], H.bits)
                if bits not in found and bits not in fresh:
                    fresh[bits] = from_bits(G, bits, list(H.generators) + [g])
        found.update(fresh)
        layer = sorted(fresh.values(), key=SubgroupHandle.sort_key)
    if T.full not in found:
        found[T.full] = whole(G)
    return SubgroupLattice(G, list(found.values()))


# -- cache files -------------------------------------------------------------


def group_key(G: PermGroup) -> str:
    payload = json.dumps(
        {"degree": G.degree, "generators": G.canonical_generators(), "version": CACHE_VERSION},
        sort_keys=True,
    )
    return hashlib.sha256(payload.encode()).hexdigest()


def lattice_to_json(L: SubgroupLattice) -> str:
    G = L.parent
    doc = {
        "format": "hamiltonia-lattice",
        "version": CACHE_VERSION,
        "degree": G.degree,
        "generators": G.canonical_generators(),
        "hash": group_key(G),
        "order": G.order,
        "subgroups": [h.elements() for h in L.subgroups],
    }
    return json.dumps(doc, separators=(",", ":"))


class CacheMismatch(GroupError):
    pass


def lattice_from_json(G: PermGroup, text: str) -> SubgroupLattice:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CacheMismatch(f"unreadable cache: {exc}") from None
    if not isinstance(doc, dict) or doc.get("version") != CACHE_VERSION:
        raise CacheMismatch("unsupported cache version")
    if doc.get("hash") != group_key(G) or doc.get("order") != G.order:
        raise CacheMismatch("cache belongs to a different group")
    T = G.table
    subs = []
    try:
        for elems in doc["subgroups"]:
            bits = 0
            for i in elems:
                if not 0 <= i < T.n:
                    raise CacheMismatch("element index out of range")
                bits |= 1 << i
            subs.append(bits)
    except (KeyError, TypeError) as exc:
        raise CacheMismatch(f"malformed cache: {exc}") from None
    handles = []
    for bits in subs:
        H = from_bits(G, bits)
        if T.closure(list(H.generators)) != bits:
            raise CacheMismatch("cached subset is not a subgroup")
        handles.append(H)
    if len(set(subs)) != len(subs) or 1 not in subs or T.full not in subs:
        raise CacheMismatch("cached lattice is incomplete")
    return SubgroupLattice(G, handles)


def cached_lattice(G: PermGroup, cache_dir, cap: int = LATTICE_CAP) -> tuple[SubgroupLattice, str]:
    """Load the lattice from ``cache_dir`` or compute and store it.

    Returns the lattice and one of ``"hit"``, ``"miss"`` or ``"rebuilt"``.
    """
    path = Path(cache_dir) / f"{group_key(G)}.json"
    status = "miss"
    if path.exists():
        try:
            return lattice_from_json(G, path.read_text(encoding="utf-8")), "hit"
        except CacheMismatch as exc:
            log.warning("ignoring cache %s: %s", path, exc)
            status = "rebuilt"
    L = subgroup_lattice(G, cap)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(lattice_to_json(L), encoding="utf-8")
    return L, status
