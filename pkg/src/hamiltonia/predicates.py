"""Membership tests for the Hamiltonian-type families of groups.

Every predicate is evaluated against a complete subgroup lattice, for a
subgroup-closed family X (abelian or nilpotent).  The whole group and the
trivial subgroup take part in every quantifier; "proper" excludes only the
group itself.  Witnesses are lattice positions, always the first violating
subgroup in canonical order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

from .errors import GroupError
from .group import PermGroup
from .structure.series import derived, lower_central
from .structure.lattice import SubgroupLattice, subgroup_lattice
from .structure.subgroups import SubgroupHandle, is_abelian, is_nilpotent_by_sylow


@dataclass(frozen=True)
class GroupFamily:
    name: str
    test: Callable[[SubgroupHandle], bool] = field(compare=False, repr=False)

    def __call__(self, H: SubgroupHandle) -> bool:
        return self.test(H)


ABELIAN = GroupFamily("abelian", is_abelian)
NILPOTENT = GroupFamily("nilpotent", is_nilpotent_by_sylow)
FAMILIES = {"abelian": ABELIAN, "nilpotent": NILPOTENT}


def family(name) -> GroupFamily:
    if isinstance(name, GroupFamily):
        if name.name not in FAMILIES:
            raise GroupError(f"unsupported family {name.name!r}")
        return FAMILIES[name.name]
    try:
        return FAMILIES[name]
    except KeyError:
        raise GroupError(f"family must be one of {sorted(FAMILIES)}, not {name!r}") from None


class FamilyView:
    """Per-subgroup membership data for one lattice and one family."""

    def __init__(self, L: SubgroupLattice, fam: GroupFamily):
        self.lattice = L
        self.family = fam
        self.member = [fam(H) for H in L]

    @cached_property
    def minimal_non(self) -> list[bool]:
        """Not in X, while every proper subgroup is."""
        below = self.lattice.below
        out = []
        for i, inside in enumerate(self.member):
            if inside:
                out.append(False)
                continue
            proper = below[i] & ~(1 << i)
            out.append(all(self.member[j] for j in _bits(proper)))
        return out

    def ok(self, i: int) -> bool:
        """In X or minimal non-X."""
        return self.member[i] or self.minimal_non[i]


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low



def view(L: SubgroupLattice, fam) -> FamilyView:
    fam = family(fam)
    cache = L.__dict__.setdefault("_family_views", {})
    if fam.name not in cache:
        cache[fam.name] = FamilyView(L, fam)
    return cache[fam.name]


@dataclass(frozen=True)
class Verdict:
    """A boolean decision plus the first violating lattice position."""

    value: bool
    witness: int | None = None

    def __bool__(self):
        return self.value


def in_family(G, L: SubgroupLattice, fam) -> bool:
    return view(L, fam).member[L.top]


def is_minimal_non(G, L: SubgroupLattice, fam) -> Verdict:
    v = view(L, fam)
    top = L.top
    if v.member[top]:
        return Verdict(False, top)
    for j in L.subgroups_of(top):
        if j != top and not v.member[j]:
            return Verdict(False, j)
    return Verdict(True)


def is_biminimal_non(G, L: SubgroupLattice, fam) -> Verdict:
    v = view(L, fam)
    top = L.top
    if v.member[top] or v.minimal_non[top]:
        return Verdict(False, top)
    for j in range(top):
        if not v.ok(j):
            return Verdict(False, j)
    return Verdict(True)


def is_meta_hamiltonian(G, L: SubgroupLattice, fam) -> Verdict:
    v = view(L, fam)
    for j in range(len(L)):
        if not v.member[j] and not L.normal_flags[j]:
            return Verdict(False, j)
    return Verdict(True)


def is_para_hamiltonian(G, L: SubgroupLattice, fam) -> Verdict:
    v = view(L, fam)
    top = L.top
    if v.member[top]:
        return Verdict(False, top)
    for j in range(len(L)):
        if not L.normal_flags[j] and not v.ok(j):
            return Verdict(False, j)
    return Verdict(True)


def non_family_intersection(G, L: SubgroupLattice, fam) -> SubgroupHandle:
    """Intersection of all subgroups outside X (the whole group if none)."""
    v = view(L, fam)
    bits = L[L.top].bits
    for j, inside in enumerate(v.member):
        if not inside:
            bits &= L[j].bits
    return L[L.position[bits]]


@dataclass(frozen=True)
class BasicFlags:
    abelian: bool
    nilpotent: bool
    soluble: bool
    perfect: bool
    simple: bool
    dedekind: bool


def basic_flags(G: PermGroup, L: SubgroupLattice) -> BasicFlags:
    """Each flag from its definition: nilpotent via the lower central limit,
    soluble via the derived limit, simple and Dedekind via normal flags."""
    lcs = lower_central(G)
    ds = derived(G)
    normal = L.normal_subgroups()
    simple = G.order > 1 and normal == [0, L.top]
    return BasicFlags(
        abelian=is_abelian(L[L.top]),
        nilpotent=lcs.limit.is_trivial(),
        soluble=ds.limit.is_trivial(),
        perfect=ds.term(2).order == G.order,
        simple=simple,
        dedekind=all(L.normal_flags),
    )


FLAG_NAMES = (
    "in_family",
    "soluble",
    "perfect",
    "simple",
    "dedekind",
    "minimal_non",
    "biminimal_non",
    "meta_hamiltonian",
    "para_hamiltonian",
)


@dataclass(frozen=True)
class PredicateResult:
    subject: str
    family: str
    flags: dict
    witnesses: dict  # flag name -> lattice position, for false flags with one

    def __getitem__(self, name):
        return self.flags[name]


def evaluate(G: PermGroup, fam, L: SubgroupLattice | None = None, subject: str | None = None) -> PredicateResult:
    fam = family(fam)
    L = L or subgroup_lattice(G)
    base = basic_flags(G, L)
    verdicts = {
        "minimal_non": is_minimal_non(G, L, fam),
        "biminimal_non": is_biminimal_non(G, L, fam),
        "meta_hamiltonian": is_meta_hamiltonian(G, L, fam),
        "para_hamiltonian": is_para_hamiltonian(G, L, fam),
    }
    flags = {
        "in_family": in_family(G, L, fam),
        "soluble": base.soluble,
        "perfect": base.perfect,
        "simple": base.simple,
        "dedekind": base.dedekind,
    }
    flags.update({k: v.value for k, v in verdicts.items()})
    witnesses = {k: v.witness for k, v in verdicts.items() if not v.value and v.witness is not None}
    if not base.dedekind:
        witnesses["dedekind"] = L.normal_flags.index(False)
    return PredicateResult(subject or G.label or "G", fam.name, {k: flags[k] for k in FLAG_NAMES}, witnesses)
