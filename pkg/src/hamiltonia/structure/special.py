"""Frattini and Sylow subgroups, normal closure and core, read off a lattice."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import GroupError
from ..catalog.fields import is_prime
from .lattice import SubgroupLattice
from .subgroups import SubgroupHandle, core, normal_closure, p_part


@dataclass(frozen=True)
class NormalityData:
    is_normal: bool
    normal_closure: SubgroupHandle
    core: SubgroupHandle


def normality_data(L: SubgroupLattice, H: SubgroupHandle) -> NormalityData:
    i = L.index(H)
    closure = normal_closure(L.parent, H)
    return NormalityData(L.normal_flags[i], closure, core(L.parent, H))


def frattini_subgroup(L: SubgroupLattice, i: int | None = None) -> SubgroupHandle:
    """Intersection of the maximal subgroups of H_i (default: the whole group)."""
    i = L.top if i is None else i
    maxes = L.maximal_in(i)
    bits = L[i].bits
    for j in maxes:
        bits &= L[j].bits
    return L[L.position[bits]]


def sylow_subgroup(L: SubgroupLattice, p: int) -> SubgroupHandle:
    """First subgroup in lattice order whose order is the full p-part."""
    if not is_prime(p):
        raise GroupError(f"{p} is not prime")
    target = p_part(L.parent.order, p)
    for H in L:
        if H.order == target:
            return H
    raise AssertionError("Sylow subgroup missing from a complete lattice")


def maximal_subgroups(L: SubgroupLattice) -> list[SubgroupHandle]:
    return [L[j] for j in L.maximal_in(L.top)]
