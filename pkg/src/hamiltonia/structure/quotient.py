"""Quotients realized as the action on right cosets."""

from __future__ import annotations

from ..errors import GroupError
from ..group import PermGroup
from ..perm import Permutation
from .subgroups import SubgroupHandle, is_normal, owned, whole


def coset_labels(G: PermGroup, N: SubgroupHandle) -> list[int]:
    """``labels[x]`` is the index of the right coset ``N x``; cosets are
    numbered by their smallest element."""
    T = G.table
    labels = [-1] * T.n
    nelems = N.elements()
    count = 0
    for x in range(T.n):
        if labels[x] >= 0:
            continue
        for n in nelems:
            labels[T.mul[n][x]] = count
        count += 1
    return labels


def quotient_group(G: PermGroup, N: SubgroupHandle, label: str | None = None) -> PermGroup:
    owned(G, N)
    if not is_normal(G, N):
        raise GroupError("quotient needs a normal subgroup")
    T = G.table
    labels = coset_labels(G, N)
    k = T.n // N.order
    reps = [0] * k
    for x in range(T.n - 1, -1, -1):
        reps[labels[x]] = x
    gens = []
    for g in whole(G).generators:
        img = tuple(labels[T.mul[r][g]] for r in reps)
        gens.append(Permutation(img))
    return PermGroup(k, gens, label=label)
