"""Isomorphism testing: invariant screening, then generator-image backtracking."""

from __future__ import annotations

from ..errors import CapExceeded
from ..group import PermGroup
from .series import derived
from .subgroups import LATTICE_CAP, center, element_order_histogram, is_abelian, whole

def invariants(G: PermGroup) -> tuple:
    """Order, abelianness, element-order histogram, centre order and derived
    series orders; cached on the group."""
    hit = G.__dict__.get("_iso_invariants")
    if hit is not None:
        return hit
    W = whole(G)
    inv = (
        G.order,
        is_abelian(W),
        element_order_histogram(W),
        center(G).order,
        tuple(derived(G).orders()),
    )
    G.__dict__["_iso_invariants"] = inv
    return inv


def _generating_sequence(G: PermGroup) -> list[int]:
    """Greedy generators, largest element order first."""
    T = G.table
    order = sorted(range(1, T.n), key=lambda x: (-T.orders[x], x))
    gens, bits = [], 1
    for x in order:
        if bits == T.full:
            break
        if not (bits >> x) & 1:
            gens.append(x)
            bits = T.closure(gens, bits)
    return gens


def _class_reps(G: PermGroup) -> list[int]:
    T = G.table
    seen = 0
    reps = []
    for x in range(T.n):
        if (seen >> x) & 1:
            continue
        reps.append(x)
        for g in range(T.n):
            seen |= 1 << T.conj(x, g)
    return reps


def _extend(TA, TB, gens, images):
    """Extend gens -> images to a map on <gens> by walking words.

    Returns the element map, or None if a relation fails or two elements
    collide (so the map is not an injective homomorphism).
    """
    phi = {0: 0}
    used = {0}
    queue = [0]
    for x in queue:
        px = phi[x]
        for a, b in zip(gens, images):
            y = TA.mul[x][a]
            py = TB.mul[px][b]
            known = phi.get(y)
            if known is None:
                if py in used:
                    return None
                phi[y] = py
                used.add(py)
                queue.append(y)
            elif known != py:
                return None
    return phi


def find_isomorphism(A: PermGroup, B: PermGroup, cap: int = LATTICE_CAP):
    """An isomorphism A -> B as a list ``phi[i] = j`` of element indices, or None."""
    for G in (A, B):
        if G.order > cap:
            raise CapExceeded("isomorphism group order", G.order, cap)
    if invariants(A) != invariants(B):
        return None
    TA, TB = A.table, B.table
    if TA.n == 1:
        return [0]
    gens = _generating_sequence(A)
    by_order: dict[int, list[int]] = {}
    for y in range(TB.n):
        by_order.setdefault(TB.orders[y], []).append(y)
    first = [y for y in _class_reps(B) if TB.orders[y] == TA.orders[gens[0]]]
    images: list[int] = []

    def search(k):
        if k == len(gens):
            phi = _extend(TA, TB, gens, images)
            return phi if phi is not None and len(phi) == TA.n else None
        cands = first if k == 0 else by_order.get(TA.orders[gens[k]], [])
        for y in cands:
            images.append(y)
            # partial relation check on <gens[:k+1]>
            if _extend(TA, TB, gens[: k + 1], images) is not None:
                found = search(k + 1)
                if found is not None:
                    return found
            images.pop()
        return None

    phi = search(0)
    if phi is None:
        return None
    return [phi[i] for i in range(TA.n)]


def are_isomorphic(A: PermGroup, B: PermGroup, cap: int = LATTICE_CAP) -> bool:
    return find_isomorphism(A, B, cap) is not None
