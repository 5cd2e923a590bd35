"""Naming small groups by fingerprint or by explicit isomorphism."""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from ..group import PermGroup
from .isomorphism import are_isomorphic, invariants
from .lattice import subgroup_lattice
from .quotient import quotient_group
from .series import derived
from .subgroups import (
    LATTICE_CAP,
    center,
    element_order_histogram,
    p_part,
    prime_factors,
    whole,
)


def is_simple(G: PermGroup) -> bool:
    """No proper nontrivial normal subgroup (checked on normal closures of
    single elements, which is enough)."""
    from .subgroups import generated, normal_closure

    if G.order == 1:
        return False
    T = G.table
    for x in range(1, T.n):
        N = normal_closure(G, generated(G, [x]))
        if N.order != G.order:
            return False
    return True


def is_perfect(G: PermGroup) -> bool:
    d = derived(G)
    return d.term(2).order == G.order


def looks_like_a5(G: PermGroup) -> bool:
    return G.order == 60 and is_simple(G)


def looks_like_sl25(G: PermGroup) -> bool:
    if G.order != 120 or not is_perfect(G):
        return False
    Z = center(G)
    return Z.order == 2 and is_simple(quotient_group(G, Z))


@lru_cache(maxsize=None)
def _reference(kind: str, n: int) -> PermGroup:
    from .. import catalog as c

    return {
        "S": lambda: c.symmetric(n),
        "A": lambda: c.alternating(n),
        "D": lambda: c.dihedral(n),
        "Q": lambda: c.dicyclic(n // 4),
        "SL23": lambda: c.matrix_group("SL", 2, 3),
        "PSL27": lambda: c.matrix_group("PSL", 2, 7),
    }[kind]().group


def _cyclic_sylows_split(G: PermGroup):
    """If |G| = p^m q^n with cyclic Sylows and a normal p-Sylow, the pair
    ``(p^m, q^n)``; otherwise None."""
    ps = prime_factors(G.order)
    if len(ps) != 2:
        return None
    T = G.table
    hist = dict(element_order_histogram(whole(G)))
    for p, q in (ps, ps[::-1]):
        P, Q = p_part(G.order, p), p_part(G.order, q)
        if hist.get(P, 0) == 0 or hist.get(Q, 0) == 0:
            return None  # a Sylow is not cyclic
        # normal Sylow p: exactly P elements of p-power order
        pcount = sum(1 for x in range(T.n) if len(prime_factors(T.orders[x])) <= 1
                     and (T.orders[x] == 1 or T.orders[x] % p == 0))
        if pcount == P:
            return P, Q
    return None


def recognize_group(G: PermGroup, cap: int = LATTICE_CAP) -> str | None:
    n = G.order
    if n == 1:
        return "C1"
    if n > cap:
        return None
    inv = invariants(G)
    hist = dict(inv[2])
    if hist.get(n):
        return f"C{n}"
    if inv[1]:
        return abelian_name(G)
    if looks_like_a5(G):
        return "A5"
    if looks_like_sl25(G):
        return "SL(2,5)"
    for k in range(3, 8):
        if factorial(k) == n and are_isomorphic(G, _reference("S", k)):
            return f"S{k}"
        if factorial(k) // 2 == n and k >= 4 and are_isomorphic(G, _reference("A", k)):
            return f"A{k}"
    if n % 2 == 0 and n >= 6 and are_isomorphic(G, _reference("D", n)):
        return f"D{n}"
    if n % 4 == 0 and n >= 8 and are_isomorphic(G, _reference("Q", n)):
        return f"Q{n}"
    if n == 24 and are_isomorphic(G, _reference("SL23", 0)):
        return "SL(2,3)"
    if n == 168 and are_isomorphic(G, _reference("PSL27", 0)):
        return "PSL(2,7)"
    split = _cyclic_sylows_split(G)
    if split is not None:
        return f"C{split[0]}:C{split[1]}"
    return _central_factor_name(G, cap)


def abelian_invariants(G: PermGroup) -> list[int]:
    """Prime-power orders of the cyclic factors of an abelian group."""
    T = G.table
    out = []
    for p in prime_factors(G.order):
        # ranks[k] = log_p #{x : x^(p^k) = 1}
        ranks = [0]
        k = 1
        while True:
            count = sum(1 for x in range(T.n) if (p**k) % T.orders[x] == 0)
            r = _log(count, p)
            ranks.append(r)
            if count == p_part(G.order, p):
                break
            k += 1
        for k in range(1, len(ranks)):
            at_least_k = ranks[k] - ranks[k - 1]
            at_least_next = ranks[k + 1] - ranks[k] if k + 1 < len(ranks) else 0
            out += [p**k] * (at_least_k - at_least_next)
    return sorted(out)


def invariant_factors(G: PermGroup) -> list[int]:
    """``d_1 | d_2 | ...`` with G the product of cyclic groups of these orders."""
    by_prime: dict[int, list[int]] = {}
    for q in abelian_invariants(G):
        by_prime.setdefault(prime_factors(q)[0], []).append(q)
    width = max((len(v) for v in by_prime.values()), default=0)
    factors = [1] * width
    for powers in by_prime.values():
        for j, q in enumerate(sorted(powers, reverse=True)):
            factors[width - 1 - j] *= q
    return factors


def abelian_name(G: PermGroup) -> str:
    inv = invariant_factors(G)
    if len(set(inv)) == 1 and len(inv) > 1 and len(prime_factors(inv[0])) == 1 and prime_factors(inv[0])[0] == inv[0]:
        return f"C{inv[0]}^{len(inv)}"
    return "x".join(f"C{q}" for q in inv)


def _central_factor_name(G: PermGroup, cap: int) -> str | None:
    """Name ``C_q x K`` when a central cyclic subgroup of prime-power order q
    has a normal complement that is itself recognizable."""
    from .subgroups import generated

    T = G.table
    Z = center(G)
    L = None
    for z in Z.elements():
        p = T.orders[z]
        if len(prime_factors(p)) != 1:
            continue
        L = L or subgroup_lattice(G, cap)
        cyc = generated(G, [z])
        for i in L.normal_subgroups():
            K = L[i]
            if K.order * p == G.order and K.bits & cyc.bits == 1:
                name = recognize_group(K.as_group(), cap)
                if name is not None:
                    return f"C{p}x{name}"
    return None


def _log(n: int, p: int) -> int:
    k = 0
    while n > 1:
        n //= p
        k += 1
    return k
