"""Subgroups of a fixed parent, stored as bitsets over its element table."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import CapExceeded, ForeignSubgroup, GroupError
from ..group import PermGroup, iter_bits, popcount
from ..perm import Permutation

LATTICE_CAP = 400


@dataclass(frozen=True, eq=False)
class SubgroupHandle:
    parent: PermGroup = field(repr=False)
    bits: int
    generators: tuple  # element indices into the parent table
    order: int

    def __eq__(self, other):
        return (
            isinstance(other, SubgroupHandle)
            and other.parent is self.parent
            and other.bits == self.bits
        )

    def __hash__(self):
        return hash(self.bits)

    def __le__(self, other: SubgroupHandle) -> bool:
        _same_parent(self, other)
        return self.bits & other.bits == self.bits

    def __lt__(self, other: SubgroupHandle) -> bool:
        return self <= other and self.bits != other.bits

    def __contains__(self, index: int) -> bool:
        return bool((self.bits >> index) & 1)

    def elements(self) -> list[int]:
        return list(iter_bits(self.bits))

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def permutations(self) -> list[Permutation]:
        elems = self.parent.element_table.elements
        return [Permutation(elems[i]) for i in self.generators]

    def as_group(self, label: str | None = None) -> PermGroup:
        """Materialize as a standalone permutation group on the parent's points."""
        return PermGroup(self.parent.degree, self.permutations(), label=label)

    def sort_key(self):
        return (self.order, tuple(iter_bits(self.bits)))


def _same_parent(a: SubgroupHandle, b: SubgroupHandle):
    if a.parent is not b.parent:
        raise ForeignSubgroup("subgroups belong to different parents")


def check_table(G: PermGroup, cap: int | None = None):
    if cap is not None and G.order > cap:
        raise CapExceeded("group order", G.order, cap)
    return G.table


def from_bits(G: PermGroup, bits: int, generators=None) -> SubgroupHandle:
    T = G.table
    if generators is None:
        generators = T.generators_of(bits)
    return SubgroupHandle(G, bits, tuple(generators), popcount(bits))


def generated(G: PermGroup, gens) -> SubgroupHandle:
    """Subgroup generated by element indices or permutations of ``G``."""
    T = G.table
    idx = []
    for g in gens:
        if isinstance(g, Permutation):
            if g.images not in T.index:
                raise ForeignSubgroup(f"{g} is not an element of the parent")
            g = T.index[g.images]
        idx.append(g)
    idx = [i for i in dict.fromkeys(idx) if i != 0]
    return from_bits(G, T.closure(idx), idx)


def whole(G: PermGroup) -> SubgroupHandle:
    T = G.table
    gens = [T.index[g.images] for g in G.generators if not g.is_identity()]
    gens = list(dict.fromkeys(gens))
    return SubgroupHandle(G, T.full, tuple(gens), G.order)


def trivial(G: PermGroup) -> SubgroupHandle:
    G.table
    return SubgroupHandle(G, 1, (), 1)


def owned(G: PermGroup, H: SubgroupHandle):
    if H.parent is not G:
        raise ForeignSubgroup("subgroup handle belongs to another group")


def join(H: SubgroupHandle, K: SubgroupHandle) -> SubgroupHandle:
    _same_parent(H, K)
    T = H.parent.table
    gens = list(H.generators) + [g for g in K.generators if not (H.bits >> g) & 1]
    return from_bits(H.parent, T.closure(gens, H.bits), gens)


def meet(H: SubgroupHandle, K: SubgroupHandle) -> SubgroupHandle:
    _same_parent(H, K)
    return from_bits(H.parent, H.bits & K.bits)


def conjugate_bits(T, bits: int, g: int) -> int:
    mul, ginv = T.mul, T.inv[g]
    out = 0
    row = mul[ginv]
    for x in iter_bits(bits):
        out |= 1 << mul[row[x]][g]
    return out


def is_normal(G: PermGroup, H: SubgroupHandle) -> bool:
    owned(G, H)
    T = G.table
    for g in whole(G).generators:
        for h in H.generators:
            if not (H.bits >> T.conj(h, g)) & 1:
                return False
    return True


def is_normal_in(H: SubgroupHandle, K: SubgroupHandle) -> bool:
    """Whether ``H`` is normal in the overgroup ``K`` (same parent)."""
    _same_parent(H, K)
    T = H.parent.table
    return H <= K and all((H.bits >> T.conj(h, k)) & 1 for k in K.generators for h in H.generators)


def normal_closure(G: PermGroup, H: SubgroupHandle) -> SubgroupHandle:
    owned(G, H)
    T = G.table
    gens = list(H.generators)
    bits = H.bits
    Ggens = whole(G).generators
    # close under conjugation by the generators of G
    while True:
        new = [T.conj(h, g) for h in gens for g in Ggens]
        new = [x for x in dict.fromkeys(new) if not (bits >> x) & 1]
        if not new:
            return from_bits(G, bits, gens)
        gens += new
        bits = T.closure(gens, bits)


def core(G: PermGroup, H: SubgroupHandle) -> SubgroupHandle:
    owned(G, H)
    T = G.table
    bits = H.bits
    for g in range(T.n):
        bits &= conjugate_bits(T, H.bits, g)
        if bits == 1:
            break
    return from_bits(G, bits)


def normalizer(G: PermGroup, H: SubgroupHandle) -> SubgroupHandle:
    owned(G, H)
    T = G.table
    bits = 0
    for g in range(T.n):
        if all((H.bits >> T.conj(h, g)) & 1 for h in H.generators):
            bits |= 1 << g
    return from_bits(G, bits)


def centralizer(G: PermGroup, S) -> SubgroupHandle:
    """Centralizer of an element (index or permutation) or of a subgroup."""
    T = G.table
    if isinstance(S, SubgroupHandle):
        owned(G, S)
        targets = list(S.generators)
    elif isinstance(S, Permutation):
        if S.images not in T.index:
            raise ForeignSubgroup(f"{S} is not an element of the parent")
        targets = [T.index[S.images]]
    else:
        targets = [int(S)]
    mul = T.mul
    bits = 0
    for g in range(T.n):
        row = mul[g]
        if all(row[s] == mul[s][g] for s in targets):
            bits |= 1 << g
    return from_bits(G, bits)


def center(G: PermGroup) -> SubgroupHandle:
    return centralizer(G, whole(G))


def commutator(H: SubgroupHandle, K: SubgroupHandle) -> SubgroupHandle:
    """``[H, K]``, generated by all commutators ``[h, k]``."""
    _same_parent(H, K)
    T = H.parent.table
    gens = []
    bits = 1
    Kel = K.elements()
    for h in H.elements():
        for k in Kel:
            c = T.commutator(h, k)
            if not (bits >> c) & 1:
                gens.append(c)
                bits = T.closure(gens, bits)
    return from_bits(H.parent, bits, gens)


def is_abelian(H: SubgroupHandle) -> bool:
    mul = H.parent.table.mul
    gens = H.generators
    return all(mul[a][b] == mul[b][a] for a in gens for b in gens)


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def p_part(n: int, p: int) -> int:
    k = 1
    while n % p == 0:
        n //= p
        k *= p
    return k


def is_nilpotent_by_sylow(H: SubgroupHandle) -> bool:
    """Nilpotent iff every Sylow subgroup is normal, i.e. for each prime p the
    p-elements number exactly the p-part of the order."""
    orders = H.parent.table.orders
    counts = {}
    for x in H.elements():
        o = orders[x]
        ps = prime_factors(o)
        if len(ps) <= 1:
            key = ps[0] if ps else None
            counts[key] = counts.get(key, 0) + 1
    return all(counts.get(p, 0) + 1 == p_part(H.order, p) for p in prime_factors(H.order))


def element_order_histogram(H: SubgroupHandle) -> tuple:
    orders = H.parent.table.orders
    hist = {}
    for x in H.elements():
        hist[orders[x]] = hist.get(orders[x], 0) + 1
    return tuple(sorted(hist.items()))


def require_subgroup(H, K, what="subgroup"):
    if not H <= K:
        raise GroupError(f"{what} is not contained in the overgroup")
