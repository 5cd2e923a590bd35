"""Permutation groups backed by a deterministic stabilizer chain."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import CapExceeded, DegreeMismatch
from .perm import (
    Permutation,
    compose_images,
    format_cycles,
    identity_images,
    invert_images,
)

ELEMENT_CAP = 20000
ORDER_CAP = 10**7


@dataclass
class _Level:
    base: int
    gens: list
    transversal: dict  # orbit point -> coset rep u with u[base] == point

    def rebuild_orbit(self):
        trans = {self.base: identity_images(len(self.gens[0]))} if self.gens else {}
        queue = [self.base]
        for pt in queue:
            u = trans[pt]
            for s in self.gens:
                q = s[pt]
                if q not in trans:
                    trans[q] = compose_images(u, s)
                    queue.append(q)
        self.transversal = trans


class StabilizerChain:
    """Base and transversals for a group given by generators.

    Base points are chosen as the smallest point moved by the first generator
    that needs a new level, so the chain depends only on the generator list.
    """

    def __init__(self, degree: int, gens: Sequence[tuple], order_cap: int = ORDER_CAP):
        self.degree = degree
        self.levels: list[_Level] = []
        ident = identity_images(degree)
        for g in gens:
            if g != ident:
                self._schreier_sims(g, order_cap)

    @property
    def base(self) -> list[int]:
        return [lvl.base for lvl in self.levels]

    @property
    def order(self) -> int:
        n = 1
        for lvl in self.levels:
            n *= len(lvl.transversal)
        return n

    def sift(self, g: tuple, start: int = 0) -> tuple[tuple, int]:
        for i in range(start, len(self.levels)):
            lvl = self.levels[i]
            u = lvl.transversal.get(g[lvl.base])
            if u is None:
                return g, i
            g = compose_images(g, invert_images(u))
        return g, len(self.levels)

    def contains(self, g: tuple) -> bool:
        residue, _ = self.sift(g)
        return all(i == j for i, j in enumerate(residue))

    def _add_to_levels(self, g: tuple, lo: int, hi: int):
        """Append ``g`` as a strong generator of levels ``lo..hi``."""
        if hi == len(self.levels):
            moved = next(i for i, j in enumerate(g) if i != j)
            self.levels.append(_Level(moved, [], {}))
        for k in range(lo, hi + 1):
            self.levels[k].gens.append(g)
            self.levels[k].rebuild_orbit()

    def _schreier_sims(self, g: tuple, order_cap: int):
        residue, j = self.sift(g)
        if all(a == b for a, b in enumerate(residue)):
            return
        self._add_to_levels(residue, 0, j)
        i = j
        while i >= 0:
            added = self._check_level(i)
            if added is None:
                i -= 1
            else:
                i = added
            if self.order > order_cap:
                raise CapExceeded("group order", self.order, order_cap)

    def _check_level(self, i: int):
        """Sift every Schreier generator of level ``i``; on failure extend and
        return the deepest level touched."""
        lvl = self.levels[i]
        ident = identity_images(self.degree)
        for pt, u in list(lvl.transversal.items()):
            for s in lvl.gens:
                us = compose_images(u, s)
                v = lvl.transversal[s[pt]]
                h = compose_images(us, invert_images(v))
                if h == ident:
                    continue
                residue, j = self.sift(h, i + 1)
                if residue != ident:
                    self._add_to_levels(residue, i + 1, j)
                    return j
        return None

    def elements(self) -> list[tuple]:
        """Every element, as products of one transversal rep per level."""
        ident = identity_images(self.degree)
        out = [ident]
        for lvl in reversed(self.levels):
            reps = list(lvl.transversal.values())
            out = [compose_images(g, u) for g in out for u in reps]
        return out


@dataclass(frozen=True)
class GroupElementTable:
    elements: tuple  # raw image tuples, identity first, then lexicographic
    index: dict

    def __len__(self):
        return len(self.elements)

    def permutation(self, i: int) -> Permutation:
        return Permutation(self.elements[i])


class PermGroup:
    """A permutation group of fixed degree.

    Immutable after construction; expensive derived data (element table,
    multiplication table) is computed lazily and cached.
    """

    def __init__(
        self,
        degree: int,
        generators: Sequence[Permutation] = (),
        label: str | None = None,
        element_cap: int = ELEMENT_CAP,
        order_cap: int = ORDER_CAP,
    ):
        if degree < 1:
            raise ValueError("degree must be positive")
        gens = tuple(generators)
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatch(f"generator {g} has degree {g.degree}, expected {degree}")
        self.degree = degree
        self.generators = gens
        self.label = label
        self.element_cap = element_cap
        self.chain = StabilizerChain(degree, [g.images for g in gens], order_cap)
        self.order = self.chain.order

    def __repr__(self):
        name = self.label or "PermGroup"
        return f"<{name} degree={self.degree} order={self.order}>"

    def __len__(self):
        return self.order

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            raise DegreeMismatch(f"degree {g.degree} != {self.degree}")
        return self.chain.contains(g.images)

    __contains__ = contains

    def has_element_table(self) -> bool:
        return self.order <= self.element_cap

    @cached_property
    def element_table(self) -> GroupElementTable:
        if self.order > self.element_cap:
            raise CapExceeded("group order", self.order, self.element_cap)
        elems = sorted(self.chain.elements())
        return GroupElementTable(tuple(elems), {e: i for i, e in enumerate(elems)})

    @cached_property
    def table(self):
        """Multiplication data over the element table (see ``GroupTable``)."""
        return GroupTable(self.element_table)

    def relabel(self, label: str) -> PermGroup:
        g = PermGroup.__new__(PermGroup)
        g.__dict__.update(self.__dict__)
        g.label = label
        return g

    def is_trivial(self) -> bool:
        return self.order == 1

    def canonical_generators(self) -> list[str]:
        return sorted({format_cycles(g) for g in self.generators if not g.is_identity()})


class GroupTable:
    """Cayley table of a group: ``mul[i][j]`` is the index of ``e_i * e_j``."""

    def __init__(self, table: GroupElementTable):
        elems = table.elements
        index = table.index
        n = len(elems)
        self.n = n
        self.elements = elems
        self.index = index
        self.mul = [[index[compose_images(a, b)] for b in elems] for a in elems]
        self.inv = [index[invert_images(a)] for a in elems]
        self.full = (1 << n) - 1
        self.orders = self._element_orders()

    def _element_orders(self):
        orders = [0] * self.n
        for i in range(self.n):
            k, x = 1, i
            while x != 0:
                x = self.mul[x][i]
                k += 1
            orders[i] = k
        return orders

    def conj(self, x: int, g: int) -> int:
        """``g^-1 x g``."""
        return self.mul[self.mul[self.inv[g]][x]][g]

    def commutator(self, x: int, y: int) -> int:
        """``x^-1 y^-1 x y``."""
        m = self.mul
        return m[m[m[self.inv[x]][self.inv[y]]][x]][y]

    def closure(self, gens, seed: int = 1) -> int:
        """Bitset of the subgroup generated by ``gens``.

        ``seed`` may be any bitset already inside that subgroup (for example a
        subgroup being extended); the identity must be in it.
        """
        mul = self.mul
        gens = list(dict.fromkeys(gens))
        bits = seed
        queue = list(iter_bits(seed))
        for x in queue:
            row = mul[x]
            for s in gens:
                y = row[s]
                if not (bits >> y) & 1:
                    bits |= 1 << y
                    queue.append(y)
        return bits

    def generators_of(self, bits: int) -> list[int]:
        """A short generating set for the subgroup ``bits``, chosen greedily
        in index order."""
        gens = []
        sub = 1
        for i in iter_bits(bits):
            if not (sub >> i) & 1:
                gens.append(i)
                sub = self.closure(gens, sub)
                if sub == bits:
                    break
        return gens


def iter_bits(bits: int):
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def popcount(bits: int) -> int:
    return bin(bits).count("1")


def group_from_generators(
    degree: int,
    gens: Sequence[Permutation],
    label: str | None = None,
    element_cap: int = ELEMENT_CAP,
    order_cap: int = ORDER_CAP,
) -> PermGroup:
    return PermGroup(degree, gens, label=label, element_cap=element_cap, order_cap=order_cap)


def membership(group: PermGroup, g: Permutation) -> bool:
    return group.contains(g)


def enumerate_elements(group: PermGroup) -> GroupElementTable:
    return group.element_table
