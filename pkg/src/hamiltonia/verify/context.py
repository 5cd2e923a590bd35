"""Per-group derived data shared by the claim checkers."""

from __future__ import annotations

import threading
from functools import cached_property

from ..catalog import CatalogEntry, named
from ..predicates import PredicateResult, evaluate, view
from ..structure.isomorphism import are_isomorphic
from ..structure.lattice import SubgroupLattice, cached_lattice, subgroup_lattice
from ..structure.quotient import quotient_group
from ..structure.recognize import recognize_group
from ..structure.series import derived, lower_central
from ..structure.special import frattini_subgroup
from ..structure.subgroups import LATTICE_CAP, prime_factors


class GroupData:
    def __init__(self, entry: CatalogEntry, cache_dir=None, cap: int = LATTICE_CAP):
        self.entry = entry
        self.group = entry.group
        self.label = entry.label
        self.cache_dir = cache_dir
        self.cap = cap

    @cached_property
    def lattice(self) -> SubgroupLattice:
        if self.cache_dir is not None:
            return cached_lattice(self.group, self.cache_dir, self.cap)[0]
        return subgroup_lattice(self.group, self.cap)

    def predicates(self, fam) -> PredicateResult:
        key = f"_pred_{fam}"
        if key not in self.__dict__:
            self.__dict__[key] = evaluate(self.group, fam, self.lattice, self.label)
        return self.__dict__[key]

    def view(self, fam):
        return view(self.lattice, fam)

    @cached_property
    def name(self):
        return recognize_group(self.group, self.cap)

    @cached_property
    def primes(self) -> list[int]:
        return prime_factors(self.group.order)

    @cached_property
    def soluble(self) -> bool:
        return derived(self.group).limit.is_trivial()

    @cached_property
    def nilpotent(self) -> bool:
        return lower_central(self.group).limit.is_trivial()

    @cached_property
    def frattini(self):
        return frattini_subgroup(self.lattice)

    @cached_property
    def frattini_quotient(self):
        return quotient_group(self.group, self.frattini, label=f"{self.label}/Phi")

    def isomorphic_to(self, label: str) -> bool:
        return are_isomorphic(self.group, reference(label), self.cap)

    def describe(self, i: int) -> dict:
        """Witness record for lattice position ``i``."""
        H = self.lattice[i]
        return {
            "index": i,
            "order": H.order,
            "name": recognize_group(H.as_group(), self.cap),
            "generators": [str(p) for p in H.permutations()],
        }


_REFS: dict = {}
_REF_LOCK = threading.Lock()


def reference(label: str):
    with _REF_LOCK:
        if label not in _REFS:
            _REFS[label] = named(label).group
        return _REFS[label]


class Workspace:
    """Shared per-label cache; safe for concurrent readers, one writer at a time."""

    def __init__(self, cache_dir=None, cap: int = LATTICE_CAP):
        self.cache_dir = cache_dir
        self.cap = cap
        self._data: dict[str, GroupData] = {}
        self._lock = threading.Lock()

    def get(self, entry: CatalogEntry) -> GroupData:
        with self._lock:
            data = self._data.get(entry.label)
            if data is None or data.entry.group is not entry.group:
                data = GroupData(entry, self.cache_dir, self.cap)
                self._data[entry.label] = data
            return data
