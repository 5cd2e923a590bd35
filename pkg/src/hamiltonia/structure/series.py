"""Derived and lower central series."""

from __future__ import annotations

from dataclasses import dataclass

from ..group import PermGroup
from .subgroups import SubgroupHandle, commutator, whole


@dataclass(frozen=True)
class SeriesResult:
    kind: str  # "derived" or "lower_central"
    terms: tuple  # SubgroupHandle, descending, ending with a repeated term
    stabilized: bool = True

    @property
    def limit(self) -> SubgroupHandle:
        return self.terms[-1]

    def orders(self) -> list[int]:
        return [t.order for t in self.terms]

    def term(self, i: int) -> SubgroupHandle:
        """1-based term; past the end the limit repeats."""
        return self.terms[min(i, len(self.terms)) - 1]


def series(G, kind: str) -> SeriesResult:
    """Series of a group or of a subgroup handle (computed in its parent).

    The terms list stops at the first trivial term or once a term repeats.
    """
    H = whole(G) if isinstance(G, PermGroup) else G
    if kind not in ("derived", "lower_central"):
        raise ValueError(f"unknown series kind {kind!r}")
    terms = [H]
    while not terms[-1].is_trivial():
        prev = terms[-1]
        nxt = commutator(prev, H) if kind == "lower_central" else commutator(prev, prev)
        terms.append(nxt)
        if nxt.bits == prev.bits:
            break
    return SeriesResult(kind, tuple(terms))


def lower_central(G) -> SeriesResult:
    return series(G, "lower_central")


def derived(G) -> SeriesResult:
    return series(G, "derived")


def gamma(G, i: int) -> SubgroupHandle:
    """i-th lower central term (gamma_1 = G)."""
    return lower_central(G).term(i)


def gamma_infinity(G) -> SubgroupHandle:
    return lower_central(G).limit


def is_nilpotent(G) -> bool:
    return lower_central(G).limit.is_trivial()


def is_soluble(G) -> bool:
    return derived(G).limit.is_trivial()


def is_perfect(G) -> bool:
    s = derived(G)
    return s.term(2).bits == s.term(1).bits
