"""Permutations on ``{1..degree}``.

Internally points are 0-based and a permutation is the tuple of images.
Products apply left to right: ``(a * b)(i) == b(a(i))``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DegreeMismatch, ParseError


def compose_images(a: tuple, b: tuple) -> tuple:
    """Images of ``a`` followed by ``b``; both raw tuples of equal length."""
    return tuple([b[i] for i in a])


def invert_images(a: tuple) -> tuple:
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def identity_images(degree: int) -> tuple:
    return tuple(range(degree))


@dataclass(frozen=True)
class Permutation:
    images: tuple

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images!r}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(identity_images(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        """Build from 1-based cycles, e.g. ``[(1, 2, 3), (4, 5)]``."""
        images = list(range(degree))
        seen = set()
        for cyc in cycles:
            for p in cyc:
                if not 1 <= p <= degree:
                    raise ValueError(f"point {p} outside 1..{degree}")
                if p in seen:
                    raise ValueError(f"point {p} repeated")
                seen.add(p)
            for k, p in enumerate(cyc):
                images[p - 1] = cyc[(k + 1) % len(cyc)] - 1
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> Permutation:
        cycles = parse_cycles(text)
        if degree is None:
            degree = max((p for c in cycles for p in c), default=1)
        return cls.from_cycles(degree, cycles)

    @classmethod
    def random(cls, degree: int, rng: random.Random) -> Permutation:
        images = list(range(degree))
        rng.shuffle(images)
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        """Image of a 1-based point."""
        return self.images[point - 1] + 1

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __invert__(self) -> Permutation:
        return invert(self)

    def __pow__(self, n: int) -> Permutation:
        base = self if n >= 0 else invert(self)
        result = Permutation.identity(self.degree)
        for _ in range(abs(n)):
            result = result * base
        return result

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 1-based, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                continue
            cyc = [start + 1]
            seen.add(start)
            j = self.images[start]
            while j != start:
                seen.add(j)
                cyc.append(j + 1)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        from math import lcm

        return lcm(*(len(c) for c in self.cycles())) if not self.is_identity() else 1

    def is_even(self) -> bool:
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def __str__(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"


def compose(a: Permutation, b: Permutation) -> Permutation:
    if a.degree != b.degree:
        raise DegreeMismatch(f"degrees {a.degree} and {b.degree} differ")
    return Permutation(compose_images(a.images, b.images))


def invert(a: Permutation) -> Permutation:
    return Permutation(invert_images(a.images))


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[tuple[int, ...]]:
    """Parse ``(1 2 3)(4 5)``; ``()`` is the identity. Points are 1-based."""
    stripped = text.strip()
    pos = 0
    cycles = []
    for m in _CYCLE.finditer(stripped):
        if stripped[pos:m.start()].strip():
            raise ParseError(f"unexpected text {stripped[pos:m.start()]!r}")
        pos = m.end()
        body = m.group(1).replace(",", " ").split()
        try:
            pts = tuple(int(t) for t in body)
        except ValueError:
            raise ParseError(f"bad cycle {m.group(0)!r}") from None
        if len(set(pts)) != len(pts):
            raise ParseError(f"repeated point in {m.group(0)!r}")
        if any(p < 1 for p in pts):
            raise ParseError(f"points are 1-based in {m.group(0)!r}")
        if len(pts) > 1:
            cycles.append(pts)
    if stripped[pos:].strip() or (not stripped) or not stripped.startswith("("):
        raise ParseError(f"malformed cycle notation {text!r}")
    seen = [p for c in cycles for p in c]
    if len(set(seen)) != len(seen):
        raise ParseError(f"cycles are not disjoint in {text!r}")
    return cycles


def format_cycles(p: Permutation) -> str:
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)
