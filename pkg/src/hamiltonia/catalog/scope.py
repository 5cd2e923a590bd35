"""The default verification scope and builtin dispatch."""

from __future__ import annotations

from functools import lru_cache

from ..errors import GroupError
from . import builders as b
from .fields import is_prime


def build_builtin(kind: str, params) -> b.CatalogEntry:
    params = tuple(params)
    table = {
        "cyclic": b.cyclic,
        "dihedral": b.dihedral,
        "dicyclic": b.dicyclic,
        "symmetric": b.symmetric,
        "alternating": b.alternating,
        "elementary_abelian": b.elementary_abelian,
        "semidirect_cyclic": b.semidirect_cyclic,
        "matrix": b.matrix_group,
    }
    if kind not in table:
        raise GroupError(f"unknown builtin kind {kind!r}")
    try:
        return table[kind](*params)
    except TypeError as exc:
        raise GroupError(f"bad parameters for {kind}: {params}") from exc


def named(label: str) -> b.CatalogEntry:
    """Entries the package refers to by name."""
    makers = {
        "S3": lambda: b.symmetric(3),
        "S4": lambda: b.symmetric(4),
        "S5": lambda: b.symmetric(5),
        "A4": lambda: b.alternating(4),
        "A5": lambda: b.alternating(5),
        "Q8": lambda: b.dicyclic(2),
        "Q12": lambda: b.dicyclic(3),
        "Q20": lambda: b.dicyclic(5),
        "D8": lambda: b.dihedral(8),
        "D10": lambda: b.dihedral(10),
        "D18": lambda: b.semidirect_cyclic(3, 2, 2, 1, 2, label="D18"),
        "C25:C4": lambda: b.semidirect_cyclic(5, 2, 2, 2, 2, label="C25:C4"),
        "C25:C4[4]": lambda: b.semidirect_cyclic(5, 2, 2, 2, 4),
        "S3xC3": lambda: b.product_entry(b.symmetric(3), b.cyclic(3)),
        "SL(2,3)": lambda: b.matrix_group("SL", 2, 3),
        "SL(2,5)": lambda: b.matrix_group("SL", 2, 5),
        "PSL(2,4)": lambda: b.matrix_group("PSL", 2, 4),
        "PSL(2,5)": lambda: b.matrix_group("PSL", 2, 5),
        "PSL(2,7)": lambda: b.matrix_group("PSL", 2, 7),
        "C2xA5": lambda: b.product_entry(b.cyclic(2), b.alternating(5)),
    }
    if label not in makers:
        raise GroupError(f"no named group {label!r}")
    return makers[label]()


def _semidirect_recipes(max_order: int):
    primes = [p for p in range(2, max_order + 1) if is_prime(p)]
    for p in primes:
        for q in primes:
            if p == q:
                continue
            m = 1
            while p**m * q <= max_order:
                n = 1
                while p**m * q**n <= max_order:
                    aut = p ** (m - 1) * (p - 1)
                    for k in range(2, q**n + 1):
                        if q**n % k == 0 and aut % k == 0:
                            yield (p, m, q, n, k)
                    n += 1
                m += 1


@lru_cache(maxsize=None)
def _default_catalog(max_small: int) -> tuple:
    entries = []
    entries += [b.cyclic(n) for n in range(1, max_small + 1)]
    entries += [b.dihedral(o) for o in range(4, max_small + 1, 2)]
    entries += [b.dicyclic(n) for n in range(2, max_small // 4 + 1)]
    for p in (2, 3, 5):
        k = 2
        while p**k <= max_small:
            entries.append(b.elementary_abelian(p, k))
            k += 1
    entries += [b.symmetric(3), b.alternating(4)]
    entries += [b.semidirect_cyclic(*r) for r in _semidirect_recipes(max_small)]
    pairs = [
        (b.cyclic(2), b.cyclic(4)),
        (b.cyclic(2), b.cyclic(6)),
        (b.cyclic(2), b.cyclic(8)),
        (b.cyclic(4), b.cyclic(4)),
        (b.cyclic(2), b.dihedral(8)),
        (b.cyclic(2), b.dicyclic(2)),
        (b.cyclic(2), b.alternating(4)),
        (b.symmetric(3), b.cyclic(4)),
        (b.cyclic(3), b.dicyclic(2)),
    ]
    entries += [b.product_entry(x, y) for x, y in pairs if x.order * y.order <= max_small]
    for label in ("S4", "SL(2,3)", "A5", "S5", "SL(2,5)", "C2xA5", "PSL(2,7)", "D18", "C25:C4",
                  "C25:C4[4]", "S3xC3", "Q12", "Q20"):
        entries.append(named(label))
    seen = set()
    unique = []
    for e in entries:
        if e.label not in seen:
            seen.add(e.label)
            unique.append(e)
    unique.sort(key=lambda e: (e.order, e.label))
    return tuple(unique)


def default_catalog(max_small: int = 30) -> list[b.CatalogEntry]:
    """Every recipe group of order <= ``max_small`` plus the named groups the
    classification checks need, sorted by (order, label)."""
    return list(_default_catalog(max_small))
