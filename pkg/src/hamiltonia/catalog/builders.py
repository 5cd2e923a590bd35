"""Constructors for the concrete groups used throughout the package."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from ..errors import GroupError
from ..group import PermGroup
from ..perm import Permutation
from .fields import field as finite_field, is_prime

KINDS = (
    "cyclic",
    "dihedral",
    "dicyclic",
    "symmetric",
    "alternating",
    "elementary_abelian",
    "semidirect_cyclic",
    "matrix",
    "direct_product",
    "file",
)

MATRIX_KINDS = ("SL", "GL", "PSL", "PGL")


@dataclass(frozen=True)
class GroupRecipe:
    kind: str
    parameters: tuple = ()
    label: str = ""


@dataclass(frozen=True)
class CatalogEntry:
    recipe: GroupRecipe
    group: PermGroup = field(compare=False)
    provenance: str = "builtin"

    @property
    def label(self) -> str:
        return self.recipe.label

    @property
    def order(self) -> int:
        return self.group.order


def _perm(degree, mapping) -> Permutation:
    return Permutation(tuple(mapping(i) for i in range(degree)))


def _entry(kind, params, label, degree, gens, expected=None) -> CatalogEntry:
    group = PermGroup(degree, gens, label=label)
    if expected is not None and group.order != expected:
        raise AssertionError(f"{label}: built order {group.order}, expected {expected}")
    return CatalogEntry(GroupRecipe(kind, tuple(params), label), group)


def cyclic(n: int, label: str | None = None) -> CatalogEntry:
    if n < 1:
        raise GroupError("cyclic order must be >= 1")
    gens = [_perm(n, lambda i: (i + 1) % n)] if n > 1 else []
    return _entry("cyclic", (n,), label or f"C{n}", n, gens, n)


def dihedral(order: int, label: str | None = None) -> CatalogEntry:
    """Dihedral group of the given order (n-gon symmetries, n = order/2)."""
    if order < 2 or order % 2:
        raise GroupError("dihedral order must be even and >= 2")
    n = order // 2
    label = label or f"D{order}"
    if n == 1:
        return _entry("dihedral", (order,), label, 2, [_perm(2, lambda i: 1 - i)], 2)
    if n == 2:
        gens = [Permutation.parse("(1 2)", 4), Permutation.parse("(3 4)", 4)]
        return _entry("dihedral", (order,), label, 4, gens, 4)
    rot = _perm(n, lambda i: (i + 1) % n)
    ref = _perm(n, lambda i: (-i) % n)
    return _entry("dihedral", (order,), label, n, [rot, ref], order)


def _regular(elements, mul):
    """Right-regular permutations of each element, as a dict."""
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    return {
        g: Permutation(tuple(index[mul(h, g)] for h in elements)) for g in elements
    }, n


def dicyclic(n: int, label: str | None = None) -> CatalogEntry:
    """Q_{4n} = <a, x | a^{2n} = 1, x^2 = a^n, x^-1 a x = a^-1>, regular action."""
    if n < 2:
        raise GroupError("dicyclic parameter must be >= 2")
    m = 2 * n

    def mul(u, v):
        (k1, j1), (k2, j2) = u, v
        if j1 == 0:
            return ((k1 + k2) % m, j2)
        if j2 == 0:
            return ((k1 - k2) % m, 1)
        return ((k1 - k2 + n) % m, 0)

    elements = [(k, j) for j in (0, 1) for k in range(m)]
    reg, degree = _regular(elements, mul)
    return _entry("dicyclic", (n,), label or f"Q{4 * n}", degree, [reg[(1, 0)], reg[(0, 1)]], 4 * n)


def symmetric(n: int, label: str | None = None) -> CatalogEntry:
    if n < 1:
        raise GroupError("symmetric degree must be >= 1")
    gens = []
    if n >= 2:
        gens = [Permutation.from_cycles(n, [(1, 2)]), Permutation.from_cycles(n, [tuple(range(1, n + 1))])]
    from math import factorial

    return _entry("symmetric", (n,), label or f"S{n}", n, gens, factorial(n))


def alternating(n: int, label: str | None = None) -> CatalogEntry:
    if n < 1:
        raise GroupError("alternating degree must be >= 1")
    gens = [Permutation.from_cycles(n, [(1, 2, i)]) for i in range(3, n + 1)]
    from math import factorial

    return _entry("alternating", (n,), label or f"A{n}", n, gens, max(1, factorial(n) // 2))


def elementary_abelian(p: int, k: int, label: str | None = None) -> CatalogEntry:
    if not is_prime(p) or k < 1:
        raise GroupError("elementary abelian needs a prime p and k >= 1")
    degree = p * k
    gens = [
        Permutation.from_cycles(degree, [tuple(range(b * p + 1, b * p + p + 1))]) for b in range(k)
    ]
    return _entry("elementary_abelian", (p, k), label or f"C{p}^{k}", degree, gens, p**k)


def unit_of_order(modulus: int, order: int):
    """Smallest unit mod ``modulus`` with exact multiplicative order ``order``."""
    for a in range(1, modulus + 1):
        a %= modulus
        if gcd(a, modulus) != 1:
            continue
        x, k = a, 1
        while x != 1 % modulus:
            x = x * a % modulus
            k += 1
        if k == order:
            return a
    return None


def semidirect_cyclic(p: int, m: int, q: int, n: int, action_order: int, label: str | None = None) -> CatalogEntry:
    """Z_{p^m} x| Z_{q^n}, the generator of Z_{q^n} acting as multiplication by
    the smallest unit of order ``action_order`` mod p^m.

    Realized on p^m + q^n points: translations of Z_{p^m}, and the affine map
    x -> a*x combined with a q^n-cycle on the second block.
    """
    if not (is_prime(p) and is_prime(q)) or p == q:
        raise GroupError("semidirect_cyclic needs distinct primes p and q")
    if m < 1 or n < 1 or action_order < 1:
        raise GroupError("exponents and action order must be >= 1")
    P, Q = p**m, q**n
    aut_order = p ** (m - 1) * (p - 1)
    if Q % action_order or aut_order % action_order:
        raise GroupError(f"no automorphism of order {action_order} compatible with C{P} x| C{Q}")
    a = unit_of_order(P, action_order)
    if a is None:
        raise GroupError(f"no automorphism of order {action_order} of C{P}")
    degree = P + Q
    trans = _perm(degree, lambda i: (i + 1) % P if i < P else i)
    twist = _perm(degree, lambda i: (a * i) % P if i < P else P + (i - P + 1) % Q)
    if label is None:
        label = f"C{P}:C{Q}[{action_order}]" if action_order > 1 else f"C{P}xC{Q}"
    return _entry("semidirect_cyclic", (p, m, q, n, action_order), label, degree, [trans, twist], P * Q)


def direct_product(a: PermGroup, b: PermGroup, label: str | None = None) -> PermGroup:
    """Product acting on the disjoint union of the two point sets."""
    da, db = a.degree, b.degree
    gens = [Permutation(g.images + tuple(range(da, da + db))) for g in a.generators]
    gens += [Permutation(tuple(range(da)) + tuple(da + i for i in g.images)) for g in b.generators]
    if label is None and a.label and b.label:
        label = f"{a.label}x{b.label}"
    return PermGroup(da + db, gens, label=label)


def product_entry(*entries: CatalogEntry, label: str | None = None) -> CatalogEntry:
    group = entries[0].group
    for e in entries[1:]:
        group = direct_product(group, e.group)
    label = label or "x".join(e.label for e in entries)
    group = group.relabel(label)
    return CatalogEntry(GroupRecipe("direct_product", tuple(e.recipe for e in entries), label), group)


def matrix_group_order(kind: str, q: int) -> int:
    sl = q * (q * q - 1)
    return {
        "SL": sl,
        "GL": (q * q - 1) * (q * q - q),
        "PSL": sl // gcd(2, q - 1),
        "PGL": sl,
    }[kind]


def matrix_group(kind: str, dim: int, q: int, label: str | None = None) -> CatalogEntry:
    """SL/GL on nonzero row vectors, PSL/PGL on the projective line."""
    kind = kind.upper()
    if kind not in MATRIX_KINDS:
        raise GroupError(f"matrix kind must be one of {MATRIX_KINDS}")
    if dim != 2:
        raise GroupError("only dimension 2 is supported")
    F = finite_field(q)
    add, mul = F.add, F.mul
    one = 1
    mats = []
    for lam in range(1, q):
        mats.append(((one, lam), (0, one)))
        mats.append(((one, 0), (lam, one)))
    if kind in ("GL", "PGL"):
        mats.append(((F.primitive_element(), 0), (0, one)))

    def act(v, M):
        x, y = v
        return (add[mul[x][M[0][0]]][mul[y][M[1][0]]], add[mul[x][M[0][1]]][mul[y][M[1][1]]])

    if kind in ("SL", "GL"):
        points = [(x, y) for x in range(q) for y in range(q) if (x, y) != (0, 0)]
        normalize = lambda v: v
    else:
        points = [(1, y) for y in range(q)] + [(0, 1)]

        def normalize(v):
            x, y = v
            if x:
                return (1, mul[y][F.inv[x]])
            return (0, 1)

    index = {v: i for i, v in enumerate(points)}
    gens = [Permutation(tuple(index[normalize(act(v, M))] for v in points)) for M in mats]
    label = label or f"{kind}(2,{q})"
    return _entry("matrix", (kind, dim, q), label, len(points), gens, matrix_group_order(kind, q))
