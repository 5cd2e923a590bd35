"""Audits of the background theorems on PSL(2,q) and Sz(q)."""

from __future__ import annotations

from math import gcd

from ..catalog import dihedral, matrix_group, named
from ..errors import GroupError
from ..structure.isomorphism import are_isomorphic
from ..structure.lattice import subgroup_lattice
from ..structure.subgroups import is_abelian, prime_factors
from .report import ClaimReport, Instance

PSL_AUDIT_FIELDS = (4, 5, 7)


def _prime_power(q: int) -> tuple[int, int]:
    ps = prime_factors(q)
    if len(ps) != 1:
        raise GroupError(f"{q} is not a prime power")
    p, n = ps[0], 0
    while q > 1:
        q //= p
        n += 1
    return p, n


def _is_borel_type(L, i: int, q: int, p: int, d: int) -> bool:
    """Order q(q-1)/d with a normal elementary abelian Sylow p-subgroup P
    and H/P cyclic of order (q-1)/d."""
    H = L[i]
    if H.order != q * (q - 1) // d:
        return False
    T = L.parent.table
    pel = [x for x in H.elements() if T.orders[x] == 1 or prime_factors(T.orders[x]) == [p]]
    if len(pel) != q or any(T.orders[x] not in (1, p) for x in pel):
        return False
    pbits = sum(1 << x for x in pel)
    if pbits not in L.position or not is_abelian(L[L.position[pbits]]):
        return False
    k = (q - 1) // d
    for h in H.elements():
        y, j = h, 1
        while not (pbits >> y) & 1:
            y = T.mul[y][h]
            j += 1
        if j == k:
            return True
    return k == 1


def dickson_audit(q: int, cap: int = 400) -> ClaimReport:
    """Check the subgroup list of PSL(2,q) clause by clause, plus coverage:
    every subgroup is of one of the listed types."""
    if q not in PSL_AUDIT_FIELDS:
        raise GroupError(f"the PSL(2,q) subgroup audit supports q in {PSL_AUDIT_FIELDS}")
    p, n = _prime_power(q)
    d = gcd(2, q - 1)
    label = f"PSL(2,{q})"
    G = matrix_group("PSL", 2, q).group
    L = subgroup_lattice(G, cap)
    reps = [c[0] for c in L.conjugacy_classes]
    iso_cache: dict = {}

    def iso(i, ref_key, ref):
        key = (i, ref_key)
        if key not in iso_cache:
            iso_cache[key] = L[i].order == ref.order and are_isomorphic(L[i].as_group(), ref)
        return iso_cache[key]

    def positions_like(ref_key, ref):
        out = []
        for c in L.conjugacy_classes:
            if iso(c[0], ref_key, ref):
                out += c
        return sorted(out)

    instances = []

    def clause(name, expected, found_positions):
        found = bool(found_positions)
        status = "pass" if found == expected else "fail"
        instances.append(
            Instance(
                label,
                status,
                f"{name}: expected {'present' if expected else 'absent'}, "
                f"{'found' if found else 'not found'}",
                extra={"clause": name, "expected": expected, "found": found},
            )
        )

    dihedral_orders = sorted({2 * (q - 1) // d, 2 * (q + 1) // d})
    dihedral_pos = set()
    for o in dihedral_orders:
        ref = dihedral(o).group
        pos = positions_like(f"D{o}", ref)
        dihedral_pos.update(pos)
        clause(f"(i) dihedral of order {o}", True, pos)
    borel_pos = [i for i in range(len(L)) if _is_borel_type(L, i, q, p, d)]
    clause(f"(ii) order {q * (q - 1) // d} with normal elementary abelian Sylow {p}", True, borel_pos)
    A4, S4, A5 = named("A4").group, named("S4").group, named("A5").group
    clause("(iii) A4", p != 2 or n % 2 == 0, positions_like("A4", A4))
    clause("(iv) S4", q * q % 16 == 1, positions_like("S4", S4))
    clause("(v) A5", q * (q * q - 1) % 5 == 0, positions_like("A5", A5))

    # (vi)/(vii): PSL(2,r), PGL(2,r) for q = r^m
    subfield = []
    for m in range(1, n + 1):
        if n % m:
            continue
        r = p ** (n // m)
        subfield.append((f"PSL(2,{r})", matrix_group("PSL", 2, r).group))
        if q % 2 and m % 2 == 0:
            subfield.append((f"PGL(2,{r})", matrix_group("PGL", 2, r).group))

    below = L.below
    uncovered = []
    for i in reps:
        if any((below[j] >> i) & 1 for j in dihedral_pos):
            continue
        if any((below[j] >> i) & 1 for j in borel_pos):
            continue
        if any(iso(i, k, ref) for k, ref in (("A4", A4), ("S4", S4), ("A5", A5))):
            continue
        if any(iso(i, k, ref) for k, ref in subfield):
            continue
        uncovered.append(i)
    instances.append(
        Instance(
            label,
            "pass" if not uncovered else "fail",
            f"coverage: {len(reps)} conjugacy classes of subgroups, {len(uncovered)} unaccounted",
            witness=None if not uncovered else {
                "index": uncovered[0],
                "order": L[uncovered[0]].order,
                "name": None,
                "generators": [str(x) for x in L[uncovered[0]].permutations()],
            },
            extra={"clause": "coverage"},
        )
    )
    return ClaimReport(
        "T2.1",
        f"subgroups of PSL(2,{q})",
        [label],
        instances,
        notes=[f"q={q}, p={p}, n={n}, d={d}"],
    )


def suzuki_arithmetic(m: int) -> ClaimReport:
    if m < 1:
        raise GroupError("m must be >= 1")
    q, r = 2 ** (2 * m + 1), 2**m
    a, b = q + 2 * r + 1, q - 2 * r + 1
    checks = {
        "product": a * b == q * q + 1,
        "odd": a % 2 == 1 and b % 2 == 1,
        "coprime_to_q_minus_1": gcd(a, q - 1) == 1 and gcd(b, q - 1) == 1,
    }
    ok = all(checks.values())
    inst = Instance(
        f"Sz({q})",
        "pass" if ok else "fail",
        f"q={q}, r={r}: ({a})({b}) = {a * b}, q^2+1 = {q * q + 1}",
        extra={"checks": checks, "factors": [a, b]},
    )
    return ClaimReport(
        "T2.2",
        "Hall subgroup orders of Sz(q)",
        [f"Sz({q})"],
        [inst],
        notes=["|N(U_i):U_i| = 4 recorded only; Sz(q) is not constructed"],
    )
