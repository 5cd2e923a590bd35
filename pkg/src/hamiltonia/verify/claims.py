"""One checker per claim: each runs over a scope of catalog entries and
returns a ClaimReport with a per-group instance."""

from __future__ import annotations

import time
from typing import Callable

from ..catalog import default_catalog
from ..errors import GroupError
from ..structure.isomorphism import are_isomorphic
from ..structure.recognize import recognize_group
from ..structure.series import gamma, gamma_infinity, series
from .classical import PSL_AUDIT_FIELDS, dickson_audit, suzuki_arithmetic
from .context import GroupData, Workspace, reference
from .report import ClaimReport, Instance

SZ_RANGE = (1, 2, 3)


def _pi(data: GroupData) -> str:
    return "{" + ",".join(map(str, data.primes)) + "}"


def _violator_types(data: GroupData, positions) -> list[str]:
    names = []
    for i in positions:
        H = data.lattice[i]
        name = recognize_group(H.as_group(), data.cap) or f"order {H.order}"
        if name not in names:
            names.append(name)
    return names




def check_t21(scope, ws):
    instances, notes = [], []
    for q in PSL_AUDIT_FIELDS:
        r = dickson_audit(q, ws.cap)
        instances += r.instances
        notes += r.notes
    return [f"PSL(2,{q})" for q in PSL_AUDIT_FIELDS], instances, notes


def check_t22(scope, ws):
    instances, notes = [], []
    for m in SZ_RANGE:
        r = suzuki_arithmetic(m)
        instances += r.instances
    notes.append("|N(U_i):U_i| = 4 recorded only; Sz(q) is not constructed")
    return [f"Sz({2 ** (2 * m + 1)})" for m in SZ_RANGE], instances, notes


MINIMAL_SIMPLE_BUILDABLE = {
    60: ("PSL(2,4)", "(a) PSL(2,2^p), p=2"),
    168: ("PSL(2,7)", "(c) PSL(2,p), p=7"),
}


def _minimal_simple_orders(limit: int) -> dict:
    """Orders of listed minimal simple groups up to ``limit``."""
    from ..catalog.fields import is_prime

    out = {}
    for p in range(2, 20):
        if not is_prime(p):
            continue
        q = 2**p
        out.setdefault(q * (q * q - 1), f"(a) PSL(2,{q})")
        if p % 2:
            q = 3**p
            out.setdefault(q * (q * q - 1) // 2, f"(b) PSL(2,{q})")
            q = 2**p
            out.setdefault(q * q * (q - 1) * (q * q + 1), f"(d) Sz({q})")
    for p in range(5, 200):
        if is_prime(p) and (p * p + 1) % 5 == 0:
            out.setdefault(p * (p * p - 1) // 2, f"(c) PSL(2,{p})")
    out.setdefault(5616, "(e) PSL(3,3)")
    return {k: v for k, v in out.items() if k <= limit}


def _minimal_simple(data: GroupData) -> bool:
    flags = data.predicates("nilpotent")
    if not flags["simple"] or data.lattice[data.lattice.top].order == 1:
        return False
    if all(p == data.primes[0] for p in data.primes):
        return False  # abelian simple
    L = data.lattice
    return all(series(L[i], "derived").limit.is_trivial() for i in range(L.top))


def check_t23(scope, ws):
    from ..catalog import named
    from ..catalog.builders import matrix_group

    instances = []
    entries = list(scope)
    if not any(e.label == "A5" for e in entries):
        entries = [named("A5")] + entries
    listed = _minimal_simple_orders(10**6)
    for e in entries:
        data = ws.get(e)
        if not data.predicates("nilpotent")["simple"] or len(data.primes) < 2:
            instances.append(Instance(e.label, "skip", "not a nonabelian simple group"))
            continue
        if not _minimal_simple(data):
            instances.append(Instance(e.label, "skip", "simple but not minimal simple"))
            continue
        n = data.group.order
        if n not in listed:
            instances.append(Instance(e.label, "fail", f"minimal simple of order {n}, not in the list"))
            continue
        ref_label, clause = MINIMAL_SIMPLE_BUILDABLE.get(n, (None, listed[n]))
        if ref_label is None:
            instances.append(Instance(e.label, "skip", f"order matches {clause}; no buildable reference"))
            continue
        q = int(ref_label.split(",")[1].rstrip(")"))
        ok = are_isomorphic(data.group, matrix_group("PSL", 2, q).group, ws.cap)
        instances.append(
            Instance(
                e.label,
                "pass" if ok else "fail",
                f"simple, all proper subgroups soluble; isomorphic to {ref_label} {clause}" if ok
                else f"minimal simple but not isomorphic to {ref_label}",
            )
        )
    return [e.label for e in entries], instances, []


def check_t24(scope, ws):
    instances = []
    for e in scope:
        data = ws.get(e)
        if not data.nilpotent:
            instances.append(Instance(e.label, "skip", "not nilpotent"))
            continue
        L = data.lattice
        G = data.group
        bad = [j for j in L.maximal_in(L.top) if not L.normal_flags[j]]
        derived_sub = gamma(G, 2)
        phi = data.frattini
        contained = derived_sub <= phi
        ok = not bad and contained
        inst = Instance(
            e.label,
            "pass" if ok else "fail",
            f"|G'|={derived_sub.order}, |Phi|={phi.order}, maximal subgroups normal: {not bad}",
        )
        if bad:
            inst.witness = data.describe(bad[0])
        instances.append(inst)
    return [e.label for e in scope], instances, []




def _pq_frattini_quotient(data: GroupData):
    """(p, q) when G/Phi(G) is a nonabelian group of order pq with p the
    prime whose Sylow subgroup is normal; else None."""
    Q = data.frattini_quotient
    ps = [p for p in data.primes if Q.order % p == 0]
    if len(ps) != 2 or Q.order != ps[0] * ps[1]:
        return None
    from ..structure.subgroups import is_abelian, whole

    if is_abelian(whole(Q)):
        return None
    small, big = ps
    return big, small


def check_l31(scope, ws):
    from ..structure.special import sylow_subgroup

    instances = []
    for e in scope:
        data = ws.get(e)
        pq = _pq_frattini_quotient(data)
        if pq is None:
            instances.append(Instance(e.label, "skip", "G/Phi(G) is not a nonabelian group of order pq"))
            continue
        p, q = pq
        G, L = data.group, data.lattice
        T = G.table
        P, Qs = sylow_subgroup(L, p), sylow_subgroup(L, q)
        P_cyclic = any(T.orders[x] == P.order for x in P.elements())
        Q_cyclic = any(T.orders[x] == Qs.order for x in Qs.elements())
        P_normal = L.normal_flags[L.index(P)]
        two_primes = P.order * Qs.order == G.order
        phi_order = (P.order // p) * (Qs.order // q)
        ok = P_cyclic and Q_cyclic and P_normal and two_primes and data.frattini.order == phi_order
        instances.append(
            Instance(
                e.label,
                "pass" if ok else "fail",
                f"G/Phi = C{p}:C{q}; G = C{P.order}:C{Qs.order}; Sylow {p} cyclic={P_cyclic} normal={P_normal}, "
                f"Sylow {q} cyclic={Q_cyclic}, |Phi|={data.frattini.order} (expected {phi_order})",
            )
        )
    return [e.label for e in scope], instances, []


def _quotient_nilpotent(data: GroupData, i: int, N) -> bool:
    """Whether H_i / N is nilpotent, via gamma_infinity(H_i) <= N."""
    return gamma_infinity(data.lattice[i]) <= N


def check_l32(scope, ws):
    instances = []
    for e in scope:
        data = ws.get(e)
        L = data.lattice
        phi = data.frattini
        v = data.view("nilpotent")
        checked, bad = 0, []
        for i in range(len(L)):
            H = L[i]
            if not phi <= H or not v.minimal_non[i]:
                continue
            # H/Phi minimal non-nilpotent: non-nilpotent, every K/Phi below nilpotent
            if _quotient_nilpotent(data, i, phi):
                continue
            proper = [k for k in L.subgroups_of(i) if k != i and phi <= L[k]]
            if not all(_quotient_nilpotent(data, k, phi) for k in proper):
                continue
            from ..structure.special import frattini_subgroup

            checked += 1
            if not phi <= frattini_subgroup(L, i):
                bad.append(i)
        if checked == 0:
            instances.append(Instance(e.label, "skip", "no H with H and H/Phi(G) minimal non-nilpotent"))
            continue
        inst = Instance(e.label, "pass" if not bad else "fail", f"{checked} subgroups H checked, |Phi(G)|={phi.order}")
        if bad:
            inst.witness = data.describe(bad[0])
        instances.append(inst)
    return [e.label for e in scope], instances, []


def check_t33(scope, ws):
    instances = []
    for e in scope:
        data = ws.get(e)
        G = data.group
        if G.order // data.frattini.order != 60 or not are_isomorphic(data.frattini_quotient, reference("A5"), ws.cap):
            instances.append(Instance(e.label, "skip", f"G/Phi(G) has order {G.order // data.frattini.order}, not A5"))
            continue
        para = data.predicates("nilpotent")["para_hamiltonian"]
        if not para:
            inst = Instance(e.label, "skip", "G/Phi(G) = A5 but not para-nilpotent-Hamiltonian")
            inst.witness = data.describe(data.predicates("nilpotent").witnesses["para_hamiltonian"])
            instances.append(inst)
            continue
        name = data.name
        ok = name in ("A5", "SL(2,5)") and data.isomorphic_to(name)
        from ..structure.subgroups import center

        Z = center(G)
        instances.append(
            Instance(
                e.label,
                "pass" if ok else "fail",
                f"recognized {name}; |Phi|={data.frattini.order}, |Z|={Z.order}, Phi = Z: {Z == data.frattini}",
            )
        )
    return [e.label for e in scope], instances, []


def check_l34(scope, ws):
    instances = []
    for e in scope:
        data = ws.get(e)
        if not _minimal_simple(data):
            instances.append(Instance(e.label, "skip", "not minimal simple"))
            continue
        res = data.predicates("nilpotent")
        bimin = res["biminimal_non"]
        ok = (not bimin) or (data.name == "A5" and data.isomorphic_to("A5"))
        inst = Instance(
            e.label,
            "pass" if ok else "fail",
            f"minimal simple, recognized {data.name}; biminimal non-nilpotent: {bimin}",
        )
        if not bimin and "biminimal_non" in res.witnesses:
            inst.witness = data.describe(res.witnesses["biminimal_non"])
        instances.append(inst)
    notes = [
        "PSL(2,3^p) branch: arithmetic narrative, not machine-checked",
        "PSL(2,8), PSL(3,3) and Sz(2^p) are outside the lattice budget and not machine-checked",
    ]
    return [e.label for e in scope], instances, notes


def _insoluble_classification(scope, ws, fam, flag, allowed, flag_text):
    instances = []
    members = []
    for e in scope:
        data = ws.get(e)
        if data.soluble:
            instances.append(Instance(e.label, "skip", "soluble"))
            continue
        res = data.predicates(fam)
        holds = res[flag]
        name = data.name
        recognized = name in allowed and data.isomorphic_to(name)
        ok = holds == recognized
        detail = f"{flag_text}: {holds}; recognized {name}; pi={_pi(data)}"
        inst = Instance(e.label, "pass" if ok else "fail", detail)
        if holds:
            members.append(e.label)
            if data.primes != [2, 3, 5]:
                inst.status = "fail"
                inst.detail += " (prime divisors are not {2,3,5})"
        elif flag in res.witnesses:
            inst.witness = data.describe(res.witnesses[flag])
            if flag == "para_hamiltonian":
                L = data.lattice
                v = data.view(fam)
                bad = [j for j in range(len(L)) if not L.normal_flags[j] and not v.ok(j)]
                inst.extra["violator_types"] = _violator_types(data, bad)
        instances.append(inst)
    return instances, members


def check_t36(scope, ws):
    instances, members = _insoluble_classification(
        scope, ws, "nilpotent", "para_hamiltonian", ("A5", "SL(2,5)"), "para-nilpotent-Hamiltonian"
    )
    return [e.label for e in scope], instances, [f"insoluble para-nilpotent-Hamiltonian: {members}"]


def check_c37(scope, ws):
    instances, members = _insoluble_classification(
        scope, ws, "nilpotent", "biminimal_non", ("A5", "SL(2,5)"), "biminimal non-nilpotent"
    )
    return [e.label for e in scope], instances, [f"insoluble biminimal non-nilpotent: {members}"]


def check_c38(scope, ws):
    instances, members = _insoluble_classification(
        scope, ws, "abelian", "biminimal_non", ("A5",), "biminimal non-abelian"
    )
    for inst in instances:
        data = ws.get(next(e for e in scope if e.label == inst.group))
        if inst.status == "skip" or data.name != "SL(2,5)":
            continue
        w = inst.witness
        ok = (
            w is not None
            and w["name"] == "SL(2,3)"
            and not data.lattice.normal_flags[w["index"]]
            and are_isomorphic(data.lattice[w["index"]].as_group(), reference("SL(2,3)"), ws.cap)
        )
        if not ok:
            inst.status = "fail"
            inst.detail += "; expected an SL(2,3) witness"
        else:
            inst.detail += "; witness SL(2,3) is non-normal, non-abelian, not minimal non-abelian"
    return [e.label for e in scope], instances, [f"insoluble biminimal non-abelian: {members}"]


def check_t310(scope, ws):
    instances = []
    offenders = 0
    for e in scope:
        data = ws.get(e)
        meta = data.predicates("nilpotent")["meta_hamiltonian"]
        if not meta:
            instances.append(Instance(e.label, "skip", "not meta-nilpotent-Hamiltonian"))
            continue
        if not data.soluble:
            offenders += 1
        instances.append(Instance(e.label, "pass" if data.soluble else "fail", f"soluble: {data.soluble}"))
    return [e.label for e in scope], instances, [f"insoluble and meta-nilpotent-Hamiltonian: {offenders}"]




def check_l45(scope, ws):
    from ..structure.subgroups import normal_closure

    instances = []
    for fam in ("nilpotent", "abelian"):
        for e in scope:
            data = ws.get(e)
            tag = f"{e.label} [{fam}]"
            if not data.predicates(fam)["para_hamiltonian"]:
                instances.append(Instance(tag, "skip", f"not para-{fam}-Hamiltonian"))
                continue
            L, v = data.lattice, data.view(fam)
            checked, bad = 0, None
            for i in range(len(L)):
                if L.normal_flags[i] or v.member[i]:
                    continue
                checked += 1
                closure = L.index(normal_closure(data.group, L[i]))
                if not L.is_maximal_in(i, closure):
                    bad = i
                    break
            inst = Instance(tag, "pass" if bad is None else "fail",
                            f"{checked} non-normal non-{fam} subgroups, each maximal in its normal closure"
                            if bad is None else "subgroup not maximal in its normal closure")
            if bad is not None:
                inst.witness = data.describe(bad)
            instances.append(inst)
    return [e.label for e in scope], instances, []


def check_t48(scope, ws):
    instances = []
    for e in scope:
        data = ws.get(e)
        if not data.predicates("nilpotent")["biminimal_non"]:
            instances.append(Instance(e.label, "skip", "not biminimal non-nilpotent"))
            continue
        ok = len(data.primes) <= 3
        instances.append(Instance(e.label, "pass" if ok else "fail", f"pi={_pi(data)}"))
    return [e.label for e in scope], instances, []


def check_l54(scope, ws):
    from ..predicates import non_family_intersection

    instances = []
    for fam in ("nilpotent", "abelian"):
        for e in scope:
            data = ws.get(e)
            tag = f"{e.label} [{fam}]"
            if not data.predicates(fam)["meta_hamiltonian"]:
                instances.append(Instance(tag, "skip", f"not meta-{fam}-Hamiltonian"))
                continue
            L, v = data.lattice, data.view(fam)
            I = non_family_intersection(data.group, L, fam)
            i = L.index(I)
            g3 = gamma(data.group, 3)
            contained = g3 <= I
            kind = "in family" if v.member[i] else ("minimal non" if v.minimal_non[i] else "neither")
            ok = contained and kind != "neither"
            instances.append(
                Instance(tag, "pass" if ok else "fail",
                         f"|gamma_3|={g3.order} <= |I|={I.order}: {contained}; I is {kind}")
            )
    return [e.label for e in scope], instances, []


CLAIMS: dict[str, tuple[str, Callable]] = {
    "T2.1": ("subgroups of PSL(2,q) for q in {4,5,7} match the classical list", check_t21),
    "T2.2": ("Sz(q) Hall orders: (q+2r+1)(q-2r+1) = q^2+1, factors odd", check_t22),
    "T2.3": ("A5 is minimal simple; minimal simple scope groups are on the list", check_t23),
    "T2.4": ("nilpotent: maximal subgroups normal and G' <= Phi(G)", check_t24),
    "L3.1": ("G/Phi(G) = Cp:Cq nonabelian implies G = C(p^m):C(q^n)", check_l31),
    "L3.2": ("H, H/Phi(G) minimal non-nilpotent implies Phi(G) <= Phi(H)", check_l32),
    "T3.3": ("G/Phi(G) = A5 and para-nilpotent-Hamiltonian implies A5 or SL(2,5)", check_t33),
    "L3.4": ("minimal simple and biminimal non-nilpotent implies A5", check_l34),
    "T3.6": ("insoluble para-nilpotent-Hamiltonian iff A5 or SL(2,5)", check_t36),
    "C3.7": ("insoluble biminimal non-nilpotent iff A5 or SL(2,5)", check_c37),
    "C3.8": ("insoluble biminimal non-abelian iff A5", check_c38),
    "T3.10": ("meta-nilpotent-Hamiltonian implies soluble", check_t310),
    "L4.5": ("para-X-Hamiltonian: non-normal non-X subgroups are maximal in their normal closure", check_l45),
    "T4.8": ("biminimal non-nilpotent: at most three prime divisors", check_t48),
    "L5.4": ("meta-X-Hamiltonian: gamma_3(G) <= I, I in X or minimal non-X", check_l54),
}


def check_claim(claim: str, scope=None, workspace: Workspace | None = None) -> ClaimReport:
    if claim not in CLAIMS:
        raise GroupError(f"unknown claim id {claim!r}; known: {', '.join(CLAIMS)}")
    scope = default_catalog() if scope is None else list(scope)
    if not scope and claim not in ("T2.1", "T2.2"):
        raise GroupError("scope must be nonempty")
    ws = workspace or Workspace()
    description, checker = CLAIMS[claim]
    start = time.perf_counter()
    labels, instances, notes = checker(scope, ws)
    by_label = {e.label: e for e in scope}
    for inst in instances:
        # a failure with no narrower witness points at the group itself
        base = inst.group.split(" [")[0]
        if inst.status == "fail" and inst.witness is None and base in by_label:
            data = ws.get(by_label[base])
            inst.witness = data.describe(data.lattice.top)
    report = ClaimReport(claim, description, labels, instances, notes)
    report.elapsed = time.perf_counter() - start
    return report


def check_all(scope=None, claims=None, workspace: Workspace | None = None) -> list[ClaimReport]:
    ws = workspace or Workspace()
    scope = default_catalog() if scope is None else list(scope)
    return [check_claim(c, scope, ws) for c in (claims or CLAIMS)]
