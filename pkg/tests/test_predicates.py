import pytest

from hamiltonia.catalog import default_catalog, named
from hamiltonia.errors import GroupError
from hamiltonia.predicates import (
    basic_flags,
    evaluate,
    family,
    is_biminimal_non,
    is_meta_hamiltonian,
    is_minimal_non,
    is_para_hamiltonian,
    non_family_intersection,
    view,
)
from hamiltonia.structure import gamma, recognize_group, subgroup_lattice
from hamiltonia.structure.subgroups import normal_closure

CATALOG = default_catalog()


def _setup(label):
    G = named(label).group if label not in ("C6", "C2xA4") else {e.label: e for e in CATALOG}[label].group
    return G, subgroup_lattice(G)


def _name(L, i):
    return recognize_group(L[i].as_group())


def test_basic_flags_examples():
    G, L = _setup("Q8")
    f = basic_flags(G, L)
    assert f.nilpotent and f.dedekind and not f.abelian
    G, L = _setup("A5")
    f = basic_flags(G, L)
    assert f.simple and f.perfect and not f.soluble
    G, L = _setup("S4")
    f = basic_flags(G, L)
    assert f.soluble and not f.nilpotent and not f.dedekind


def test_minimal_non_nilpotent():
    G, L = _setup("S3")
    assert is_minimal_non(G, L, "nilpotent")
    G, L = _setup("S4")
    v = is_minimal_non(G, L, "nilpotent")
    assert not v and _name(L, v.witness) == "S3"
    G, L = _setup("C6")
    assert not is_minimal_non(G, L, "nilpotent")


def test_biminimal():
    for label in ("A5", "SL(2,5)"):
        G, L = _setup(label)
        assert is_biminimal_non(G, L, "nilpotent")
    G, L = _setup("SL(2,5)")
    fv = view(L, "nilpotent")
    bad = {_name(L, i) for i in range(L.top) if not fv.member[i]}
    assert bad == {"SL(2,3)", "Q12", "Q20"}
    G, L = _setup("S5")
    v = is_biminimal_non(G, L, "nilpotent")
    assert not v
    w = L[v.witness]
    assert not fv_ok(L, v.witness)
    assert w.order in (12, 24)


def fv_ok(L, i):
    return view(L, "nilpotent").ok(i)


def test_meta():
    G, L = _setup("S3")
    assert is_meta_hamiltonian(G, L, "nilpotent")
    G, L = _setup("S4")
    v = is_meta_hamiltonian(G, L, "nilpotent")
    assert not v and _name(L, v.witness) == "S3" and not L.normal_flags[v.witness]
    G, L = _setup("A5")
    assert not is_meta_hamiltonian(G, L, "nilpotent")


def test_para():
    G, L = _setup("A5")
    assert is_para_hamiltonian(G, L, "nilpotent")
    G, L = _setup("C2xA5")
    v = is_para_hamiltonian(G, L, "nilpotent")
    assert not v
    fv = view(L, "nilpotent")
    violators = {_name(L, i) for i in range(len(L)) if not L.normal_flags[i] and not fv.ok(i)}
    assert "C2xA4" in violators
    G, L = _setup("Q8")
    assert not is_para_hamiltonian(G, L, "nilpotent")


def test_non_family_intersection():
    G, L = _setup("S3xC3")
    I = non_family_intersection(G, L, "nilpotent")
    assert I.order == 6 and _name(L, L.index(I)) == "S3"
    assert gamma(G, 3) <= I
    assert view(L, "nilpotent").minimal_non[L.index(I)]
    G, L = _setup("A5")
    assert non_family_intersection(G, L, "nilpotent").is_trivial()
    G, L = _setup("S3")
    assert non_family_intersection(G, L, "nilpotent").is_whole()


def test_unknown_family():
    with pytest.raises(GroupError):
        family("soluble")


def test_witness_is_first_violation():
    G, L = _setup("S4")
    v = is_meta_hamiltonian(G, L, "nilpotent")
    fv = view(L, "nilpotent")
    first = min(i for i in range(len(L)) if not fv.member[i] and not L.normal_flags[i])
    assert v.witness == first


@pytest.mark.parametrize("entry", CATALOG, ids=lambda e: e.label)
def test_cross_implications(entry):
    G = entry.group
    L = subgroup_lattice(G)
    res = {f: evaluate(G, f, L) for f in ("abelian", "nilpotent")}
    for f, r in res.items():
        fl = r.flags
        if fl["minimal_non"]:
            assert not fl["in_family"]
        if fl["biminimal_non"]:
            assert not fl["minimal_non"] and not fl["in_family"]
        if fl["dedekind"]:
            assert fl["meta_hamiltonian"]
        for k in ("minimal_non", "biminimal_non", "meta_hamiltonian", "para_hamiltonian"):
            if not fl[k]:
                assert k in r.witnesses and 0 <= r.witnesses[k] < len(L)
    if res["abelian"].flags["in_family"]:
        assert res["nilpotent"].flags["in_family"]
    # both families are subgroup closed
    for fam in ("abelian", "nilpotent"):
        member = view(L, fam).member
        for j in range(len(L)):
            if member[j]:
                assert all(member[i] for i in L.subgroups_of(j))


@pytest.mark.parametrize("entry", CATALOG, ids=lambda e: e.label)
def test_closer_property(entry):
    G = entry.group
    L = subgroup_lattice(G)
    for fam in ("abelian", "nilpotent"):
        if not is_para_hamiltonian(G, L, fam):
            continue
        fv = view(L, fam)
        for i in range(len(L)):
            if L.normal_flags[i] or fv.member[i]:
                continue
            assert L.is_maximal_in(i, L.index(normal_closure(G, L[i])))
