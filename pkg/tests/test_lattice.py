import json

import pytest

from hamiltonia.catalog import default_catalog, named
from hamiltonia.catalog import builders as b
from hamiltonia.errors import CapExceeded
from hamiltonia.structure import subgroup_lattice
from hamiltonia.structure.lattice import CacheMismatch, cached_lattice, lattice_from_json, lattice_to_json
from hamiltonia.structure.recognize import recognize_group

from oracles import all_subgroups, closure, is_subset_closed

SMALL = [e for e in default_catalog() if e.order <= 24]


def _as_sets(L):
    els = L.parent.table.elements
    return {frozenset(els[i] for i in H.elements()) for H in L}


@pytest.mark.parametrize("entry", SMALL, ids=lambda e: e.label)
def test_lattice_matches_exhaustive_search(entry):
    G = entry.group
    elements = closure([g.images for g in G.generators], G.degree)
    expected = all_subgroups(elements, G.degree)
    got = _as_sets(subgroup_lattice(G))
    assert got == expected
    assert all(is_subset_closed(S) for S in got)


@pytest.mark.parametrize("label,count", [("A5", 59), ("SL(2,5)", 76), ("S4", 30)])
def test_reference_counts_by_search(label, count):
    G = named(label).group
    elements = closure([g.images for g in G.generators], G.degree)
    expected = all_subgroups(elements, G.degree)
    assert len(expected) == count
    assert _as_sets(subgroup_lattice(G)) == expected


def test_a5_profile():
    L = subgroup_lattice(named("A5").group)
    assert len(L.conjugacy_classes) == 9
    names = {}
    for H in L:
        n = recognize_group(H.as_group())
        names[n] = names.get(n, 0) + 1
    assert names == {"C1": 1, "C2": 15, "C3": 10, "C2^2": 5, "C5": 6, "S3": 10, "D10": 6, "A4": 5, "A5": 1}


def test_counts():
    assert len(subgroup_lattice(b.cyclic(6).group)) == 4
    assert len(subgroup_lattice(named("PSL(2,7)").group)) == 179
    assert len(subgroup_lattice(named("S5").group)) == 156


def test_lattice_order_and_inclusion():
    L = subgroup_lattice(named("S4").group)
    keys = [H.sort_key() for H in L]
    assert keys == sorted(keys)
    assert L[0].is_trivial() and L[L.top].is_whole()
    pairs = set(L.inclusion())
    for i in range(len(L)):
        for j in range(len(L)):
            assert ((i, j) in pairs) == (L[i] <= L[j])
    for i in range(len(L)):
        for j in L.maximal_in(i):
            assert L[j] < L[i]
            assert not any(L[j] < L[k] < L[i] for k in range(len(L)))


def test_conjugacy_classes_partition():
    L = subgroup_lattice(named("SL(2,5)").group)
    flat = sorted(i for c in L.conjugacy_classes for i in c)
    assert flat == list(range(len(L)))
    for c in L.conjugacy_classes:
        assert len({L[i].order for i in c}) == 1
        assert (len(c) == 1) == L.normal_flags[c[0]]


def test_cap():
    with pytest.raises(CapExceeded):
        subgroup_lattice(b.matrix_group("PSL", 2, 11).group)


@pytest.mark.parametrize("entry", default_catalog(), ids=lambda e: e.label)
def test_cache_round_trip(entry, tmp_path):
    G = entry.group
    fresh, status = cached_lattice(G, tmp_path)
    assert status == "miss"
    again, status = cached_lattice(G, tmp_path)
    assert status == "hit"
    assert again.subgroup_bits() == fresh.subgroup_bits()


def test_cache_rejects_other_group(tmp_path):
    text = lattice_to_json(subgroup_lattice(named("S4").group))
    with pytest.raises(CacheMismatch):
        lattice_from_json(named("SL(2,3)").group, text)
    doc = json.loads(text)
    doc["subgroups"] = doc["subgroups"][:-1]
    with pytest.raises(CacheMismatch):
        lattice_from_json(named("S4").group, json.dumps(doc))


def test_corrupt_cache_rebuilt(tmp_path, caplog):
    G = named("A4").group
    cached_lattice(G, tmp_path)
    for f in tmp_path.iterdir():
        f.write_text("{ not json")
    L, status = cached_lattice(G, tmp_path)
    assert status == "rebuilt" and len(L) == 10
    assert any("rebuil" in r.message or "cache" in r.message for r in caplog.records)
