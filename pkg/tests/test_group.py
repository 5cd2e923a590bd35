import pytest

from hamiltonia import CapExceeded, DegreeMismatch, PermGroup, Permutation
from hamiltonia.catalog import default_catalog, named
from hamiltonia.catalog import builders as b
from hamiltonia.group import enumerate_elements, group_from_generators, membership

from oracles import closure

P = Permutation.parse


def test_a5_from_two_cycles():
    G = group_from_generators(5, [P("(1 2 3 4 5)", 5), P("(1 2 3)", 5)])
    assert G.order == 60 == len(closure([g.images for g in G.generators], 5))


def test_no_generators():
    assert group_from_generators(4, []).order == 1


def test_s4():
    assert group_from_generators(4, [P("(1 2)", 4), P("(1 2 3 4)", 4)]).order == 24


def test_membership():
    G = group_from_generators(5, [P("(1 2 3 4 5)", 5), P("(1 2 3)", 5)])
    assert membership(G, P("(1 2 3)", 5))
    assert not membership(G, P("(1 2)", 5))
    assert Permutation.identity(5) in G
    with pytest.raises(DegreeMismatch):
        G.contains(P("(1 2)", 3))


def test_element_tables():
    assert len(enumerate_elements(group_from_generators(3, []))) == 1
    S3 = named("S3").group
    A5 = named("A5").group
    assert set(S3.element_table.elements) == closure([g.images for g in S3.generators], 3)
    assert len(enumerate_elements(A5)) == 60
    assert enumerate_elements(A5).elements[0] == tuple(range(5))


def test_element_table_sorted():
    els = named("S4").group.element_table.elements
    assert list(els) == sorted(els)


def test_order_cap():
    with pytest.raises(CapExceeded):
        PermGroup(10, b.symmetric(10).group.generators, order_cap=10**6)
    G = PermGroup(8, b.symmetric(8).group.generators, element_cap=1000)
    assert G.order == 40320 and not G.has_element_table()
    with pytest.raises(CapExceeded):
        G.element_table


@pytest.mark.parametrize("entry", [e for e in default_catalog() if e.order <= 2000], ids=lambda e: e.label)
def test_chain_order_matches_closure(entry):
    G = entry.group
    assert G.order == len(closure([g.images for g in G.generators], G.degree))


@pytest.mark.parametrize("kind,q", [("PSL", 8), ("PGL", 7), ("SL", 7), ("GL", 5), ("PSL", 11)])
def test_chain_order_larger(kind, q):
    G = b.matrix_group(kind, 2, q).group
    assert G.order == len(closure([g.images for g in G.generators], G.degree))


def test_sift_membership_agrees_with_closure():
    G = named("PSL(2,7)").group
    els = closure([g.images for g in G.generators], G.degree)
    S = b.symmetric(G.degree).group
    import random

    rng = random.Random(3)
    for _ in range(200):
        x = Permutation.random(G.degree, rng)
        assert G.contains(x) == (x.images in els)
    for x in list(els)[:50]:
        assert G.contains(Permutation(x))
    assert S.order == 40320


def test_table_mul_and_inverse():
    T = named("S4").group.table
    for i in range(T.n):
        assert T.mul[i][T.inv[i]] == 0
        for j in range(0, T.n, 5):
            x, y = T.elements[i], T.elements[j]
            assert T.elements[T.mul[i][j]] == tuple(y[k] for k in x)
