import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hamiltonia import DegreeMismatch, ParseError, Permutation
from hamiltonia.perm import compose, format_cycles, invert, parse_cycles

from oracles import mul


@st.composite
def perms(draw, degree=None):
    n = degree if degree is not None else draw(st.integers(1, 9))
    return Permutation(tuple(draw(st.permutations(range(n)))))


@st.composite
def triples(draw):
    n = draw(st.integers(1, 9))
    return draw(perms(n)), draw(perms(n)), draw(perms(n))


@settings(max_examples=1000)
@given(triples())
def test_product_associative(t):
    a, b, c = t
    assert (a * b) * c == a * (b * c)


@settings(max_examples=1000)
@given(perms())
def test_inverse_and_identity(a):
    e = Permutation.identity(a.degree)
    assert a * ~a == e == ~a * a
    assert a * e == a == e * a


@settings(max_examples=300)
@given(triples())
def test_product_matches_pointwise(t):
    a, b, _ = t
    assert (a * b).images == mul(a.images, b.images)
    for i in range(1, a.degree + 1):
        assert (a * b)(i) == b(a(i))


@settings(max_examples=300)
@given(perms())
def test_cycle_text_round_trip(a):
    assert Permutation.parse(str(a), a.degree) == a
    n = a.order()
    assert n == len({(a**k).images for k in range(n)})
    assert (a**n).is_identity()


def test_involution_squared():
    t = Permutation.parse("(1 2)", 2)
    assert (t * t).is_identity()


def test_compose_applies_left_operand_first():
    a = Permutation.parse("(1 2 3)", 3)
    b = Permutation.parse("(1 2)", 3)
    # 1 -> 2 -> 1, 2 -> 3 -> 3, 3 -> 1 -> 2
    assert compose(a, b) == Permutation.parse("(2 3)", 3)
    assert compose(b, a) == Permutation.parse("(1 3)", 3)


def test_invert_examples():
    assert invert(Permutation.identity(4)).is_identity()
    assert invert(Permutation.parse("(1 2 3)")) == Permutation.parse("(1 3 2)")
    x = Permutation.parse("(1 2)(3 4)")
    assert invert(x) == x


def test_identity_format():
    assert format_cycles(Permutation.identity(3)) == "()"
    assert str(Permutation.parse("(3 1 2)(5 4)", 6)) == "(1 2 3)(4 5)"


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        compose(Permutation.identity(3), Permutation.identity(4))


@pytest.mark.parametrize("text", ["(1 2", "(1 1)", "(1 2)(2 3)", "(a b)", "(0 1)"])
def test_malformed_cycles(text):
    with pytest.raises((ParseError, ValueError)):
        Permutation.parse(text, 5)


def test_parse_cycles_basic():
    assert parse_cycles("(1 2 3)(4 5)") == [(1, 2, 3), (4, 5)]
    assert parse_cycles("()") == []


def test_random_is_permutation():
    rng = random.Random(7)
    for _ in range(20):
        p = Permutation.random(6, rng)
        assert sorted(p.images) == list(range(6))


def test_parity():
    assert not Permutation.parse("(1 2)").is_even()
    assert Permutation.parse("(1 2 3)").is_even()
