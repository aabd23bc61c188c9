from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from apartment_fan.rootsys import (ClassificationError, SizeLimitError, build_root_system,
                                   dominant_base_for, enumerate_bases, is_simple_system,
                                   pairing)

import oracles

CLASSICAL = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("C", 3), ("C", 4),
             ("D", 4), ("D", 5), ("G", 2), ("F", 4)]
ROOT_COUNTS = {("E", 6): 72, ("E", 7): 126, ("E", 8): 240}
WEYL_ORDERS = {("A", 1): 2, ("A", 2): 6, ("A", 3): 24, ("B", 2): 8, ("B", 3): 48, ("C", 3): 48,
               ("D", 4): 192, ("G", 2): 12, ("F", 4): 1152, ("E", 6): 51840}


@pytest.mark.parametrize("family,n", CLASSICAL)
def test_roots_match_euclidean_model(family, n):
    rs = build_root_system(family, n)
    roots, simple = oracles.euclidean_roots(family, n)
    assert len(rs.all_roots) == len(roots)
    assert [list(r) for r in rs.cartan_matrix] == oracles.cartan_of(simple)
    # squared lengths up to the common scale of the model
    scale = Fraction(2) / max(oracles._ip(a, a) for a in simple)
    assert [rs.inner(a, a) for a in rs.simple_roots] == [scale * oracles._ip(a, a) for a in simple]


@pytest.mark.parametrize("key,count", sorted(ROOT_COUNTS.items()))
def test_exceptional_root_counts(key, count):
    assert len(build_root_system(*key).all_roots) == count


@pytest.mark.parametrize("key,order", sorted(WEYL_ORDERS.items()))
def test_weyl_order(key, order):
    rs = build_root_system(*key)
    assert rs.weyl_order == order
    if order <= 1152:
        assert len(list(enumerate_bases(rs))) == order


def test_root_order_is_documented():
    rs = build_root_system("A", 2)
    assert rs.all_roots[:3] == ((2, -1), (-1, 2), (1, 1))
    assert rs.all_roots[3:] == tuple(tuple(-c for c in a) for a in rs.all_roots[:3])
    heights = [rs.height(a) for a in rs.positive_roots]
    assert heights == sorted(heights)


@pytest.mark.parametrize("name", ["A3", "B3", "G2", "A1xA2", "C3"])
def test_reflections_permute_roots_and_preserve_inner(name):
    rs = build_root_system(name)
    roots = set(rs.all_roots)
    for i in range(rs.rank):
        assert {rs.reflect(a, i) for a in roots} == roots
        for a, b in combinations(rs.all_roots[:6], 2):
            assert rs.inner(rs.reflect(a, i), rs.reflect(b, i)) == rs.inner(a, b)


@pytest.mark.parametrize("name", ["A1", "A2", "B2", "G2", "A3", "A1xA1"])
def test_bases_are_all_simple_systems(name):
    rs = build_root_system(name)
    bases = list(enumerate_bases(rs))
    assert bases[0] == rs.standard_base
    found = {frozenset(b.roots) for b in bases}
    assert len(found) == len(bases)
    brute = {frozenset(c) for c in combinations(rs.all_roots, rs.rank) if is_simple_system(rs, c)}
    assert found == brute


def test_shortlex_witness_words():
    rs = build_root_system("A", 2)
    assert [b.word for b in enumerate_bases(rs)] == [(), (0,), (1,), (0, 1), (1, 0), (0, 1, 0)]


def test_guard_and_env_override(monkeypatch):
    rs = build_root_system("E", 8)
    with pytest.raises(SizeLimitError) as exc:
        enumerate_bases(rs)
    assert exc.value.order == 696729600
    a2 = build_root_system("A", 2)
    monkeypatch.setenv("APARTMENT_FAN_GUARD", "5")
    with pytest.raises(SizeLimitError):
        enumerate_bases(a2)
    assert len(list(enumerate_bases(a2, guard=6))) == 6


@pytest.mark.parametrize("family,n", [("A", 0), ("B", 1), ("D", 3), ("E", 5), ("G", 3),
                                      ("Q", 2), ("F", 3)])
def test_invalid_types(family, n):
    with pytest.raises(ClassificationError):
        build_root_system(family, n)


def test_pairing_examples():
    rs = build_root_system("A", 2)
    a1, a2 = rs.simple_roots
    assert pairing(rs, a1, a2) == -1
    assert pairing(rs, (1, 0), a2) == 0
    assert pairing(rs, a1, a1) == 2


def test_dominant_base_example():
    rs = build_root_system("A", 2)
    assert dominant_base_for(rs, (-1, 2)).word == (0,)


vectors = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), min_size=3,
                   max_size=3)


@given(vectors)
def test_dominant_base_contains_vector(v):
    rs = build_root_system("B", 3)
    base = dominant_base_for(rs, v)
    assert all(rs.evaluate(a, v) >= 0 for a in base.roots)


@given(st.lists(st.integers(0, 2), max_size=8))
def test_inverse_and_word_agree(word):
    rs = build_root_system("A", 3)
    w = rs.element(word)
    assert rs.multiply(w, rs.inverse(w)) == rs.identity
    assert rs.element(w.word) == w
    assert len(w.word) <= len(word)


def test_reflection_in_root():
    rs = build_root_system("G", 2)
    for a in rs.positive_roots:
        s = rs.reflection_in(a)
        assert s.act(a) == tuple(-c for c in a)
        assert rs.multiply(s, s) == rs.identity
