import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from char2interp.errors import PointFormatError
from char2interp.lattice import (
    PointMultiset,
    binom_mod2,
    box,
    degree_order_index,
    format_points,
    lucas_bits,
    lucas_vector,
    parse_inline_points,
    parse_points,
    reduce_mod,
    triangle,
)

from conftest import EXAMPLE10


@pytest.mark.parametrize("n", [0, 1, 2, 7, 100])
def test_binom_k_zero(n):
    assert binom_mod2(n, 0) == 1


def test_binom_known_values():
    assert binom_mod2(2, 1) == 0
    assert binom_mod2(3, 1) == 1
    assert binom_mod2(1, 3) == 0  # k > n


@given(st.integers(0, 2000), st.integers(0, 2000))
@settings(max_examples=300, deadline=None)
def test_binom_matches_comb(n, k):
    assert binom_mod2(n, k) == math.comb(n, k) % 2


def test_degree_order_examples():
    assert degree_order_index(0, 0) == 0
    assert degree_order_index(1, 1) == 4
    assert degree_order_index(3, 0) == 9
    listed = [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0), (0, 3)]
    assert [degree_order_index(a, b) for a, b in listed] == list(range(7))


@pytest.mark.parametrize("m", range(0, 65))
def test_triangle_size(m):
    assert len(triangle(m)) == m * (m + 1) // 2


def test_triangle_small():
    assert triangle(0) == ()
    assert triangle(2) == ((0, 0), (0, 1), (1, 0))
    assert len(triangle(27)) == 378


def test_triangle_is_degree_order_prefix():
    for m in (1, 3, 8):
        tri = triangle(m)
        assert [degree_order_index(a, b) for a, b in tri] == list(range(len(tri)))


def test_box():
    assert box(0) == ((0, 0),)
    assert set(box(1)) == {(0, 0), (0, 1), (1, 0), (1, 1)}
    assert len(box(2)) == 16


def test_lucas_vectors_level1():
    assert lucas_vector(1, (0, 0)).vec.to_tuple() == (1, 0, 0)
    assert lucas_vector(1, (0, 1)).vec.to_tuple() == (1, 1, 0)
    assert lucas_vector(1, (1, 0)).vec.to_tuple() == (1, 0, 1)
    assert lucas_vector(1, (1, 1)).vec.to_tuple() == (1, 1, 1)


def test_lucas_vectors_level2():
    assert lucas_vector(2, (0, 0)).vec.to_tuple() == (1, 0, 0, 0, 0, 0, 0, 0, 0, 0)
    assert lucas_vector(2, (1, 2)).vec.to_tuple() == (1, 0, 1, 1, 0, 0, 0, 1, 0, 0)
    assert lucas_vector(2, (3, 3)).vec.to_tuple() == (1,) * 10


points_strategy = st.tuples(st.integers(0, 40), st.integers(0, 40))


@given(points_strategy, st.integers(0, 3), st.integers(0, 4), st.integers(0, 4))
@settings(max_examples=200, deadline=None)
def test_lucas_invariant_under_reduction(p, t, ki, kj):
    side = 1 << t
    shifted = (p[0] + ki * side, p[1] + kj * side)
    assert lucas_bits(t, p) == lucas_bits(t, shifted)


@given(points_strategy, st.integers(0, 3))
@settings(max_examples=100, deadline=None)
def test_lucas_constant_component(p, t):
    assert lucas_bits(t, p) & 1 == 1


def test_reduce_mod_identity_inside_box():
    s = PointMultiset([(0, 0), (1, 2), (1, 2), (3, 3)])
    assert reduce_mod(s, 2) == s


def test_reduce_mod_collapses():
    out = reduce_mod([(0, 0), (4, 0)], 2)
    assert out == PointMultiset({(0, 0): 2})


def test_multiset_basics():
    s = PointMultiset([(1, 2), (0, 0), (1, 2)])
    assert s.size == 3
    assert s.multiplicity((1, 2)) == 2
    assert s.support() == frozenset({(0, 0), (1, 2)})
    assert s.points() == [(0, 0), (1, 2), (1, 2)]
    with pytest.raises(ValueError):
        PointMultiset([(-1, 0)])


def test_parse_points_roundtrip():
    text = "# comment\n0 0\n\n1 2\n1 2\n3 3\n"
    s = parse_points(text)
    assert s == PointMultiset([(0, 0), (1, 2), (1, 2), (3, 3)])
    assert parse_points(format_points(s)) == s


def test_parse_points_errors():
    with pytest.raises(PointFormatError):
        parse_points("1\n")
    with pytest.raises(PointFormatError):
        parse_points("a b\n")
    with pytest.raises(PointFormatError):
        parse_points("-1 0\n")


def test_parse_inline():
    s = parse_inline_points("0,0;1,2;1,2;3,3")
    assert s == PointMultiset([(0, 0), (1, 2), (1, 2), (3, 3)])
    assert parse_inline_points("").size == 0
    with pytest.raises(PointFormatError):
        parse_inline_points("1;2")


def test_example10_is_a_set_in_b2():
    s = PointMultiset(EXAMPLE10)
    assert s.size == 10
    assert s.max_multiplicity() == 1
    assert reduce_mod(s, 2) == s
