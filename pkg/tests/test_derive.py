import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from char2interp.derive import KINDS, derive, four_lift_cells, lifts
from char2interp.errors import MultiplePoints, OutOfBox
from char2interp.lattice import PointMultiset, box

from conftest import EXAMPLE10, subset_of_box


def test_example10_vd_grid():
    d = derive(EXAMPLE10, 1, "vd")
    assert d.support() == {(0, 0), (1, 0), (1, 1)}
    assert d.grid_lines() == ["0 1", "1 1"]


def test_example10_dh_grid():
    d = derive(EXAMPLE10, 1, "dh")
    assert d.support() == {(0, 0), (0, 1), (1, 0)}
    assert d.grid_lines() == ["1 0", "1 1"]


@pytest.mark.parametrize("kind", KINDS)
def test_four_lifts_become_double(kind):
    cell = (1, 0)
    d = derive(lifts(cell, 1), 1, kind)
    assert d.counts == {cell: 2}


def test_empty_input():
    for kind in KINDS:
        assert derive([], 0, kind).counts == {}


def test_rejects_multisets():
    with pytest.raises(MultiplePoints):
        derive(PointMultiset([(0, 0), (0, 0)]), 0, "hv")


def test_rejects_points_outside_box():
    with pytest.raises(OutOfBox):
        derive([(4, 0)], 0, "hv")


def test_double_iff_four_lifts_exhaustive_t0():
    for mask in range(1 << 4):
        s = subset_of_box(1, mask)
        doubles = set(four_lift_cells(s, 0))
        for kind in KINDS:
            d = derive(s, 0, kind)
            assert {p for p, c in d.counts.items() if c == 2} == doubles


t_and_subset = st.integers(0, 1).flatmap(
    lambda t: st.tuples(
        st.just(t), st.integers(0, (1 << len(box(t + 1))) - 1)
    )
)


@given(t_and_subset)
@settings(max_examples=200, deadline=None)
def test_single_direction_sets_refine_mixed_ones(ts):
    t, mask = ts
    s = subset_of_box(t + 1, mask)
    hv = derive(s, t, "hv").support()
    vd = derive(s, t, "vd").support()
    dh = derive(s, t, "dh").support()
    assert derive(s, t, "hori").support() <= hv & dh
    assert derive(s, t, "vert").support() <= hv & vd
    assert derive(s, t, "diag").support() <= vd & dh


@given(t_and_subset, st.integers(0, 2**16 - 1))
@settings(max_examples=200, deadline=None)
def test_monotone_in_the_source(ts, extra_mask):
    t, mask = ts
    npts = len(box(t + 1))
    bigger_mask = mask | (extra_mask & ((1 << npts) - 1))
    small = subset_of_box(t + 1, mask)
    big = subset_of_box(t + 1, bigger_mask)
    for kind in KINDS:
        d_small = derive(small, t, kind)
        d_big = derive(big, t, kind)
        for p, c in d_small.counts.items():
            assert d_big.multiplicity(p) >= c
