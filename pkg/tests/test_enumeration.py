import pytest
from hypothesis import given, strategies as st

from alcoved import _backend, _kernels_py
from alcoved.enumeration import (
    count_dilate,
    count_interior,
    interior_lattice_points,
    lattice_points,
)
from alcoved.errors import EnumerationBudgetExceeded
from alcoved.lattice_core import shortest_path_closure
from alcoved.polytopes import (
    make_chain_simplex,
    make_cube,
    make_qd,
    make_sharp_distance_example,
    random_alcoved,
)

from oracles import box_scan


def test_qd_points():
    assert len(lattice_points(make_qd(2))) == 7
    ps = lattice_points(make_qd(3))
    assert len(ps) == 15 and ps.interior == [(0, 0, 0)]


def test_unit_cube_points():
    ps = lattice_points(make_cube(3))
    assert len(ps) == 8 and ps.interior == []
    assert len(ps.boundary) == 8


@pytest.mark.parametrize("t", range(6))
def test_square_dilates(t):
    assert count_dilate(make_cube(2), t) == (t + 1) ** 2


def test_small_counts():
    assert count_dilate(make_qd(2), 1) == 7
    assert count_dilate(make_chain_simplex(3), 2) == 10


def test_interior_points():
    for d in range(1, 5):
        assert interior_lattice_points(make_qd(d)) == [(0,) * d]
    assert interior_lattice_points(make_sharp_distance_example(3)) == [(1, 2, 3)]
    assert interior_lattice_points(make_cube(3)) == []
    assert count_interior(make_cube(2), 3) == 4


def test_budget():
    with pytest.raises(EnumerationBudgetExceeded):
        lattice_points(make_cube(3, 0, 9), budget=100)
    with pytest.raises(EnumerationBudgetExceeded):
        count_dilate(make_cube(4), 20, budget=100)


def test_negative_dilate():
    with pytest.raises(ValueError):
        count_dilate(make_qd(2), -1)


@given(st.integers(2, 3), st.integers(0, 2**64 - 1), st.booleans(), st.integers(1, 2))
def test_dfs_matches_box_scan(d, seed, small, t):
    P = random_alcoved(d, seed, small)
    tri = P.hrep.triples()
    assert count_dilate(P, t) == len(box_scan(tri, d, t))
    if t == 1:
        assert list(lattice_points(P).points) == box_scan(tri, d)
        assert interior_lattice_points(P) == box_scan(tri, d, strict=True)


@pytest.mark.skipif(not _backend.compiled_available(), reason="extension not built")
@given(st.integers(2, 4), st.integers(0, 2**64 - 1), st.integers(1, 3))
def test_kernels_agree(d, seed, t):
    P = random_alcoved(d, seed)
    assert count_dilate(P, t) == count_dilate(P, t, force_python=True)
    assert lattice_points(P) == lattice_points(P, force_python=True)


def test_python_kernel_node_count():
    D = shortest_path_closure(make_cube(2, 0, 4).hrep)
    assert _kernels_py.count_points(D, 10**6) == (25, 5)
