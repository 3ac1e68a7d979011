import os
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from alcoved import _backend, _kernels_py
from alcoved.enumeration import lattice_points
from alcoved.lattice_core import shortest_path_closure
from alcoved.polytopes import random_alcoved
from alcoved.triangulation import lift_height

compiled = pytest.mark.skipif(not _backend.compiled_available(), reason="extension not built")


@compiled
@given(st.integers(2, 5), st.integers(0, 2**64 - 1), st.booleans())
def test_enumeration_kernels_agree(d, seed, small):
    from alcoved import _kernels

    D = shortest_path_closure(random_alcoved(d, seed, small).hrep)
    assert _kernels.count_points(D, 10**7) == _kernels_py.count_points(D, 10**7)
    assert _kernels.enumerate_points(D, 10**7) == _kernels_py.enumerate_points(D, 10**7)


@compiled
@settings(max_examples=15)
@given(st.integers(0, 2**64 - 1), st.lists(st.integers(-3, 3), min_size=1, max_size=40))
def test_cell_kernels_agree(seed, third):
    from alcoved import _kernels

    ps = lattice_points(random_alcoved(2, seed, small=True))
    A = list(ps.points)
    heights = [
        [0 if m else 1 for m in ps.interior_mask],
        [lift_height(p) for p in A],
        [third[i % len(third)] for i in range(len(A))],
    ]
    assert _kernels.regular_cells(A, heights, 2) == _kernels_py.regular_cells(A, heights, 2)


def test_huge_entries_use_python():
    D = [[0, 1 << 50], [0, 0]]
    assert _backend.closure_kernel(D) is _kernels_py
    assert _backend.cells_kernel([(1 << 40, 0)], [[1]], 2) is _kernels_py


def test_pure_python_switch():
    env = dict(os.environ, ALCOVED_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from alcoved import kernel_backend; print(kernel_backend())"],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"
