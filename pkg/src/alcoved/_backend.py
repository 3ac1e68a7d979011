"""Kernel selection.

The compiled extension is used when it imports and the instance fits in
int64 with headroom; otherwise the pure-Python kernels run.  Setting
``ALCOVED_PURE_PYTHON=1`` forces the Python path for the whole process.
"""

from __future__ import annotations

import os

from . import _kernels_py

_compiled = None
if os.environ.get("ALCOVED_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled  # type: ignore[no-redef]
    except ImportError:  # extension not built
        _compiled = None

# Closure entries are combined three at a time; keep far away from 2**63.
_CLOSURE_LIMIT = 1 << 40
# Bareiss products are bounded by the square of a Hadamard column bound.
_HADAMARD_SQ_LIMIT = 1 << 60


def compiled_available() -> bool:
    return _compiled is not None


def active_name() -> str:
    return _compiled.NAME if _compiled is not None else _kernels_py.NAME


def closure_kernel(D, force_python: bool = False):
    if force_python or _compiled is None:
        return _kernels_py
    if max(abs(x) for row in D for x in row) >= _CLOSURE_LIMIT:
        return _kernels_py
    return _compiled


def cells_kernel(points, heights, dim: int, force_python: bool = False):
    if force_python or _compiled is None or not points:
        return _kernels_py
    width = max(abs(x) for p in points for x in p) * 2
    height = max(abs(x) for h in heights for x in h) * 2
    bound_sq = max(1, dim * width * width) ** dim * max(1, dim * height * height)
    if bound_sq >= _HADAMARD_SQ_LIMIT:
        return _kernels_py
    return _compiled
