"""Alcoved polytopes: validation, named families and the seeded random generator."""

from __future__ import annotations

from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter
from typing import Iterable

from .errors import CyclicRelations, NotFullDimensional
from .lattice_core import (
    HRep,
    canonicalize,
    is_full_dimensional,
    tight_bounds,
)

MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class AlcovedPolytope:
    """A bounded, full-dimensional polytope cut out by alcove hyperplanes."""

    hrep: HRep
    label: str = field(default="", compare=False)

    @property
    def dim(self) -> int:
        return self.hrep.dim

    @property
    def constraints(self):
        return self.hrep.constraints


def validate(h: HRep | Iterable, dim: int | None = None, label: str = "") -> AlcovedPolytope:
    """Check boundedness, feasibility and full dimension; return the polytope.

    Accepts an :class:`HRep` or an iterable of ``(i, j, k)`` triples together
    with ``dim``.
    """
    if not isinstance(h, HRep):
        if dim is None:
            raise TypeError("dim is required when passing raw constraints")
        h = canonicalize(h, dim)
    else:
        h = canonicalize(h.constraints, h.dim)
    tight_bounds(h)
    if not is_full_dimensional(h):
        raise NotFullDimensional("constraints force an implicit equation")
    return AlcovedPolytope(h, label)


def make_qd(d: int) -> AlcovedPolytope:
    """``Q_d``: all ``x_i - x_j <= 1`` for ``0 <= i != j <= d``."""
    if d < 1:
        raise ValueError("Q_d needs d >= 1")
    cons = [(i, j, 1) for i in range(d + 1) for j in range(d + 1) if i != j]
    return validate(cons, d, label=f"Q_{d}")


def make_cube(d: int, lo: int = 0, hi: int = 1) -> AlcovedPolytope:
    cons = [(i, 0, hi) for i in range(1, d + 1)] + [(0, i, -lo) for i in range(1, d + 1)]
    return validate(cons, d, label=f"[{lo},{hi}]^{d}")


def make_hypersimplex(d: int, k: int) -> AlcovedPolytope:
    """The hypersimplex ``Delta(d, k)`` in partial-sum coordinates ``z_1..z_{d-1}``.

    ``z_j = x_1 + ... + x_j``; the last partial sum is pinned to ``k`` and
    eliminated, which turns ``0 <= z_d - z_{d-1} <= 1`` into bounds on
    ``z_{d-1}``.
    """
    if d < 2 or not 1 <= k <= d - 1:
        raise ValueError(f"hypersimplex needs d >= 2 and 1 <= k <= d-1, got ({d}, {k})")
    n = d - 1
    cons = [(1, 0, 1), (0, 1, 0)]
    for i in range(2, n + 1):
        cons += [(i, i - 1, 1), (i - 1, i, 0)]
    # 0 <= k - z_{d-1} <= 1
    cons += [(n, 0, k), (0, n, 1 - k)]
    return validate(cons, n, label=f"Delta({d},{k})")


def make_order_polytope(n: int, relations: Iterable[tuple[int, int]] = ()) -> AlcovedPolytope:
    """Order polytope of a poset on ``1..n``; ``(i, j)`` means ``p_i <= p_j``."""
    relations = list(relations)
    ts: TopologicalSorter = TopologicalSorter({i: () for i in range(1, n + 1)})
    for i, j in relations:
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"relation ({i}, {j}) outside 1..{n}")
        if i != j:
            ts.add(j, i)
    try:
        ts.prepare()
    except CycleError as exc:
        raise CyclicRelations(f"relations contain a cycle: {exc.args[1]}") from None
    cons = [(i, 0, 1) for i in range(1, n + 1)] + [(0, i, 0) for i in range(1, n + 1)]
    cons += [(i, j, 0) for i, j in relations if i != j]
    return validate(cons, n, label=f"O(poset on {n})")


def make_chain_simplex(d: int, scale: int = 1) -> AlcovedPolytope:
    """``scale`` times the order polytope of the chain ``1 < 2 < ... < d``."""
    cons = [(0, 1, 0), (d, 0, scale)] + [(i, i + 1, 0) for i in range(1, d)]
    return validate(cons, d, label=f"{scale}*chain_{d}")


def make_sharp_distance_example(d: int, cut: bool = True) -> AlcovedPolytope:
    """``(d+1)`` times the chain simplex, cut by ``x_1 <= d``.

    The cut facet sits at lattice distance ``d-1`` from the only interior
    lattice point ``(1, 2, ..., d)``.  With ``cut=False`` the reflexive
    simplex itself is returned.
    """
    if d < 2:
        raise ValueError("sharp distance example needs d >= 2")
    cons = [(0, 1, 0), (d, 0, d + 1)] + [(i, i + 1, 0) for i in range(1, d)]
    if cut:
        cons.append((1, 0, d))
    return validate(cons, d, label=f"sharp_{d}" if cut else f"{d + 1}*chain_{d}")


class SplitMix64:
    """64-bit SplitMix generator; identical streams on every platform."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def uniform(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]`` by rejection sampling."""
        span = hi - lo + 1
        limit = (1 << 64) - ((1 << 64) % span)
        while True:
            x = self.next()
            if x < limit:
                return lo + x % span


def derive_seed(seed: int, index: int) -> int:
    """Per-instance seed: first SplitMix64 output for state ``seed + index``."""
    return SplitMix64(seed + index).next()


# (pair bounds, upper box bounds, lower box bounds), inclusive ranges
GENERATOR_RANGES = {
    False: ((1, 5), (1, 3), (0, 2)),
    True: ((1, 3), (1, 2), (0, 1)),
}


def random_constraints(d: int, seed: int, small: bool = False) -> list[tuple[int, int, int]]:
    rng = SplitMix64(seed)
    pair, upper, lower = GENERATOR_RANGES[bool(small)]
    cons = []
    for i in range(1, d + 1):
        for j in range(1, d + 1):
            if i != j:
                cons.append((i, j, rng.uniform(*pair)))
    for i in range(1, d + 1):
        cons.append((i, 0, rng.uniform(*upper)))
    for i in range(1, d + 1):
        cons.append((0, i, rng.uniform(*lower)))
    return cons


def random_alcoved(d: int, seed: int, small: bool = False) -> AlcovedPolytope:
    """Random alcoved polytope containing ``[0,1]^d``.

    Every bound is drawn independently, so the result contains the unit cube
    and lies in ``[-2,3]^d`` (``[-1,2]^d`` when ``small``).
    """
    if d < 2:
        raise ValueError("random generator needs d >= 2")
    return validate(random_constraints(d, seed, small), d, label=f"random(d={d},seed={seed})")
