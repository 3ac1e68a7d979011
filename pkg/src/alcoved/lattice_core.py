"""Difference-constraint systems ``x_i - x_j <= k`` with the convention ``x_0 = 0``.

Every alcoved polytope is stored as such a system.  Node ``0`` of the
constraint graph is the virtual coordinate; a constraint ``x_i - x_j <= k``
is the edge ``j -> i`` of weight ``k``.  Shortest paths from ``0`` give the
coordinate maxima, shortest paths into ``0`` the minima.

Everything is exact: bounds are Python ints, rational points are
:class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, NamedTuple, Sequence

from .errors import DimensionMismatch, IndexOutOfRange, Infeasible, Unbounded

Rational = Fraction
LatticePoint = tuple  # tuple[int, ...]


class Constraint(NamedTuple):
    """The half-space ``x_i - x_j <= bound`` (``x_0`` is identically zero)."""

    i: int
    j: int
    bound: int

    def evaluate(self, point: Sequence) -> object:
        """Return ``x_i - x_j`` at ``point`` (coordinates indexed from 1)."""
        xi = point[self.i - 1] if self.i else 0
        xj = point[self.j - 1] if self.j else 0
        return xi - xj

    def slack(self, point: Sequence) -> object:
        return self.bound - self.evaluate(point)

    def normal(self, dim: int) -> tuple[int, ...]:
        v = [0] * dim
        if self.i:
            v[self.i - 1] += 1
        if self.j:
            v[self.j - 1] -= 1
        return tuple(v)

    def describe(self) -> str:
        if self.j == 0:
            return f"x_{self.i} <= {self.bound}"
        if self.i == 0:
            return f"-x_{self.j} <= {self.bound}"
        return f"x_{self.i} - x_{self.j} <= {self.bound}"


@dataclass(frozen=True)
class HRep:
    """Canonical difference-constraint system in ``dim`` variables.

    At most one constraint per ordered pair ``(i, j)``, sorted by ``(i, j)``.
    Build instances through :func:`canonicalize`.
    """

    dim: int
    constraints: tuple[Constraint, ...]

    def triples(self) -> list[list[int]]:
        return [[c.i, c.j, c.bound] for c in self.constraints]

    def bound_of(self, i: int, j: int) -> int | None:
        for c in self.constraints:
            if c.i == i and c.j == j:
                return c.bound
        return None

    def __len__(self) -> int:
        return len(self.constraints)


def canonicalize(constraints: Iterable, dim: int) -> HRep:
    """Deduplicate to the tightest bound per ordered pair and sort by ``(i, j)``."""
    if dim < 1:
        raise IndexOutOfRange(f"dimension must be positive, got {dim}")
    best: dict[tuple[int, int], int] = {}
    for c in constraints:
        i, j, k = (int(x) for x in c)
        if not (0 <= i <= dim and 0 <= j <= dim):
            raise IndexOutOfRange(f"constraint ({i}, {j}, {k}) outside 0..{dim}")
        if i == j:
            raise IndexOutOfRange(f"constraint ({i}, {j}, {k}) has i == j")
        if (i, j) not in best or k < best[(i, j)]:
            best[(i, j)] = k
    return HRep(dim, tuple(Constraint(i, j, best[(i, j)]) for i, j in sorted(best)))


def _edges(h: HRep) -> list[tuple[int, int, int]]:
    return [(c.j, c.i, c.bound) for c in h.constraints]


def bellman_ford(
    n: int,
    edges: Sequence[tuple[int, int, object]],
    source: int | None,
    add: Callable = lambda a, b: a + b,
    zero: object = 0,
) -> list:
    """Single-source shortest paths on nodes ``0..n-1``.

    ``source=None`` starts every node at ``zero`` (a virtual super-source),
    which detects negative cycles anywhere in the graph.  Unreachable nodes
    get ``None``.  Raises :class:`Infeasible` on a negative cycle.
    """
    dist: list = [zero] * n if source is None else [None] * n
    if source is not None:
        dist[source] = zero
    for _ in range(n - 1):
        changed = False
        for u, v, w in edges:
            if dist[u] is None:
                continue
            cand = add(dist[u], w)
            if dist[v] is None or cand < dist[v]:
                dist[v] = cand
                changed = True
        if not changed:
            return dist
    for u, v, w in edges:
        if dist[u] is not None and (dist[v] is None or add(dist[u], w) < dist[v]):
            raise Infeasible("negative cycle in the constraint graph")
    return dist


def tight_bounds(h: HRep) -> list[tuple[int, int]]:
    """Exact ``[lo_i, hi_i]`` for each coordinate ``i = 1..dim``."""
    n = h.dim + 1
    edges = _edges(h)
    bellman_ford(n, edges, None)
    upper = bellman_ford(n, edges, 0)
    lower = bellman_ford(n, [(v, u, w) for u, v, w in edges], 0)
    out = []
    for i in range(1, n):
        if upper[i] is None or lower[i] is None:
            raise Unbounded(i)
        out.append((-lower[i], upper[i]))
    return out


def shortest_path_closure(h: HRep) -> list[list[int]]:
    """All-pairs shortest paths ``D[j][i] = max (x_i - x_j)`` over the polytope.

    Requires a bounded, feasible system; then every entry is finite.
    """
    tight_bounds(h)  # raises Infeasible / Unbounded
    n = h.dim + 1
    D: list[list] = [[None] * n for _ in range(n)]
    for a in range(n):
        D[a][a] = 0
    for c in h.constraints:
        if D[c.j][c.i] is None or c.bound < D[c.j][c.i]:
            D[c.j][c.i] = c.bound
    for m in range(n):
        Dm = D[m]
        for a in range(n):
            dam = D[a][m]
            if dam is None:
                continue
            Da = D[a]
            for b in range(n):
                if Dm[b] is None:
                    continue
                cand = dam + Dm[b]
                if Da[b] is None or cand < Da[b]:
                    Da[b] = cand
    for a in range(n):
        for b in range(n):
            if D[a][b] is None:
                D[a][b] = D[a][0] + D[0][b]
    return D


def _sym_add(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    return (a[0] + b[0], a[1] + b[1])


def is_full_dimensional(h: HRep) -> bool:
    """Whether the open system ``x_i - x_j < k`` is feasible.

    Each edge weighs ``(k, -1)`` compared lexicographically; a cycle of
    weight below ``(0, 0)`` means its constraints pin the points to a
    hyperplane.
    """
    tight_bounds(h)
    edges = [(u, v, (w, -1)) for u, v, w in _edges(h)]
    try:
        bellman_ford(h.dim + 1, edges, None, add=_sym_add, zero=(0, 0))
    except Infeasible:
        return False
    return True


def contains(h: HRep, point: Sequence, strict: bool = False) -> bool:
    if len(point) != h.dim:
        raise DimensionMismatch(f"point of length {len(point)} in dimension {h.dim}")
    if strict:
        return all(c.evaluate(point) < c.bound for c in h.constraints)
    return all(c.evaluate(point) <= c.bound for c in h.constraints)


def dilate(h: HRep, t: int) -> HRep:
    if t < 0:
        raise ValueError("dilation factor must be nonnegative")
    return HRep(h.dim, tuple(Constraint(c.i, c.j, t * c.bound) for c in h.constraints))


def shift_bounds(h: HRep, delta: int) -> HRep:
    """Add ``delta`` to every bound; ``delta = -1`` gives the lattice interior."""
    return HRep(h.dim, tuple(Constraint(c.i, c.j, c.bound + delta) for c in h.constraints))


def translate(h: HRep, v: Sequence[int]) -> HRep:
    """The system describing ``P + v``."""
    def coord(idx: int) -> int:
        return v[idx - 1] if idx else 0

    return HRep(
        h.dim,
        tuple(Constraint(c.i, c.j, c.bound + coord(c.i) - coord(c.j)) for c in h.constraints),
    )


def to_fraction_point(point: Sequence) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in point)
