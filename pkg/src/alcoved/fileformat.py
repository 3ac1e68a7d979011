"""Line-oriented polytope files: one JSON object per polytope.

Each line looks like::

    {"dim": 2, "constraints": [[1, 0, 1], [0, 1, 0]], "label": "...", "seed": 7}

A triple ``[i, j, k]`` means ``x_i - x_j <= k`` with ``x_0 = 0``.  Tools that
write inequalities as ``b + a.x >= 0`` translate a row with ``a = e_j - e_i``
(zero entries for index 0) and constant ``b`` to ``[i, j, b]``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Iterator

from .errors import AlcovedError
from .lattice_core import canonicalize
from .polytopes import AlcovedPolytope, validate

METADATA_KEYS = ("label", "generator", "seed", "small", "index")


class FileFormatError(AlcovedError, ValueError):
    pass


def to_record(P: AlcovedPolytope, **metadata) -> dict:
    rec: dict = {"dim": P.dim, "constraints": P.hrep.triples()}
    if P.label and "label" not in metadata:
        rec["label"] = P.label
    for key in METADATA_KEYS:
        if metadata.get(key) is not None:
            rec[key] = metadata[key]
    return rec


def dumps(P: AlcovedPolytope, **metadata) -> str:
    return json.dumps(to_record(P, **metadata), separators=(", ", ": "))


def from_record(rec: dict) -> AlcovedPolytope:
    if not isinstance(rec, dict):
        raise FileFormatError("polytope record must be a JSON object")
    dim = rec.get("dim")
    cons = rec.get("constraints")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise FileFormatError(f"'dim' must be a positive integer, got {dim!r}")
    if not isinstance(cons, list):
        raise FileFormatError("'constraints' must be a list of [i, j, k] triples")
    for t in cons:
        if (
            not isinstance(t, list)
            or len(t) != 3
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in t)
        ):
            raise FileFormatError(f"bad constraint {t!r}; expected [i, j, k] integers")
    try:
        h = canonicalize(cons, dim)
        return validate(h, label=str(rec.get("label", "")))
    except (AlcovedError, ValueError) as exc:
        raise FileFormatError(f"not a valid alcoved polytope: {exc}") from None


def loads(text: str) -> list[tuple[AlcovedPolytope, dict]]:
    """Parse every non-blank line; fails on the first malformed record."""
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as exc:
            raise FileFormatError(f"line {lineno}: invalid JSON ({exc.msg})") from None
        try:
            P = from_record(rec)
        except FileFormatError as exc:
            raise FileFormatError(f"line {lineno}: {exc}") from None
        out.append((P, {k: rec[k] for k in METADATA_KEYS if k in rec}))
    if not out:
        raise FileFormatError("no polytope records found")
    return out


def read(path: str | Path) -> list[tuple[AlcovedPolytope, dict]]:
    return loads(Path(path).read_text(encoding="utf-8"))


def iter_lines(items: Iterable[tuple[AlcovedPolytope, dict]]) -> Iterator[str]:
    for P, meta in items:
        yield dumps(P, **meta) + "\n"
