"""``alcoved`` command line.

Exit codes: 0 success, 1 usage or IO error, 2 hypothesis diagnostic,
3 theorem violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import fileformat
from .analysis import hstar_symmetry, is_reflexive, is_unimodal, peak_location
from .ehrhart import ehrhart_polynomial, hstar
from .enumeration import DEFAULT_BUDGET
from .errors import AlcovedError, HypothesisViolated, NoInteriorPoints, TheoremViolation
from .polytopes import derive_seed, random_alcoved
from .scan import ALL_CHECKS, report_json, run_scan, table_lines
from .triangulation import (
    alcove_triangulation,
    boundary_compatible_triangulation,
    f_vector,
    h_vector,
    induced_boundary_complex,
)

EXIT_OK, EXIT_USAGE, EXIT_HYPOTHESIS, EXIT_VIOLATION = 0, 1, 2, 3

TRIANGULATE_DIM = {"alcove": 6, "boundary": 5}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive_dim(v: str) -> int:
    d = int(v)
    if d < 2:
        raise argparse.ArgumentTypeError("dimension must be at least 2")
    return d


def _checks(v: str) -> tuple[str, ...]:
    items = tuple(x.strip() for x in v.split(",") if x.strip())
    bad = [x for x in items if x not in ALL_CHECKS]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown checks {bad}; choose from {list(ALL_CHECKS)}")
    return items


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _load_one(path: str):
    items = fileformat.read(path)
    if len(items) != 1:
        raise fileformat.FileFormatError(f"{path}: expected one polytope, found {len(items)}")
    return items[0][0]


def cmd_gen(args) -> int:
    if args.count < 1:
        raise UsageError("count must be at least 1")
    items = []
    for i in range(args.count):
        s = derive_seed(args.seed, i)
        P = random_alcoved(args.dim, s, args.small)
        meta = {"generator": "small" if args.small else "large", "seed": s, "index": i}
        items.append((P, meta))
    out = args.out
    if out is None or out == "-" or out.endswith(".jsonl"):
        _write(out, "".join(fileformat.iter_lines(items)))
        return EXIT_OK
    root = Path(out)
    root.mkdir(parents=True, exist_ok=True)
    width = len(str(args.count - 1))
    for i, item in enumerate(items):
        (root / f"poly_d{args.dim}_{i:0{width}d}.json").write_text(
            "".join(fileformat.iter_lines([item])), encoding="utf-8"
        )
    print(f"wrote {len(items)} polytopes to {root}")
    return EXIT_OK


def cmd_hstar(args) -> int:
    P = _load_one(args.input)
    h = hstar(P, args.budget)
    uni = is_unimodal(h)
    rec = {
        "dim": P.dim,
        "hstar": list(h),
        "ehrhart": str(ehrhart_polynomial(P, args.budget)),
        "unimodal": uni.unimodal,
        "peak_indices": list(uni.peak_indices),
        "peak_at_middle": peak_location(h, P.dim).at_middle if uni.unimodal else None,
        "symmetric": hstar_symmetry(h),
        "reflexive": is_reflexive(P),
    }
    print(json.dumps(rec))
    return EXIT_OK


def cmd_scan(args) -> int:
    if args.count < 1:
        raise UsageError("count must be at least 1")
    report = run_scan(
        args.dim,
        args.count,
        args.seed,
        checks=args.checks,
        small=args.small,
        jobs=args.jobs,
        budget=args.budget or DEFAULT_BUDGET,
        timestamps=not args.no_timestamps,
    )
    if args.out:
        _write(args.out, report_json(report))
    if args.table:
        print("\n".join(table_lines(report)))
    s = report["summary"]
    print(
        f"d={args.dim}: {s['completed']}/{s['instances']} instances, {s['unimodal']} unimodal, "
        f"{s['hypothesis_ok']} with the distance-1 hypothesis, {s['reflexive']} reflexive, "
        f"max facet distance {s['max_facet_distance']}, {s['violations']} violations, "
        f"{s['errors']} errors"
    )
    bad = [r for r in report["records"] if r.get("violations")]
    for r in bad:
        print(
            f"VIOLATION index={r['index']} seed={r['seed']}: {'; '.join(r['violations'])}\n"
            f"  {fileformat.dumps(fileformat.from_record(r))}"
        )
    return EXIT_VIOLATION if bad else EXIT_OK


def cmd_triangulate(args) -> int:
    P = _load_one(args.input)
    limit = TRIANGULATE_DIM[args.method]
    budget = args.budget or DEFAULT_BUDGET
    if P.dim > limit:
        if args.budget is None:
            raise UsageError(
                f"dimension {P.dim} exceeds the default limit {limit} for method "
                f"{args.method}; pass --budget to override"
            )
        print(f"warning: dimension {P.dim} above default limit {limit}", file=sys.stderr)
    if args.method == "alcove":
        T = alcove_triangulation(P, budget)
    else:
        T = boundary_compatible_triangulation(P, budget)
    f = f_vector(T)
    out = {
        "method": args.method,
        "dim": P.dim,
        "cells": [[list(v) for v in c] for c in T.maximal_simplices],
        "n_cells": len(T),
        "f_vector": list(f),
        "h_vector": list(h_vector(f)),
    }
    if args.method == "boundary":
        bc = induced_boundary_complex(T, P)
        out["boundary"] = {
            "faces": len(bc.simplices),
            "covers": bc.covers,
            "extraneous": len(bc.extraneous),
            "is_boundary_triangulation": bc.is_boundary_triangulation,
        }
    text = json.dumps(out) + "\n"
    if args.out:
        _write(args.out, text)
        print(f"{len(T)} cells, f = {list(f)}, h = {out['h_vector']}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import MAX_DIM, run_all

    if args.dim_max > MAX_DIM:
        raise UsageError(
            f"dim-max {args.dim_max} is above {MAX_DIM}: alcove counts grow like d! "
            "and boundary triangulations test C(|A|, d+1) candidate cells"
        )
    results = run_all(args.dim_max, log=lambda r: print(r.line(), flush=True))
    for r in results:
        for f in r.findings:
            print(f"  finding: {f}")
    if args.out:
        _write(
            args.out,
            json.dumps(
                [
                    {"name": r.name, "passed": r.passed, "detail": r.detail, "findings": r.findings}
                    for r in results
                ],
                indent=1,
            )
            + "\n",
        )
    return EXIT_OK if all(r.passed for r in results) else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="alcoved", description="Alcoved polytopes, h*-vectors and triangulations.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="generate seeded random alcoved polytopes")
    g.add_argument("--dim", type=_positive_dim, required=True)
    g.add_argument("--count", type=int, default=1)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--small", action="store_true", help="use the [-1,2]^d generator")
    g.add_argument("--out", help="directory, .jsonl file, or - for stdout")
    g.set_defaults(func=cmd_gen)

    h = sub.add_parser("hstar", help="h*-vector and Ehrhart polynomial of a polytope file")
    h.add_argument("input")
    h.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    h.set_defaults(func=cmd_hstar)

    s = sub.add_parser("scan", help="seeded random scan with theorem checks")
    s.add_argument("--dim", type=_positive_dim, required=True)
    s.add_argument("--count", type=int, default=50)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--checks", type=_checks, default=ALL_CHECKS)
    s.add_argument("--small", action="store_true")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--out")
    s.add_argument("--budget", type=int)
    s.add_argument("--no-timestamps", action="store_true")
    s.add_argument("--table", action="store_true", help="print dim and h*-vector rows")
    s.set_defaults(func=cmd_scan)

    t = sub.add_parser("triangulate", help="alcove or boundary-compatible triangulation")
    t.add_argument("input")
    t.add_argument("--method", choices=sorted(TRIANGULATE_DIM), default="alcove")
    t.add_argument("--out")
    t.add_argument("--budget", type=int)
    t.set_defaults(func=cmd_triangulate)

    v = sub.add_parser("verify", help="run the self-test battery")
    v.add_argument("--dim-max", type=int, default=3)
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"alcoved: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (fileformat.FileFormatError, OSError) as exc:
        print(f"alcoved: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (HypothesisViolated, NoInteriorPoints) as exc:
        print(f"alcoved: hypothesis not satisfied: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except TheoremViolation as exc:
        print(f"alcoved: theorem violation: {exc}\n  instance: {json.dumps(exc.instance)}", file=sys.stderr)
        return EXIT_VIOLATION
    except (AlcovedError, ValueError) as exc:
        print(f"alcoved: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
