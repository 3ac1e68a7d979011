"""Seeded random scans over alcoved polytopes.

Instance ``i`` of a scan with base seed ``s`` is generated from
``derive_seed(s, i)``, so reports do not depend on how instances are
scheduled across worker processes.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from functools import partial

from .analysis import (
    distance_report,
    hibi_stanley_check,
    hstar_symmetry,
    is_reflexive,
    is_unimodal,
    main_theorem_hypothesis,
    peak_location,
    symmetry_status,
)
from .ehrhart import hstar
from .enumeration import DEFAULT_BUDGET, count_dilate, interior_lattice_points
from .errors import AlcovedError, TheoremViolation
from .polytopes import derive_seed, random_alcoved

ALL_CHECKS = ("unimodal", "hibi-stanley", "distance", "hypothesis", "symmetry")


def analyze(P, checks=ALL_CHECKS, budget: int = DEFAULT_BUDGET) -> dict:
    """Run the selected checks on one polytope and return a flat record.

    Theorem violations are collected in ``record["violations"]`` rather than
    raised, so a scan always completes.
    """
    d = P.dim
    rec: dict = {}
    violations: list[str] = []
    findings: list[str] = []
    try:
        h = hstar(P, budget)
    except TheoremViolation as exc:
        rec.update(hstar=None, violations=[str(exc)], findings=[])
        return rec
    interior = interior_lattice_points(P, budget)
    rec["hstar"] = list(h)
    rec["n_points"] = count_dilate(P, 1, budget)
    rec["n_interior"] = len(interior)
    uni = is_unimodal(h)
    rec["unimodal"] = uni.unimodal
    rec["peak_indices"] = list(uni.peak_indices)
    hyp = main_theorem_hypothesis(P, interior) if "hypothesis" in checks or "unimodal" in checks else None
    rec["hypothesis_ok"] = hyp
    if "unimodal" in checks and not uni.unimodal:
        if hyp:
            violations.append("h*-vector not unimodal although every facet is at distance 1")
        else:
            findings.append("non-unimodal h*-vector")
    if uni.unimodal:
        peak = peak_location(h, d)
        rec["peak_at_middle"] = peak.at_middle
        if hyp and not peak.at_middle:
            findings.append(f"peak at {list(peak.peak_indices)} away from the middle")
    else:
        rec["peak_at_middle"] = None
    if "distance" in checks:
        try:
            rec["max_facet_distance"] = distance_report(P, interior).max_distance
        except TheoremViolation as exc:
            rec["max_facet_distance"] = exc.instance.get("max_distance")
            violations.append(str(exc))
    else:
        rec["max_facet_distance"] = None
    if "hibi-stanley" in checks:
        hs = hibi_stanley_check(h, d)
        rec["hibi_stanley_ok"] = hs.ok
        if not hs.ok:
            violations.append(f"Hibi-Stanley inequalities fail at {list(hs.violations)}")
    else:
        rec["hibi_stanley_ok"] = None
    if "symmetry" in checks:
        refl = is_reflexive(P, interior)
        sym = hstar_symmetry(h)
        status = symmetry_status(refl, sym)
        rec["reflexive"] = refl
        rec["symmetric"] = sym
        rec["symmetry_ok"] = status != "violation"
        rec["symmetry_status"] = status
        if status == "violation":
            violations.append("reflexive polytope with non-symmetric h*-vector")
    else:
        rec["reflexive"] = rec["symmetric"] = rec["symmetry_ok"] = rec["symmetry_status"] = None
    rec["violations"] = violations
    rec["findings"] = findings
    return rec


def scan_instance(
    index: int,
    dim: int,
    seed: int,
    small: bool,
    checks=ALL_CHECKS,
    budget: int = DEFAULT_BUDGET,
    timestamps: bool = False,
) -> dict:
    inst_seed = derive_seed(seed, index)
    start = time.perf_counter()
    rec: dict = {"index": index, "seed": inst_seed, "dim": dim}
    P = random_alcoved(dim, inst_seed, small)
    rec["constraints"] = P.hrep.triples()
    try:
        rec.update(analyze(P, checks, budget))
        rec["error"] = None
    except AlcovedError as exc:
        rec.update(hstar=None, violations=[], findings=[], error=f"{type(exc).__name__}: {exc}")
    if timestamps:
        rec["wall_time"] = round(time.perf_counter() - start, 6)
    return rec


def summarize(records: list[dict]) -> dict:
    ok = [r for r in records if r.get("hstar") is not None]
    return {
        "instances": len(records),
        "completed": len(ok),
        "errors": sum(1 for r in records if r.get("error")),
        "unimodal": sum(1 for r in ok if r.get("unimodal")),
        "with_interior": sum(1 for r in ok if r.get("n_interior")),
        "hypothesis_ok": sum(1 for r in ok if r.get("hypothesis_ok")),
        "reflexive": sum(1 for r in ok if r.get("reflexive")),
        "max_facet_distance": max(
            (r["max_facet_distance"] for r in ok if r.get("max_facet_distance") is not None),
            default=None,
        ),
        "violations": sum(len(r.get("violations", [])) for r in records),
        "findings": sum(len(r.get("findings", [])) for r in records),
    }


def run_scan(
    dim: int,
    count: int,
    seed: int,
    checks=ALL_CHECKS,
    small: bool = False,
    jobs: int = 1,
    budget: int = DEFAULT_BUDGET,
    timestamps: bool = False,
    start: int = 0,
) -> dict:
    """Scan instances ``start .. start+count-1``; returns ``{"params", "records", "summary"}``."""
    if dim < 2:
        raise ValueError("scan dimension must be at least 2")
    if count < 1:
        raise ValueError("count must be at least 1")
    checks = tuple(c for c in ALL_CHECKS if c in set(checks))
    work = partial(
        scan_instance,
        dim=dim,
        seed=seed,
        small=small,
        checks=checks,
        budget=budget,
        timestamps=timestamps,
    )
    indices = range(start, start + count)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(work, indices, chunksize=max(1, count // (4 * jobs))))
    else:
        records = [work(i) for i in indices]
    return {
        "params": {
            "dim": dim,
            "count": count,
            "seed": seed,
            "small": small,
            "checks": list(checks),
            "start": start,
        },
        "records": records,
        "summary": summarize(records),
    }


def report_json(report: dict) -> str:
    return json.dumps(report, indent=1) + "\n"


def table_lines(report: dict) -> list[str]:
    """``dim  h*-vector`` rows in the layout of a printed table."""
    out = []
    for r in report["records"]:
        if r.get("hstar") is not None:
            out.append(f"{r['dim']}\t{','.join(str(x) for x in r['hstar'])}")
    return out
