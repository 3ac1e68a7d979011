"""Self-test battery behind ``alcoved verify`` and the acceptance tests.

Each check returns a :class:`CheckResult`.  A check passes when every
exact assertion holds and it finishes inside its time limit.  Findings are
noteworthy outcomes that do not count as failures.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb, factorial

from .analysis import (
    facets,
    gorenstein_index,
    hibi_stanley_check,
    hstar_symmetry,
    is_reflexive,
    is_unimodal,
    max_facet_distance,
    peak_location,
)
from .ehrhart import Polynomial, ehr_to_hstar, ehrhart_polynomial, hstar
from .enumeration import count_dilate, interior_lattice_points, lattice_points
from .errors import AlcovedError, HypothesisViolated
from .fileformat import from_record
from .polytopes import (
    derive_seed,
    make_chain_simplex,
    make_cube,
    make_qd,
    make_sharp_distance_example,
    random_alcoved,
)
from .scan import report_json, run_scan
from .triangulation import (
    alcove_triangulation,
    boundary_compatible_triangulation,
    f_vector,
    facet_alcove_triangulation,
    faces,
    h_vector,
    induced_boundary_complex,
    is_unimodular,
    restriction_to_facet,
)

MAX_DIM = 5
VERIFY_BUDGET = 10**8

# Seeds of the fixed corpora.
BM_SEED = 2
BM_COUNT = 100
SCAN_SEED = 1
SCAN_COUNT = 50
REFLEXIVE_WANTED = 5
REFLEXIVE_SEARCH = 2000

LIMITS = {
    "qd-battery": 30.0,
    "betke-mcmullen": 300.0,
    "unimodality-scan": 600.0,
    "distance-theorem": 120.0,
    "boundary-triangulation": 120.0,
}


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float
    limit: float | None = None
    findings: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lim = f" (limit {self.limit:g}s)" if self.limit is not None else ""
        return f"{status}  {self.name}: {self.detail} [{self.seconds:.2f}s{lim}]"


class _Check:
    """Collects failures and findings for one criterion."""

    def __init__(self, name: str):
        self.name = name
        self.failures: list[str] = []
        self.findings: list[str] = []
        self.start = time.perf_counter()

    def expect(self, ok: bool, msg: str) -> None:
        if not ok:
            self.failures.append(msg)

    def result(self, summary: str) -> CheckResult:
        secs = time.perf_counter() - self.start
        limit = LIMITS.get(self.name)
        fails = list(self.failures)
        if limit is not None and secs > limit:
            fails.append(f"took {secs:.1f}s, limit {limit:g}s")
        detail = summary if not fails else "; ".join(fails[:5]) + (
            f" (+{len(fails) - 5} more)" if len(fails) > 5 else ""
        )
        return CheckResult(self.name, not fails, detail, secs, limit, self.findings)


def cube_hstar(d: int) -> tuple[int, ...]:
    """h*-vector of the unit ``(d+1)``-cube, truncated to ``d+1`` entries."""
    ehr = Polynomial.from_coeffs([comb(d + 1, k) for k in range(d + 2)])
    return ehr_to_hstar(ehr, d + 1)[: d + 1]


# -- corpora -----------------------------------------------------------------


def bm_instance(index: int, seed: int = BM_SEED) -> dict:
    """One Betke-McMullen record: small generator, ``d = 2 + index % 3``."""
    d = 2 + index % 3
    s = derive_seed(seed, index)
    P = random_alcoved(d, s, small=True)
    h = hstar(P, VERIFY_BUDGET)
    T = alcove_triangulation(P, VERIFY_BUDGET)
    return {
        "index": index,
        "seed": s,
        "dim": d,
        "constraints": P.hrep.triples(),
        "hstar": list(h),
        "h_vector": list(h_vector(f_vector(T))),
        "cells": len(T),
    }


def bm_report(count: int = BM_COUNT, seed: int = BM_SEED, jobs: int = 1, dim_max: int = 4) -> dict:
    indices = [i for i in range(count) if 2 + i % 3 <= dim_max]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(bm_instance, indices, [seed] * len(indices)))
    else:
        records = [bm_instance(i, seed) for i in indices]
    return {"params": {"count": count, "seed": seed}, "records": records}


def scan_dims(dim_max: int) -> list[int]:
    return [d for d in (3, 4, 5) if d <= dim_max] or [2]


def scan_corpus(dim_max: int = MAX_DIM, jobs: int = 1) -> dict[int, dict]:
    return {
        d: run_scan(d, SCAN_COUNT, SCAN_SEED, jobs=jobs, budget=VERIFY_BUDGET)
        for d in scan_dims(dim_max)
    }


def reflexive_instances(d: int = 3, wanted: int = REFLEXIVE_WANTED, seed: int = SCAN_SEED):
    """The first ``wanted`` reflexive instances of the seeded scan, as ``(index, P)``."""
    found = []
    for i in range(REFLEXIVE_SEARCH):
        P = random_alcoved(d, derive_seed(seed, i))
        if is_reflexive(P):
            found.append((i, P))
            if len(found) == wanted:
                break
    return found


# -- criteria ----------------------------------------------------------------


def check_qd(dim_max: int = MAX_DIM) -> CheckResult:
    ck = _Check("qd-battery")
    for d in range(1, dim_max + 1):
        Q = make_qd(d)
        ps = lattice_points(Q)
        ck.expect(len(ps) == 2 ** (d + 1) - 1, f"Q_{d}: {len(ps)} lattice points")
        ck.expect(ps.interior == [(0,) * d], f"Q_{d}: interior points {ps.interior}")
        ck.expect(len(facets(Q)) == 2 * comb(d + 1, 2), f"Q_{d}: {len(facets(Q))} facets")
        h = hstar(Q)
        ck.expect(h == cube_hstar(d), f"Q_{d}: h* = {h}")
        n = len(alcove_triangulation(Q))
        ck.expect(n == factorial(d + 1), f"Q_{d}: {n} alcoves")
    return ck.result(f"Q_1..Q_{dim_max} match the cube h*-vectors and counts")


def check_betke_mcmullen(report: dict) -> CheckResult:
    ck = _Check("betke-mcmullen")
    recs = report["records"]
    for r in recs:
        want = r["hstar"] + [0]
        ck.expect(r["h_vector"] == want, f"instance {r['index']}: h = {r['h_vector']}, h* = {r['hstar']}")
    return ck.result(f"{len(recs)} alcove triangulations have h = (h*, 0)")


def check_unimodality(corpus: dict[int, dict]) -> CheckResult:
    ck = _Check("unimodality-scan")
    total = hyp = 0
    for d, rep in corpus.items():
        for r in rep["records"]:
            total += 1
            if r.get("error") or r["hstar"] is None:
                ck.expect(False, f"d={d} #{r['index']}: {r.get('error') or r['violations']}")
                continue
            ck.expect(r["unimodal"], f"d={d} #{r['index']}: h* = {r['hstar']} not unimodal")
            ck.expect(not r["violations"], f"d={d} #{r['index']}: {r['violations']}")
            if r["hypothesis_ok"]:
                hyp += 1
                ck.expect(r["unimodal"], f"d={d} #{r['index']}: hypothesis holds, not unimodal")
    return ck.result(f"{total} h*-vectors unimodal, {hyp} satisfy the distance-1 hypothesis")


def _records(corpus: dict[int, dict]):
    for rep in corpus.values():
        for r in rep["records"]:
            if r.get("hstar") is not None:
                yield r


def check_hibi_stanley(corpus: dict[int, dict]) -> CheckResult:
    ck = _Check("hibi-stanley")
    n = 0
    for r in _records(corpus):
        n += 1
        rep = hibi_stanley_check(r["hstar"], r["dim"])
        ck.expect(rep.ok, f"d={r['dim']} #{r['index']}: {list(rep.violations)}")
    return ck.result(f"{n} h*-vectors satisfy the inequalities")


def check_distance(corpus: dict[int, dict], dim_max: int = MAX_DIM) -> CheckResult:
    ck = _Check("distance-theorem")
    n = 0
    for r in _records(corpus):
        if r["n_interior"]:
            n += 1
            top = r["max_facet_distance"]
            ck.expect(top is not None and top <= r["dim"] - 1, f"d={r['dim']} #{r['index']}: distance {top}")
    for d in range(2, dim_max + 1):
        try:
            top = max_facet_distance(make_sharp_distance_example(d)).max_distance
        except AlcovedError as exc:
            ck.expect(False, f"sharp example d={d}: {exc}")
            continue
        ck.expect(top == d - 1, f"sharp example d={d}: distance {top}")
    return ck.result(f"{n} instances within d-1; sharp examples attain d-1 for d=2..{dim_max}")


def _boundary_case(ck: _Check, name: str, P) -> None:
    try:
        T = boundary_compatible_triangulation(P, VERIFY_BUDGET)
    except AlcovedError as exc:
        ck.expect(False, f"{name}: {exc}")
        return
    ck.expect(all(is_unimodular(c) for c in T.maximal_simplices), f"{name}: non-unimodular cell")
    bc = induced_boundary_complex(T, P)
    ck.expect(bc.covers, f"{name}: boundary volume {[(g, w) for _, g, w in bc.per_facet]}")
    ck.expect(not bc.extraneous, f"{name}: {len(bc.extraneous)} faces cut through the interior")
    all_faces = faces(T)
    for c in facets(P):
        ok = restriction_to_facet(T, c, all_faces) == facet_alcove_triangulation(P, c)
        ck.expect(ok, f"{name}: facet {c.describe()} is not alcove-triangulated")


def check_boundary(dim_max: int = MAX_DIM) -> CheckResult:
    ck = _Check("boundary-triangulation")
    cases = [("[-1,1]^2", make_cube(2, -1, 1)), ("Q_2", make_qd(2))]
    if dim_max >= 3:
        cases.append(("Q_3", make_qd(3)))
        refl = reflexive_instances(3)
        ck.expect(len(refl) == REFLEXIVE_WANTED, f"only {len(refl)} reflexive instances found")
        cases += [(f"reflexive #{i}", P) for i, P in refl]
    for name, P in cases:
        _boundary_case(ck, name, P)
    sharp_d = 3 if dim_max >= 3 else 2
    try:
        boundary_compatible_triangulation(make_sharp_distance_example(sharp_d))
        ck.expect(False, f"sharp example d={sharp_d}: no diagnostic")
    except HypothesisViolated as exc:
        ok = exc.facet.describe() == f"x_1 <= {sharp_d}" and exc.distance == sharp_d - 1
        ck.expect(ok, f"sharp example: wrong diagnostic {exc}")
    names = ", ".join(n for n, _ in cases)
    return ck.result(f"{names} triangulated; sharp example rejected")


def check_symmetry(corpus: dict[int, dict], dim_max: int = MAX_DIM) -> CheckResult:
    ck = _Check("hibi-symmetry")
    n = 0
    for r in _records(corpus):
        if r["reflexive"]:
            n += 1
            ck.expect(hstar_symmetry(r["hstar"]), f"d={r['dim']} #{r['index']}: h* = {r['hstar']}")
    for d in range(2, min(4, dim_max) + 1):
        g = gorenstein_index(make_chain_simplex(d), d + 1)
        ck.expect(g == d + 1, f"chain simplex d={d}: Gorenstein index {g}")
        big = make_chain_simplex(d, d + 1)
        ck.expect(is_reflexive(big) and hstar_symmetry(hstar(big)), f"{d + 1}*chain_{d} not reflexive")
    return ck.result(f"{n} reflexive instances symmetric; chain simplices have index d+1")


def _ehrhart_identities(ck: _Check, name: str, P, h) -> None:
    d = P.dim
    h = tuple(h)
    ck.expect(h[0] == 1, f"{name}: h*_0 = {h[0]}")
    ck.expect(h[1] == count_dilate(P, 1, VERIFY_BUDGET) - (d + 1), f"{name}: h*_1 = {h[1]}")
    ck.expect(h[d] == len(interior_lattice_points(P, VERIFY_BUDGET)), f"{name}: h*_d = {h[d]}")
    cells = len(alcove_triangulation(P, VERIFY_BUDGET))
    ck.expect(sum(h) == cells, f"{name}: sum h* = {sum(h)}, {cells} alcoves")
    poly = ehrhart_polynomial(P, VERIFY_BUDGET)
    for t in range(d + 1, 2 * d + 2):
        got = count_dilate(P, t, VERIFY_BUDGET)
        ck.expect(poly(t) == got, f"{name}: L({t}) = {got}, polynomial gives {poly(t)}")


def check_ehrhart(bm: dict, corpus: dict[int, dict]) -> CheckResult:
    ck = _Check("ehrhart-identities")
    n = 0
    for r in bm["records"]:
        n += 1
        _ehrhart_identities(ck, f"small d={r['dim']} #{r['index']}", from_record(r), r["hstar"])
    for r in _records(corpus):
        n += 1
        _ehrhart_identities(ck, f"d={r['dim']} #{r['index']}", from_record(r), r["hstar"])
    return ck.result(f"identities hold on {n} instances")


def check_peaks(corpus: dict[int, dict]) -> CheckResult:
    ck = _Check("peak-location")
    n = 0
    for r in _records(corpus):
        if not (r["hypothesis_ok"] and is_unimodal(r["hstar"]).unimodal):
            continue
        n += 1
        pk = peak_location(r["hstar"], r["dim"])
        if not pk.at_middle:
            ck.findings.append(
                f"d={r['dim']} #{r['index']}: h* = {r['hstar']} peaks at {list(pk.peak_indices)}"
            )
    return ck.result(f"{n} instances checked, {len(ck.findings)} peak off the middle")


def check_determinism(dim_max: int = MAX_DIM, bm: dict | None = None, corpus=None) -> CheckResult:
    ck = _Check("determinism")
    serial_bm = json.dumps(bm or bm_report(dim_max=min(4, dim_max)), indent=1)
    parallel_bm = json.dumps(bm_report(jobs=4, dim_max=min(4, dim_max)), indent=1)
    ck.expect(serial_bm == parallel_bm, "Betke-McMullen reports differ between jobs=1 and jobs=4")
    corpus = corpus or scan_corpus(dim_max)
    for d in scan_dims(dim_max):
        a = report_json(corpus[d])
        b = report_json(run_scan(d, SCAN_COUNT, SCAN_SEED, jobs=4, budget=VERIFY_BUDGET))
        ck.expect(a == b, f"d={d} scan reports differ between jobs=1 and jobs=4")
    return ck.result("reports byte-identical for jobs 1 and 4")


def run_all(dim_max: int = MAX_DIM, log=None) -> list[CheckResult]:
    """Run every check in order; ``log`` receives each result as it completes."""
    if dim_max > MAX_DIM:
        raise ValueError(
            f"dim-max {dim_max} exceeds {MAX_DIM}: alcove counts grow like d! and "
            "boundary triangulations test C(|A|, d+1) candidate cells"
        )
    if dim_max < 2:
        raise ValueError("dim-max must be at least 2")
    results: list[CheckResult] = []

    def emit(res: CheckResult) -> None:
        results.append(res)
        if log is not None:
            log(res)

    emit(check_qd(dim_max))
    t0 = time.perf_counter()
    bm = bm_report(dim_max=min(4, dim_max))
    res = check_betke_mcmullen(bm)
    res.seconds = time.perf_counter() - t0
    res.passed = res.passed and res.seconds <= LIMITS["betke-mcmullen"]
    emit(res)
    t0 = time.perf_counter()
    corpus = scan_corpus(dim_max)
    res = check_unimodality(corpus)
    res.seconds = time.perf_counter() - t0
    res.passed = res.passed and res.seconds <= LIMITS["unimodality-scan"]
    emit(res)
    emit(check_hibi_stanley(corpus))
    emit(check_distance(corpus, dim_max))
    emit(check_boundary(dim_max))
    emit(check_symmetry(corpus, dim_max))
    emit(check_ehrhart(bm, corpus))
    emit(check_peaks(corpus))
    emit(check_determinism(dim_max, bm, corpus))
    return results


__all__ = [
    "CheckResult",
    "bm_report",
    "check_betke_mcmullen",
    "check_boundary",
    "check_determinism",
    "check_distance",
    "check_ehrhart",
    "check_hibi_stanley",
    "check_peaks",
    "check_qd",
    "check_symmetry",
    "check_unimodality",
    "cube_hstar",
    "reflexive_instances",
    "run_all",
    "scan_corpus",
]
