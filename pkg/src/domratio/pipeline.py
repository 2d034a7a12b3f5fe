"""Corpus pipeline: run the full verification battery on graph6 lines.

Each row computes the domination number, the independent domination number,
the exact ratio verdict, the complete bipartite recognizer, the conversion
trace, the half-order witness, and the maximum-degree ratio bound. Rows are
dicts so the JSON and CSV writers stay thin.

Determinism contract: JSON serialization carries no timings and no worker
configuration, rows keep the input order regardless of the worker count, and
the maximum-ratio row is picked by exact cross-multiplication with graph6
string order breaking ties. CSV keeps per-row runtimes for profiling; it is
not covered by the byte-determinism guarantee.
"""

from __future__ import annotations

import json
import time
from multiprocessing import Pool

from .errors import DegreeTooSmall, NotConnected, NotRegular, SolveTimeout
from .bitset import popcount
from .graph import Graph, is_connected, is_kkk, regularity
from .graph6 import encode, parse
from .proofs import (
    VERDICT_EQUAL,
    VERDICT_VIOLATION,
    construct_independent_dominating,
    extremal_audit,
    furuya_check,
    ratio_compare,
    rosenberg_witness,
    southey_henning_check,
)
from .solvers import min_dominating_set, min_independent_dominating_set

VERDICT_TIMEOUT = "TIMEOUT"

DEFAULT_TIMEOUT_SECS = 10.0

CSV_FIELDS = [
    "graph6",
    "n",
    "k",
    "gamma",
    "i",
    "two_i",
    "k_gamma",
    "verdict",
    "is_kkk",
    "construction_size",
    "case_taken",
    "audit_ok",
    "furuya_ok",
    "rosenberg_ok",
    "runtime_micros",
]


def check_pipeline_input(g: Graph) -> int:
    """The theorem quantifies over connected k-regular graphs, k >= 3."""
    k = regularity(g)
    if k is None:
        raise NotRegular("pipeline input must be regular")
    if k < 3:
        raise DegreeTooSmall(f"pipeline input must have degree >= 3, got {k}")
    if not is_connected(g):
        raise NotConnected("pipeline input must be connected")
    return k


def compute_row(line: str, timeout_secs: float | None = DEFAULT_TIMEOUT_SECS) -> dict:
    """One verification row; solver overruns yield a TIMEOUT row, not an
    abort."""
    g = parse(line)
    k = check_pipeline_input(g)
    started = time.perf_counter()
    deadline = None if timeout_secs is None else time.monotonic() + timeout_secs
    row = {
        "graph6": encode(g),
        "n": g.n,
        "k": k,
        "is_kkk": is_kkk(g, k),
        "rosenberg_ok": 2 * popcount(rosenberg_witness(g)) <= g.n,
    }
    try:
        dom = min_dominating_set(g, deadline)
        ind = min_independent_dominating_set(g, deadline)
        trace = construct_independent_dominating(g, dom.witness, dom)
        audit = extremal_audit(g, dom, ind)
        row.update(
            gamma=dom.value,
            i=ind.value,
            two_i=2 * ind.value,
            k_gamma=k * dom.value,
            verdict=ratio_compare(k, dom.value, ind.value),
            construction_size=popcount(trace.result_set),
            case_taken=trace.case_taken,
            audit_ok=not audit.violations,
            furuya_ok=furuya_check(dom.value, ind.value, k),
        )
    except SolveTimeout:
        row.update(
            gamma=None,
            i=None,
            two_i=None,
            k_gamma=None,
            verdict=VERDICT_TIMEOUT,
            construction_size=None,
            case_taken=None,
            audit_ok=None,
            furuya_ok=None,
        )
    row["runtime_micros"] = int((time.perf_counter() - started) * 1_000_000)
    return row


def _worker(task: tuple[str, float | None]) -> dict:
    line, timeout_secs = task
    return compute_row(line, timeout_secs)


def run_pipeline(
    lines: list[str],
    jobs: int = 1,
    timeout_secs: float | None = DEFAULT_TIMEOUT_SECS,
) -> list[dict]:
    """Rows for every input line, in input order whatever the worker count."""
    tasks = [(line, timeout_secs) for line in lines]
    if jobs <= 1 or len(tasks) <= 1:
        return [_worker(t) for t in tasks]
    with Pool(processes=jobs) as pool:
        return list(pool.imap(_worker, tasks, chunksize=1))


def _ratio_greater(a: dict, b: dict) -> bool:
    """Exact i/gamma comparison by cross-multiplication, graph6 ties."""
    lhs = a["i"] * b["gamma"]
    rhs = b["i"] * a["gamma"]
    if lhs != rhs:
        return lhs > rhs
    return a["graph6"] < b["graph6"]


def summarize(rows: list[dict], exclude_kkk: bool = False) -> dict:
    """Report summary; the exact maximum ratio is reported as an (i, gamma)
    pair, never a float."""
    best = None
    equality = 0
    violations = 0
    timeouts = 0
    audit_failures = 0
    furuya_failures = 0
    southey_failures = 0 if exclude_kkk else None
    for row in rows:
        if row["verdict"] == VERDICT_TIMEOUT:
            timeouts += 1
            continue
        if row["verdict"] == VERDICT_EQUAL:
            equality += 1
        if row["verdict"] == VERDICT_VIOLATION:
            violations += 1
        if row["audit_ok"] is False:
            audit_failures += 1
        if row["furuya_ok"] is False:
            furuya_failures += 1
        if exclude_kkk and row["k"] == 3:
            if not southey_henning_check(row["gamma"], row["i"]):
                southey_failures += 1
        if best is None or _ratio_greater(row, best):
            best = row
    return {
        "count": len(rows),
        "max_ratio_as_pair": None if best is None else [best["i"], best["gamma"]],
        "equality_count": equality,
        "violation_count": violations,
        "timeout_count": timeouts,
        "audit_failures": audit_failures,
        "furuya_failures": furuya_failures,
        "southey_henning_failures": southey_failures,
    }


def assemble_report(
    rows: list[dict], source_params: dict, exclude_kkk: bool = False
) -> dict:
    """Filter (optionally dropping the extremal graphs) and summarize."""
    kept = [r for r in rows if not (exclude_kkk and r["is_kkk"])]
    return {
        "params": dict(source_params, exclude_kkk=exclude_kkk),
        "rows": kept,
        "summary": summarize(kept, exclude_kkk),
    }


def report_exit_code(report: dict) -> int:
    """0 verified; 2 when the run contradicts a theorem (trip wire)."""
    s = report["summary"]
    bad = (
        s["violation_count"]
        or s["audit_failures"]
        or s["furuya_failures"]
        or (s["southey_henning_failures"] or 0)
    )
    return 2 if bad else 0


def _json_safe_rows(rows: list[dict]) -> list[dict]:
    return [{k: v for k, v in row.items() if k != "runtime_micros"} for row in rows]


def report_to_json(report: dict) -> str:
    """Byte-deterministic serialization: sorted keys, no timings."""
    slim = dict(report, rows=_json_safe_rows(report["rows"]))
    return json.dumps(slim, sort_keys=True, indent=2) + "\n"


def rows_to_csv(rows: list[dict]) -> str:
    """Fixed-header delimited export; keeps runtime_micros."""
    out = [",".join(CSV_FIELDS)]
    for row in rows:
        cells = []
        for field in CSV_FIELDS:
            v = row.get(field)
            if v is None:
                cells.append("")
            elif isinstance(v, bool):
                cells.append("true" if v else "false")
            else:
                cells.append(str(v))
        out.append(",".join(cells))
    return "\n".join(out) + "\n"
