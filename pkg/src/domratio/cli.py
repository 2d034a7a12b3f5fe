"""Command-line front end: solve, construct, verify, gen.

Exit codes: 0 = verified/ok, 1 = usage or input error, 2 = a run
contradicted a verified inequality (trip wire; never fires on valid runs).
Configuration comes from flags, optionally seeded by a TOML file whose keys
mirror the flag names; explicit flags win.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

try:
    import tomllib
except ModuleNotFoundError:
    import tomli as tomllib

from .bitset import vertex_list
from .errors import DomratioError, InfeasibleSpec
from .generate import (
    RNG_ALGORITHM,
    EnumSpec,
    SampleSpec,
    enumerate_connected_regular,
    sample_random_regular,
)
from .graph6 import encode, parse, write_lines
from .pipeline import (
    DEFAULT_TIMEOUT_SECS,
    assemble_report,
    report_exit_code,
    report_to_json,
    rows_to_csv,
    run_pipeline,
)
from .proofs import ProofTrace, construct_independent_dominating
from .solvers import min_dominating_set, min_independent_dominating_set

_CONFIG_KEYS = {"jobs", "timeout_secs", "exclude_kkk", "json", "out", "csv"}


class _Parser(argparse.ArgumentParser):
    # usage problems are exit 1; exit 2 is reserved for falsified math
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        sys.exit(1)


def _load_config(path: str) -> dict:
    with open(path, "rb") as fh:
        cfg = tomllib.load(fh)
    unknown = set(cfg) - _CONFIG_KEYS
    if unknown:
        raise DomratioError(f"unknown config keys: {sorted(unknown)}")
    return cfg


def _resolve(cli_value, cfg: dict, key: str, fallback):
    if cli_value is not None:
        return cli_value
    if key in cfg:
        return cfg[key]
    return fallback


def _input_lines(token: str) -> list[str]:
    """Treat the argument as a file when one exists, else as a literal
    graph6 line."""
    if os.path.exists(token):
        with open(token, "r", encoding="ascii") as fh:
            text = fh.read()
        return [line for line in text.splitlines() if line.strip()]
    return [token]


def _parse_orders(token: str) -> tuple[list[int], bool]:
    """Orders plus whether the token was an explicit single order."""
    if ".." in token:
        lo_s, hi_s = token.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
        if hi < lo:
            raise ValueError(f"empty order range {token}")
        return list(range(lo, hi + 1)), False
    return [int(token)], True


def _trace_dict(trace: ProofTrace, gamma: int) -> dict:
    def verts(mask):
        return None if mask is None else vertex_list(mask)

    return {
        "case_taken": trace.case_taken,
        "k": trace.k,
        "gamma": gamma,
        "base_set": vertex_list(trace.base_set),
        "internal_edges": trace.internal_edges,
        "result_set": vertex_list(trace.result_set),
        "result_size": len(vertex_list(trace.result_set)),
        "bound_chain": [[label, value] for label, value in trace.bound_chain],
        "strict": trace.strict,
        "bound_scope": trace.bound_scope,
        "independent_core": verts(trace.independent_core),
        "pool": verts(trace.pool),
        "pool_blocked": verts(trace.pool_blocked),
        "completion": verts(trace.completion),
        "crossing_edges": trace.crossing_edges,
    }


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def cmd_solve(args, cfg: dict) -> int:
    as_json = _resolve(args.json, cfg, "json", False)
    timeout = _resolve(args.timeout_secs, cfg, "timeout_secs", DEFAULT_TIMEOUT_SECS)
    results = []
    for line in _input_lines(args.input):
        graph = parse(line)
        deadline = None if timeout is None else time.monotonic() + timeout
        dom = min_dominating_set(graph, deadline)
        ind = min_independent_dominating_set(graph, deadline)
        results.append(
            {
                "graph6": encode(graph),
                "n": graph.n,
                "gamma": dom.value,
                "gamma_witness": vertex_list(dom.witness),
                "i": ind.value,
                "i_witness": vertex_list(ind.witness),
                "optimality": dom.optimality,
            }
        )
    if as_json:
        sys.stdout.write(_dump_json({"graphs": results}))
    else:
        for r in results:
            sys.stdout.write(
                f"{r['graph6']} n={r['n']} gamma={r['gamma']} {r['gamma_witness']} "
                f"i={r['i']} {r['i_witness']}\n"
            )
    return 0


def cmd_construct(args, cfg: dict) -> int:
    timeout = _resolve(args.timeout_secs, cfg, "timeout_secs", DEFAULT_TIMEOUT_SECS)
    out_path = _resolve(args.out, cfg, "out", None)
    traces = []
    for line in _input_lines(args.input):
        graph = parse(line)
        deadline = None if timeout is None else time.monotonic() + timeout
        dom = min_dominating_set(graph, deadline)
        trace = construct_independent_dominating(graph, dom.witness, dom)
        d = _trace_dict(trace, dom.value)
        d["graph6"] = encode(graph)
        traces.append(d)
    payload = traces[0] if len(traces) == 1 else traces
    text = _dump_json(payload)
    if out_path:
        with open(out_path, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _verify_lines(args) -> tuple[list[str], dict]:
    if args.source == "enumerate":
        k = args.k
        orders_requested, explicit = _parse_orders(args.orders)
        if k < 3:
            raise InfeasibleSpec(f"the theorem needs degree >= 3, got {k}")
        orders = []
        lines = []
        for n in orders_requested:
            if (n * k) % 2 != 0 or k >= n:
                if explicit:
                    raise InfeasibleSpec(f"no connected {k}-regular graphs on {n} vertices")
                continue
            orders.append(n)
            lines.extend(encode(g) for g in enumerate_connected_regular(EnumSpec(n, k)))
        params = {"source": "enumerate", "orders": orders, "k": k}
        return lines, params
    if args.source == "file":
        with open(args.path, "r", encoding="ascii") as fh:
            text = fh.read()
        lines = [line for line in text.splitlines() if line.strip()]
        params = {"source": "file", "path": args.path}
        return lines, params
    lines = []
    for offset in range(args.count):
        g = sample_random_regular(SampleSpec(args.n, args.k, args.seed + offset))
        lines.append(encode(g))
    params = {
        "source": "sample",
        "n": args.n,
        "k": args.k,
        "seed": args.seed,
        "count": args.count,
        "rng_algorithm": RNG_ALGORITHM,
    }
    return lines, params


def cmd_verify(args, cfg: dict) -> int:
    as_json = _resolve(args.json, cfg, "json", False)
    jobs = _resolve(args.jobs, cfg, "jobs", os.cpu_count() or 1)
    timeout = _resolve(args.timeout_secs, cfg, "timeout_secs", DEFAULT_TIMEOUT_SECS)
    exclude_kkk = _resolve(args.exclude_kkk, cfg, "exclude_kkk", False)
    out_path = _resolve(args.out, cfg, "out", None)
    csv_path = _resolve(args.csv, cfg, "csv", None)

    lines, params = _verify_lines(args)
    rows = run_pipeline(lines, jobs=jobs, timeout_secs=timeout)
    report = assemble_report(rows, params, exclude_kkk=exclude_kkk)

    json_text = report_to_json(report)
    if out_path:
        with open(out_path, "w", encoding="ascii") as fh:
            fh.write(json_text)
    if csv_path:
        with open(csv_path, "w", encoding="ascii") as fh:
            fh.write(rows_to_csv(report["rows"]))
    if as_json:
        sys.stdout.write(json_text)
    else:
        for row in report["rows"]:
            sys.stdout.write(
                f"{row['graph6']} n={row['n']} k={row['k']} gamma={row['gamma']} "
                f"i={row['i']} verdict={row['verdict']}"
                + (" kkk" if row["is_kkk"] else "")
                + "\n"
            )
        s = report["summary"]
        ratio = s["max_ratio_as_pair"]
        sys.stdout.write(
            f"count={s['count']} equal={s['equality_count']} "
            f"violations={s['violation_count']} timeouts={s['timeout_count']} "
            f"max_ratio={'none' if ratio is None else f'{ratio[0]}/{ratio[1]}'}\n"
        )
    return report_exit_code(report)


def cmd_gen(args, cfg: dict) -> int:
    out_path = _resolve(args.out, cfg, "out", None)
    graphs = enumerate_connected_regular(EnumSpec(args.n, args.k))
    text = write_lines(graphs)
    if out_path:
        with open(out_path, "w", encoding="ascii") as fh:
            fh.write(text)
        sys.stdout.write(f"{len(graphs)}\n")
    else:
        sys.stdout.write(text)
        sys.stderr.write(f"{len(graphs)}\n")
    return 0


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="TOML file mirroring the flags")
    p.add_argument("--timeout-secs", type=float, dest="timeout_secs", default=None)


def _build_parser() -> _Parser:
    parser = _Parser(prog="domratio", description="exact domination ratio toolkit")
    sub = parser.add_subparsers(dest="command", required=True)
    boolean = argparse.BooleanOptionalAction

    p_solve = sub.add_parser("solve", help="exact gamma and i with witnesses")
    p_solve.add_argument("input", help="graph6 line or file of lines")
    p_solve.add_argument("--json", action=boolean, default=None)
    _add_common(p_solve)
    p_solve.set_defaults(func=cmd_solve)

    p_con = sub.add_parser("construct", help="conversion trace as JSON")
    p_con.add_argument("input", help="graph6 line or file of lines")
    p_con.add_argument("--out", default=None)
    _add_common(p_con)
    p_con.set_defaults(func=cmd_construct)

    p_ver = sub.add_parser("verify", help="corpus ratio report")
    src = p_ver.add_subparsers(dest="source", required=True)
    s_enum = src.add_parser("enumerate", help="exhaustive connected k-regular corpus")
    s_enum.add_argument("orders", help="order or inclusive range, e.g. 10 or 4..12")
    s_enum.add_argument("k", type=int)
    s_file = src.add_parser("file", help="graph6 lines from a file")
    s_file.add_argument("path")
    s_samp = src.add_parser("sample", help="pairing-model random corpus")
    s_samp.add_argument("n", type=int)
    s_samp.add_argument("k", type=int)
    s_samp.add_argument("seed", type=int)
    s_samp.add_argument("count", type=int)
    for sp in (s_enum, s_file, s_samp):
        _add_common(sp)
        sp.add_argument("--json", action=boolean, default=None)
        sp.add_argument("--out", default=None)
        sp.add_argument("--csv", default=None)
        sp.add_argument("--jobs", type=int, default=None)
        sp.add_argument("--exclude-kkk", action=boolean, dest="exclude_kkk", default=None)
        sp.set_defaults(func=cmd_verify)

    p_gen = sub.add_parser("gen", help="write an enumerated corpus")
    p_gen.add_argument("n", type=int)
    p_gen.add_argument("k", type=int)
    p_gen.add_argument("--out", default=None)
    _add_common(p_gen)
    p_gen.set_defaults(func=cmd_gen)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _load_config(args.config) if getattr(args, "config", None) else {}
        return args.func(args, cfg)
    except (DomratioError, OSError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
