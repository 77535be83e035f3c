"""Command-line entry point: ``crthrottle {solve,throttle,enumerate,verify,simulate}``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass

from . import families
from .enumeration import (
    CacheIntegrityError,
    FilterError,
    GraphFields,
    ResultCache,
    classify,
    generate_connected,
    read_graph6_lines,
    report,
)
from .graph import Graph, GraphFormatError, emit_graph6, fmt_ext, parse_edge_list, parse_graph6

PARAMS = ("c", "gamma", "capt", "dmg", "rad", "thc", "thd", "all")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    graph: Graph | None = None
    param: str = "all"
    ks: list[int] | None = None
    cache: ResultCache | None = None
    emit: str = "csv"
    workers: int = 1


# ------------------------------------------------------------------ parsing

def _load_graph(args) -> Graph:
    sources = [s for s in (args.g6, args.file, args.family) if s is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one of --g6, --file, --family")
    try:
        if args.g6 is not None:
            return parse_graph6(args.g6)
        if args.family is not None:
            return families.parse_family(args.family)
        with open(args.file) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from exc
    except (GraphFormatError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    stripped = text.strip()
    try:
        if stripped and "\n" not in stripped and " " not in stripped:
            return parse_graph6(stripped)
        return parse_edge_list(text)
    except (GraphFormatError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def _parse_ks(args, n: int) -> list[int] | None:
    if args.k is not None and args.k_range is not None:
        raise UsageError("--k and --k-range are mutually exclusive")
    if args.k is not None:
        ks = [args.k]
    elif args.k_range is not None:
        lo, sep, hi = args.k_range.partition("..")
        try:
            ks = list(range(int(lo), int(hi) + 1))
        except ValueError as exc:
            raise UsageError(f"bad --k-range {args.k_range!r}, expected a..b") from exc
        if not sep or not ks:
            raise UsageError(f"bad --k-range {args.k_range!r}, expected a..b")
    else:
        return None
    bad = [k for k in ks if not 1 <= k <= n]
    if bad:
        raise UsageError(f"k={bad[0]} outside 1..{n}")
    return ks


def _workers(args) -> int:
    env = os.environ.get("SOLVER_WORKERS")
    raw = env if env is not None else args.workers
    try:
        w = int(raw)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad worker count {raw!r}") from exc
    if w < 1:
        raise UsageError("worker count must be >= 1")
    return w


def _cache(args) -> ResultCache | None:
    if not getattr(args, "cache", None):
        return None
    try:
        return ResultCache(args.cache)
    except CacheIntegrityError as exc:
        raise UsageError(str(exc)) from exc


# --------------------------------------------------------------- commands

def cmd_solve(cfg: RunConfig, out) -> int:
    g = cfg.graph
    fields = GraphFields(g, cache=cfg.cache)
    ks = cfg.ks or list(range(1, g.n + 1))
    print(f"graph={emit_graph6(g)} n={g.n}", file=out)
    want = PARAMS[:-1] if cfg.param == "all" else (cfg.param,)
    for p in want:
        if p in ("c", "gamma"):
            print(f"{p}={fields[p]}", file=out)
        elif p == "thc":
            print(f"th_c={fmt_ext(fields['thc'])} (k={fields['thc_k']})", file=out)
        elif p == "thd":
            print(f"th_d={fields['thd']} (k={fields['thd_k']})", file=out)
        else:
            for k in ks:
                print(f"{p}_{k}={fmt_ext(fields[f'{p}{k}'])}", file=out)
    return 0


def cmd_throttle(cfg: RunConfig, out) -> int:
    g = cfg.graph
    fields = GraphFields(g, cache=cfg.cache)
    ks = cfg.ks or list(range(1, g.n + 1))
    which = ("capt", "dmg") if cfg.param in (None, "all") else (cfg.param,)
    for p in which:
        label = "th_c" if p == "capt" else "th_d"
        print(f"k {p}_k k+{p}_k", file=out)
        for k in ks:
            v = fields[f"{p}{k}"]
            print(f"{k} {fmt_ext(v)} {fmt_ext(k + v)}", file=out)
        value = fields["thc" if p == "capt" else "thd"]
        argk = fields["thc_k" if p == "capt" else "thd_k"]
        print(f"{label}={fmt_ext(value)} at k={argk}", file=out)
    return 0


def cmd_enumerate(args, out) -> int:
    if (args.order is None) == (args.input is None):
        raise UsageError("give exactly one of --order or --input")
    try:
        if args.order is not None:
            graphs = generate_connected(args.order)
        else:
            with open(args.input) as fh:
                graphs = read_graph6_lines(fh.read())
        records = classify(graphs, args.filter, cache=_cache(args), workers=_workers(args))
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc.strerror}") from exc
    except (FilterError, GraphFormatError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    text = report(records, args.emit)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
        print(f"{len(records)} graphs written to {args.output}", file=out)
    else:
        out.write(text)
    return 0


def cmd_verify(args, out) -> int:
    from .verify import SUITES, run_suite

    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {sorted(SUITES)}")
    results = run_suite(args.suite, echo=lambda line: print(line, file=out, flush=True))
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} criteria passed", file=out)
    return 1 if failed else 0


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def cmd_simulate(args, out) -> int:
    from .strategy import PreconditionError, SimConfigError, simulate

    g = _load_graph(args)
    try:
        cops = tuple(_int_list(args.cops)) if args.cops else None
        k = len(cops) if cops else args.k or 1
        cop_script = [tuple(_int_list(s)) for s in args.cop_script.split(";")] if args.cop_script else None
        robber_script = _int_list(args.robber_script) if args.robber_script else None
        trace = simulate(g, args.cop_strategy, args.robber_strategy, k=k, rounds=args.rounds,
                         cops=cops, robber=args.robber, cop_script=cop_script,
                         robber_script=robber_script)
    except (PreconditionError, SimConfigError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    text = trace.to_json() + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


# ------------------------------------------------------------------ parser

def _add_graph_source(p):
    p.add_argument("--g6", help="graph6 string")
    p.add_argument("--file", help="file holding a graph6 line or an edge list")
    p.add_argument("--family", help="named family, e.g. petersen, gear:4, hn:10, spider:3,3,3")


def _add_k(p):
    p.add_argument("--k", type=int)
    p.add_argument("--k-range", dest="k_range", help="inclusive range a..b")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="crthrottle", description="Exact cops-and-robbers parameters.")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="print parameters of one graph")
    _add_graph_source(s)
    s.add_argument("--param", "--params", dest="param", choices=PARAMS, default="all")
    _add_k(s)
    s.add_argument("--cache")

    t = sub.add_parser("throttle", help="per-k table with the minimising k")
    _add_graph_source(t)
    t.add_argument("--param", "--params", dest="param", choices=("capt", "dmg", "all"), default="all")
    _add_k(t)
    t.add_argument("--cache")

    e = sub.add_parser("enumerate", help="classify all connected graphs of an order")
    e.add_argument("--order", type=int)
    e.add_argument("--input", help="file of graph6 lines instead of --order")
    e.add_argument("--filter")
    e.add_argument("--emit", choices=("csv", "json"), default="csv")
    e.add_argument("--cache")
    e.add_argument("--workers", default=1)
    e.add_argument("--output")

    v = sub.add_parser("verify", help="run an acceptance suite")
    v.add_argument("--suite", default="quick")

    m = sub.add_parser("simulate", help="run a strategy simulation and print the JSON trace")
    _add_graph_source(m)
    m.add_argument("--cop-strategy", default="stationary", choices=("stationary", "shadow", "scripted"))
    m.add_argument("--robber-strategy", default="evasion", choices=("evasion", "scripted"))
    m.add_argument("--k", type=int)
    m.add_argument("--cops", help="initial placement, comma separated")
    m.add_argument("--robber", type=int, help="robber start vertex")
    m.add_argument("--rounds", type=int, default=20)
    m.add_argument("--cop-script", help="per-round configurations, e.g. '1;0,2;0,3'")
    m.add_argument("--robber-script", help="per-round robber vertices, comma separated")
    m.add_argument("--output")
    return ap


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        if args.command in ("solve", "throttle"):
            g = _load_graph(args)
            cfg = RunConfig(args.command, g, args.param, _parse_ks(args, g.n), _cache(args))
            try:
                return (cmd_solve if args.command == "solve" else cmd_throttle)(cfg, out)
            except CacheIntegrityError as exc:
                raise UsageError(str(exc)) from exc
        if args.command == "enumerate":
            return cmd_enumerate(args, out)
        if args.command == "verify":
            return cmd_verify(args, out)
        return cmd_simulate(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
