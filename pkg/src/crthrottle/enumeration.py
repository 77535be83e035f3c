"""Small connected graph generation, parameter sweeps, filters, cache and reports."""

from __future__ import annotations

import ast
import csv
import io
import json
import operator
import os
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable

from .canon import canonical_form, canonical_graph
from .graph import (
    INF,
    Graph,
    fmt_ext,
    is_chordal,
    is_connected,
    is_dismantlable,
    is_tree,
    parse_ext,
    parse_graph6,
)
from . import solvers

MAX_ORDER = 8


class FilterError(ValueError):
    """Unknown field or malformed filter expression."""


class CacheIntegrityError(RuntimeError):
    """Corrupt cache line or a conflicting value for an existing key."""


# ----------------------------------------------------------------- generation

def generate_connected(n: int) -> list[Graph]:
    """One canonically labelled representative per connected graph of order n.

    Every connected graph has a vertex whose deletion leaves it connected,
    so extending each order-(n-1) representative by a vertex joined to a
    nonempty subset reaches every class.
    """
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"order {n} outside supported range 1..{MAX_ORDER}")
    return list(_connected(n))


@lru_cache(maxsize=None)
def _connected(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph.from_edges(1, []),)
    found: dict[str, Graph] = {}
    for base in _connected(n - 1):
        old = base.edges()
        for subset in range(1, 1 << (n - 1)):
            edges = old + [(v, n - 1) for v in range(n - 1) if subset >> v & 1]
            g = Graph.from_edges(n, edges)
            key = canonical_form(g)
            if key not in found:
                found[key] = canonical_graph(g)
    return tuple(found[k] for k in sorted(found))


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph.from_edges(1, []),)
    found: dict[str, Graph] = {}
    for base in _trees(n - 1):
        for v in range(n - 1):
            g = Graph.from_edges(n, base.edges() + [(v, n - 1)])
            key = canonical_form(g)
            if key not in found:
                found[key] = canonical_graph(g)
    return tuple(found[k] for k in sorted(found))


def generate_trees(n: int) -> list[Graph]:
    """Non-isomorphic trees of order n by leaf extension (no order cap; keep n small)."""
    if n < 1:
        raise ValueError("tree order must be >= 1")
    return list(_trees(n))


def read_graph6_lines(text: str) -> list[Graph]:
    return [parse_graph6(ln) for ln in text.splitlines() if ln.strip()]


# ---------------------------------------------------------------------- cache

class ResultCache:
    """Append-only JSON-lines store of ``{"g6", "param", "value"}`` records."""

    def __init__(self, path: str | os.PathLike | None = None):
        self.path = path
        self.data: dict[tuple[str, str], object] = {}
        if path is not None and os.path.exists(path):
            with open(path, encoding="utf-8") as fh:
                for lineno, line in enumerate(fh, 1):
                    if not line.strip():
                        continue
                    try:
                        rec = json.loads(line)
                        key = (rec["g6"], rec["param"])
                        value = parse_ext(rec["value"])
                    except (ValueError, KeyError, TypeError) as exc:
                        raise CacheIntegrityError(f"{path}:{lineno}: corrupt cache line") from exc
                    self._store(key, value, where=f"{path}:{lineno}")

    def _store(self, key, value, where) -> bool:
        old = self.data.get(key, None)
        if key in self.data:
            if old != value:
                raise CacheIntegrityError(f"{where}: conflicting value for {key}: {old} vs {value}")
            return False
        self.data[key] = value
        return True

    def get(self, g6: str, param: str):
        return self.data.get((g6, param))

    def put(self, g6: str, param: str, value) -> None:
        if self._store((g6, param), value, where="put") and self.path is not None:
            with open(self.path, "a", encoding="utf-8") as fh:
                rec = {"g6": g6, "param": param, "value": "inf" if value == INF else int(value)}
                fh.write(json.dumps(rec) + "\n")

    def __len__(self):
        return len(self.data)


# ---------------------------------------------------------------------- fields

def _param_fn(param: str) -> Callable[[Graph], object]:
    name, _, arg = param.partition(":")
    if name == "gamma":
        return solvers.domination_number
    if name == "c":
        return solvers.cop_number
    if name in ("thc", "thc_k"):
        return lambda g: solvers.cop_throttling(g)[0 if name == "thc" else 1]
    if name in ("thd", "thd_k"):
        return lambda g: solvers.damage_throttling(g)[0 if name == "thd" else 1]
    k = int(arg)
    if name == "capt":
        return lambda g: solvers.capture_time(g, k)
    if name == "dmg":
        return lambda g: solvers.damage_number(g, k)
    if name == "rad":
        return lambda g: solvers.k_radius(g, k)
    raise KeyError(param)


class SolverCounter:
    calls = 0


class GraphFields:
    """Lazily computed, cache-backed parameter values for one graph."""

    _STRUCTURAL = {
        "n": lambda g: g.n,
        "m": lambda g: g.num_edges,
        "maxdeg": lambda g: g.max_degree,
        "mindeg": lambda g: g.min_degree,
        "tree": lambda g: int(is_tree(g)),
        "chordal": lambda g: int(is_chordal(g)),
        "dismantlable": lambda g: int(is_dismantlable(g)),
        "connected": lambda g: int(is_connected(g)),
    }
    _ALIASES = {"th_c": "thc", "th_d": "thd", "delta": "maxdeg", "maxdegree": "maxdeg"}

    def __init__(self, g: Graph, key: str | None = None, cache: ResultCache | None = None):
        self.g = g
        self.key = key if key is not None else canonical_form(g)
        self.cache = cache
        self._memo: dict[str, object] = {}

    def param(self, param: str):
        if param in self._memo:
            return self._memo[param]
        value = self.cache.get(self.key, param) if self.cache is not None else None
        if value is None:
            SolverCounter.calls += 1
            value = _param_fn(param)(self.g)
            if self.cache is not None:
                self.cache.put(self.key, param, value)
        self._memo[param] = value
        return value

    def __getitem__(self, name: str):
        name = self._ALIASES.get(name, name)
        if name in self._STRUCTURAL:
            return self._STRUCTURAL[name](self.g)
        if name == "inf":
            return INF
        if name == "gap":
            return self["thc"] - self["thd"]
        m = re.fullmatch(r"(capt|dmg|rad)_?(\d+)", name)
        if m:
            k = int(m.group(2))
            if not 1 <= k <= self.g.n:
                return INF if m.group(1) != "dmg" else 0
            return self.param(f"{m.group(1)}:{k}")
        if name in ("gamma", "c", "thc", "thd", "thc_k", "thd_k"):
            return self.param(name)
        raise FilterError(f"unknown filter field {name!r}")


def known_field(name: str) -> bool:
    name = GraphFields._ALIASES.get(name, name)
    return (
        name in GraphFields._STRUCTURAL
        or name in ("inf", "gap", "gamma", "c", "thc", "thd", "thc_k", "thd_k")
        or re.fullmatch(r"(capt|dmg|rad)_?\d+", name) is not None
    )


# --------------------------------------------------------------------- filters

_CMP = {"<=": operator.le, ">=": operator.ge, "!=": operator.ne, "==": operator.eq,
        "=": operator.eq, "<": operator.lt, ">": operator.gt}
_CMP_RE = re.compile(r"(<=|>=|!=|==|=|<|>)")
_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul}


def _compile_expr(text: str):
    try:
        tree = ast.parse(text.strip(), mode="eval").body
    except SyntaxError as exc:
        raise FilterError(f"cannot parse {text!r}") from exc

    def check(node):
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            check(node.left)
            check(node.right)
        elif isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            check(node.operand)
        elif isinstance(node, ast.Constant) and isinstance(node.value, int):
            pass
        elif isinstance(node, ast.Name):
            if not known_field(node.id):
                raise FilterError(f"unknown filter field {node.id!r}")
        else:
            raise FilterError(f"unsupported syntax in {text!r}")

    check(tree)

    def ev(node, fields):
        if isinstance(node, ast.BinOp):
            return _BINOPS[type(node.op)](ev(node.left, fields), ev(node.right, fields))
        if isinstance(node, ast.UnaryOp):
            return -ev(node.operand, fields)
        if isinstance(node, ast.Constant):
            return node.value
        return fields[node.id]

    return lambda fields: ev(tree, fields)


@dataclass
class Filter:
    """Flat conjunction of comparisons, e.g. ``gamma=3, gap>=2``."""

    text: str
    clauses: list = field(default_factory=list)

    @classmethod
    def parse(cls, text: str | None) -> "Filter":
        flt = cls(text or "")
        if not text or not text.strip():
            return flt
        for part in re.split(r",|&&|&|\band\b", text):
            if not part.strip():
                raise FilterError(f"empty clause in {text!r}")
            pieces = _CMP_RE.split(part)
            if len(pieces) != 3:
                raise FilterError(f"clause {part.strip()!r} must be one comparison")
            lhs, op, rhs = pieces
            flt.clauses.append((_compile_expr(lhs), _CMP[op], _compile_expr(rhs)))
        return flt

    def __call__(self, fields: GraphFields) -> bool:
        return all(op(lhs(fields), rhs(fields)) for lhs, op, rhs in self.clauses)


# ------------------------------------------------------------------ classify

@dataclass
class ClassRecord:
    g6: str
    bundle: solvers.ParamBundle
    gap: object
    is_tree: bool
    is_chordal: bool
    is_dismantlable: bool


def bundle_from_fields(fields: GraphFields) -> solvers.ParamBundle:
    n = fields.g.n
    return solvers.ParamBundle(
        g6=fields.key,
        n=n,
        c=fields["c"],
        gamma=fields["gamma"],
        capt={k: fields[f"capt{k}"] for k in range(1, n + 1)},
        dmg={k: fields[f"dmg{k}"] for k in range(1, n + 1)},
        rad={k: fields[f"rad{k}"] for k in range(1, n + 1)},
        th_c=fields["thc"],
        th_d=fields["thd"],
        witness_k_thc=fields["thc_k"],
        witness_k_thd=fields["thd_k"],
    )


def _record(fields: GraphFields) -> ClassRecord:
    b = bundle_from_fields(fields)
    g = fields.g
    return ClassRecord(fields.key, b, b.th_c - b.th_d, is_tree(g), is_chordal(g), is_dismantlable(g))


def _classify_one(args):
    g6, flt_text = args
    g = parse_graph6(g6)
    fields = GraphFields(g, key=canonical_form(g))
    if not Filter.parse(flt_text)(fields):
        return None
    return _record(fields)


def classify(graphs: Iterable[Graph], filter: str | None = None,
             cache: ResultCache | None = None, workers: int = 1) -> list[ClassRecord]:
    """Full parameter records for the graphs passing ``filter``, sorted by key."""
    flt = Filter.parse(filter)
    keyed = {}
    for g in graphs:
        keyed.setdefault(canonical_form(g), g)
    order = sorted(keyed)
    if workers > 1 and cache is None:
        from multiprocessing import Pool

        with Pool(workers) as pool:
            out = pool.map(_classify_one, [(k, filter) for k in order], chunksize=8)
        return [r for r in out if r is not None]
    records = []
    for key in order:
        fields = GraphFields(keyed[key], key=key, cache=cache)
        if flt(fields):
            records.append(_record(fields))
    return records


# -------------------------------------------------------------------- report

BASE_COLUMNS = ["g6", "n", "c", "gamma", "th_c", "th_d", "gap"]


def report(records: list[ClassRecord], fmt: str = "csv") -> str:
    if fmt == "json":
        return json.dumps([record_to_json(r) for r in records], indent=2) + "\n"
    if fmt != "csv":
        raise ValueError(f"unknown report format {fmt!r}")
    top = max((r.bundle.n for r in records), default=0)
    header = list(BASE_COLUMNS)
    for name in ("capt", "dmg", "rad"):
        header += [f"{name}_{k}" for k in range(1, top + 1)]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for r in records:
        b = r.bundle
        row = [b.g6, b.n, b.c, b.gamma, fmt_ext(b.th_c), b.th_d, fmt_ext(r.gap)]
        for table in (b.capt, b.dmg, b.rad):
            row += [fmt_ext(table[k]) if k in table else "" for k in range(1, top + 1)]
        writer.writerow(row)
    return buf.getvalue()


def record_to_json(r: ClassRecord) -> dict:
    b = r.bundle

    def ext_map(d):
        return {str(k): ("inf" if v == INF else int(v)) for k, v in sorted(d.items())}

    return {
        "g6": b.g6,
        "n": b.n,
        "c": b.c,
        "gamma": b.gamma,
        "capt": ext_map(b.capt),
        "dmg": ext_map(b.dmg),
        "rad": ext_map(b.rad),
        "th_c": "inf" if b.th_c == INF else int(b.th_c),
        "th_d": b.th_d,
        "witness_k_thc": b.witness_k_thc,
        "witness_k_thd": b.witness_k_thd,
        "gap": "inf" if r.gap == INF else int(r.gap),
        "is_tree": r.is_tree,
        "is_chordal": r.is_chordal,
        "is_dismantlable": r.is_dismantlable,
    }
