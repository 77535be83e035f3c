"""Acceptance checks shared by the command line and the test suite.

Each criterion returns a :class:`CriterionResult` made of named sub-checks,
so a failing criterion reports exactly which value disagreed.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Callable

from . import families, solvers
from .enumeration import generate_connected, generate_trees
from .graph import INF, Graph, is_chordal, is_connected, is_dismantlable, is_tree
from .strategy import guarded_set, simulate


@dataclass
class Check:
    label: str
    ok: bool
    detail: str = ""


@dataclass
class CriterionResult:
    number: int
    title: str
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        head = f"{status} [{self.number}] {self.title} ({self.seconds:.1f}s)"
        bad = [f"{c.label}: {c.detail}" for c in self.checks if not c.ok]
        return head if not bad else head + " -- " + "; ".join(bad)


class _Collector(list):
    def eq(self, label, got, want):
        self.append(Check(label, got == want, f"got {_show(got)}, want {_show(want)}"))

    def true(self, label, cond, detail=""):
        self.append(Check(label, bool(cond), detail))


def _show(x):
    if isinstance(x, (list, tuple)):
        return "[" + ",".join(_show(v) for v in x) + "]"
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    return str(x)


def cdiv(a: int, b: int) -> int:
    return -(-a // b)


def ceil_sqrt(x: int) -> int:
    r = math.isqrt(x)
    return r if r * r == x else r + 1


# ------------------------------------------------------------------ formulas

def hn_gamma(n: int) -> int:
    return cdiv(n - 8, 3) + 2


def hn_capture_time(n: int, k: int):
    g = hn_gamma(n)
    if k == n:
        return 0
    if k >= g:
        return 1
    return cdiv(n - 3 - k, 2 * k - 1)


def hn_damage_bound(n: int, k: int) -> int:
    """Piecewise upper bound on the k-damage number of H_n."""
    if k == 1:
        return (n - 3) // 2 - 1
    if 2 <= k < cdiv(n - 4, 3):
        return cdiv(n - 5 - k, 2 * k - 1) - 1
    if k < cdiv(n - 8, 3) + 2:
        return 1
    return 0


# ----------------------------------------------------------------- criteria

def petersen_suite() -> list[Check]:
    g = families.petersen()
    out = _Collector()
    out.eq("c", solvers.cop_number(g), 3)
    out.eq("gamma", solvers.domination_number(g), 3)
    out.eq("rad_k", [solvers.k_radius(g, k) for k in range(1, 11)], [2, 2] + [1] * 7 + [0])
    out.eq("capt_k", [solvers.capture_time(g, k) for k in range(1, 11)], [INF, INF] + [1] * 7 + [0])
    out.eq("dmg_k", [solvers.damage_number(g, k) for k in range(1, 11)], [5, 2] + [0] * 8)
    out.eq("th_c", solvers.cop_throttling(g)[0], 4)
    out.eq("th_d", solvers.damage_throttling(g)[0], 3)
    return out


def small_sweep(max_order: int = 6) -> list[Check]:
    out = _Collector()
    bad = []
    for n in range(2, max_order + 1):
        for g in generate_connected(n):
            thc, thd = solvers.cop_throttling(g)[0], solvers.damage_throttling(g)[0]
            if thd != thc - 1:
                bad.append(g)
    out.true(f"th_d = th_c - 1 on connected 2 <= n <= {max_order}", not bad,
             f"{len(bad)} exceptions")
    if max_order >= 6:
        count = sum(1 for g in generate_connected(6) if solvers.domination_number(g) == 3)
        out.eq("order-6 graphs with gamma = 3", count, 2)
    return out


def order7_classification() -> list[Check]:
    out = _Collector()
    dom3 = [g for g in generate_connected(7) if solvers.domination_number(g) == 3]
    out.eq("gamma = 3 count", len(dom3), 42)
    gaps = {}
    for g in dom3:
        gaps[g] = solvers.cop_throttling(g)[0] - solvers.damage_throttling(g)[0]
    two = [g for g, d in gaps.items() if d == 2]
    one = [g for g, d in gaps.items() if d == 1]
    out.eq("gap 2 count", len(two), 13)
    out.eq("gap 1 count", len(one), 29)
    out.true("no other gaps", len(two) + len(one) == len(dom3))
    shape = [(solvers.damage_number(g, 1), solvers.cop_throttling(g)[0],
              solvers.damage_throttling(g)[0]) for g in two]
    out.true("gap-2 graphs have dmg_1 = 1, th_c = 4, th_d = 2",
             all(s == (1, 4, 2) for s in shape), str(sorted(set(shape))))
    return out


def gear_accordion() -> list[Check]:
    out = _Collector()
    for name, build in (("gear", families.gear), ("accordion", families.accordion)):
        for l in range(4, 7):
            g = build(l)
            got = (solvers.damage_number(g, 1), solvers.damage_throttling(g)[0],
                   solvers.capture_time(g, 2), solvers.cop_throttling(g)[0])
            out.eq(f"{name}({l}) dmg_1, th_d, capt_2, th_c", list(got), [1, 2, 2, 4])
    return out


def gap3_values() -> list[Check]:
    g = families.gap3_graph()
    out = _Collector()
    capt = [solvers.capture_time(g, k) for k in range(1, 5)]
    dmg = [solvers.damage_number(g, k) for k in range(1, 3)]
    thc, thd = solvers.cop_throttling(g)[0], solvers.damage_throttling(g)[0]
    out.eq("gamma", solvers.domination_number(g), 5)
    out.eq("capt_1..4", capt, [INF, 4, 3, 2])
    out.eq("dmg_1", dmg[0], 2)
    out.eq("dmg_2", dmg[1], 1)
    out.eq("th_c", thc, 6)
    out.eq("th_d", thd, 3)
    out.true("lower bounds capt_2 >= 4, capt_3 >= 3, dmg_1 >= 2",
             capt[1] >= 4 and capt[2] >= 3 and dmg[0] >= 2,
             f"capt_2={_show(capt[1])}, capt_3={_show(capt[2])}, dmg_1={dmg[0]}")
    return out


def hn_suite(orders=range(7, 14)) -> list[Check]:
    out = _Collector()
    for n in orders:
        g = families.h_graph(n)
        out.eq(f"H_{n} gamma", solvers.domination_number(g), hn_gamma(n))
        out.eq(f"H_{n} capt_k", [solvers.capture_time(g, k) for k in range(1, n + 1)],
               [hn_capture_time(n, k) for k in range(1, n + 1)])
        dmg = [solvers.damage_number(g, k) for k in range(1, n + 1)]
        out.eq(f"H_{n} dmg_1", dmg[0], (n - 3) // 2 - 1)
        over = [k for k in range(1, n + 1) if dmg[k - 1] > hn_damage_bound(n, k)]
        out.true(f"H_{n} dmg_k within piecewise bound", not over, f"exceeded at k={over}")
        thc = solvers.cop_throttling(g)[0]
        out.true(f"H_{n} th_c >= ceil sqrt(2n-7)", thc >= ceil_sqrt(2 * n - 7),
                 f"th_c={thc}, bound={ceil_sqrt(2 * n - 7)}")
    return out


def arithmetic_identities(a_values=range(3, 11)) -> list[Check]:
    out = _Collector()
    for a in a_values:
        n = 2 * a * a - 2 * a + 6
        root = math.isqrt(2 * n - 11)
        out.true(f"a={a}: 2n-11 is a square", root * root == 2 * n - 11)
        out.true(f"a={a}: sqrt gap at least 2", ceil_sqrt(2 * n - 7) - (root - 1) >= 2)
        out.true(f"a={a}: 2 <= a < ceil((n-4)/3)", 2 <= a < cdiv(n - 4, 3))
        out.eq(f"a={a}: k + bound at k=a", a + hn_damage_bound(n, a), 2 * a - 2)
        out.eq(f"a={a}: 2a-2 vs sqrt(2n-11)-1", 2 * a - 2, root - 1)
    return out


# ------------------------------------------------------------ invariants

def invariant_violations(g: Graph, kmax: int = 3, raw: bool = True) -> list[str]:
    """Names of solver invariants that fail on ``g`` (empty list when all hold).

    With ``raw`` the per-k values come from the solvers with every shortcut
    disabled, so checks like "dmg_k = 0 iff k >= gamma" test the search
    itself rather than the shortcut that encodes them.
    """
    bad: list[str] = []
    n = g.n
    ks = range(1, min(kmax, n) + 1)
    gamma = solvers.domination_number(g)
    c = solvers.cop_number(g)
    capt = {k: solvers.capture_time(g, k, bounds=not raw) for k in ks}
    dmg = {k: solvers.damage_number(g, k, bounds=not raw) for k in ks}
    rad = {k: solvers.k_radius(g, k) for k in ks}
    thc, thd = solvers.cop_throttling(g)[0], solvers.damage_throttling(g)[0]
    conn = is_connected(g)

    def need(cond, name):
        if not cond:
            bad.append(name)

    for k in ks:
        if k < n and capt[k] != INF:
            need(dmg[k] <= capt[k] - 1, f"dmg_{k} <= capt_{k} - 1")
        need((dmg[k] == 0) == (k >= gamma), f"dmg_{k} = 0 iff k >= gamma")
        if k < n:
            need((capt[k] <= 1) == (k >= gamma), f"capt_{k} <= 1 iff k >= gamma")
        need(capt[k] >= rad[k], f"capt_{k} >= rad_{k}")
        if conn:
            need(dmg[k] >= rad[k] - 1, f"dmg_{k} >= rad_{k} - 1")
        if k > 1:
            need(capt[k] <= capt[k - 1], f"capt monotone at {k}")
            need(dmg[k] <= dmg[k - 1], f"dmg monotone at {k}")
        if conn and dmg[k] >= 2:
            need(c <= k + dmg[k] - 1, f"c <= k + dmg_{k} - 1")
        need(dmg[k] <= solvers.damage_upper_bound_topdeg(g, k), f"dmg_{k} <= top-degree bound")
    if n >= 1:
        need(dmg[1] <= n - g.max_degree - 1, "dmg_1 <= n - maxdeg - 1")
    if n <= 6:
        need(solvers.capture_time(g, n, bounds=False) == 0, "capt_n = 0")
    need(thd <= gamma, "th_d <= gamma")
    need(thc <= gamma + 1, "th_c <= gamma + 1")
    if conn and n >= 2:
        need(c <= thd <= thc - 1, "c <= th_d <= th_c - 1")
        if gamma <= 2:
            need(thd == thc - 1, "gamma <= 2 gives gap 1")
        if c == thd:
            need(gamma == c or thd < thc - 1, "c = th_d gives gamma = c or gap >= 2")
        d1 = solvers.damage_number(g, 1)
        safe = solvers.exists_safe_vertex(g) is not None
        need((c == 1 + d1) == (gamma == 1 or (c == 2 and safe)),
             "c = 1 + dmg_1 iff gamma = 1 or (c = 2 and a safe vertex exists)")
        need(is_dismantlable(g) == (solvers.capture_time(g, 1, bounds=not raw) != INF),
             "dismantlable iff capt_1 finite")
        if is_chordal(g):
            need(all(solvers.capture_time(g, k) == solvers.k_radius(g, k) for k in range(1, n + 1)),
                 "chordal capt_k = rad_k")
            need(thd == thc - 1, "chordal gap 1")
        if is_tree(g):
            need(thd == thc - 1, "tree gap 1")
    return bad


def _named_family_graphs() -> list[tuple[str, Graph]]:
    out = [("petersen", families.petersen()), ("spider:3,3,3", families.spider([3, 3, 3]))]
    out += [(f"gear:{l}", families.gear(l)) for l in range(4, 7)]
    out += [(f"accordion:{l}", families.accordion(l)) for l in range(4, 7)]
    out += [(f"hn:{n}", families.h_graph(n)) for n in range(7, 11)]
    out += [(f"cycle:{n}", families.cycle(n)) for n in range(3, 10)]
    return out


def property_suite() -> list[Check]:
    out = _Collector()
    fails = []
    for n in range(1, 7):
        for g in generate_connected(n):
            for name in invariant_violations(g, kmax=3, raw=True):
                fails.append((g, name))
    out.true("solver invariants, connected n <= 6", not fails,
             _summarise_failures(fails))

    fam_fails = []
    for label, g in _named_family_graphs():
        for name in invariant_violations(g, kmax=3, raw=False):
            fam_fails.append((label, name))
    out.true("solver invariants, named families", not fam_fails, _summarise_failures(fam_fails))

    chordal_bad = []
    for g in generate_connected(7):
        if is_chordal(g):
            if any(solvers.capture_time(g, k) != solvers.k_radius(g, k) for k in range(1, 8)):
                chordal_bad.append(g)
            elif solvers.damage_throttling(g)[0] != solvers.cop_throttling(g)[0] - 1:
                chordal_bad.append(g)
    out.true("chordal order 7: capt_k = rad_k and gap 1", not chordal_bad, f"{len(chordal_bad)} exceptions")

    tree_bad = [g for n in range(2, 10) for g in generate_trees(n)
                if solvers.damage_throttling(g)[0] != solvers.cop_throttling(g)[0] - 1]
    out.true("trees n <= 9: gap 1", not tree_bad, f"{len(tree_bad)} exceptions")

    oracle_bad = []
    for n in range(1, 6):
        for g in generate_connected(n):
            for k in range(1, min(2, n) + 1):
                if solvers.damage_number(g, k) != solvers.damage_oracle(g, k):
                    oracle_bad.append((g, k))
    out.true("damage_number agrees with damage_oracle, n <= 5, k <= 2", not oracle_bad,
             f"{len(oracle_bad)} mismatches")
    return out


def _summarise_failures(fails) -> str:
    from collections import Counter

    from .graph import emit_graph6

    if not fails:
        return ""
    counts = Counter(name for _, name in fails)
    first = {}
    for who, name in fails:
        first.setdefault(name, who if isinstance(who, str) else emit_graph6(who))
    return ", ".join(f"{name} x{cnt} (e.g. {first[name]})" for name, cnt in counts.items())


def strategy_suite(rounds: int = 50) -> list[Check]:
    g = families.petersen()
    out = _Collector()
    for v in range(g.n):
        trace = simulate(g, "stationary", "evasion", k=1, rounds=rounds, cops=(v,))
        guard = guarded_set(g, (v,))
        out.true(f"cop on {v}: no capture", not trace.captured)
        out.true(f"cop on {v}: robber never on a guarded vertex",
                 all(r.robber not in guard for r in trace.records))
        out.true(f"cop on {v}: damage avoids the guarded ring",
                 not set(trace.damaged_vertices()) & (guard - {v}))
    return out


# ------------------------------------------------------------------- suites

CRITERIA: dict[int, tuple[str, Callable[[], list[Check]]]] = {
    1: ("Petersen parameters", petersen_suite),
    2: ("order <= 6 sweep", small_sweep),
    3: ("order-7 classification", order7_classification),
    4: ("gear and accordion", gear_accordion),
    5: ("gap-3 graph", gap3_values),
    6: ("H_n, n = 7..13", hn_suite),
    7: ("arithmetic identities", arithmetic_identities),
    8: ("property suite", property_suite),
    9: ("strategy simulation on Petersen", strategy_suite),
}

_ALL = [(n, title, fn) for n, (title, fn) in CRITERIA.items()]

SUITES = {
    "full": _ALL,
    "paper": _ALL,
    "quick": [
        (1, "Petersen parameters", petersen_suite),
        (4, "gear and accordion", gear_accordion),
        (2, "order <= 5 sweep", lambda: small_sweep(5)),
    ],
}


def run_criterion(number: int, title: str, fn: Callable[[], list[Check]]) -> CriterionResult:
    t0 = time.perf_counter()
    checks = list(fn())
    return CriterionResult(number, title, checks, time.perf_counter() - t0)


def run_suite(name: str, echo: Callable[[str], None] | None = print) -> list[CriterionResult]:
    if name not in SUITES:
        raise KeyError(name)
    results = []
    for number, title, fn in SUITES[name]:
        res = run_criterion(number, title, fn)
        if echo is not None:
            echo(res.line())
        results.append(res)
    return results
