"""Exact solvers for domination, k-radius, capture time, damage and throttling.

Game positions are held as dense arrays indexed ``[config, robber]``
where ``config`` enumerates cop multisets in lexicographic order.  The
capture solver computes attractor levels; the damage solver runs
least-fixpoint value iteration stratum by stratum over damaged sets,
with the total reward truncated at a cap that is raised by iterative
deepening between a lower and an upper bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, islice, product

import numpy as np
from scipy import sparse

from .graph import INF, Graph, bits, closed_mask, components, distance_matrix, mask_of


def _check_k(g: Graph, k: int) -> None:
    if not 1 <= k <= g.n:
        raise ValueError(f"k={k} outside 1..{g.n}")


# ------------------------------------------------------------------ domination

def greedy_dominating_set(g: Graph) -> list[int]:
    full = g.full_mask()
    covered = 0
    chosen = []
    while covered != full:
        v = max(g.vertices, key=lambda u: (bin(g.nmask[u] & ~covered).count("1"), -u))
        chosen.append(v)
        covered |= g.nmask[v]
    return chosen


def _dominates_within(g: Graph, budget: int, covered: int, full: int, maxcover: int) -> bool:
    if covered == full:
        return True
    if budget == 0:
        return False
    missing = bin(full & ~covered).count("1")
    if missing > budget * maxcover:
        return False
    # branch on the undominated vertex with the fewest ways to dominate it
    u = min(bits(full & ~covered), key=lambda x: (bin(g.nmask[x]).count("1"), x))
    return any(
        _dominates_within(g, budget - 1, covered | g.nmask[v], full, maxcover)
        for v in bits(g.nmask[u])
    )


@lru_cache(maxsize=4096)
def domination_number(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("domination number of the empty graph")
    upper = len(greedy_dominating_set(g))
    maxcover = g.max_degree + 1
    lower = math.ceil(g.n / maxcover)
    for s in range(lower, upper):
        if _dominates_within(g, s, 0, g.full_mask(), maxcover):
            return s
    return upper


def minimum_dominating_set(g: Graph) -> list[int]:
    gamma = domination_number(g)
    for s in combinations(g.vertices, gamma):
        if closed_mask(g, mask_of(s)) == g.full_mask():
            return list(s)
    raise AssertionError("unreachable")


# --------------------------------------------------------------------- radius

@lru_cache(maxsize=4096)
def _dist_array(g: Graph) -> np.ndarray:
    return np.array(distance_matrix(g), dtype=float)


@lru_cache(maxsize=4096)
def k_radius(g: Graph, k: int):
    """min over k-subsets S of max_v d(S, v); INF iff k < #components."""
    _check_k(g, k)
    if k < len(components(g)):
        return INF
    dist = _dist_array(g)
    best = INF
    combos = combinations(range(g.n), k)
    while chunk := list(islice(combos, 4096)):
        idx = np.array(chunk, dtype=np.intp)
        best = min(best, dist[idx].min(axis=1).max(axis=1).min())
    return INF if best == INF else int(best)


# --------------------------------------------------------------- state space

class CopSpace:
    """Cop configurations for ``k`` cops on ``g`` with their move structure."""

    def __init__(self, g: Graph, k: int):
        _check_k(g, k)
        self.g = g
        self.k = k
        self.configs = list(combinations_with_replacement(range(g.n), k))
        self.index = {c: i for i, c in enumerate(self.configs)}
        m, n = len(self.configs), g.n
        occ = np.zeros((m, n), dtype=bool)
        for i, c in enumerate(self.configs):
            occ[i, list(c)] = True
        self.occ = occ
        self.support = [mask_of(c) for c in self.configs]
        closed = [sorted(g.closed_nbhd(v)) for v in range(n)]
        succ = []
        for c in self.configs:
            succ.append(sorted({self.index[tuple(sorted(p))] for p in product(*(closed[v] for v in c))}))
        self.succ = succ
        width = max(len(s) for s in succ)
        # pad with the config itself (staying is always legal)
        self.succ_pad = np.array([s + [i] * (width - len(s)) for i, s in enumerate(succ)], dtype=np.intp)
        rows = np.repeat(np.arange(m), [len(s) for s in succ])
        cols = np.concatenate([np.array(s, dtype=np.intp) for s in succ])
        self.succ_matrix = sparse.csr_matrix((np.ones(len(cols), dtype=np.int32), (rows, cols)), shape=(m, m))
        dmax = max(len(cl) for cl in closed)
        self.nbr_pad = np.array([cl + [cl[0]] * (dmax - len(cl)) for cl in closed], dtype=np.intp)
        amat = np.zeros((n, n), dtype=np.int32)
        for v in range(n):
            amat[v, closed[v]] = 1
        self.closed_adj = amat
        self.guarded = [closed_mask(g, s) for s in self.support]

    def __len__(self):
        return len(self.configs)


@lru_cache(maxsize=32)
def cop_space(g: Graph, k: int) -> CopSpace:
    return CopSpace(g, k)


# ---------------------------------------------------------------- capture time

def capture_values(g: Graph, k: int) -> np.ndarray:
    """Attractor level of every cops-to-move position ``[config, robber]``.

    Entry ``t`` means the cops can force capture within ``t`` rounds;
    ``inf`` marks positions outside the attractor.
    """
    sp = cop_space(g, k)
    occ = sp.occ
    value = np.full(occ.shape, np.inf)
    win = np.zeros(occ.shape, dtype=bool)
    t = 0
    while True:
        t += 1
        if t == 1:
            reach = occ
        else:
            safe_cells = (~(occ | win)).astype(np.int32)
            escape = safe_cells @ sp.closed_adj > 0
            reach = occ | ~escape
        new_win = (sp.succ_matrix @ reach.astype(np.int32)) > 0
        fresh = new_win & ~win
        if not fresh.any():
            return value
        value[fresh] = t
        win = new_win


def _capture_from_values(sp: CopSpace, value: np.ndarray):
    per_config = np.where(sp.occ, 0.0, value).max(axis=1)
    per_config[sp.occ.all(axis=1)] = 0.0
    best = int(per_config.argmin())
    v = per_config[best]
    return (INF if v == np.inf else int(v)), sp.configs[best]


@lru_cache(maxsize=4096)
def capture_time_witness(g: Graph, k: int, bounds: bool = True):
    """``(capt_k, placement)`` with the lexicographically first optimal placement."""
    _check_k(g, k)
    if bounds:
        if k == g.n:
            return 0, tuple(range(g.n))
        gamma = domination_number(g)
        if k >= gamma:
            dom = minimum_dominating_set(g)
            return 1, tuple(sorted(dom + [dom[0]] * (k - gamma)))
    sp = cop_space(g, k)
    return _capture_from_values(sp, capture_values(g, k))


def capture_time(g: Graph, k: int, bounds: bool = True):
    return capture_time_witness(g, k, bounds)[0]


@lru_cache(maxsize=4096)
def cop_number(g: Graph) -> int:
    gamma = domination_number(g)
    for k in range(1, gamma):
        if capture_time(g, k) != INF:
            return k
    return gamma


# ---------------------------------------------------------------- damage

class _DamageSolver:
    """Truncated damage game: reward stops accruing once ``cap`` vertices are damaged."""

    def __init__(self, sp: CopSpace, cap: int):
        self.sp = sp
        self.cap = cap
        self.memo: dict[int, np.ndarray] = {}
        self.nbr_occ = sp.occ[:, sp.nbr_pad]  # [config, r, j]: is robber's j-th option occupied
        self.sweeps = 0

    def robber_values(self, vcop: np.ndarray) -> np.ndarray:
        opts = vcop[:, self.sp.nbr_pad]
        opts = np.where(self.nbr_occ, -1, opts)
        return np.maximum(opts.max(axis=2), 0)

    def stratum(self, dmask: int) -> np.ndarray:
        """Robber-to-move values for damaged set ``dmask`` (remaining reward)."""
        got = self.memo.get(dmask)
        if got is not None:
            return got
        sp = self.sp
        m, n = sp.occ.shape
        size = bin(dmask).count("1")
        g = sp.g
        frontier = g.full_mask() if dmask == 0 else closed_mask(g, dmask) & ~dmask
        fixed = np.zeros((m, n), dtype=np.int16)
        for r in bits(frontier):
            if size + 1 >= self.cap:
                fixed[:, r] = 1
            else:
                fixed[:, r] = 1 + self.stratum(dmask | 1 << r)[:, r]
        in_d = np.zeros(n, dtype=bool)
        in_d[bits(dmask)] = True
        vcop = np.zeros((m, n), dtype=np.int16)
        while True:
            self.sweeps += 1
            vrob = self.robber_values(vcop)
            q = np.where(in_d[None, :], vrob, fixed)
            q[sp.occ] = 0
            new = q[sp.succ_pad].min(axis=1)
            if np.array_equal(new, vcop):
                break
            vcop = new
        vrob = self.robber_values(vcop)
        self.memo[dmask] = vrob
        if dmask == 0:
            self.root = vcop
        return vrob

    def solve(self):
        """``(min(cap, dmg_k), witness placement)``."""
        self.stratum(0)
        sp = self.sp
        per_config = np.where(sp.occ, 0, self.root).max(axis=1)
        best = int(per_config.argmin())
        return int(per_config[best]), sp.configs[best]


def placement_damage_bound(g: Graph, cops) -> int:
    """Damage a stationary placement concedes at most: ``n - |N[support]|``."""
    return g.n - bin(closed_mask(g, mask_of(cops))).count("1")


@lru_cache(maxsize=4096)
def damage_number_witness(g: Graph, k: int, bounds: bool = True):
    """``(dmg_k, placement)``; placement is the first config achieving the value."""
    _check_k(g, k)
    sp = None
    if bounds:
        gamma = domination_number(g)
        if k >= gamma:
            dom = minimum_dominating_set(g)
            return 0, tuple(sorted(dom + [dom[0]] * (k - gamma)))
        sp = cop_space(g, k)
        guarded = np.array([bin(m).count("1") for m in sp.guarded])
        upper = g.n - int(guarded.max())
        upper_cfg = sp.configs[int(guarded.argmax())]
        lower = 1  # no placement dominates, so the robber damages its start vertex
        if lower == upper:
            return upper, upper_cfg
    else:
        sp = cop_space(g, k)
        lower, upper, upper_cfg = 0, g.n, None
    for cap in range(lower + 1, upper + 1):
        value, cfg = _DamageSolver(sp, cap).solve()
        if value < cap:
            return value, cfg
    if upper_cfg is None:
        return value, cfg
    return upper, upper_cfg


def damage_number(g: Graph, k: int, bounds: bool = True) -> int:
    return damage_number_witness(g, k, bounds)[0]


def placement_damage(g: Graph, cops) -> int:
    """Damage value of the game after the cops place on ``cops`` (robber places optimally)."""
    c = tuple(sorted(cops))
    sp = cop_space(g, len(c))
    solver = _DamageSolver(sp, g.n)
    solver.stratum(0)
    i = sp.index[c]
    return int(np.where(sp.occ[i], 0, solver.root[i]).max())


# ---------------------------------------------------------------- oracle

def damage_oracle(g: Graph, k: int, horizon: int | None = None) -> int:
    """Plain Bellman iteration over whole-round states ``(cops, robber, damaged)``.

    No strata, no caps, no pruning.  A robber who steps onto a cop is
    captured before its round-start vertex counts as damaged.  Iterates
    ``horizon`` rounds or until the values stop changing.
    """
    _check_k(g, k)
    closed = [sorted(g.closed_nbhd(v)) for v in g.vertices]
    succ_cache: dict = {}

    def cop_moves(c):
        got = succ_cache.get(c)
        if got is None:
            got = sorted({tuple(sorted(p)) for p in product(*(closed[v] for v in c))})
            succ_cache[c] = got
        return got

    # forward exploration of reachable round-start states
    roots = []
    states: dict = {}
    stack = []
    for c in combinations_with_replacement(range(g.n), k):
        for r in g.vertices:
            if r not in c:
                roots.append((c, r, 0))
                if (c, r, 0) not in states:
                    states[(c, r, 0)] = None
                    stack.append((c, r, 0))
    while stack:
        c, r, d = stack.pop()
        options = []
        for c2 in cop_moves(c):
            if r in c2:
                options.append(None)
                continue
            replies = []
            for r2 in closed[r]:
                if r2 in c2:
                    replies.append(None)
                    continue
                gain = 0 if d >> r & 1 else 1
                nxt = (c2, r2, d | 1 << r)
                replies.append((gain, nxt))
                if nxt not in states:
                    states[nxt] = None
                    stack.append(nxt)
            options.append(replies)
        states[(c, r, d)] = options
    if horizon is None:
        horizon = (g.n + 1) * len(states)
    value = dict.fromkeys(states, 0)
    for _ in range(horizon):
        new = {}
        for s, options in states.items():
            best = None
            for replies in options:
                if replies is None:
                    worst = 0
                else:
                    worst = max(0 if rep is None else rep[0] + value[rep[1]] for rep in replies)
                best = worst if best is None else min(best, worst)
            new[s] = best
        if new == value:
            break
        value = new
    per_placement = {}
    for c, r, d in roots:
        per_placement[c] = max(per_placement.get(c, 0), value[(c, r, d)])
    for c in combinations_with_replacement(range(g.n), k):
        per_placement.setdefault(c, 0)
    return min(per_placement.values())


# ---------------------------------------------------------------- throttling

def cop_throttling(g: Graph):
    """``(th_c, smallest minimising k)``."""
    best, arg = INF, None
    for k in range(1, g.n + 1):
        if k >= best:
            break
        val = k + capture_time(g, k)
        if val < best:
            best, arg = val, k
    return best, arg


def damage_throttling(g: Graph):
    """``(th_d, smallest minimising k)``; never needs ``k`` beyond ``gamma``."""
    best, arg = INF, None
    gamma = domination_number(g)
    for k in range(1, min(gamma, g.n) + 1):
        if k >= best:
            break
        val = k + damage_number(g, k)
        if val < best:
            best, arg = val, k
    return int(best), arg


def damage_upper_bound_topdeg(g: Graph, k: int) -> int:
    """min of ``n - |N[S]|`` over k-sets S carrying the k largest degrees."""
    _check_k(g, k)
    degs = g.degrees()
    threshold = sorted(degs, reverse=True)[k - 1]
    forced = [v for v in g.vertices if degs[v] > threshold]
    pool = [v for v in g.vertices if degs[v] == threshold]
    best = g.n
    for extra in combinations(pool, k - len(forced)):
        best = min(best, placement_damage_bound(g, forced + list(extra)))
    return best


def exists_safe_vertex(g: Graph):
    """A ``v`` with ``G - N[v]`` edgeless (highest degree, then smallest id), else ``None``."""
    safe = [v for v in g.vertices
            if all(g.nmask[v] >> a & 1 or g.nmask[v] >> b & 1 for a, b in g.edges())]
    return min(safe, key=lambda v: (-g.degree(v), v), default=None)


def radius_throttling(g: Graph):
    """min over k of ``k + rad_k``."""
    return min(k + k_radius(g, k) for k in range(1, g.n + 1))


# ---------------------------------------------------------------- bundle

@dataclass
class ParamBundle:
    g6: str
    n: int
    c: int
    gamma: int
    capt: dict[int, object] = field(default_factory=dict)
    dmg: dict[int, int] = field(default_factory=dict)
    rad: dict[int, object] = field(default_factory=dict)
    th_c: object = INF
    th_d: int = 0
    witness_k_thc: int | None = None
    witness_k_thd: int | None = None

    @property
    def gap(self):
        return self.th_c - self.th_d


def param_bundle(g: Graph, key: str | None = None) -> ParamBundle:
    from .canon import canonical_form

    th_c, wc = cop_throttling(g)
    th_d, wd = damage_throttling(g)
    return ParamBundle(
        g6=key if key is not None else canonical_form(g),
        n=g.n,
        c=cop_number(g),
        gamma=domination_number(g),
        capt={k: capture_time(g, k) for k in range(1, g.n + 1)},
        dmg={k: damage_number(g, k) for k in range(1, g.n + 1)},
        rad={k: k_radius(g, k) for k in range(1, g.n + 1)},
        th_c=th_c,
        th_d=th_d,
        witness_k_thc=wc,
        witness_k_thd=wd,
    )
