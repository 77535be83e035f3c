"""Deterministic simulation of scripted and rule-based strategies.

The robber rule is the girth-5 evasion walk: on odd rounds step to the
unguarded neighbour with the fewest damaged neighbours, on even rounds to
any unguarded undamaged neighbour.  Cops can hold position (capturing
only when the robber is within reach), chase the robber
along shortest paths, or follow a script.  All ties go to the smallest id.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache

from . import game
from .graph import INF, Graph, distances, girth

COP_STRATEGIES = ("stationary", "shadow", "scripted")
ROBBER_STRATEGIES = ("evasion", "scripted")


class PreconditionError(ValueError):
    """The evasion rule was asked to run on a graph with a short cycle."""


class SimConfigError(ValueError):
    """Malformed strategy description."""


def guarded_set(g: Graph, c) -> frozenset[int]:
    out: set[int] = set()
    for v in set(c):
        out |= g.closed_nbhd(v)
    return frozenset(out)


@dataclass(frozen=True)
class EvasionView:
    """Restrict the robber to ``region`` and see cops at ``collapse[p]`` instead of ``p``.

    Used when a long path hangs off a vertex ``v`` of a girth-5 graph: the
    robber stays inside the girth-5 part and treats cops on the path as if
    they stood on ``v``.
    """

    region: frozenset[int]
    collapse: dict[int, int] = field(default_factory=dict)

    def seen(self, cops) -> list[int]:
        return [self.collapse.get(p, p) for p in cops]


def attach_path(h: Graph, v: int, length: int) -> tuple[Graph, EvasionView]:
    """Hang a path of ``length`` new vertices off ``v``; return the graph and the robber's view."""
    if not 0 <= v < h.n:
        raise ValueError(f"attachment vertex {v} out of range")
    if length < 0:
        raise ValueError("path length must be nonnegative")
    edges = list(h.edges())
    prev = v
    for i in range(length):
        edges.append((prev, h.n + i))
        prev = h.n + i
    g = Graph.from_edges(h.n + length, edges)
    view = EvasionView(frozenset(range(h.n)), {h.n + i: v for i in range(length)})
    return g, view


@lru_cache(maxsize=64)
def _region_girth(g: Graph, region: frozenset[int] | None) -> float:
    if region is None or len(region) == g.n:
        return girth(g)
    return girth(g.induced(region)[0])


def _check_girth(g: Graph, view: EvasionView | None) -> None:
    gi = _region_girth(g, None if view is None else view.region)
    if gi < 5:
        raise PreconditionError(f"evasion strategy needs girth >= 5, got {gi}")


def evasion_robber_step(g: Graph, state: game.GameState, round_parity: int,
                        view: EvasionView | None = None) -> int | None:
    """Next robber vertex under the evasion rule, or ``None`` when no neighbour qualifies.

    ``round_parity`` may be the round number; only its parity matters.
    """
    _check_girth(g, view)
    region = frozenset(range(g.n)) if view is None else view.region
    cops = list(state.cops) if view is None else view.seen(state.cops)
    r = state.robber
    nbrs = sorted(w for w in g.adj[r] if w in region)
    for p in set(cops):
        if p != r and len(g.closed_nbhd(p) & set(nbrs)) > 1:
            raise AssertionError(f"cop on {p} guards several neighbours of {r}")
    guarded = guarded_set(g, cops)
    damaged = state.damaged
    free = [w for w in nbrs if w not in guarded]
    if round_parity % 2 == 1:
        if not free:
            return None
        return min(free, key=lambda w: (sum(1 for x in g.adj[w] if damaged >> x & 1), w))
    fresh = [w for w in free if not damaged >> w & 1]
    return fresh[0] if fresh else None


@dataclass(frozen=True)
class RoundRecord:
    round: int
    cops: tuple[int, ...]
    robber: int
    damaged: int | None
    captured: bool
    step_failed: bool = False


@dataclass
class SimTrace:
    records: list[RoundRecord]
    damage: int
    captured: bool
    capture_round: int | None

    def damaged_vertices(self) -> list[int]:
        return [r.damaged for r in self.records if r.damaged is not None]

    def to_dict(self) -> dict:
        return {
            "rounds": [asdict(r) | {"cops": list(r.cops)} for r in self.records],
            "damage": self.damage,
            "captured": self.captured,
            "capture_round": self.capture_round,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _threat_step(g: Graph, cops, robber: int) -> tuple[int, ...]:
    # hold position, but take a capture when one is on offer
    for i, p in enumerate(cops):
        if robber in g.closed_nbhd(p):
            return tuple(sorted(cops[:i] + (robber,) + cops[i + 1:]))
    return tuple(cops)


def _shadow_step(g: Graph, cops, robber: int) -> tuple[int, ...]:
    dist = distances(g, [robber])
    out = []
    for p in cops:
        if dist[p] == INF or dist[p] == 0:
            out.append(p)
            continue
        out.append(min(w for w in g.adj[p] if dist[w] == dist[p] - 1))
    return tuple(sorted(out))


def _fallback_step(g: Graph, state: game.GameState, view: EvasionView | None) -> int:
    # rule failed: keep away from cops if any neighbour allows it, else stay
    region = frozenset(range(g.n)) if view is None else view.region
    cops = list(state.cops) if view is None else view.seen(state.cops)
    guarded = guarded_set(g, cops)
    free = sorted(w for w in g.adj[state.robber] if w in region and w not in guarded)
    if free:
        return min(free, key=lambda w: (sum(1 for x in g.adj[w] if state.damaged >> x & 1), w))
    return state.robber


def _initial_robber(g: Graph, cops, view: EvasionView | None) -> int:
    region = range(g.n) if view is None else sorted(view.region)
    seen = cops if view is None else view.seen(cops)
    guarded = guarded_set(g, seen)
    for v in region:
        if v not in guarded:
            return v
    for v in region:
        if v not in cops:
            return v
    return min(region)


def simulate(g: Graph, cop_strategy: str = "stationary", robber_strategy: str = "evasion",
             k: int = 1, rounds: int = 20, cops=None, robber: int | None = None,
             cop_script=None, robber_script=None, view: EvasionView | None = None) -> SimTrace:
    """Play ``rounds`` rounds (or until capture) and record what happened.

    ``cops`` is the initial placement (default ``0..k-1``).  A cop script is
    a list of configurations, one per round; a robber script lists the vertex
    to move to in each round.  Both must cover every round.
    """
    if cop_strategy not in COP_STRATEGIES:
        raise SimConfigError(f"unknown cop strategy {cop_strategy!r}")
    if robber_strategy not in ROBBER_STRATEGIES:
        raise SimConfigError(f"unknown robber strategy {robber_strategy!r}")
    if rounds < 1:
        raise SimConfigError("rounds must be >= 1")
    if cops is None:
        cops = tuple(range(min(k, g.n)))
    if len(cops) != k:
        raise SimConfigError(f"placement {tuple(cops)} does not have {k} cops")
    if cop_strategy == "scripted" and (cop_script is None or len(cop_script) < rounds):
        raise SimConfigError(f"cop script covers fewer than {rounds} rounds")
    if robber_strategy == "scripted" and (robber_script is None or len(robber_script) < rounds):
        raise SimConfigError(f"robber script covers fewer than {rounds} rounds")
    if robber_strategy == "evasion":
        _check_girth(g, view)

    if robber is None:
        robber = _initial_robber(g, cops, view)
    opening = game.start(g, cops, robber)
    config = game.make_config(g, cops)
    records = [RoundRecord(0, config, robber, None, opening.captured)]
    if opening.captured:
        return SimTrace(records, 0, True, 0)

    state = opening.state
    damage = 0
    for t in range(1, rounds + 1):
        if cop_strategy == "stationary":
            nxt = _threat_step(g, state.cops, state.robber)
        elif cop_strategy == "shadow":
            nxt = _shadow_step(g, state.cops, state.robber)
        else:
            nxt = tuple(sorted(cop_script[t - 1]))
        out = game.apply_cop_move(g, state, nxt)
        if out.captured:
            records.append(RoundRecord(t, nxt, state.robber, None, True))
            return SimTrace(records, damage, True, t)
        state = out.state
        damage += out.damage_gained
        hit = state.robber if out.damage_gained else None

        failed = False
        if robber_strategy == "scripted":
            r2 = robber_script[t - 1]
        else:
            r2 = evasion_robber_step(g, state, t, view)
            if r2 is None:
                failed = True
                r2 = _fallback_step(g, state, view)
        out = game.apply_robber_move(g, state, r2)
        records.append(RoundRecord(t, state.cops, r2, hit, out.captured, failed))
        if out.captured:
            return SimTrace(records, damage, True, t)
        state = out.state
    return SimTrace(records, damage, False, None)


def _simulate_job(args):
    g, kwargs = args
    return simulate(g, **kwargs)


def simulate_many(g: Graph, jobs: list[dict], workers: int = 1) -> list[SimTrace]:
    """Run several simulations; order of results matches ``jobs``."""
    if workers <= 1 or len(jobs) <= 1:
        return [simulate(g, **kw) for kw in jobs]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(_simulate_job, [(g, kw) for kw in jobs]))
