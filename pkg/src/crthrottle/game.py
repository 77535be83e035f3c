"""Round protocol of Cops and Robbers with damage bookkeeping.

Cops are anonymous, so a configuration is a sorted tuple (a multiset:
several cops may share a vertex).  Each round the cops move first; if
they fail to capture, the robber's current vertex is damaged, then the
robber moves.  Staying put is always legal for everyone.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations_with_replacement, product
from typing import Iterator

from .graph import Graph

CopConfig = tuple[int, ...]


class MoveError(ValueError):
    """An illegal move or a move played in the wrong phase."""


class Phase(Enum):
    COPS = "cops-to-move"
    ROBBER = "robber-to-move"


@dataclass(frozen=True)
class GameState:
    phase: Phase
    cops: CopConfig
    robber: int
    damaged: int = 0  # bitmask

    def damaged_set(self) -> frozenset[int]:
        return frozenset(v for v in range(self.damaged.bit_length()) if self.damaged >> v & 1)


@dataclass(frozen=True)
class RoundOutcome:
    captured: bool
    state: GameState | None = None
    damage_gained: int = 0


def make_config(g: Graph, cops) -> CopConfig:
    c = tuple(sorted(cops))
    if not 1 <= len(c) <= g.n:
        raise ValueError(f"need 1 <= k <= n cops, got {len(c)}")
    if any(not 0 <= v < g.n for v in c):
        raise ValueError(f"cop position out of range in {c}")
    return c


def cop_move_successors(g: Graph, c: CopConfig) -> list[CopConfig]:
    """All configurations reachable when every cop stays or steps along an edge."""
    options = [sorted(g.closed_nbhd(v)) for v in c]
    return sorted({tuple(sorted(p)) for p in product(*options)})


def robber_move_options(g: Graph, r: int) -> frozenset[int]:
    return g.closed_nbhd(r)


def initial_placements(g: Graph, k: int) -> Iterator[CopConfig]:
    if not 1 <= k <= g.n:
        raise ValueError(f"k={k} outside 1..{g.n}")
    return combinations_with_replacement(range(g.n), k)


def is_legal_cop_move(g: Graph, c: CopConfig, c2: CopConfig) -> bool:
    if len(c) != len(c2):
        return False
    # bipartite matching of old positions onto new ones; k is tiny
    targets = list(c2)
    match: dict[int, int] = {}

    def augment(i, seen):
        for j, t in enumerate(targets):
            if j in seen or t not in g.closed_nbhd(c[i]):
                continue
            seen.add(j)
            if j not in match or augment(match[j], seen):
                match[j] = i
                return True
        return False

    return all(augment(i, set()) for i in range(len(c)))


def apply_cop_move(g: Graph, s: GameState, c2) -> RoundOutcome:
    if s.phase is not Phase.COPS:
        raise MoveError("cops moved during the robber's turn")
    c2 = tuple(sorted(c2))
    if not is_legal_cop_move(g, s.cops, c2):
        raise MoveError(f"illegal cop move {s.cops} -> {c2}")
    if s.robber in c2:
        return RoundOutcome(captured=True)
    bit = 1 << s.robber
    gained = 0 if s.damaged & bit else 1
    nxt = GameState(Phase.ROBBER, c2, s.robber, s.damaged | bit)
    return RoundOutcome(captured=False, state=nxt, damage_gained=gained)


def apply_robber_move(g: Graph, s: GameState, r2: int) -> RoundOutcome:
    # damage already recorded for this round is kept even on a suicidal move
    if s.phase is not Phase.ROBBER:
        raise MoveError("robber moved during the cops' turn")
    if r2 not in g.closed_nbhd(s.robber):
        raise MoveError(f"illegal robber move {s.robber} -> {r2}")
    if r2 in s.cops:
        return RoundOutcome(captured=True)
    return RoundOutcome(captured=False, state=GameState(Phase.COPS, s.cops, r2, s.damaged))


def start(g: Graph, cops, robber: int) -> RoundOutcome:
    """Round 0: cops place, then the robber; placing on a cop is immediate capture."""
    c = make_config(g, cops)
    if not 0 <= robber < g.n:
        raise ValueError(f"robber position {robber} out of range")
    if robber in c:
        return RoundOutcome(captured=True)
    return RoundOutcome(captured=False, state=GameState(Phase.COPS, c, robber, 0))
