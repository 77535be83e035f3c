"""Simple undirected graphs, graph6 / edge-list I/O and basic metrics."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

INF = math.inf
"""Infinity marker for capture times and radii; compares above every int."""

GRAPH6_HEADER = ">>graph6<<"
MAX_GRAPH6_ORDER = 62


class GraphFormatError(ValueError):
    """Raised when a graph6 record or edge list cannot be parsed."""


def fmt_ext(value) -> str:
    """Render an extended natural (int or INF) as text."""
    return "inf" if value == INF else str(int(value))


def parse_ext(text):
    return INF if text in ("inf", INF) else int(text)


@dataclass(frozen=True)
class Graph:
    """Immutable loop-free simple graph on vertices ``0..n-1``."""

    n: int
    adj: tuple[frozenset[int], ...]
    # closed-neighbourhood bitmasks, derived
    nmask: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match order")
        for v, nb in enumerate(self.adj):
            if v in nb:
                raise ValueError(f"self-loop at vertex {v}")
            for u in nb:
                if not 0 <= u < self.n:
                    raise ValueError(f"vertex id {u} out of range")
                if v not in self.adj[u]:
                    raise ValueError(f"asymmetric adjacency {v}-{u}")
        masks = []
        for v, nb in enumerate(self.adj):
            m = 1 << v
            for u in nb:
                m |= 1 << u
            masks.append(m)
        object.__setattr__(self, "nmask", tuple(masks))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    @property
    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(nb) for nb in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.adj]

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def closed_nbhd(self, v: int) -> frozenset[int]:
        return self.adj[v] | {v}

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def induced(self, keep: Sequence[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``keep`` relabelled 0..len-1, plus the old ids."""
        keep = sorted(set(keep))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph.from_edges(len(keep), edges), keep

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# --------------------------------------------------------------------------- I/O

def parse_graph6(text: str) -> Graph:
    """Parse one short-form graph6 record (``n <= 62``)."""
    s = text.strip()
    offset = 0
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
        offset = len(GRAPH6_HEADER)
    if not s:
        raise GraphFormatError("empty graph6 record")
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"non-graph6 byte {ch!r} at offset {offset + i}")
    n = ord(s[0]) - 63
    if n == 63:
        raise GraphFormatError(f"long-form graph6 (n > {MAX_GRAPH6_ORDER}) at offset {offset}")
    npairs = n * (n - 1) // 2
    nbytes = (npairs + 5) // 6
    body = s[1:]
    if len(body) < nbytes:
        raise GraphFormatError(
            f"truncated record: expected {nbytes} edge bytes, got {len(body)} "
            f"at offset {offset + 1 + len(body)}"
        )
    if len(body) > nbytes:
        raise GraphFormatError(f"trailing garbage at offset {offset + 1 + nbytes}")
    bitstream = []
    for ch in body:
        val = ord(ch) - 63
        bitstream.extend((val >> (5 - j)) & 1 for j in range(6))
    if any(bitstream[npairs:]):
        raise GraphFormatError(f"nonzero padding bits at offset {offset + len(s) - 1}")
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bitstream[idx]:
                edges.append((u, v))
            idx += 1
    return Graph.from_edges(n, edges)


def emit_graph6(g: Graph) -> str:
    if g.n > MAX_GRAPH6_ORDER:
        raise ValueError(f"graph6 long form unsupported (n={g.n} > {MAX_GRAPH6_ORDER})")
    bitstream = [1 if g.has_edge(u, v) else 0 for v in range(1, g.n) for u in range(v)]
    bitstream.extend([0] * (-len(bitstream) % 6))
    chars = [chr(g.n + 63)]
    for i in range(0, len(bitstream), 6):
        val = 0
        for b in bitstream[i:i + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


def parse_edge_list(text: str) -> Graph:
    """Parse ``n <count>`` followed by one ``u v`` pair per line (0-indexed)."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [(i + 1, ln) for i, ln in enumerate(lines) if ln]
    if not lines:
        raise GraphFormatError("empty edge list")
    lineno, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
        raise GraphFormatError(f"line {lineno}: expected 'n <count>', got {head!r}")
    n = int(parts[1])
    edges = set()
    for lineno, ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {ln!r}")
        u, v = map(int, parts)
        if u >= n or v >= n:
            raise GraphFormatError(f"line {lineno}: vertex id out of range for n={n}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at {u}")
        edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, sorted(edges))


def emit_edge_list(g: Graph) -> str:
    return "\n".join([f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


# ----------------------------------------------------------------------- metrics

def distances(g: Graph, sources: Iterable[int]) -> list:
    """Multi-source BFS distances; unreachable vertices get ``INF``."""
    src = sorted(set(sources))
    if not src:
        raise ValueError("distances() needs at least one source")
    dist: list = [INF] * g.n
    queue = deque()
    for s in src:
        if not 0 <= s < g.n:
            raise ValueError(f"source {s} out of range")
        dist[s] = 0
        queue.append(s)
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] == INF:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance_matrix(g: Graph) -> list[list]:
    return [distances(g, [v]) for v in g.vertices]


def closed_neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    out: set[int] = set()
    for v in s:
        out.add(v)
        out |= g.adj[v]
    return frozenset(out)


def closed_mask(g: Graph, mask: int) -> int:
    out = 0
    for v in bits(mask):
        out |= g.nmask[v]
    return out


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in g.vertices:
        if seen[s]:
            continue
        comp = []
        stack = [s]
        seen[s] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def girth(g: Graph):
    best = INF
    for s in g.vertices:
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def eccentricity(g: Graph, v: int):
    return max(distances(g, [v]))


def radius(g: Graph):
    return min(eccentricity(g, v) for v in g.vertices)


def diameter(g: Graph):
    return max(eccentricity(g, v) for v in g.vertices)


def common_neighbors(g: Graph, u: int, v: int) -> int:
    return len(g.adj[u] & g.adj[v])


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and is_connected(g) and g.num_edges == g.n - 1


def is_chordal(g: Graph) -> bool:
    """Perfect-elimination test via maximum cardinality search."""
    n = g.n
    weight = [0] * n
    order: list[int] = []
    numbered = [False] * n
    for _ in range(n):
        v = max((u for u in range(n) if not numbered[u]), key=lambda u: (weight[u], -u))
        numbered[v] = True
        order.append(v)
        for w in g.adj[v]:
            if not numbered[w]:
                weight[w] += 1
    # order reversed is a perfect elimination ordering iff chordal
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [u for u in g.adj[v] if pos[u] < pos[v]]
        if not earlier:
            continue
        parent = max(earlier, key=lambda u: pos[u])
        for u in earlier:
            if u != parent and u not in g.adj[parent]:
                return False
    return True


def is_dismantlable(g: Graph) -> bool:
    """True iff repeated corner deletion reduces ``g`` to one vertex.

    A corner ``u`` has ``N[u]`` contained in ``N[v]`` for some ``v != u``.
    Disconnected graphs with ``n >= 2`` are never dismantlable.
    """
    if g.n == 0:
        raise ValueError("dismantlability undefined for the empty graph")
    if not is_connected(g):
        return False
    alive = g.full_mask()
    nm = list(g.nmask)
    remaining = g.n
    while remaining > 1:
        for u in bits(alive):
            nu = nm[u] & alive
            if any(v != u and nu & ~(nm[v] & alive) == 0 for v in bits(nu)):
                alive &= ~(1 << u)
                remaining -= 1
                break
        else:
            return False
    return True


def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    return len(closed_neighborhood(g, s)) == g.n


def labeled_graphs(n: int):
    """All ``2**C(n,2)`` labelled graphs on ``n`` vertices."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if code >> i & 1])
