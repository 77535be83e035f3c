"""Constructors for the named graph families.

Hubs and dominating vertices get the last id.  Graphs whose structure is
described with 1-indexed labels are stored with ``id = label - 1``.
"""

from __future__ import annotations

from .graph import Graph


class ConstructionError(AssertionError):
    """A hand-entered edge list failed one of its structural checks."""


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _need(n >= 1, "complete needs n >= 1")
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty(n: int) -> Graph:
    _need(n >= 0, "empty needs n >= 0")
    return Graph.from_edges(n, [])


def star(n: int) -> Graph:
    """K_{1,n-1}; the centre is vertex ``n - 1``."""
    _need(n >= 1, "star needs n >= 1")
    return Graph.from_edges(n, [(i, n - 1) for i in range(n - 1)])


def wheel(n: int) -> Graph:
    _need(n >= 4, "wheel needs n >= 4")
    rim = [(i, (i + 1) % (n - 1)) for i in range(n - 1)]
    return Graph.from_edges(n, rim + [(i, n - 1) for i in range(n - 1)])


def fan(n: int) -> Graph:
    _need(n >= 4, "fan needs n >= 4")
    spine = [(i, i + 1) for i in range(n - 2)]
    return Graph.from_edges(n, spine + [(i, n - 1) for i in range(n - 1)])


def gear(l: int) -> Graph:
    """Wheel on ``2l+1`` vertices keeping only hub edges to even rim vertices."""
    _need(l >= 2, "gear needs l >= 2")
    n = 2 * l + 1
    rim = [(i, (i + 1) % (n - 1)) for i in range(n - 1)]
    return Graph.from_edges(n, rim + [(i, n - 1) for i in range(0, n - 1, 2)])


def accordion(l: int) -> Graph:
    """Fan on ``2l`` vertices keeping only hub edges to even path vertices."""
    _need(l >= 2, "accordion needs l >= 2")
    n = 2 * l
    spine = [(i, i + 1) for i in range(n - 2)]
    return Graph.from_edges(n, spine + [(i, n - 1) for i in range(0, n - 1, 2)])


def spider(legs: list[int]) -> Graph:
    """Centre 0 with one pendant path per entry of ``legs``."""
    _need(len(legs) > 0, "spider needs at least one leg")
    _need(all(l >= 1 for l in legs), "spider legs must have length >= 1")
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


def petersen(validate: bool = True) -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes ``i - i+5``."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    g = Graph.from_edges(10, outer + inner + spokes)
    if validate:
        validate_petersen(g)
    return g


def validate_petersen(g: Graph) -> None:
    """Strongly regular with parameters (10, 3, 0, 1), girth 5, diameter 2."""
    from .graph import common_neighbors, diameter, girth

    def check(cond, msg):
        if not cond:
            raise ConstructionError(f"Petersen: {msg}")

    check(g.n == 10 and all(d == 3 for d in g.degrees()), "not 3-regular on 10 vertices")
    check(girth(g) == 5, "girth is not 5")
    check(diameter(g) == 2, "diameter is not 2")
    for u in g.vertices:
        for v in range(u + 1, g.n):
            want = 0 if g.has_edge(u, v) else 1
            check(common_neighbors(g, u, v) == want, f"pair {u},{v} has wrong common-neighbour count")


def _one_indexed(n: int, edges) -> Graph:
    return Graph.from_edges(n, [(u - 1, v - 1) for u, v in edges])


# Head of H_n in 1-indexed labels; the tail 8-9-...-n hangs off 7.
H_HEAD_EDGES = [
    (1, 2), (1, 3), (1, 5), (1, 6),
    (2, 3), (2, 4), (2, 5),
    (3, 4), (3, 6),
    (4, 5), (4, 6), (4, 7),
    (5, 7), (6, 7),
]


def h_graph(n: int, validate: bool = True) -> Graph:
    """The cop-win graph H_n with capture time ``n - 4`` (``n >= 7``)."""
    _need(n >= 7, "H_n needs n >= 7")
    edges = list(H_HEAD_EDGES) + [(v, v + 1) for v in range(7, n)]
    g = _one_indexed(n, edges)
    if validate:
        validate_h_graph(g)
    return g


def validate_h_graph(g: Graph) -> None:
    from .graph import closed_neighborhood, is_dismantlable
    from .solvers import capture_time

    n = g.n

    def lab(*vs):
        return {v - 1 for v in vs}

    def check(cond, msg):
        if not cond:
            raise ConstructionError(f"H_{n}: {msg}")

    head = lab(*range(1, 8))
    check(head <= closed_neighborhood(g, lab(1, 7)), "{1,7} does not dominate the head")
    if n == 8:
        check(len(closed_neighborhood(g, lab(1, 7))) == 8, "{1,7} does not dominate H_8")
    check(lab(2, 3, 5, 6) <= g.adj[3], "vertex 4 does not dominate 2,3,5,6")
    walk = [3, 2, 4, 7] + list(range(8, n + 1))
    check(all(g.has_edge(a - 1, b - 1) for a, b in zip(walk, walk[1:])), "walk 3,2,4,7,8,... missing")
    check(g.has_edge(4, 6) and not g.has_edge(2, 4), "robber route 5,7,8,... from beside a cop on 3 missing")
    check(is_dismantlable(g), "not cop-win")
    check(capture_time(g, 1) == n - 4, "capture time is not n - 4")


GAP3_EDGES = [
    (1, 2), (1, 3), (2, 4), (3, 4),
    (4, 5), (5, 7), (7, 9), (9, 11),
    (4, 6), (6, 8), (8, 10), (10, 11),
    (11, 12), (11, 13), (12, 14), (13, 14),
]


def gap3_graph(validate: bool = True) -> Graph:
    """14-vertex graph whose cop and damage throttling numbers differ by 3."""
    g = _one_indexed(14, GAP3_EDGES)
    if validate:
        validate_gap3_graph(g)
    return g


def validate_gap3_graph(g: Graph) -> None:
    from .graph import closed_neighborhood, is_dismantlable, radius

    def lab(*vs):
        return frozenset(v - 1 for v in vs)

    def check(cond, msg):
        if not cond:
            raise ConstructionError(f"gap-3 graph: {msg}")

    check(g.n == 14, "order is not 14")
    check(len(closed_neighborhood(g, lab(1, 4, 9, 10, 14))) == 14, "{1,4,9,10,14} does not dominate")
    for centre, nbhd in [(1, (1, 2, 3)), (7, (5, 7, 9)), (8, (6, 8, 10)), (14, (12, 13, 14))]:
        check(g.closed_nbhd(centre - 1) == lab(*nbhd), f"N[{centre}] is not {set(nbhd)}")
        for v in nbhd:
            check(g.degree(v - 1) == 2, f"vertex {v} does not have degree 2")
    check(radius(g) == 4, "radius is not 4")
    check(not is_dismantlable(g), "graph is dismantlable")


def cop2_safe_vertex_family(h: Graph, p: int, q: int) -> Graph:
    """C_4 on 0..3 with vertex 0 joined to all of ``h`` and leaves on 1 and 3.

    ``h`` occupies ids ``4 .. 3 + h.n``; then ``p`` leaves on vertex 1 and
    ``q`` leaves on vertex 3.
    """
    _need(p >= 0 and q >= 0, "leaf counts must be nonnegative")
    edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
    off = 4
    edges += [(off + u, off + v) for u, v in h.edges()]
    edges += [(0, off + v) for v in range(h.n)]
    nxt = off + h.n
    for anchor, count in ((1, p), (3, q)):
        for _ in range(count):
            edges.append((anchor, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges)


# ------------------------------------------------------------ name strings

def _ints(args: str) -> list[int]:
    try:
        return [int(a) for a in args.split(",") if a.strip()]
    except ValueError as exc:
        raise ValueError(f"bad family arguments {args!r}") from exc


_BUILDERS = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "empty": empty,
    "star": star,
    "wheel": wheel,
    "fan": fan,
    "gear": gear,
    "accordion": accordion,
    "hn": h_graph,
}


def parse_family(family: str) -> Graph:
    """Build a graph from ``name[:a,b,...]``, e.g. ``gear:4`` or ``spider:3,3,3``."""
    name, _, args = family.strip().partition(":")
    name = name.lower()
    if name == "petersen":
        return petersen()
    if name == "gap3":
        return gap3_graph()
    if name == "spider":
        return spider(_ints(args))
    if name in _BUILDERS:
        vals = _ints(args)
        if len(vals) != 1:
            raise ValueError(f"family {name!r} takes exactly one integer argument")
        return _BUILDERS[name](vals[0])
    raise ValueError(f"unknown graph family {name!r}")
