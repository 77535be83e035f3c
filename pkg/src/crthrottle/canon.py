"""Canonical labelling by individualisation-refinement.

The canonical form is the lexicographically smallest graph6 string over
all leaves of the search tree rooted at the degree partition.  Every
individualisation choice in the target cell is explored (no automorphism
pruning), so the result is an isomorphism invariant.
"""

from __future__ import annotations

from .graph import Graph, emit_graph6


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Colour-refine an ordered partition to an equitable one."""
    while True:
        color = [0] * g.n
        for i, cell in enumerate(cells):
            for v in cell:
                color[v] = i
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sigs = {}
            for v in cell:
                counts = [0] * len(cells)
                for w in g.adj[v]:
                    counts[color[w]] += 1
                sigs.setdefault(tuple(counts), []).append(v)
            if len(sigs) > 1:
                changed = True
            for key in sorted(sigs):
                new_cells.append(sigs[key])
        cells = new_cells
        if not changed:
            return cells


def _leaf_string(g: Graph, cells: list[list[int]]) -> str:
    perm = [0] * g.n
    for pos, cell in enumerate(cells):
        perm[cell[0]] = pos
    return emit_graph6(g.relabel(perm))


def canonical_labeling(g: Graph) -> tuple[str, list[int]]:
    """Return ``(form, perm)`` with ``emit_graph6(g.relabel(perm)) == form``."""
    if g.n == 0:
        return emit_graph6(g), []
    degs = g.degrees()
    start = [[v for v in g.vertices if degs[v] == d] for d in sorted(set(degs))]
    best: list = [None, None]

    def search(cells):
        cells = _refine(g, cells)
        if len(cells) == g.n:
            s = _leaf_string(g, cells)
            if best[0] is None or s < best[0]:
                perm = [0] * g.n
                for pos, cell in enumerate(cells):
                    perm[cell[0]] = pos
                best[0], best[1] = s, perm
            return
        # first smallest non-singleton cell is an invariant choice
        target = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: (len(cells[i]), i))
        for v in cells[target]:
            rest = [w for w in cells[target] if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search(start)
    return best[0], best[1]


def canonical_form(g: Graph) -> str:
    return canonical_labeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    _, perm = canonical_labeling(g)
    return g.relabel(perm)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.num_edges == h.num_edges and canonical_form(g) == canonical_form(h)
