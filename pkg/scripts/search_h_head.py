"""Search for head edge sets of H_n consistent with every stated fact.

Prints surviving candidates grouped by isomorphism class of H_13.
"""

from __future__ import annotations

import math
from itertools import combinations

from crthrottle.canon import canonical_form
from crthrottle.graph import Graph, closed_neighborhood, is_dismantlable
from crthrottle.solvers import capture_time, damage_number, domination_number

FIXED = [(2, 3), (2, 4), (3, 4), (4, 5), (4, 6), (4, 7)]
ABSENT = {(1, 4)}


def build(head, n):
    edges = list(head) + [(v, v + 1) for v in range(7, n)]
    return Graph.from_edges(n, [(u - 1, v - 1) for u, v in edges])


def gamma_formula(n):
    return math.ceil((n - 8) / 3) + 2


def capt_formula(n, k):
    gam = gamma_formula(n)
    if k == n:
        return 0
    if k >= gam:
        return 1
    return math.ceil((n - 3 - k) / (2 * k - 1))


def dmg_bound(n, k):
    if k == 1:
        return (n - 3) // 2 - 1
    if k < math.ceil((n - 4) / 3):
        return math.ceil((n - 5 - k) / (2 * k - 1)) - 1
    if k < gamma_formula(n):
        return 1
    return 0


def consistent(head):
    g7 = build(head, 7)
    if not set(range(7)) <= closed_neighborhood(g7, [0, 6]):
        return False
    if any(len(g7.closed_nbhd(v)) == 7 for v in range(7)):
        return False
    if not is_dismantlable(g7):
        return False
    for n in range(7, 14):
        g = build(head, n)
        if capture_time(g, 1) != n - 4:
            return False
        if domination_number(g) != gamma_formula(n):
            return False
    for n in range(7, 14):
        g = build(head, n)
        for k in range(2, gamma_formula(n)):
            if capture_time(g, k) != capt_formula(n, k):
                return False
        if damage_number(g, 1) != (n - 3) // 2 - 1:
            return False
        if n > 10 and any(damage_number(g, k) > dmg_bound(n, k) for k in range(2, n + 1)):
            return False
    return True


def main():
    free = [p for p in combinations(range(1, 8), 2) if p not in FIXED and p not in ABSENT]
    classes: dict[str, list] = {}
    for code in range(1 << len(free)):
        head = FIXED + [p for i, p in enumerate(free) if code >> i & 1]
        if consistent(head):
            key = canonical_form(build(head, 13))
            classes.setdefault(key, []).append(sorted(head))
    for key, heads in classes.items():
        print(key, len(heads))
        for h in heads[:6]:
            print("   ", h)


if __name__ == "__main__":
    main()
