"""Print the per-k parameter tables for the named families.

Usage: python3 scripts/reproduce_tables.py
"""

from crthrottle import families
from crthrottle.graph import fmt_ext
from crthrottle.solvers import (
    capture_time,
    cop_number,
    cop_throttling,
    damage_number,
    damage_throttling,
    domination_number,
    k_radius,
)

GRAPHS = ["petersen", "gap3", "gear:4", "gear:5", "accordion:4", "accordion:5", "spider:3,3,3"]
GRAPHS += [f"hn:{n}" for n in range(7, 14)]


def row(values):
    return " ".join(f"{fmt_ext(v):>3}" for v in values)


def main():
    for family in GRAPHS:
        g = families.parse_family(family)
        kmax = min(g.n, domination_number(g) + 1)
        ks = range(1, kmax + 1)
        print(f"{family}  n={g.n}  c={cop_number(g)}  gamma={domination_number(g)}  "
              f"th_c={fmt_ext(cop_throttling(g)[0])}  th_d={damage_throttling(g)[0]}")
        print(f"  k     {row(ks)}")
        print(f"  rad   {row(k_radius(g, k) for k in ks)}")
        print(f"  capt  {row(capture_time(g, k) for k in ks)}")
        print(f"  dmg   {row(damage_number(g, k) for k in ks)}")


if __name__ == "__main__":
    main()
