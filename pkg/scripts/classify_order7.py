"""Classify connected order-7 graphs with domination number 3 by throttling gap.

Usage: python3 scripts/classify_order7.py [--cache PATH] [--workers N]
"""

import argparse

from crthrottle.enumeration import ResultCache, classify, generate_connected
from crthrottle.graph import parse_graph6
from crthrottle.solvers import exists_safe_vertex, damage_number_witness


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cache")
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    cache = ResultCache(args.cache) if args.cache else None
    recs = classify(generate_connected(7), "gamma=3", cache=cache, workers=args.workers)
    by_gap: dict = {}
    for r in recs:
        by_gap.setdefault(r.gap, []).append(r)
    print(f"{len(recs)} connected order-7 graphs with gamma = 3")
    for gap in sorted(by_gap):
        print(f"  gap {gap}: {len(by_gap[gap])}")
    print("\ngap-2 graphs: g6, dmg_1, witness placement, safe vertex")
    for r in by_gap.get(2, []):
        g = parse_graph6(r.g6)
        value, cfg = damage_number_witness(g, 1)
        print(f"  {r.g6}  dmg_1={value}  cop={cfg}  safe={exists_safe_vertex(g)}")


if __name__ == "__main__":
    main()
