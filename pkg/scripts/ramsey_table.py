#!/usr/bin/env python3
"""Exact r(G, tK_m) for small connected graphs next to the closed-form values.

Each row shows the Burr lower bound, the exact value (or the bracket when the
budget runs out) and, for t = 1 and m = 3, the triangle bound 2e+1.
"""

import argparse
import sys

from ramsey_lab.arrows import SearchConfig, ramsey_number
from ramsey_lab.bounds import goodness_value, triangle_bound
from ramsey_lab.generate import gen_connected
from ramsey_lab.graph_core import to_graph6


def main() -> int:
    parser = argparse.ArgumentParser(description="exact small Ramsey numbers against closed forms")
    parser.add_argument("--max-n", type=int, default=4)
    parser.add_argument("--t", type=int, default=1)
    parser.add_argument("--m", type=int, default=3)
    parser.add_argument("--budget-secs", type=float, default=30.0, help="per graph")
    args = parser.parse_args()

    cfg = SearchConfig(time_budget=args.budget_secs)
    print(f"{'graph6':10s} {'n':>2s} {'e':>2s} {'lower':>5s} {'r':>9s} {'2e+1':>5s}")
    for n in range(2, args.max_n + 1):
        for g in gen_connected(n):
            cert = ramsey_number(g, args.t, args.m, cfg)
            value = str(cert.value) if cert.complete else f"[{cert.bracket[0]},{cert.bracket[1]}]"
            tri = str(triangle_bound(g.edge_count())) if (args.t, args.m) == (1, 3) else "-"
            lower = goodness_value(n, args.m, args.t)
            print(f"{to_graph6(g):10s} {n:2d} {g.edge_count():2d} {lower:5d} {value:>9s} {tri:>5s}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
