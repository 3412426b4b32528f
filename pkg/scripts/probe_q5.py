"""Bracket ccw(Q_5) with a budgeted placement search plus seeded local search.

Exact certification is out of reach here; the script reports the proven
interval and whether local search ever beats the Gray layout.
"""
import argparse

from cubecut.bounds import ct_value
from cubecut.hypercube import build_hypercube, gray_numbering
from cubecut.metrics import cyclic_cutwidth_of_numbering
from cubecut.search import bb_ccw, local_search_ccw


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--budget", type=int, default=10**5)
    parser.add_argument("--steps", type=int, default=200)
    parser.add_argument("--seeds", type=int, default=3)
    args = parser.parse_args()

    g = build_hypercube(5)
    r = bb_ccw(g, budget=args.budget, automorphisms=True)
    print(f"placement search: upper={r.optimum} lower={r.lower} exact={r.exact} "
          f"nodes={r.nodes_explored} time={r.elapsed:.1f}s (conjectured {ct_value(5)})")
    for seed in range(args.seeds):
        eta = local_search_ccw(g, gray_numbering(5), args.steps, seed)
        print(f"local search seed={seed}: width={cyclic_cutwidth_of_numbering(g, eta).width}")


if __name__ == "__main__":
    main()
