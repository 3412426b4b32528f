"""Search small graphs on a ring for layouts where some edge must take its longer arc.

Compares the optimal routing against the best routing that only uses shorter
arcs (diameter ties may go either way) and prints the smallest cases found.
"""
import argparse
import itertools

from cubecut.hypercube import CYCLIC, Graph, Numbering
from cubecut.metrics import BACKWARD, FORWARD, cut_profile_cyclic, cyclic_cutwidth_of_numbering


def best_short_only(g, eta):
    m = g.vertex_count
    options = []
    for u, v in g.edges:
        a, b = sorted((eta.position[u], eta.position[v]))
        span = b - a
        if 2 * span < m:
            options.append((FORWARD,))
        elif 2 * span > m:
            options.append((BACKWARD,))
        else:
            options.append((FORWARD, BACKWARD))
    return min(max(cut_profile_cyclic(g, eta, r)) for r in itertools.product(*options))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-m", type=int, default=6)
    parser.add_argument("--max-edges", type=int, default=3)
    parser.add_argument("--limit", type=int, default=5)
    args = parser.parse_args()

    shown = 0
    for m in range(3, args.max_m + 1):
        eta = Numbering(CYCLIC, tuple(range(m)))
        pairs = list(itertools.combinations(range(m), 2))
        for k in range(1, args.max_edges + 1):
            for edges in itertools.combinations(pairs, k):
                g = Graph(m, edges)
                best = cyclic_cutwidth_of_numbering(g, eta)
                short = best_short_only(g, eta)
                if best.width < short:
                    print(f"m={m} edges={list(edges)} ccw={best.width} short-only={short} "
                          f"routing={best.routing}")
                    shown += 1
                    if shown >= args.limit:
                        return


if __name__ == "__main__":
    main()
