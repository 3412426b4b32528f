"""Exact and heuristic searches over numberings for the linear and cyclic cutwidth."""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from .hypercube import (CYCLIC, LINEAR, Graph, GuardError, Numbering, gray_numbering,
                        hypercube_dimension)
from .isoperimetric import theta_table
from .metrics import (BudgetExceeded, cyclic_cutwidth_of_numbering, linear_cutwidth,
                      routing_width_at_most)

EXHAUSTIVE_MAX_VERTICES = 8
LEAF_ROUTING_BUDGET = 10**6


@dataclass
class SearchResult:
    optimum: int
    witness: Numbering
    nodes_explored: int
    exact: bool
    elapsed: float
    lower: int
    history: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "optimum": self.optimum,
            "lower": self.lower,
            "exact": self.exact,
            "nodes_explored": self.nodes_explored,
            "elapsed": round(self.elapsed, 6),
            "witness": list(self.witness.placement),
        }


def _guard(g: Graph) -> None:
    if g.vertex_count > EXHAUSTIVE_MAX_VERTICES:
        raise GuardError(f"exhaustive search is limited to {EXHAUSTIVE_MAX_VERTICES} vertices")


def cyclic_orders(m: int, canonical: bool = True):
    """Placements of 0..m-1 on a ring; canonical ones fix vertex 0 at position 0
    and keep the reflection with the smaller vertex at position 1."""
    if not canonical:
        yield from itertools.permutations(range(m))
        return
    if m <= 2:
        yield tuple(range(m))
        return
    for rest in itertools.permutations(range(1, m)):
        if rest[0] < rest[-1]:
            yield (0,) + rest


def linear_orders(m: int, canonical: bool = True):
    for perm in itertools.permutations(range(m)):
        if not canonical or m < 2 or perm[0] < perm[-1]:
            yield perm


def exhaustive_ccw(g: Graph, canonical: bool = True) -> SearchResult:
    _guard(g)
    start = time.perf_counter()
    best = best_eta = None
    count = 0
    for order in cyclic_orders(g.vertex_count, canonical):
        count += 1
        eta = Numbering(CYCLIC, order)
        if best is None:
            best, best_eta = cyclic_cutwidth_of_numbering(g, eta).width, eta
            continue
        if best == 0:
            break
        if routing_width_at_most(g, eta, best - 1) is not None:
            best, best_eta = cyclic_cutwidth_of_numbering(g, eta).width, eta
    return SearchResult(best, best_eta, count, True, time.perf_counter() - start, best)


def exhaustive_lcw(g: Graph, canonical: bool = True) -> SearchResult:
    _guard(g)
    start = time.perf_counter()
    best = best_eta = None
    count = 0
    for order in linear_orders(g.vertex_count, canonical):
        count += 1
        eta = Numbering(LINEAR, order)
        width, _ = linear_cutwidth(g, eta)
        if best is None or width < best:
            best, best_eta = width, eta
    return SearchResult(best, best_eta, count, True, time.perf_counter() - start, best)


def _bit_permutations(n: int) -> list[tuple[int, ...]]:
    """Vertex images of every coordinate permutation of Q_n."""
    images = []
    for perm in itertools.permutations(range(n)):
        table = []
        for v in range(1 << n):
            w = 0
            for i in range(n):
                if (v >> i) & 1:
                    w |= 1 << perm[i]
            table.append(w)
        images.append(tuple(table))
    return images


class _PlacementSearch:
    """Depth-first placement of vertices at positions 0, 1, 2, ... of the ring.

    Any two gaps cut the ring into an arc S and its complement, and every edge
    between them crosses one of the two gaps whatever its routing, so the
    larger of the two loads is at least half the edge boundary of S. For arcs
    that reach into the unplaced positions the boundary is bounded below by a
    relaxation that is solved exactly by sorting.
    """

    def __init__(self, g: Graph, budget: int, automorphisms: bool):
        self.g = g
        self.m = g.vertex_count
        self.adj = g.adjacency
        self.budget = budget
        self.nodes = 0
        self.inexact_leaves = 0
        n = hypercube_dimension(g)
        self.symmetries = _bit_permutations(n) if automorphisms and n else None

    def _blocked(self, placement: list[int], limit: int) -> bool:
        """True if every completion has a pair of gaps crossed by >= limit edges."""
        adj = self.adj
        k = len(placement)
        placed = 0
        for v in placement:
            placed |= 1 << v
        free = [u for u in range(self.m) if not (placed >> u) & 1]

        # arcs ending at the newest position, fully placed
        block = boundary = 0
        for i in range(k - 1, 0, -1):
            v = placement[i]
            boundary += adj[v].bit_count() - 2 * (adj[v] & block).bit_count()
            block |= 1 << v
            if boundary >= limit:
                return True
        if not free:
            return False

        prefix = 0
        for s in range(1, k):
            prefix |= 1 << placement[s - 1]
            suffix = placed ^ prefix
            cross = sum((adj[u] & suffix).bit_count() for u in placement[:s])
            for inner, outer in ((prefix, suffix), (suffix, prefix)):
                outside = [(adj[u] & inner).bit_count() for u in free]
                gains = sorted((adj[u] & outer).bit_count() - out
                               for u, out in zip(free, outside))
                running = cross + sum(outside)
                if running >= limit:
                    best = running
                    for delta in gains:
                        running += delta
                        best = min(best, running)
                        if best < limit:
                            break
                    if best >= limit:
                        return True
        return False

    @staticmethod
    def _orbit_minimal(stabilizer, v: int) -> bool:
        # v must be the smallest image of itself under the placed vertices' stabiliser
        return stabilizer is None or all(sigma[v] >= v for sigma in stabilizer)

    def run(self, upper: int, witness: Numbering, lower: int, history: list):
        m = self.m
        state = {"upper": upper, "witness": witness}
        placement = [0]
        stabilizer = None
        if self.symmetries is not None:
            stabilizer = list(self.symmetries)

        def dfs(used: int, stabilizer) -> None:
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExceeded
            target = state["upper"] - 1
            if target < lower:
                return
            k = len(placement)
            if k == m:
                if placement[1] > placement[-1]:
                    return
                if self._blocked(placement, 2 * target + 1):
                    return
                eta = Numbering(CYCLIC, tuple(placement))
                try:
                    routing = routing_width_at_most(self.g, eta, target, LEAF_ROUTING_BUDGET)
                except BudgetExceeded:
                    self.inexact_leaves += 1
                    return
                if routing is not None:
                    state["upper"] = cyclic_cutwidth_of_numbering(self.g, eta).width
                    state["witness"] = eta
                    history.append((self.nodes, state["upper"], lower))
                return
            if k > 1 and self._blocked(placement, 2 * target + 1):
                return
            candidates = [u for u in range(m) if not (used >> u) & 1]
            candidates.sort(key=lambda u: (-(self.adj[u] & used).bit_count(), u))
            for u in candidates:
                if k == m - 1 and m > 2 and u < placement[1]:
                    continue
                if not self._orbit_minimal(stabilizer, u):
                    continue
                placement.append(u)
                sub = None if stabilizer is None else [s for s in stabilizer if s[u] == u]
                dfs(used | (1 << u), sub)
                placement.pop()
                if state["upper"] - 1 < lower:
                    return

        dfs(1, stabilizer)
        return state["upper"], state["witness"]


def _root_lower_bound(g: Graph) -> int:
    if not g.edges:
        return 0
    bound = max(-(-g.degree(v) // 2) for v in range(g.vertex_count))
    n = hypercube_dimension(g)
    if n is not None:
        bound = max(bound, -(-max(theta_table(n)) // 2))
    return bound


def bb_ccw(g: Graph, budget: int = 10**6, witness: Numbering | None = None,
           automorphisms: bool = False) -> SearchResult:
    """Branch and bound over cyclic placements; inexact when the node budget runs out."""
    start = time.perf_counter()
    m = g.vertex_count
    n = hypercube_dimension(g)
    if automorphisms and not n:
        raise GuardError("automorphism pruning is only available for hypercubes")
    if witness is None:
        witness = gray_numbering(n) if n else Numbering(CYCLIC, tuple(range(m)))
    witness = witness.as_host(CYCLIC)
    upper = cyclic_cutwidth_of_numbering(g, witness).width
    lower = _root_lower_bound(g)
    history = [(0, upper, lower)]
    if lower >= upper or m <= 3:
        # every numbering of at most three vertices is the same ring up to symmetry
        return SearchResult(upper, witness, 0, True, time.perf_counter() - start, upper, history)
    search = _PlacementSearch(g, budget, automorphisms)
    try:
        upper, witness = search.run(upper, witness, lower, history)
    except BudgetExceeded:
        return SearchResult(upper, witness, search.nodes, False,
                            time.perf_counter() - start, lower, history)
    if search.inexact_leaves:
        return SearchResult(upper, witness, search.nodes, False,
                            time.perf_counter() - start, lower, history)
    history.append((search.nodes, upper, upper))
    return SearchResult(upper, witness, search.nodes, True, time.perf_counter() - start, upper, history)


def local_search_ccw(g: Graph, eta0: Numbering, steps: int, seed: int = 0,
                     routing_budget: int = 10**6) -> Numbering:
    """Seeded pair-swap hill climbing that also accepts sideways moves."""
    eta0 = eta0.as_host(CYCLIC)
    if steps <= 0 or g.vertex_count < 2:
        return eta0
    rng = random.Random(seed)
    current = best = eta0
    current_value = best_value = cyclic_cutwidth_of_numbering(g, eta0, routing_budget).width
    m = g.vertex_count
    for _ in range(steps):
        i, j = rng.sample(range(m), 2)
        placement = list(current.placement)
        placement[i], placement[j] = placement[j], placement[i]
        candidate = Numbering(CYCLIC, tuple(placement))
        try:
            if routing_width_at_most(g, candidate, current_value, routing_budget) is None:
                continue
        except BudgetExceeded:
            continue
        value = cyclic_cutwidth_of_numbering(g, candidate, routing_budget).width
        current, current_value = candidate, value
        if value < best_value:
            best, best_value = candidate, value
    return best
