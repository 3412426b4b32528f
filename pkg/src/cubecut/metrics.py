"""Bandwidth, wirelength and cutwidth of a graph under a linear or cyclic numbering.

Gap ``g`` sits between positions ``g`` and ``g + 1``; on a cyclic host gap
``m - 1`` closes the ring between the last position and position 0.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hypercube import CYCLIC, LINEAR, Graph, Numbering

FORWARD = "forward"
BACKWARD = "backward"

DEFAULT_BUDGET = 10**8


class HostMismatch(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


def _require(g: Graph, eta: Numbering, host: str) -> None:
    if eta.host != host:
        raise HostMismatch(f"expected a {host} numbering, got {eta.host}")
    if not eta.covers(g):
        raise ValueError(f"numbering has {len(eta)} positions, graph has {g.vertex_count} vertices")


def _edge_positions(g: Graph, eta: Numbering):
    pos = eta.position
    for u, v in g.edges:
        a, b = pos[u], pos[v]
        yield (a, b) if a < b else (b, a)


# --- linear host ------------------------------------------------------------

def linear_bandwidth(g: Graph, eta: Numbering) -> int:
    _require(g, eta, LINEAR)
    return max((b - a for a, b in _edge_positions(g, eta)), default=0)


def linear_wirelength(g: Graph, eta: Numbering) -> int:
    _require(g, eta, LINEAR)
    return sum(b - a for a, b in _edge_positions(g, eta))


def linear_cut_profile(g: Graph, eta: Numbering) -> tuple[int, ...]:
    _require(g, eta, LINEAR)
    m = g.vertex_count
    diff = [0] * (m + 1)
    for a, b in _edge_positions(g, eta):
        diff[a] += 1
        diff[b] -= 1
    loads, running = [], 0
    for gap in range(m - 1):
        running += diff[gap]
        loads.append(running)
    return tuple(loads)


def linear_cutwidth(g: Graph, eta: Numbering) -> tuple[int, tuple[int, ...]]:
    profile = linear_cut_profile(g, eta)
    return max(profile, default=0), profile


# --- cyclic host ------------------------------------------------------------

def cyclic_distance(m: int, p: int, q: int) -> int:
    d = (q - p) % m
    if d == 0:
        raise ValueError("positions coincide")
    return min(d, m - d)


def cyclic_wirelength(g: Graph, eta: Numbering) -> int:
    _require(g, eta, CYCLIC)
    m = g.vertex_count
    return sum(cyclic_distance(m, a, b) for a, b in _edge_positions(g, eta))


def cyclic_bandwidth(g: Graph, eta: Numbering) -> int:
    _require(g, eta, CYCLIC)
    m = g.vertex_count
    return max((cyclic_distance(m, a, b) for a, b in _edge_positions(g, eta)), default=0)


def short_routing(g: Graph, eta: Numbering) -> tuple[str, ...]:
    """Every edge along its shorter arc; diameter ties go forward."""
    _require(g, eta, CYCLIC)
    m = g.vertex_count
    return tuple(FORWARD if 2 * (b - a) <= m else BACKWARD for a, b in _edge_positions(g, eta))


def cut_profile_cyclic(g: Graph, eta: Numbering, routing) -> tuple[int, ...]:
    _require(g, eta, CYCLIC)
    if len(routing) != len(g.edges):
        raise ValueError(f"routing has {len(routing)} entries for {len(g.edges)} edges")
    m = g.vertex_count
    diff = [0] * (m + 1)
    for (a, b), direction in zip(_edge_positions(g, eta), routing):
        if direction == FORWARD:
            diff[a] += 1
            diff[b] -= 1
        elif direction == BACKWARD:
            diff[b] += 1
            diff[m] -= 1
            diff[0] += 1
            diff[a] -= 1
        else:
            raise ValueError(f"unknown direction {direction!r}")
    loads, running = [], 0
    for gap in range(m):
        running += diff[gap]
        loads.append(running)
    return tuple(loads)


def routed_length(g: Graph, eta: Numbering, routing) -> int:
    m = g.vertex_count
    return sum(b - a if d == FORWARD else m - (b - a)
               for (a, b), d in zip(_edge_positions(g, eta), routing))


@dataclass(frozen=True)
class RoutingResult:
    """Outcome of the routing optimisation for one cyclic numbering.

    `width` is the best width found and `routing` a witness for it. When the
    node budget ran out, `exact` is False and `lower` is the best proven bound.
    """

    width: int
    routing: tuple[str, ...]
    lower: int
    exact: bool
    nodes: int


class RoutingSearch:
    """Branch and bound over edge directions for a fixed cyclic numbering.

    Edges are decided longest-first. A node is cut off when a gap exceeds the
    target, when the averaging bound exceeds it, or when some pair of gaps
    must jointly carry more than twice the target: an undecided edge whose
    forward arc holds exactly one gap of the pair lands on one of them
    whichever way it goes.
    """

    def __init__(self, g: Graph, eta: Numbering, budget: int = DEFAULT_BUDGET):
        _require(g, eta, CYCLIC)
        self.m = m = g.vertex_count
        self.budget = budget
        self.nodes = 0
        spans = list(_edge_positions(g, eta))
        self.edge_count = len(spans)
        lengths = [b - a for a, b in spans]
        short = [min(d, m - d) for d in lengths]
        self.order = sorted(range(len(spans)), key=lambda i: (-short[i], i))

        fwd = np.zeros((len(spans), m), dtype=np.int64)
        for i, (a, b) in enumerate(spans):
            fwd[i, a:b] = 1
        self.fwd = fwd[self.order]
        self.bwd = 1 - self.fwd
        self.fwd_first = [2 * lengths[i] <= m for i in self.order]
        # suffix sums over the decision order
        sep = (self.fwd[:, :, None] != self.fwd[:, None, :]).astype(np.int64)
        self.sep = np.concatenate([np.cumsum(sep[::-1], axis=0)[::-1],
                                   np.zeros((1, m, m), dtype=np.int64)])
        short_sorted = np.array([short[i] for i in self.order] + [0], dtype=np.int64)
        self.min_rest = np.cumsum(short_sorted[::-1])[::-1]

    def root_lower_bound(self) -> int:
        if self.edge_count == 0:
            return 0
        pair = int(self.sep[0].max())
        average = int(self.min_rest[0])
        return max(1, -(-pair // 2), -(-average // self.m))

    def feasible(self, target: int):
        """Return a routing (in decision order, True = forward) of width <= target, or None."""
        loads = np.zeros(self.m, dtype=np.int64)
        choice = [False] * self.edge_count
        total = 0
        E = self.edge_count

        def bounded(depth: int) -> bool:
            if total + self.min_rest[depth] > self.m * target:
                return True
            pair = loads[:, None] + loads[None, :] + self.sep[depth]
            return bool(pair.max() > 2 * target)

        def dfs(depth: int) -> bool:
            nonlocal total
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExceeded
            if depth == E:
                return True
            if bounded(depth):
                return False
            options = (True, False) if self.fwd_first[depth] else (False, True)
            for forward in options:
                arc = self.fwd[depth] if forward else self.bwd[depth]
                loads[:] += arc
                if loads.max() <= target:
                    step = int(arc.sum())
                    total += step
                    choice[depth] = forward
                    if dfs(depth + 1):
                        return True
                    total -= step
                loads[:] -= arc
            return False

        return list(choice) if dfs(0) else None

    def to_routing(self, choice) -> tuple[str, ...]:
        out = [FORWARD] * self.edge_count
        for depth, edge in enumerate(self.order):
            out[edge] = FORWARD if choice[depth] else BACKWARD
        return tuple(out)


def cyclic_cutwidth_of_numbering(g: Graph, eta: Numbering, budget: int = DEFAULT_BUDGET) -> RoutingResult:
    """Minimum over all routings of the largest gap load, with a witness routing."""
    _require(g, eta, CYCLIC)
    if not g.edges:
        return RoutingResult(0, (), 0, True, 0)
    search = RoutingSearch(g, eta, budget)
    routing = short_routing(g, eta)
    upper = max(cut_profile_cyclic(g, eta, routing))
    lower = search.root_lower_bound()
    try:
        while lower < upper:
            choice = search.feasible(upper - 1)
            if choice is None:
                lower = upper
                break
            routing = search.to_routing(choice)
            upper = max(cut_profile_cyclic(g, eta, routing))
    except BudgetExceeded:
        return RoutingResult(upper, routing, lower, False, search.nodes)
    return RoutingResult(upper, routing, upper, True, search.nodes)


def routing_width_at_most(g: Graph, eta: Numbering, target: int, budget: int = DEFAULT_BUDGET):
    """A routing of width <= target if one exists, else None. May raise BudgetExceeded."""
    search = RoutingSearch(g, eta, budget)
    if search.edge_count == 0:
        return ()
    if search.root_lower_bound() > target:
        return None
    routing = short_routing(g, eta)
    if max(cut_profile_cyclic(g, eta, routing)) <= target:
        return routing
    choice = search.feasible(target)
    return None if choice is None else search.to_routing(choice)


def all_metrics(g: Graph, eta: Numbering, budget: int = DEFAULT_BUDGET) -> dict:
    """The six metrics of a placement read once linearly and once cyclically."""
    lin = eta.as_host(LINEAR)
    cyc = eta.as_host(CYCLIC)
    lcw, _ = linear_cutwidth(g, lin)
    ccw = cyclic_cutwidth_of_numbering(g, cyc, budget)
    return {
        "lbw": linear_bandwidth(g, lin),
        "lwl": linear_wirelength(g, lin),
        "lcw": lcw,
        "cbw": cyclic_bandwidth(g, cyc),
        "cwl": cyclic_wirelength(g, cyc),
        "ccw": ccw.width,
        "ccw_lower": ccw.lower,
        "routing": list(ccw.routing),
        "profile": list(cut_profile_cyclic(g, cyc, ccw.routing)),
        "exact": ccw.exact,
    }
