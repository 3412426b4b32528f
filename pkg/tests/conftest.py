import itertools

import hypothesis.strategies as st
import pytest

from cubecut.hypercube import CYCLIC, Graph, Numbering


@st.composite
def graph_and_ring(draw, min_m=2, max_m=7, max_edges=12):
    m = draw(st.integers(min_m, max_m))
    pairs = list(itertools.combinations(range(m), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=min(max_edges, len(pairs))))
    order = draw(st.permutations(range(m)))
    return Graph(m, tuple(edges)), Numbering(CYCLIC, tuple(order))


def arc_gaps(m, p, q, forward):
    """Gaps walked from position p to q (forward) or q to p round the ring."""
    a, b = min(p, q), max(p, q)
    if forward:
        return list(range(a, b))
    return [g % m for g in range(b, a + m)]


def brute_force_ccw(g, eta):
    """Minimum over all 2^|E| routings of the largest gap load."""
    m = g.vertex_count
    pos = eta.position
    arcs = [(arc_gaps(m, pos[u], pos[v], True), arc_gaps(m, pos[u], pos[v], False)) for u, v in g.edges]
    best = None
    for choice in itertools.product((0, 1), repeat=len(arcs)):
        loads = [0] * m
        for arc_pair, c in zip(arcs, choice):
            for gap in arc_pair[c]:
                loads[gap] += 1
        width = max(loads) if arcs else 0
        best = width if best is None or width < best else best
    return best


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep
