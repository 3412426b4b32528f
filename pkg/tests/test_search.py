import itertools
import random

import pytest
from hypothesis import given, settings

from conftest import brute_force_ccw, graph_and_ring
from cubecut.hypercube import (CYCLIC, Graph, GuardError, Numbering, build_hypercube, cycle_graph,
                               gray_numbering, path_graph)
from cubecut.metrics import cyclic_cutwidth_of_numbering, linear_cutwidth
from cubecut.search import (bb_ccw, cyclic_orders, exhaustive_ccw, exhaustive_lcw,
                            local_search_ccw)


def test_exhaustive_ccw_small():
    assert exhaustive_ccw(build_hypercube(2)).optimum == 1
    assert exhaustive_ccw(cycle_graph(5)).optimum == 1
    r = exhaustive_ccw(build_hypercube(3))
    assert r.optimum == 3 and r.nodes_explored == 2520
    assert cyclic_cutwidth_of_numbering(build_hypercube(3), r.witness).width == 3


def test_exhaustive_lcw_small():
    assert exhaustive_lcw(build_hypercube(3)).optimum == 5
    assert exhaustive_lcw(build_hypercube(2)).optimum == 2
    assert exhaustive_lcw(path_graph(4)).optimum == 1


def test_exhaustive_guard():
    with pytest.raises(GuardError):
        exhaustive_ccw(cycle_graph(9))
    with pytest.raises(GuardError):
        exhaustive_lcw(cycle_graph(9))


def test_canonical_orders_count():
    assert sum(1 for _ in cyclic_orders(8)) == 2520


@settings(max_examples=40, deadline=None)
@given(graph_and_ring(min_m=2, max_m=6, max_edges=9))
def test_canonicalisation_loses_nothing(case):
    g, _ = case
    assert exhaustive_ccw(g).optimum == exhaustive_ccw(g, canonical=False).optimum
    assert exhaustive_lcw(g).optimum == exhaustive_lcw(g, canonical=False).optimum


def test_exhaustive_ccw_below_random_numberings():
    g = build_hypercube(3)
    best = exhaustive_ccw(g).optimum
    rng = random.Random(7)
    for _ in range(100):
        order = list(range(8))
        rng.shuffle(order)
        eta = Numbering(CYCLIC, tuple(order))
        assert best <= cyclic_cutwidth_of_numbering(g, eta).width


def test_exhaustive_ccw_against_brute_force_routings():
    g = Graph(5, ((0, 2), (1, 3), (2, 4), (0, 3), (1, 4), (0, 1)))
    brute = min(brute_force_ccw(g, Numbering(CYCLIC, order))
                for order in itertools.permutations(range(5)))
    assert exhaustive_ccw(g).optimum == brute


def test_bb_q3_matches_exhaustive():
    g = build_hypercube(3)
    r = bb_ccw(g, witness=Numbering(CYCLIC, tuple(range(8))))
    assert r.exact and r.optimum == 3 == exhaustive_ccw(g).optimum


def test_bb_q3_automorphism_flag_agrees():
    g = build_hypercube(3)
    start = Numbering(CYCLIC, (0, 7, 1, 6, 2, 5, 3, 4))
    plain = bb_ccw(g, witness=start)
    orbit = bb_ccw(g, witness=start, automorphisms=True)
    assert plain.optimum == orbit.optimum == 3
    assert plain.exact and orbit.exact


def test_bb_q4_certifies_six():
    r = bb_ccw(build_hypercube(4), budget=10**6, automorphisms=True)
    assert r.exact and r.optimum == r.lower == 6


@pytest.mark.slow
def test_bb_q4_without_symmetry_from_poor_start():
    r = bb_ccw(build_hypercube(4), budget=10**7, witness=Numbering(CYCLIC, tuple(range(16))))
    assert r.exact and r.optimum == 6


def test_bb_budget_degrades_to_interval():
    r = bb_ccw(build_hypercube(4), budget=10, witness=Numbering(CYCLIC, tuple(range(16))))
    assert not r.exact
    assert r.lower <= 6 <= r.optimum
    assert r.optimum <= cyclic_cutwidth_of_numbering(build_hypercube(4), Numbering(CYCLIC, tuple(range(16)))).width


def test_bb_upper_never_above_seed_and_history_monotone():
    g = build_hypercube(4)
    seed = Numbering(CYCLIC, tuple(range(16)))
    r = bb_ccw(g, witness=seed)
    assert r.optimum <= cyclic_cutwidth_of_numbering(g, seed).width
    uppers = [h[1] for h in r.history]
    lowers = [h[2] for h in r.history]
    assert uppers == sorted(uppers, reverse=True)
    assert lowers == sorted(lowers)


def test_bb_agrees_with_exhaustive_on_random_graphs():
    rng = random.Random(2024)
    for _ in range(60):
        m = rng.randint(3, 7)
        pairs = list(itertools.combinations(range(m), 2))
        g = Graph(m, tuple(rng.sample(pairs, rng.randint(1, len(pairs)))))
        r = bb_ccw(g, budget=10**7)
        assert r.exact
        assert r.optimum == exhaustive_ccw(g).optimum


def test_bb_rejects_automorphisms_for_non_cubes():
    with pytest.raises(GuardError):
        bb_ccw(Graph(5, ((0, 1), (1, 2), (2, 3), (3, 4), (0, 2))), automorphisms=True)


def test_local_search_contract():
    g = build_hypercube(3)
    start = Numbering(CYCLIC, (0, 7, 1, 6, 2, 5, 3, 4))
    assert local_search_ccw(g, start, steps=0, seed=1) == start
    a = local_search_ccw(g, start, steps=60, seed=5)
    b = local_search_ccw(g, start, steps=60, seed=5)
    assert a == b
    assert cyclic_cutwidth_of_numbering(g, a).width <= cyclic_cutwidth_of_numbering(g, start).width


def test_local_search_from_gray_q5_does_not_regress():
    g = build_hypercube(5)
    eta = local_search_ccw(g, gray_numbering(5), steps=20, seed=0)
    assert cyclic_cutwidth_of_numbering(g, eta).width <= 13
