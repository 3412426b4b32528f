"""Reproduction battery behind `cubecut verify`."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import bounds, isoperimetric, splits
from .hypercube import CYCLIC, Numbering, build_hypercube, facets, gray_numbering
from .metrics import cyclic_cutwidth_of_numbering, cyclic_wirelength
from .search import exhaustive_ccw, exhaustive_lcw


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str


def check_gray_ccw(n_max: int) -> Check:
    got = {}
    for n in range(2, min(n_max, 5) + 1):
        result = cyclic_cutwidth_of_numbering(build_hypercube(n), gray_numbering(n))
        got[n] = (result.width, result.exact)
    ok = all(exact and w == bounds.ct_value(n) for n, (w, exact) in got.items())
    return Check("gray_ccw_equals_ct", ok, str({n: w for n, (w, _) in got.items()}))


def check_exhaustive(n_max: int) -> Check:
    n = min(n_max, 3)
    g = build_hypercube(n)
    ccw = exhaustive_ccw(g).optimum if n >= 2 else None
    lcw = exhaustive_lcw(g).optimum
    expect_ccw = bounds.ct_value(n) if n >= 2 else None
    ok = ccw == expect_ccw and lcw == bounds.lcw_value(n)
    return Check("exhaustive_q%d" % n, ok, f"ccw={ccw} lcw={lcw}")


def check_theta(n_max: int) -> Check:
    mismatches = [
        (n, ell)
        for n in range(1, min(n_max, 4) + 1)
        for ell in range((1 << n) + 1)
        if isoperimetric.theta_recursive(n, ell) != isoperimetric.theta_exact(n, ell)
    ]
    return Check("theta_recursion_matches_scan", not mismatches, f"mismatches={mismatches}")


def check_theorem(n_max: int) -> Check:
    bad = [n for n in range(2, max(n_max, 30) + 1)
           if not -(-splits.min_diameter_crossings(n) // 2)
           == splits.theorem_lower_bound(n) == bounds.ct_value(n)]
    return Check("theorem_bound_equals_ct", not bad, f"failures={bad}")


def check_bracket(n_max: int) -> Check:
    if n_max < 5:
        return Check("q5_bracket", True, "skipped (n-max < 5)")
    g, eta = build_hypercube(5), gray_numbering(5)
    target = [[11, 5, 5], [10, 6, 10], [5, 5, 11]]
    for f in facets(5):
        for p in range(32):
            if splits.bracket(g, eta, splits.Diameter(p), f.members).matrix() == target:
                return Check("q5_bracket", True, f"facet axis={f.axis} value={f.value} diameter={p}")
    return Check("q5_bracket", False, "no facet/diameter reproduces the bracket")


def check_cwl(n_max: int) -> Check:
    bad = [n for n in range(2, n_max + 1)
           if cyclic_wirelength(build_hypercube(n), gray_numbering(n)) != bounds.cwl_closed_form(n)]
    return Check("gray_cwl_closed_form", not bad, f"failures={bad}")


def lemma_violations(n: int, samples: int, seed: int) -> int:
    rng = random.Random(seed)
    g = build_hypercube(n)
    m = g.vertex_count
    half = m // 2
    violations = 0
    for _ in range(samples):
        order = list(range(m))
        rng.shuffle(order)
        eta = Numbering(CYCLIC, tuple(order))
        for f in facets(n):
            rotation = splits.full_rotation(g, eta, f.members)
            steps_ok = all(abs(rotation[(p + 1) % m] - rotation[p]) <= 1 for p in range(m))
            flips_ok = all(rotation[(p + half) % m] == half - rotation[p] for p in range(m))
            seen = set(rotation)
            lo, hi = min(rotation), max(rotation)
            values_ok = all(x in seen for x in range(lo, hi + 1))
            if not (steps_ok and flips_ok and values_ok):
                violations += 1
    return violations


def check_lemma(n_max: int, seed: int = 0) -> Check:
    n = min(max(n_max, 2), 4)
    bad = lemma_violations(n, 1000, seed)
    return Check("lemma_sweep_continuity", bad == 0, f"n={n} violations={bad}")


def type_split_violations(n: int, samples: int, seed: int) -> int:
    rng = random.Random(seed)
    size = 1 << n
    bad = 0
    for _ in range(samples):
        mask = rng.getrandbits(size)
        t, s = isoperimetric.type_and_split(n, mask)
        if t + s != mask.bit_count():
            bad += 1
    return bad


def check_type_split(n_max: int, seed: int = 0) -> Check:
    bad = {n: type_split_violations(n, 10_000, seed + n) for n in range(3, min(n_max, 6) + 1)}
    return Check("type_plus_split", not any(bad.values()), f"violations={bad}")


def guu_grid_check() -> tuple[int, int]:
    """(violations, equality hits at t = 7/64) over the 1/1024 grid."""
    step = Fraction(1, 1024)
    t_max = Fraction(7, 64)
    violations = ties = 0
    ts = [k * step for k in range(int(t_max / step) + 1)]
    for i in range(1025):
        x = i * step
        for t in ts:
            margin = isoperimetric.guu_margin(x, t)
            if margin < 0:
                violations += 1
            elif margin == 0 and t == t_max:
                ties += 1
    return violations, ties


def check_guu(n_max: int) -> Check:
    violations, ties = guu_grid_check()
    return Check("guu_inequality", violations == 0 and ties == 1025,
                 f"violations={violations} ties_at_7/64={ties}")


def check_bounds(n_max: int) -> Check:
    rows = [bounds.bounds_report(n) for n in range(2, max(n_max, 2) + 1)]
    ok = all(r.chain_holds for r in rows)
    if n_max >= 3:
        ok = ok and exhaustive_lcw(build_hypercube(3)).optimum == bounds.lcw_value(3)
    return Check("bounds_chain", ok, "lcw=" + ",".join(str(r.lcw_value) for r in rows))


BATTERY: list[Callable[[int], Check]] = [
    check_gray_ccw, check_exhaustive, check_theta, check_theorem, check_bracket,
    check_cwl, check_lemma, check_type_split, check_guu, check_bounds,
]


def run_battery(n_max: int) -> list[Check]:
    return [check(n_max) for check in BATTERY]
