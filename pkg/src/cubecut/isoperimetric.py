"""Edge boundaries, the theta function of Q_n, facet Type/Split and Guu's quadratic."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable

import numpy as np

from .hypercube import Graph, GuardError, build_hypercube, check_dimension, facets

EXACT_THETA_MAX_N = 4


def _to_mask(g_vertex_count: int, s) -> int:
    if isinstance(s, int):
        mask = s
        if mask < 0 or mask >> g_vertex_count:
            raise ValueError("vertex mask has bits outside the vertex range")
        return mask
    mask = 0
    for v in s:
        if not 0 <= v < g_vertex_count:
            raise ValueError(f"vertex {v} out of range")
        mask |= 1 << v
    return mask


def edge_boundary(g: Graph, s: Iterable[int] | int) -> int:
    """Number of edges with exactly one endpoint in `s` (a vertex iterable or bitmask)."""
    mask = _to_mask(g.vertex_count, s)
    adj = g.adjacency
    total, rest = 0, mask
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        total += (adj[v] & ~mask).bit_count()
        rest ^= low
    return total


@lru_cache(maxsize=None)
def theta_table_exact(n: int) -> tuple[int, ...]:
    """theta_n(l) for l = 0..2^n by scanning every vertex subset of Q_n."""
    if not 0 <= n <= EXACT_THETA_MAX_N:
        raise GuardError(f"exact theta scans 2^(2^n) subsets; n must be <= {EXACT_THETA_MAX_N}")
    g = build_hypercube(n)
    m = g.vertex_count
    subsets = np.arange(1 << m, dtype=np.int64)
    bits = ((subsets[:, None] >> np.arange(m)) & 1).astype(np.int8)
    boundary = np.zeros(1 << m, dtype=np.int64)
    for u, v in g.edges:
        boundary += bits[:, u] ^ bits[:, v]
    sizes = bits.sum(axis=1)
    table = [int(boundary[sizes == ell].min()) for ell in range(m + 1)]
    return tuple(table)


def theta_exact(n: int, ell: int) -> int:
    table = theta_table_exact(n)
    if not 0 <= ell < len(table):
        raise ValueError(f"size {ell} out of range for Q_{n}")
    return table[ell]


@lru_cache(maxsize=None)
def theta_recursive(n: int, ell: int) -> int:
    """theta_n(l) from the two-step recursion, extended past 2^(n-1) by complement symmetry."""
    if n < 0:
        raise ValueError("dimension must be non-negative")
    size = 1 << n
    if not 0 <= ell <= size:
        raise ValueError(f"size {ell} out of range for Q_{n}")
    if n == 0:
        return 0
    if n == 1:
        return (0, 1, 0)[ell]
    if 2 * ell > size:
        return theta_recursive(n, size - ell)
    quarter = size >> 2
    if ell <= quarter:
        return 2 * ell + theta_recursive(n - 2, ell)
    return (size >> 1) + theta_recursive(n - 2, ell - quarter)


def theta_table(n: int) -> tuple[int, ...]:
    return tuple(theta_recursive(n, ell) for ell in range((1 << n) + 1))


def type_and_split(n: int, s: Iterable[int] | int) -> tuple[int, int]:
    """(min, max) of |S ∩ H| over the 2n facets H of Q_n."""
    check_dimension(n, low=1)
    mask = _to_mask(1 << n, s)
    counts = [(mask & f.mask).bit_count() for f in facets(n)]
    return min(counts), max(counts)


def guu_f(x):
    """3/4 - 64/7 (x - 1/2)^2; exact for Fraction or int input."""
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        return Fraction(3, 4) - Fraction(64, 7) * (x - Fraction(1, 2)) ** 2
    return 0.75 - 64.0 / 7.0 * (x - 0.5) ** 2


def guu_margin(x, t, f=guu_f):
    """f(x - t) + f(x + t) + 2t - 2 f(x); non-negative where the inequality holds."""
    return f(x - t) + f(x + t) + 2 * t - 2 * f(x)


def relaxed_f(k):
    """The 5/6 - k (x - 1/2)^2 variant with a free curvature k (exploratory only)."""
    k = Fraction(k) if isinstance(k, (int, Fraction)) else k

    def f(x):
        if isinstance(k, Fraction) and isinstance(x, (int, Fraction)):
            return Fraction(5, 6) - k * (Fraction(x) - Fraction(1, 2)) ** 2
        return 5 / 6 - float(k) * (float(x) - 0.5) ** 2

    return f


def _half_set_type(n: int, s) -> int:
    if n < 3:
        raise GuardError("big/small are defined for n >= 3")
    mask = _to_mask(1 << n, s)
    if mask.bit_count() != 1 << (n - 1):
        raise ValueError(f"big/small need |S| = 2^(n-1) = {1 << (n - 1)}")
    return type_and_split(n, mask)[0]


def is_big(n: int, s) -> bool:
    return _half_set_type(n, s) >= 1 << (n - 3)


def is_small(n: int, s) -> bool:
    return _half_set_type(n, s) <= 1 << (n - 3)
