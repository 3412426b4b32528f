"""Diameters, brackets and facet splits of a cyclic numbering.

A diameter at position ``p`` puts positions ``p .. p + m/2 - 1`` (mod m) on
side 1 and the remaining half on side 2.
"""
from __future__ import annotations

from dataclasses import dataclass

from .hypercube import CYCLIC, Graph, GuardError, Numbering, facets, hypercube_dimension
from .isoperimetric import _to_mask, theta_recursive
from .metrics import HostMismatch


@dataclass(frozen=True)
class Diameter:
    position: int


@dataclass(frozen=True)
class Bracket:
    """Side populations and crossing-edge counts for a part/complement pair.

    A, C are the part's vertices on sides 1 and 2; B, D the complement's.
    """

    a: int
    b: int
    c: int
    d: int
    e_ab: int
    e_ac: int
    e_ad: int
    e_bc: int
    e_bd: int
    e_cd: int

    def matrix(self) -> list[list[int]]:
        return [
            [self.a, self.e_ab, self.b],
            [self.e_ac, self.e_ad + self.e_bc, self.e_bd],
            [self.c, self.e_cd, self.d],
        ]

    @property
    def crossing_edges(self) -> int:
        return self.e_ac + self.e_ad + self.e_bc + self.e_bd


def _validate(g: Graph, eta: Numbering, part) -> int:
    if eta.host != CYCLIC:
        raise HostMismatch("diameters need a cyclic numbering")
    if not eta.covers(g):
        raise ValueError("numbering does not cover the graph")
    m = g.vertex_count
    if m % 2:
        raise ValueError("a diameter needs an even number of positions")
    mask = _to_mask(m, part)
    if mask == 0 or mask == (1 << m) - 1:
        raise ValueError("part must be a proper non-empty subset")
    return mask


def side_mask(eta: Numbering, d: Diameter) -> int:
    m = len(eta)
    mask = 0
    for i in range(m // 2):
        mask |= 1 << eta.placement[(d.position + i) % m]
    return mask


def bracket(g: Graph, eta: Numbering, d: Diameter, part) -> Bracket:
    part_mask = _validate(g, eta, part)
    side1 = side_mask(eta, d)

    def cls(v: int) -> str:
        in_part = (part_mask >> v) & 1
        on_side1 = (side1 >> v) & 1
        return ("C", "A")[on_side1] if in_part else ("D", "B")[on_side1]

    counts = {k: 0 for k in ("AB", "AC", "AD", "BC", "BD", "CD")}
    for u, v in g.edges:
        key = "".join(sorted(cls(u) + cls(v)))
        if key in counts:
            counts[key] += 1
    full = (1 << g.vertex_count) - 1
    return Bracket(
        a=(part_mask & side1).bit_count(),
        b=(~part_mask & side1 & full).bit_count(),
        c=(part_mask & ~side1 & full).bit_count(),
        d=(~part_mask & ~side1 & full).bit_count(),
        e_ab=counts["AB"], e_ac=counts["AC"], e_ad=counts["AD"],
        e_bc=counts["BC"], e_bd=counts["BD"], e_cd=counts["CD"],
    )


def split_size(g: Graph, eta: Numbering, d: Diameter, part) -> int:
    part_mask = _validate(g, eta, part)
    return (part_mask & side_mask(eta, d)).bit_count()


def full_rotation(g: Graph, eta: Numbering, part) -> list[int]:
    """Split size at every diameter position 0..m-1."""
    part_mask = _validate(g, eta, part)
    m = g.vertex_count
    half = m // 2
    inside = [(part_mask >> v) & 1 for v in eta.placement]
    current = sum(inside[:half])
    out = [current]
    for p in range(1, m):
        current += inside[(p + half - 1) % m] - inside[p - 1]
        out.append(current)
    return out


def diameter_sweep(g: Graph, eta: Numbering, part) -> list[int]:
    return full_rotation(g, eta, part)[: g.vertex_count // 2]


def _default_parts(g: Graph):
    n = hypercube_dimension(g)
    if n is None or n < 1:
        raise GuardError("facet parts are only defined for hypercube graphs")
    return [f.members for f in facets(n)]


def find_split(g: Graph, eta: Numbering, target_x: int, parts=None):
    """A (Diameter, part) pair whose split size is exactly `target_x`, or None."""
    m = g.vertex_count
    if not 0 <= target_x <= m // 2:
        return None
    for part in parts if parts is not None else _default_parts(g):
        for p, x in enumerate(full_rotation(g, eta, part)):
            if x == target_x:
                return Diameter(p), frozenset(part)
    return None


def easy_split(n: int) -> tuple[int, int]:
    """The x/y facet split that forces the largest cut up to the conjectured value."""
    sign = -1 if n % 2 else 1
    x = ((1 << n) - sign) // 3
    y = ((1 << (n - 1)) + sign) // 3
    return x, y


def theorem_hypothesis(g: Graph, eta: Numbering, n: int):
    """Witness that some facet/diameter splits at least x/y (see easy_split), else None."""
    return find_split(g, eta, easy_split(n)[0])


def theorem_lower_bound(n: int) -> int:
    if n < 2:
        raise GuardError("the split bound needs n >= 2")
    numerator = 5 * (1 << (n - 2)) - (1 if n % 2 else 2)
    assert numerator % 3 == 0
    return numerator // 3


def min_diameter_crossings(n: int) -> int:
    if n < 2:
        raise GuardError("the split bound needs n >= 2")
    sign = 1 if n % 2 == 0 else -1
    small_side = ((1 << (n - 1)) + sign) // 3
    matching = ((1 << (n - 1)) - 2 * sign) // 3
    return 2 * theta_recursive(n - 1, small_side) + matching
