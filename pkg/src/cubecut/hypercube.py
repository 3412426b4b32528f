"""Graphs, n-cubes, facets and the canonical numberings of the n-cube.

Positions are 0-based everywhere inside the package. Text I/O renders vertex
ids 1-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

MAX_DIMENSION = 20

LINEAR = "linear"
CYCLIC = "cyclic"
HOSTS = (LINEAR, CYCLIC)


class GuardError(ValueError):
    """An input is outside the range an operation is willing to handle."""


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("a graph needs at least one vertex")
        normalized = []
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) has an endpoint out of range")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            normalized.append(e)
        object.__setattr__(self, "edges", tuple(normalized))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
        return cls(vertex_count, tuple(tuple(e) for e in edges))

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbourhood of every vertex as an int bitmask."""
        adj = [0] * self.vertex_count
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def induced_edge_count(self, vertices: Iterable[int]) -> int:
        members = set(vertices)
        return sum(1 for u, v in self.edges if u in members and v in members)


@dataclass(frozen=True)
class Facet:
    """The sub-cube of Q_n whose `axis`-th bit equals `value`."""

    n: int
    axis: int
    value: int

    @cached_property
    def members(self) -> tuple[int, ...]:
        return tuple(v for v in range(1 << self.n) if (v >> self.axis) & 1 == self.value)

    @property
    def mask(self) -> int:
        return sum(1 << v for v in self.members)

    def complement(self) -> Facet:
        return Facet(self.n, self.axis, 1 - self.value)


@dataclass(frozen=True)
class Numbering:
    """A bijection positions -> vertices on a linear or cyclic host.

    ``placement[p]`` is the vertex sitting at position ``p``.
    """

    host: str
    placement: tuple[int, ...]

    def __post_init__(self):
        if self.host not in HOSTS:
            raise ValueError(f"unknown host {self.host!r}")
        object.__setattr__(self, "placement", tuple(int(v) for v in self.placement))
        if sorted(self.placement) != list(range(len(self.placement))):
            raise ValueError("placement is not a permutation of 0..m-1")

    def __len__(self) -> int:
        return len(self.placement)

    @cached_property
    def position(self) -> tuple[int, ...]:
        """Inverse map: vertex -> position."""
        pos = [0] * len(self.placement)
        for p, v in enumerate(self.placement):
            pos[v] = p
        return tuple(pos)

    def as_host(self, host: str) -> Numbering:
        return self if host == self.host else Numbering(host, self.placement)

    def rotated(self, shift: int) -> Numbering:
        m = len(self.placement)
        shift %= m
        return Numbering(self.host, self.placement[shift:] + self.placement[:shift])

    def reversed(self) -> Numbering:
        return Numbering(self.host, self.placement[::-1])

    def covers(self, g: Graph) -> bool:
        return len(self.placement) == g.vertex_count


def check_dimension(n: int, low: int = 0) -> None:
    if not isinstance(n, int) or n < low or n > MAX_DIMENSION:
        raise GuardError(f"dimension must lie in [{low}, {MAX_DIMENSION}], got {n!r}")


def build_hypercube(n: int) -> Graph:
    check_dimension(n)
    edges = [(v, v ^ (1 << k)) for v in range(1 << n) for k in range(n) if not (v >> k) & 1]
    return Graph(1 << n, tuple(edges))


def facets(n: int) -> list[Facet]:
    if n == 0:
        raise GuardError("Q_0 has no facets")
    check_dimension(n, low=1)
    return [Facet(n, axis, value) for axis in range(n) for value in (0, 1)]


def gray_label(p: int) -> int:
    return p ^ (p >> 1)


def gray_numbering(n: int) -> Numbering:
    check_dimension(n, low=1)
    return Numbering(CYCLIC, tuple(gray_label(p) for p in range(1 << n)))


def lex_numbering(n: int) -> Numbering:
    check_dimension(n)
    return Numbering(LINEAR, tuple(range(1 << n)))


def hypercube_dimension(g: Graph) -> int | None:
    """Return n if `g` is exactly build_hypercube(n), else None."""
    n = g.vertex_count.bit_length() - 1
    if 1 << n != g.vertex_count or n > MAX_DIMENSION:
        return None
    return n if g.edges == build_hypercube(n).edges else None


def cycle_graph(m: int) -> Graph:
    if m < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(m, tuple((i, (i + 1) % m) for i in range(m)))


def path_graph(m: int) -> Graph:
    return Graph(m, tuple((i, i + 1) for i in range(m - 1)))


# --- text formats -----------------------------------------------------------

def format_graph(g: Graph) -> str:
    lines = [f"{g.vertex_count} {len(g.edges)}"]
    lines += [f"{u + 1} {v + 1}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise ValueError("graph header must be 'm e'")
    m, e = (int(x) for x in rows[0])
    body = rows[1:]
    if len(body) != e:
        raise ValueError(f"header announces {e} edges, found {len(body)}")
    edges = []
    for row in body:
        if len(row) != 2:
            raise ValueError(f"malformed edge line: {' '.join(row)!r}")
        edges.append((int(row[0]) - 1, int(row[1]) - 1))
    return Graph(m, tuple(edges))


def format_numbering(eta: Numbering) -> str:
    return f"{eta.host}: " + " ".join(str(v + 1) for v in eta.placement) + "\n"


def parse_numbering(text: str) -> Numbering:
    text = text.strip()
    host, sep, rest = text.partition(":")
    if not sep or host.strip() not in HOSTS:
        raise ValueError("numbering must start with 'linear:' or 'cyclic:'")
    return Numbering(host.strip(), tuple(int(x) - 1 for x in rest.split()))


def vertex_mask(vertices: Sequence[int] | Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask
