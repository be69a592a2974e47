"""Brute-force ground truth on the explicitly built divisor prime graph.

Vertices are the divisors of n in ascending order; two distinct divisors
are adjacent exactly when their gcd is 1 (the loop at divisor 1 is
dropped).  Adjacency is decided by calling gcd on the divisor values, and
every index is computed literally from its defining sum over the graph,
with distances found by breadth-first search from every vertex.  Nothing
here assumes the diameter bound or any other closed-form shortcut, which
is what makes this module usable as an independent check.

Adjacency rows are stored as int bitmasks, one bit per vertex, which keeps
the all-pairs work fast enough for graphs up to the configured cap.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .arithmetic import DEFAULT_CAP, Factorization, divisors, exact_half, gcd
from .report import ORACLE, IndexReport

__all__ = [
    "DistanceSummary",
    "DivisorGraph",
    "build_graph",
    "degree_of",
    "distance_summary",
    "edges",
    "oracle_report",
]


@dataclass(frozen=True)
class DivisorGraph:
    """Explicit divisor prime graph: ascending divisor list plus symmetric
    boolean adjacency, row i stored as a bitmask over vertex indices."""

    n: int
    vertices: tuple[int, ...]
    adjacency: tuple[int, ...]


@dataclass(frozen=True)
class DistanceSummary:
    """All-pairs distance histogram (unordered pairs), per-vertex
    eccentricities, and the diameter."""

    pairs_at_distance: dict[int, int]
    eccentricities: tuple[int, ...]
    diameter: int


def build_graph(f: Factorization, cap: int | None = DEFAULT_CAP) -> DivisorGraph:
    """Construct the graph for f.n, refusing when the divisor count exceeds
    ``cap`` (pass None to lift the limit)."""
    verts = divisors(f, cap=cap)
    count = len(verts)
    rows = [0] * count
    for i in range(count):
        vi = verts[i]
        for j in range(i + 1, count):
            if gcd(vi, verts[j]) == 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return DivisorGraph(n=f.n, vertices=tuple(verts), adjacency=tuple(rows))


def degree_of(g: DivisorGraph, index: int) -> int:
    """Number of vertices adjacent to the vertex at ``index``."""
    if not 0 <= index < len(g.vertices):
        raise IndexError(f"vertex index {index} out of range for {len(g.vertices)} vertices")
    return g.adjacency[index].bit_count()


def _edge_index_pairs(adjacency: tuple[int, ...]) -> Iterator[tuple[int, int]]:
    for i, row in enumerate(adjacency):
        upper = row >> (i + 1)
        base = i + 1
        while upper:
            low = upper & -upper
            yield i, base + low.bit_length() - 1
            upper ^= low


def edges(g: DivisorGraph) -> Iterator[tuple[int, int]]:
    """Adjacent divisor pairs (u, v) with u < v, ascending."""
    for i, j in _edge_index_pairs(g.adjacency):
        yield g.vertices[i], g.vertices[j]


def _bfs_distances(adjacency: tuple[int, ...], source: int) -> list[int]:
    """Distances from ``source`` to every vertex, -1 where unreachable."""
    dist = [-1] * len(adjacency)
    dist[source] = 0
    seen = frontier = 1 << source
    level = 0
    while frontier:
        reach = 0
        remaining = frontier
        while remaining:
            low = remaining & -remaining
            reach |= adjacency[low.bit_length() - 1]
            remaining ^= low
        frontier = reach & ~seen
        seen |= frontier
        level += 1
        remaining = frontier
        while remaining:
            low = remaining & -remaining
            dist[low.bit_length() - 1] = level
            remaining ^= low
    return dist


def distance_summary(g: DivisorGraph) -> DistanceSummary:
    """Exact distance histogram and eccentricities via BFS from every vertex."""
    count = len(g.vertices)
    pairs: Counter[int] = Counter()
    eccentricities = []
    for source in range(count):
        dist = _bfs_distances(g.adjacency, source)
        farthest = 0
        for target, d in enumerate(dist):
            if d < 0:
                raise ValueError("divisor prime graph is disconnected")
            if d > farthest:
                farthest = d
            if target > source:
                pairs[d] += 1
        eccentricities.append(farthest)
    return DistanceSummary(
        pairs_at_distance=dict(pairs),
        eccentricities=tuple(eccentricities),
        diameter=max(eccentricities, default=0),
    )


def oracle_report(g: DivisorGraph) -> IndexReport:
    """Compute all eight indices from their definitions on the explicit graph.

    Distance-based sums run over unordered vertex pairs with BFS distances,
    degree-based sums over vertices or edges, and the Harary index is
    accumulated as an exact rational, never a float.
    """
    count = len(g.vertices)
    degrees = [row.bit_count() for row in g.adjacency]
    degree_sum = sum(degrees)
    zagreb1 = sum(d * d for d in degrees)
    edge_count = 0
    zagreb2 = 0
    for i, j in _edge_index_pairs(g.adjacency):
        edge_count += 1
        zagreb2 += degrees[i] * degrees[j]

    pairs: Counter[int] = Counter()
    gutman = 0
    schultz = 0
    eccentricities = []
    for source in range(count):
        dist = _bfs_distances(g.adjacency, source)
        deg_s = degrees[source]
        farthest = 0
        for target, d in enumerate(dist):
            if d < 0:
                raise ValueError("divisor prime graph is disconnected")
            if d > farthest:
                farthest = d
            if target > source:
                pairs[d] += 1
                gutman += deg_s * degrees[target] * d
                schultz += (deg_s + degrees[target]) * d
        eccentricities.append(farthest)

    wiener = sum(d * c for d, c in pairs.items())
    hyper_wiener = exact_half(sum((d + d * d) * c for d, c in pairs.items()))
    harary = sum((Fraction(c, d) for d, c in pairs.items()), Fraction(0))
    return IndexReport(
        n=g.n,
        divisor_count=count,
        edge_count=edge_count,
        degree_sum=degree_sum,
        wiener=wiener,
        harary=harary,
        hyper_wiener=hyper_wiener,
        zagreb1=zagreb1,
        zagreb2=zagreb2,
        gutman=gutman,
        schultz=schultz,
        eccentric_connectivity=sum(dv * e for dv, e in zip(degrees, eccentricities)),
        source=ORACLE,
        diameter=max(eccentricities, default=0),
    )
