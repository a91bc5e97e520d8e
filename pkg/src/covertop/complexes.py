"""Deterministic Cech and Rips complexes (dimension <= 2) for realized point sets."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from covertop.geometry import Point2, dist_sq, min_enclosing_radius_sq_leq

Edge = tuple[int, int]
Triangle = tuple[int, int, int]


class ComplexKind(Enum):
    CECH = "cech"
    RIPS = "rips"


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: frozenset[int]
    edges: frozenset[Edge]
    triangles: frozenset[Triangle]
    kind: ComplexKind
    scale: float

    def __post_init__(self):
        for i, j in self.edges:
            if i not in self.vertices or j not in self.vertices:
                raise ValueError(f"edge ({i},{j}) references a missing vertex")
        for tri in self.triangles:
            for a, b in itertools.combinations(tri, 2):
                if (a, b) not in self.edges:
                    raise ValueError(f"triangle {tri} missing edge ({a},{b})")

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def sorted_triangles(self) -> list[Triangle]:
        return sorted(self.triangles)

    def simplices(self) -> set[tuple[int, ...]]:
        """All simplices as sorted vertex tuples (for inclusion checks)."""
        out: set[tuple[int, ...]] = {(v,) for v in self.vertices}
        out.update(self.edges)
        out.update(self.triangles)
        return out


def _edge_set(points: dict[int, Point2], rc: float) -> frozenset[Edge]:
    threshold = (2.0 * rc) ** 2
    ids = sorted(points)
    edges = set()
    for i, j in itertools.combinations(ids, 2):
        if dist_sq(points[i], points[j]) <= threshold:
            edges.add((i, j))
    return frozenset(edges)


def _triangle_candidates(edges: frozenset[Edge]) -> list[Triangle]:
    """Triples whose three edges all exist (common-neighbor iteration)."""
    neighbors: dict[int, set[int]] = {}
    for i, j in edges:
        neighbors.setdefault(i, set()).add(j)
        neighbors.setdefault(j, set()).add(i)
    triangles = []
    for i, j in sorted(edges):
        for k in sorted(neighbors[i] & neighbors[j]):
            if k > j:
                triangles.append((i, j, k))
    return triangles


def build_rips(points: dict[int, Point2], rc: float) -> SimplicialComplex:
    """Rips complex at scale rc: edge iff d <= 2rc, triangle iff all edges present."""
    if rc <= 0:
        raise ValueError(f"rc must be positive, got {rc}")
    edges = _edge_set(points, rc)
    return SimplicialComplex(
        vertices=frozenset(points),
        edges=edges,
        triangles=frozenset(_triangle_candidates(edges)),
        kind=ComplexKind.RIPS,
        scale=rc,
    )


def build_cech(points: dict[int, Point2], rc: float) -> SimplicialComplex:
    """Cech complex at radius rc: same edges as Rips, triangle iff the three
    points fit in a ball of radius rc."""
    if rc <= 0:
        raise ValueError(f"rc must be positive, got {rc}")
    edges = _edge_set(points, rc)
    triangles = frozenset(
        (i, j, k)
        for i, j, k in _triangle_candidates(edges)
        if min_enclosing_radius_sq_leq(points[i], points[j], points[k], rc)
    )
    return SimplicialComplex(
        vertices=frozenset(points),
        edges=edges,
        triangles=triangles,
        kind=ComplexKind.CECH,
        scale=rc,
    )
