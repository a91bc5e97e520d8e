"""Homological coverage certification and the geometric ground-truth oracle.

Homology is computed over GF(2) by Gaussian elimination on boundary
matrices stored as integer bitsets (one int per column).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy import ndimage

from covertop.complexes import SimplicialComplex, build_cech, build_rips
from covertop.geometry import Point2
from covertop.network import NetworkConfig, NetworkInstance, Rect, delete_node


@dataclass(frozen=True)
class BettiNumbers:
    b0: int
    b1: int
    b2: int = 0


@dataclass(frozen=True)
class UncoveredComponent:
    cells: tuple[tuple[int, int], ...]
    touches_boundary: bool


@dataclass(frozen=True)
class CoverageReport:
    covered_fraction: float
    hole_count: int
    uncovered_components: tuple[UncoveredComponent, ...]
    fully_covered: bool


class CoverageVerdict(Enum):
    CERTIFIED_NO_HOLES = "certified_no_holes"
    HOLES_PRESENT = "holes_present"


def _gf2_rank(columns: list[int]) -> int:
    """Rank of a GF(2) matrix given as per-column row bitsets."""
    pivots: dict[int, int] = {}
    rank = 0
    for col in columns:
        cur = col
        while cur:
            low = cur.bit_length() - 1
            if low in pivots:
                cur ^= pivots[low]
            else:
                pivots[low] = cur
                rank += 1
                break
    return rank


def betti_numbers(cx: SimplicialComplex) -> BettiNumbers:
    """Betti numbers b0, b1, b2 of a dimension-2 complex over GF(2).

    b0 = V - rank d1, b1 = (E - rank d1) - rank d2, b2 = T - rank d2
    (there is no d3 since the complex is truncated at triangles).
    """
    vertex_index = {v: i for i, v in enumerate(sorted(cx.vertices))}
    edges = cx.sorted_edges()
    edge_index = {e: i for i, e in enumerate(edges)}

    d1 = [(1 << vertex_index[i]) | (1 << vertex_index[j]) for i, j in edges]
    d2 = []
    for a, b, c in cx.sorted_triangles():
        col = 0
        for e in ((a, b), (a, c), (b, c)):
            col |= 1 << edge_index[e]
        d2.append(col)

    rank1 = _gf2_rank(d1)
    rank2 = _gf2_rank(d2)
    v, e, t = len(cx.vertices), len(edges), len(d2)
    return BettiNumbers(b0=v - rank1, b1=(e - rank1) - rank2, b2=t - rank2)


def components_union_find(cx: SimplicialComplex) -> int:
    """b0 via union-find on the 1-skeleton (independent cross-check)."""
    parent = {v: v for v in cx.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in cx.edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
    return len({find(v) for v in cx.vertices})


def _cover_report(
    positions: dict[int, Point2], rc: float, domain: Rect, resolution: float
) -> CoverageReport:
    if resolution <= 0:
        raise ValueError(f"resolution must be positive, got {resolution}")
    if resolution > rc / 4:
        raise ValueError(f"resolution {resolution} too coarse, must be <= rc/4 = {rc / 4}")

    nx = int(np.floor(domain.width / resolution)) + 1
    ny = int(np.floor(domain.height / resolution)) + 1
    xs = domain.x + resolution * np.arange(nx)
    ys = domain.y + resolution * np.arange(ny)
    gx, gy = np.meshgrid(xs, ys, indexing="ij")  # (nx, ny)

    covered = np.zeros((nx, ny), dtype=bool)
    r2 = rc * rc
    for p in positions.values():
        covered |= (gx - p.x) ** 2 + (gy - p.y) ** 2 <= r2

    total = nx * ny
    covered_count = int(covered.sum())
    if covered_count == total:
        return CoverageReport(1.0, 0, (), True)

    structure = np.array([[0, 1, 0], [1, 1, 1], [0, 1, 0]])  # 4-connectivity
    labels, count = ndimage.label(~covered, structure=structure)
    components = []
    holes = 0
    for label in range(1, count + 1):
        ii, jj = np.nonzero(labels == label)
        touches = bool(
            (ii == 0).any() or (ii == nx - 1).any() or (jj == 0).any() or (jj == ny - 1).any()
        )
        holes += not touches
        components.append(
            UncoveredComponent(
                cells=tuple(zip(ii.tolist(), jj.tolist())),
                touches_boundary=touches,
            )
        )
    return CoverageReport(
        covered_fraction=covered_count / total,
        hole_count=holes,
        uncovered_components=tuple(components),
        fully_covered=False,
    )


def grid_cover_oracle(instance: NetworkInstance, resolution: float) -> CoverageReport:
    """Geometric ground truth: sample the domain on a grid and group uncovered
    samples into 4-connected components; bounded ones are holes."""
    config = instance.config
    return _cover_report(instance.positions(), config.rc, config.domain, resolution)


def anchor_cover_report(config: NetworkConfig, resolution: float) -> CoverageReport:
    """Grid oracle applied to the anchor positions (the eps=0 view of the network)."""
    return _cover_report(config.anchor_positions(), config.rc, config.domain, resolution)


def certify_instance_coverage(
    instance: NetworkInstance,
) -> tuple[CoverageVerdict, BettiNumbers]:
    """Homological certificate for one instance.

    Disks are convex, so their nerve (the Cech complex) has the homotopy
    type of the union: b1 = 0 certifies the union has no holes.
    """
    cx = build_cech(instance.positions(), instance.config.rc)
    betti = betti_numbers(cx)
    verdict = CoverageVerdict.CERTIFIED_NO_HOLES if betti.b1 == 0 else CoverageVerdict.HOLES_PRESENT
    return verdict, betti


def check_interleaving(points: dict[int, Point2], r: float, r_prime: float) -> bool:
    """Whether the chain Rips(r') <= Cech(r) <= Rips(r) holds as simplex sets.

    Guaranteed whenever r / r' >= sqrt(4/3): the worst Rips(r') triangle is
    equilateral with circumradius 2r'/sqrt(3) <= r.
    """
    if r_prime <= 0:
        raise ValueError(f"r_prime must be positive, got {r_prime}")
    small_rips = build_rips(points, r_prime).simplices()
    cech = build_cech(points, r).simplices()
    big_rips = build_rips(points, r).simplices()
    return small_rips <= cech <= big_rips


def sparsify(config: NetworkConfig, resolution: float) -> NetworkConfig:
    """Greedily drop nodes from dense regions while the anchor-instance
    oracle verdict (fully_covered flag, hole count, covered fraction) stays
    unchanged."""
    if config.n == 0:
        return config
    baseline = anchor_cover_report(config, resolution)

    def verdict(report: CoverageReport):
        return (report.fully_covered, report.hole_count, report.covered_fraction)

    def density(node_id: int) -> int:
        anchor = config.node(node_id).anchor
        r2 = (2.0 * config.rc) ** 2
        return sum(
            1
            for other in config.nodes
            if (other.anchor.x - anchor.x) ** 2 + (other.anchor.y - anchor.y) ** 2 <= r2
        )

    order = sorted((n.id for n in config.nodes), key=lambda i: (-density(i), i))
    current = config
    for node_id in order:
        if current.n <= 1:
            break
        trial = delete_node(current, node_id)
        if verdict(anchor_cover_report(trial, resolution)) == verdict(baseline):
            current = trial
    return current
