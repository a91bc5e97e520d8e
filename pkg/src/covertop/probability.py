"""Exact appearance probabilities over the k^n instance space.

Every probability is an integer count of appearances divided by k^2 (edges)
or k^3 (faces); counts are computed exactly and only converted to Fraction
at the API boundary, so pruned and unpruned paths agree bit for bit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from covertop.complexes import ComplexKind
from covertop.geometry import Point2, dist_sq
from covertop.network import (
    NetworkConfig,
    SensorNode,
    SpatialGrid,
    all_instances,
    candidate_pairs,
    sample_instance,
)
from covertop.topology import grid_cover_oracle

EXACT_ENUMERATION_LIMIT = 10_000  # enumerate all instances when k^n is at most this


@dataclass(frozen=True)
class ProbabilisticComplex:
    vertices: tuple[int, ...]
    edge_probs: dict[tuple[int, int], Fraction]
    face_probs: dict[tuple[int, int, int], Fraction]
    kind: ComplexKind
    k: int

    def edge(self, i: int, j: int) -> Fraction:
        return self.edge_probs.get((min(i, j), max(i, j)), Fraction(0))

    def face(self, i: int, j: int, k: int) -> Fraction:
        return self.face_probs.get(tuple(sorted((i, j, k))), Fraction(0))


@dataclass(frozen=True)
class CoverageEstimate:
    samples: int
    full_cover_prob: float
    mean_covered_fraction: float
    seed: int
    method: str = "sampled"  # "sampled" or "exact"


def _pair_adjacency(a: SensorNode, b: SensorNode, rc: float) -> np.ndarray:
    """Boolean (k_a, k_b) matrix: location u of a within 2rc of location v of b."""
    pa = a.locations_array()
    pb = b.locations_array()
    diff = pa[:, None, :] - pb[None, :, :]
    d2 = diff[..., 0] ** 2 + diff[..., 1] ** 2
    return d2 <= (2.0 * rc) ** 2


def edge_appearance_count(a: SensorNode, b: SensorNode, rc: float) -> int:
    return int(_pair_adjacency(a, b, rc).sum())


def edge_probability(a: SensorNode, b: SensorNode, rc: float, eps: float) -> Fraction:
    """Fraction of the k^2 location pairs within 2rc of each other.

    Fast paths widen the single-point annulus test to two uncertain
    endpoints: each endpoint deviates from its anchor by at most eps, so
    anchor distance <= 2rc - 2eps forces every pair connected and anchor
    distance > 2rc + 2eps forces every pair apart.
    """
    total = a.k * b.k
    d2 = dist_sq(a.anchor, b.anchor)
    inner = 2.0 * (rc - eps)
    if d2 <= inner * inner:
        return Fraction(total, total)
    outer = 2.0 * (rc + eps)
    if d2 > outer * outer:
        return Fraction(0, total)
    return Fraction(edge_appearance_count(a, b, rc), total)


def point_coverage_probability(
    node: SensorNode, q: Point2, rc: float, eps: float | None = None
) -> Fraction:
    """Fraction of the node's k locations within rc of the query point."""
    k = node.k
    if eps is not None:
        d2 = dist_sq(node.anchor, q)
        if d2 <= (rc - eps) ** 2:
            return Fraction(k, k)
        if d2 > (rc + eps) ** 2:
            return Fraction(0, k)
    locs = node.locations_array()
    d2s = (locs[:, 0] - q.x) ** 2 + (locs[:, 1] - q.y) ** 2
    return Fraction(int((d2s <= rc * rc).sum()), k)


def union_point_coverage(config: NetworkConfig, q: Point2) -> Fraction:
    """Probability that at least one sensor covers q (nodes are independent)."""
    miss = Fraction(1)
    for node in config.nodes:
        miss *= 1 - point_coverage_probability(node, q, config.rc, config.eps)
    return 1 - miss


def rips_face_count(a: SensorNode, b: SensorNode, c: SensorNode, rc: float) -> int:
    """Number of the k^3 joint choices whose three pairwise distances are all <= 2rc."""
    ab = _pair_adjacency(a, b, rc)
    bc = _pair_adjacency(b, c, rc)
    ac = _pair_adjacency(a, c, rc)
    return int(np.einsum("uv,vw,uw->", ab, bc, ac, dtype=np.int64))


def rips_face_probability(
    p_ab: Fraction,
    p_bc: Fraction,
    p_ca: Fraction,
    a: SensorNode,
    b: SensorNode,
    c: SensorNode,
    rc: float,
) -> Fraction:
    """Rips face probability from the three edge probabilities, with shortcuts.

    Shortcut rules, applied in order: all edges certain -> 1; any edge
    impossible -> 0; two edges certain -> the third edge's probability.
    Otherwise the three shared endpoints make the edges dependent and only
    full enumeration over the k^3 joint choices is correct.
    """
    probs = (p_ab, p_bc, p_ca)
    total = a.k * b.k * c.k
    if all(p == 1 for p in probs):
        return Fraction(total, total)
    if any(p == 0 for p in probs):
        return Fraction(0, total)
    certain = sum(1 for p in probs if p == 1)
    if certain >= 2:
        third = next(p for p in probs if p != 1)
        return third
    return Fraction(rips_face_count(a, b, c, rc), total)


def cech_face_count(a: SensorNode, b: SensorNode, c: SensorNode, rc: float) -> int:
    """Number of the k^3 joint choices whose minimum enclosing ball fits in radius rc.

    Vectorized over all triples: diametral ball of the longest side for
    obtuse/right/degenerate triangles, circumscribed ball otherwise,
    mirroring geometry.min_enclosing_ball.
    """
    pa = a.locations_array()[:, None, None, :]
    pb = b.locations_array()[None, :, None, :]
    pc = c.locations_array()[None, None, :, :]

    def d2(p, q):
        diff = p - q
        return diff[..., 0] ** 2 + diff[..., 1] ** 2

    dab = d2(pa, pb)  # (k,k,1)
    dbc = d2(pb, pc)  # (1,k,k)
    dca = d2(pc, pa)  # (k,1,k)
    longest = np.maximum(np.maximum(dab, dbc), dca)
    obtuse = longest >= dab + dbc + dca - longest

    radius_sq = longest / 4.0  # diametral ball of the farthest pair

    ax, ay = pa[..., 0], pa[..., 1]
    bx, by = pb[..., 0], pb[..., 1]
    cx, cy = pc[..., 0], pc[..., 1]

    d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    with np.errstate(divide="ignore", invalid="ignore"):
        a2 = ax * ax + ay * ay
        b2 = bx * bx + by * by
        c2 = cx * cx + cy * cy
        ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d
        uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d
        circ_sq = np.maximum(
            np.maximum((ux - ax) ** 2 + (uy - ay) ** 2, (ux - bx) ** 2 + (uy - by) ** 2),
            (ux - cx) ** 2 + (uy - cy) ** 2,
        )
    use_circ = ~obtuse & (d != 0.0)
    radius_sq = np.where(use_circ, circ_sq, radius_sq)
    return int((radius_sq <= rc * rc).sum())


def cech_face_probability(a: SensorNode, b: SensorNode, c: SensorNode, rc: float) -> Fraction:
    """Cech face probability over the k^3 joint choices.

    Only the probability-0 shortcut is sound for Cech (Cech faces are a
    subset of Rips faces); the other Rips rules do not transfer.
    """
    total = a.k * b.k * c.k
    if (
        edge_appearance_count(a, b, rc) == 0
        or edge_appearance_count(b, c, rc) == 0
        or edge_appearance_count(a, c, rc) == 0
    ):
        return Fraction(0, total)
    return Fraction(cech_face_count(a, b, c, rc), total)


def build_probabilistic_complex(
    config: NetworkConfig, kind: ComplexKind, pruned: bool = True
) -> ProbabilisticComplex:
    """Edge and face probabilities for the whole network.

    Edges are computed for grid candidate pairs (others are provably 0 and
    omitted); faces for every triple whose three edges all have positive
    probability. pruned=False disables the grid and annulus shortcuts and
    serves as the brute-force reference path.
    """
    nodes = {n.id: n for n in config.nodes}
    ids = sorted(nodes)
    if pruned:
        pairs = sorted(candidate_pairs(SpatialGrid.from_config(config)))
    else:
        pairs = list(itertools.combinations(ids, 2))

    edge_probs: dict[tuple[int, int], Fraction] = {}
    for i, j in pairs:
        if pruned:
            p = edge_probability(nodes[i], nodes[j], config.rc, config.eps)
        else:
            p = Fraction(
                edge_appearance_count(nodes[i], nodes[j], config.rc), config.k**2
            )
        if p > 0:
            edge_probs[(i, j)] = p

    neighbors: dict[int, set[int]] = {i: set() for i in ids}
    for i, j in edge_probs:
        neighbors[i].add(j)
        neighbors[j].add(i)

    face_probs: dict[tuple[int, int, int], Fraction] = {}
    for i, j in sorted(edge_probs):
        for l in sorted(neighbors[i] & neighbors[j]):
            if l <= j:
                continue
            a, b, c = nodes[i], nodes[j], nodes[l]
            if kind is ComplexKind.RIPS:
                p = rips_face_probability(
                    edge_probs[(i, j)],
                    edge_probs[(min(j, l), max(j, l))],
                    edge_probs[(min(i, l), max(i, l))],
                    a,
                    b,
                    c,
                    config.rc,
                )
            else:
                p = Fraction(cech_face_count(a, b, c, config.rc), config.k**3)
            if p > 0:
                face_probs[(i, j, l)] = p

    return ProbabilisticComplex(
        vertices=tuple(ids),
        edge_probs=edge_probs,
        face_probs=face_probs,
        kind=kind,
        k=config.k,
    )


def estimate_global_coverage(
    config: NetworkConfig,
    samples: int,
    grid_resolution: float,
    seed: int,
    force_sampling: bool = False,
) -> CoverageEstimate:
    """Probability that the whole domain is covered, via the grid oracle.

    Enumerates all k^n instances exactly when feasible; otherwise draws
    `samples` independent instances (deterministic per seed).
    """
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    if config.n == 0:
        return CoverageEstimate(
            samples=samples, full_cover_prob=0.0, mean_covered_fraction=0.0, seed=seed, method="exact"
        )

    total = config.k**config.n
    if total <= EXACT_ENUMERATION_LIMIT and not force_sampling:
        full = 0
        covered_sum = 0.0
        for instance in all_instances(config):
            report = grid_cover_oracle(instance, grid_resolution)
            full += report.fully_covered
            covered_sum += report.covered_fraction
        return CoverageEstimate(
            samples=total,
            full_cover_prob=full / total,
            mean_covered_fraction=covered_sum / total,
            seed=seed,
            method="exact",
        )

    rng = np.random.default_rng(seed)
    full = 0
    covered_sum = 0.0
    for _ in range(samples):
        report = grid_cover_oracle(sample_instance(config, rng), grid_resolution)
        full += report.fully_covered
        covered_sum += report.covered_fraction
    return CoverageEstimate(
        samples=samples,
        full_cover_prob=full / samples,
        mean_covered_fraction=covered_sum / samples,
        seed=seed,
        method="sampled",
    )
