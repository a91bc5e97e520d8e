"""The indecisive-points network model: uncertain sensors, instances, edits, grid pruning.

Configurations are immutable values; every edit returns a new configuration,
so retaining old values gives undo for free.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field, replace
from typing import Iterator

import numpy as np

from covertop.errors import ConfigurationError, NodeNotFoundError
from covertop.geometry import Point2, distance

# Tolerance for the "location within eps of anchor" invariant; sampling
# computes anchor + eps*sqrt(u)*(cos t, sin t) which can exceed eps by rounding.
_EPS_SLACK = 1e-9


@dataclass(frozen=True)
class Rect:
    """Axis-aligned rectangular domain."""

    x: float
    y: float
    width: float
    height: float

    def __post_init__(self):
        if self.width < 0 or self.height < 0:
            raise ValueError("domain width/height must be nonnegative")

    def contains(self, p: Point2) -> bool:
        return self.x <= p.x <= self.x + self.width and self.y <= p.y <= self.y + self.height


@dataclass(frozen=True)
class SensorNode:
    """One uncertain sensor: an anchor plus k equally likely locations."""

    id: int
    anchor: Point2
    locations: tuple[Point2, ...]

    def __post_init__(self):
        if len(self.locations) == 0:
            raise ValueError(f"node {self.id} has no locations")

    @property
    def k(self) -> int:
        return len(self.locations)

    def locations_array(self) -> np.ndarray:
        return np.array([[p.x, p.y] for p in self.locations])


@dataclass(frozen=True)
class NetworkConfig:
    """A full uncertain network with its model parameters."""

    nodes: tuple[SensorNode, ...]
    rc: float
    eps: float
    k: int
    domain: Rect
    rc_max: float | None = None
    seed: int = 0

    def __post_init__(self):
        if self.rc_max is None:
            object.__setattr__(self, "rc_max", self.rc)
        if self.rc <= 0:
            raise ConfigurationError(f"rc must be positive, got {self.rc}")
        if self.eps < 0 or self.eps > self.rc:
            raise ConfigurationError(f"eps must satisfy 0 <= eps <= rc, got eps={self.eps}, rc={self.rc}")
        if self.k < 1:
            raise ConfigurationError(f"k must be >= 1, got {self.k}")
        ids = [n.id for n in self.nodes]
        if len(set(ids)) != len(ids):
            raise ConfigurationError("duplicate node ids")
        for node in self.nodes:
            if node.k != self.k:
                raise ConfigurationError(f"node {node.id} has {node.k} locations, expected k={self.k}")
            if not self.domain.contains(node.anchor):
                raise ConfigurationError(f"anchor of node {node.id} lies outside the domain")
            for loc in node.locations:
                if distance(node.anchor, loc) > self.eps + _EPS_SLACK:
                    raise ConfigurationError(
                        f"location of node {node.id} farther than eps={self.eps} from its anchor"
                    )

    @property
    def n(self) -> int:
        return len(self.nodes)

    def node(self, node_id: int) -> SensorNode:
        for node in self.nodes:
            if node.id == node_id:
                return node
        raise NodeNotFoundError(f"no node with id {node_id}")

    def has_node(self, node_id: int) -> bool:
        return any(n.id == node_id for n in self.nodes)

    def anchor_positions(self) -> dict[int, Point2]:
        return {n.id: n.anchor for n in self.nodes}


@dataclass(frozen=True)
class NetworkInstance:
    """One deterministic realization: a chosen location index per node."""

    config: NetworkConfig
    choice: dict[int, int] = field(hash=False)

    def __post_init__(self):
        ids = {n.id for n in self.config.nodes}
        if set(self.choice) != ids:
            raise ValueError("choice must cover exactly the network's node ids")
        for node in self.config.nodes:
            idx = self.choice[node.id]
            if not 0 <= idx < node.k:
                raise ValueError(f"choice {idx} out of range for node {node.id}")

    def positions(self) -> dict[int, Point2]:
        return {n.id: n.locations[self.choice[n.id]] for n in self.config.nodes}


def _sample_disk(rng: np.random.Generator, center: Point2, radius: float, count: int) -> tuple[Point2, ...]:
    """Area-uniform samples in a disk: r = radius*sqrt(u), uniform angle."""
    u = rng.random(count)
    theta = rng.random(count) * 2.0 * math.pi
    r = radius * np.sqrt(u)
    return tuple(
        Point2(center.x + ri * math.cos(ti), center.y + ri * math.sin(ti))
        for ri, ti in zip(r, theta)
    )


def generate_random(
    n: int, k: int, rc: float, eps: float, domain: Rect, seed: int
) -> NetworkConfig:
    """Anchors uniform in the domain, k locations uniform in each eps-disk."""
    if n < 0:
        raise ConfigurationError(f"n must be nonnegative, got {n}")
    rng = np.random.default_rng(seed)
    nodes = []
    for i in range(n):
        anchor = Point2(
            domain.x + rng.random() * domain.width,
            domain.y + rng.random() * domain.height,
        )
        nodes.append(SensorNode(id=i, anchor=anchor, locations=_sample_disk(rng, anchor, eps, k)))
    return NetworkConfig(nodes=tuple(nodes), rc=rc, eps=eps, k=k, domain=domain, seed=seed)


def enumerate_pair_instances(a: SensorNode, b: SensorNode) -> Iterator[tuple[Point2, Point2]]:
    """All k^2 ordered location pairs of two nodes."""
    return itertools.product(a.locations, b.locations)


@dataclass(frozen=True)
class SpatialGrid:
    """Square blocks of width 2(rc+eps); nodes are keyed by their anchor's block."""

    cell_width: float
    cells: dict[tuple[int, int], tuple[int, ...]] = field(hash=False)

    @classmethod
    def from_config(cls, config: NetworkConfig) -> "SpatialGrid":
        width = 2.0 * (config.rc + config.eps)
        cells: dict[tuple[int, int], list[int]] = {}
        for node in config.nodes:
            key = (math.floor(node.anchor.x / width), math.floor(node.anchor.y / width))
            cells.setdefault(key, []).append(node.id)
        return cls(cell_width=width, cells={k: tuple(v) for k, v in cells.items()})


def candidate_pairs(grid: SpatialGrid) -> set[tuple[int, int]]:
    """All node-id pairs in the same or 8-adjacent blocks.

    Superset of every pair with nonzero edge probability: two locations can
    be within 2rc only if their anchors are within 2(rc+eps), which never
    spans beyond adjacent blocks.
    """
    pairs: set[tuple[int, int]] = set()
    for (cx, cy), ids in grid.cells.items():
        for i, j in itertools.combinations(sorted(ids), 2):
            pairs.add((i, j))
        for dx, dy in ((1, -1), (1, 0), (1, 1), (0, 1)):
            other = grid.cells.get((cx + dx, cy + dy))
            if other is None:
                continue
            for i in ids:
                for j in other:
                    pairs.add((min(i, j), max(i, j)))
    return pairs


def move_node(config: NetworkConfig, node_id: int, dx: float, dy: float) -> NetworkConfig:
    """Translate a node's anchor and all its locations by the same offset."""
    node = config.node(node_id)
    moved = SensorNode(
        id=node.id,
        anchor=Point2(node.anchor.x + dx, node.anchor.y + dy),
        locations=tuple(Point2(p.x + dx, p.y + dy) for p in node.locations),
    )
    nodes = tuple(moved if n.id == node_id else n for n in config.nodes)
    return replace(config, nodes=nodes)


def delete_node(config: NetworkConfig, node_id: int) -> NetworkConfig:
    config.node(node_id)  # raises NodeNotFoundError if absent
    return replace(config, nodes=tuple(n for n in config.nodes if n.id != node_id))


def add_node(config: NetworkConfig, x: float, y: float, seed: int | None = None) -> NetworkConfig:
    """Add a node at (x, y) with k fresh locations sampled in its eps-disk."""
    new_id = max((n.id for n in config.nodes), default=-1) + 1
    rng = np.random.default_rng(config.seed + new_id + 1 if seed is None else seed)
    anchor = Point2(x, y)
    node = SensorNode(id=new_id, anchor=anchor, locations=_sample_disk(rng, anchor, config.eps, config.k))
    return replace(config, nodes=config.nodes + (node,))


def regenerate_locations(config: NetworkConfig, seed: int | None = None) -> NetworkConfig:
    """Resample all k locations of every node (anchors unchanged)."""
    return _resampled(config, config.eps, config.k, seed)


def set_rc(config: NetworkConfig, rc: float) -> NetworkConfig:
    return replace(config, rc=rc)  # NetworkConfig validation enforces eps <= rc


def _resampled(config: NetworkConfig, eps: float, k: int, seed: int | None) -> NetworkConfig:
    rng = np.random.default_rng(config.seed if seed is None else seed)
    nodes = tuple(
        SensorNode(id=n.id, anchor=n.anchor, locations=_sample_disk(rng, n.anchor, eps, k))
        for n in config.nodes
    )
    return replace(config, nodes=nodes, eps=eps, k=k)


def set_eps(config: NetworkConfig, eps: float, seed: int | None = None) -> NetworkConfig:
    """Change eps and resample locations (the old ones may violate the new disk)."""
    if eps < 0 or eps > config.rc:
        raise ConfigurationError(f"eps must satisfy 0 <= eps <= rc, got eps={eps}, rc={config.rc}")
    return _resampled(config, eps, config.k, seed)


def set_k(config: NetworkConfig, k: int, seed: int | None = None) -> NetworkConfig:
    """Change k and resample locations."""
    if k < 1:
        raise ConfigurationError(f"k must be >= 1, got {k}")
    return _resampled(config, config.eps, k, seed)


def sample_instance(config: NetworkConfig, rng: np.random.Generator) -> NetworkInstance:
    """Draw one instance: each node's location uniform over its k choices."""
    choice = {n.id: int(rng.integers(0, config.k)) for n in config.nodes}
    return NetworkInstance(config=config, choice=choice)


def all_instances(config: NetworkConfig) -> Iterator[NetworkInstance]:
    """Enumerate all k^n instances; caller is responsible for keeping k^n small."""
    ids = [n.id for n in config.nodes]
    if not ids:
        yield NetworkInstance(config=config, choice={})
        return
    for combo in itertools.product(range(config.k), repeat=len(ids)):
        yield NetworkInstance(config=config, choice=dict(zip(ids, combo)))
