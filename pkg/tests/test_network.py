import itertools
import math

import numpy as np
import pytest

from covertop.errors import ConfigurationError, NodeNotFoundError
from covertop.geometry import Point2, distance
from covertop.network import (
    NetworkConfig,
    NetworkInstance,
    Rect,
    SpatialGrid,
    add_node,
    all_instances,
    candidate_pairs,
    delete_node,
    enumerate_pair_instances,
    generate_random,
    move_node,
    regenerate_locations,
    sample_instance,
    set_eps,
    set_k,
    set_rc,
)
from tests.conftest import make_node, oracle_edge_count, random_config

DOMAIN = Rect(0.0, 0.0, 100.0, 100.0)


def test_generate_empty():
    config = generate_random(0, 8, 10, 3, DOMAIN, seed=1)
    assert config.n == 0


def test_generate_defaults_shape():
    config = generate_random(30, 8, rc=20, eps=10, domain=DOMAIN, seed=7)
    assert config.n == 30
    assert all(node.k == 8 for node in config.nodes)
    for node in config.nodes:
        for loc in node.locations:
            assert distance(node.anchor, loc) <= 10 + 1e-9


def test_generate_deterministic_per_seed():
    a = generate_random(12, 4, 10, 3, DOMAIN, seed=5)
    b = generate_random(12, 4, 10, 3, DOMAIN, seed=5)
    c = generate_random(12, 4, 10, 3, DOMAIN, seed=6)
    assert a == b
    assert {n.anchor for n in a.nodes} != {n.anchor for n in c.nodes}


def test_generate_rejects_eps_above_rc():
    with pytest.raises(ConfigurationError):
        generate_random(3, 2, rc=5, eps=6, domain=DOMAIN, seed=0)


def test_disk_sampling_uniformity():
    # area-uniform: P(r <= eps/2) = 1/4; quadrant counts equal within 3 sigma
    eps = 10.0
    config = generate_random(1, 100_000, rc=20, eps=eps, domain=DOMAIN, seed=11)
    node = config.nodes[0]
    offsets = [(p.x - node.anchor.x, p.y - node.anchor.y) for p in node.locations]
    inner = sum(1 for dx, dy in offsets if dx * dx + dy * dy <= (eps / 2) ** 2)
    assert abs(inner / 100_000 - 0.25) < 0.02
    quadrants = [0, 0, 0, 0]
    for dx, dy in offsets:
        quadrants[(dx >= 0) * 1 + (dy >= 0) * 2] += 1
    expected = 100_000 / 4
    sigma = math.sqrt(100_000 * 0.25 * 0.75)
    for q in quadrants:
        assert abs(q - expected) < 3 * sigma


def test_enumerate_pair_instances_counts():
    rng = np.random.default_rng(0)
    for k in (1, 3, 8):
        config = random_config(rng, 2, k, rc=10, eps=2)
        a, b = config.nodes
        pairs = list(enumerate_pair_instances(a, b))
        assert len(pairs) == k * k
        assert sorted(pairs, key=str) == sorted(
            itertools.product(a.locations, b.locations), key=str
        )


def test_candidate_pairs_same_cell_included():
    nodes = (
        make_node(0, Point2(1, 1), [Point2(1, 1)]),
        make_node(1, Point2(2, 2), [Point2(2, 2)]),
    )
    config = NetworkConfig(nodes=nodes, rc=10, eps=0, k=1, domain=DOMAIN)
    assert candidate_pairs(SpatialGrid.from_config(config)) == {(0, 1)}


def test_candidate_pairs_far_cells_excluded():
    rc, eps = 5.0, 1.0
    cell = 2 * (rc + eps)
    nodes = (
        make_node(0, Point2(1, 1), [Point2(1, 1)]),
        make_node(1, Point2(1 + 5 * cell, 1), [Point2(1 + 5 * cell, 1)]),
    )
    config = NetworkConfig(nodes=nodes, rc=rc, eps=eps, k=1, domain=Rect(0, 0, 200, 200))
    assert candidate_pairs(SpatialGrid.from_config(config)) == set()
    assert oracle_edge_count(nodes[0], nodes[1], rc) == 0


@pytest.mark.parametrize("seed", range(5))
def test_candidate_pairs_superset_of_positive_probability(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(5, 41))
    k = int(rng.integers(1, 9))
    config = random_config(rng, n, k, rc=float(rng.uniform(3, 10)), eps=float(rng.uniform(0, 3)))
    pairs = candidate_pairs(SpatialGrid.from_config(config))
    for i, j in itertools.combinations(range(n), 2):
        if oracle_edge_count(config.nodes[i], config.nodes[j], config.rc) > 0:
            assert (i, j) in pairs


def test_move_node_translates_cloud():
    rng = np.random.default_rng(3)
    config = random_config(rng, 5, 4, rc=10, eps=2)
    before = config.node(2)
    moved = move_node(config, 2, 3.0, -4.0)
    after = moved.node(2)
    assert after.anchor == Point2(before.anchor.x + 3, before.anchor.y - 4)
    for old, new in zip(before.locations, after.locations):
        assert distance(before.anchor, old) == pytest.approx(distance(after.anchor, new))
    # purity: original config untouched
    assert config.node(2) == before


def test_delete_node_then_query_raises():
    rng = np.random.default_rng(4)
    config = random_config(rng, 4, 2, rc=10, eps=2)
    smaller = delete_node(config, 1)
    assert smaller.n == 3
    with pytest.raises(NodeNotFoundError):
        smaller.node(1)
    with pytest.raises(NodeNotFoundError):
        delete_node(smaller, 1)


def test_add_node_fresh_locations():
    rng = np.random.default_rng(5)
    config = random_config(rng, 3, 6, rc=10, eps=2)
    bigger = add_node(config, 50.0, 50.0)
    assert bigger.n == 4
    new = bigger.node(3)
    assert new.anchor == Point2(50.0, 50.0)
    assert len(new.locations) == 6
    for loc in new.locations:
        assert distance(new.anchor, loc) <= 2 + 1e-9


def test_set_eps_above_rc_rejected():
    rng = np.random.default_rng(6)
    config = random_config(rng, 3, 2, rc=10, eps=2)
    with pytest.raises(ConfigurationError):
        set_eps(config, 11.0)
    with pytest.raises(ConfigurationError):
        set_rc(config, 1.0)  # rc below current eps


def test_set_k_regenerates():
    rng = np.random.default_rng(7)
    config = random_config(rng, 3, 2, rc=10, eps=2)
    wider = set_k(config, 5, seed=9)
    assert wider.k == 5
    assert all(node.k == 5 for node in wider.nodes)
    assert [n.anchor for n in wider.nodes] == [n.anchor for n in config.nodes]


def test_regenerate_locations_keeps_anchors():
    rng = np.random.default_rng(8)
    config = random_config(rng, 4, 3, rc=10, eps=2)
    redone = regenerate_locations(config, seed=123)
    assert [n.anchor for n in redone.nodes] == [n.anchor for n in config.nodes]
    assert redone != config


def test_instance_choice_validation():
    rng = np.random.default_rng(9)
    config = random_config(rng, 2, 3, rc=10, eps=2)
    with pytest.raises(ValueError):
        NetworkInstance(config=config, choice={0: 0})
    with pytest.raises(ValueError):
        NetworkInstance(config=config, choice={0: 0, 1: 3})


def test_all_instances_count():
    rng = np.random.default_rng(10)
    config = random_config(rng, 3, 3, rc=10, eps=2)
    instances = list(all_instances(config))
    assert len(instances) == 27
    assert len({tuple(sorted(i.choice.items())) for i in instances}) == 27


def test_sample_instance_deterministic():
    rng_cfg = np.random.default_rng(11)
    config = random_config(rng_cfg, 5, 4, rc=10, eps=2)
    a = sample_instance(config, np.random.default_rng(0))
    b = sample_instance(config, np.random.default_rng(0))
    assert a.choice == b.choice
