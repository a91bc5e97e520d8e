"""CSV and JSON persistence for network configurations.

The JSON document is versioned and lossless: every float is serialized at
full precision, so save followed by load reproduces the configuration
structurally.
"""

from __future__ import annotations

import csv
import io as _io
import json
import warnings

import numpy as np

from covertop.errors import ParseError, SchemaError
from covertop.geometry import Point2
from covertop.network import NetworkConfig, Rect, SensorNode, _sample_disk

FORMAT_VERSION = "1"

DEFAULT_K = 8
DEFAULT_EPS = 10.0


def load_csv(
    text: str,
    k: int = DEFAULT_K,
    eps: float = DEFAULT_EPS,
    seed: int = 0,
) -> NetworkConfig:
    """Anchors from a CSV with mandatory `x,y` header; locations generated.

    rc_max is set to half the largest x-distance between sensors and rc to
    half of that; eps is clamped to rc when the requested value exceeds it.
    """
    reader = csv.reader(_io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        header = None
    if header is None or [h.strip().lower() for h in header[:2]] != ["x", "y"]:
        raise ParseError("CSV must start with an `x,y` header row", line=1)
    if len(header) > 2:
        warnings.warn(f"ignoring extra CSV columns: {header[2:]}")

    anchors: list[Point2] = []
    for lineno, row in enumerate(reader, start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) < 2:
            raise ParseError(f"expected two columns, got {len(row)}", line=lineno)
        try:
            anchors.append(Point2(float(row[0]), float(row[1])))
        except ValueError as exc:
            raise ParseError(f"bad coordinate: {exc}", line=lineno) from exc

    if not anchors:
        warnings.warn("CSV contained no data rows; producing an empty network")

    xs = [p.x for p in anchors]
    x_extent = (max(xs) - min(xs)) if len(anchors) >= 2 else 0.0
    rc_max = x_extent / 2.0 if x_extent > 0 else max(eps, 1.0) * 2.0
    rc = rc_max / 2.0
    eps = min(eps, rc)

    if anchors:
        min_x, max_x = min(xs), max(xs)
        ys = [p.y for p in anchors]
        min_y, max_y = min(ys), max(ys)
        pad = rc + eps
        domain = Rect(min_x - pad, min_y - pad, (max_x - min_x) + 2 * pad, (max_y - min_y) + 2 * pad)
    else:
        domain = Rect(0.0, 0.0, 100.0, 100.0)

    rng = np.random.default_rng(seed)
    nodes = tuple(
        SensorNode(id=i, anchor=anchor, locations=_sample_disk(rng, anchor, eps, k))
        for i, anchor in enumerate(anchors)
    )
    return NetworkConfig(nodes=nodes, rc=rc, eps=eps, k=k, domain=domain, rc_max=rc_max, seed=seed)


def config_to_dict(config: NetworkConfig) -> dict:
    return {
        "version": FORMAT_VERSION,
        "domain": {
            "x": config.domain.x,
            "y": config.domain.y,
            "width": config.domain.width,
            "height": config.domain.height,
        },
        "rc": config.rc,
        "rcMax": config.rc_max if config.rc_max is not None else config.rc,
        "eps": config.eps,
        "k": config.k,
        "seed": config.seed,
        "nodes": [
            {
                "id": node.id,
                "anchor": [node.anchor.x, node.anchor.y],
                "locations": [[p.x, p.y] for p in node.locations],
            }
            for node in config.nodes
        ],
    }


def save_json(config: NetworkConfig) -> str:
    return json.dumps(config_to_dict(config), indent=2)


def _require(doc: dict, field: str, types) -> object:
    if field not in doc:
        raise SchemaError(f"missing field: {field}", field=field)
    value = doc[field]
    if not isinstance(value, types) or isinstance(value, bool):
        raise SchemaError(f"wrong type for field: {field}", field=field)
    return value


def _point(raw: object, field: str) -> Point2:
    if not isinstance(raw, list) or len(raw) != 2 or not all(isinstance(v, (int, float)) for v in raw):
        raise SchemaError(f"expected [x, y] pair in field: {field}", field=field)
    return Point2(float(raw[0]), float(raw[1]))


def config_from_dict(doc: dict) -> NetworkConfig:
    if not isinstance(doc, dict):
        raise SchemaError("document must be a JSON object", field="")
    version = _require(doc, "version", str)
    if version != FORMAT_VERSION:
        raise SchemaError(f"unsupported format version: {version}", field="version")
    raw_domain = _require(doc, "domain", dict)
    domain = Rect(
        float(_require(raw_domain, "x", (int, float))),
        float(_require(raw_domain, "y", (int, float))),
        float(_require(raw_domain, "width", (int, float))),
        float(_require(raw_domain, "height", (int, float))),
    )
    rc = float(_require(doc, "rc", (int, float)))
    rc_max = float(_require(doc, "rcMax", (int, float)))
    eps = float(_require(doc, "eps", (int, float)))
    k = int(_require(doc, "k", int))
    seed = int(_require(doc, "seed", int))
    raw_nodes = _require(doc, "nodes", list)

    nodes = []
    for raw in raw_nodes:
        if not isinstance(raw, dict):
            raise SchemaError("node entries must be objects", field="nodes")
        node_id = int(_require(raw, "id", int))
        anchor = _point(raw.get("anchor"), "anchor")
        raw_locs = _require(raw, "locations", list)
        if len(raw_locs) != k:
            raise SchemaError(f"node {node_id} must have exactly k={k} locations", field="locations")
        locations = tuple(_point(loc, "locations") for loc in raw_locs)
        nodes.append(SensorNode(id=node_id, anchor=anchor, locations=locations))

    return NetworkConfig(
        nodes=tuple(nodes), rc=rc, eps=eps, k=k, domain=domain, rc_max=rc_max, seed=seed
    )


def load_json(text: str) -> NetworkConfig:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}", field="") from exc
    return config_from_dict(doc)
