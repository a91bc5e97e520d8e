"""Command-line batch counterpart of the interactive planner."""

from __future__ import annotations

import sys
from pathlib import Path

import click
import numpy as np

from covertop import io as netio
from covertop.complexes import ComplexKind, build_cech, build_rips
from covertop.errors import CovertopError
from covertop.network import Rect, generate_random, sample_instance
from covertop.probability import build_probabilistic_complex, estimate_global_coverage
from covertop.serialize import (
    betti_doc,
    coverage_estimate_doc,
    dumps_canonical,
    probabilistic_complex_doc,
)
from covertop.topology import betti_numbers, sparsify as sparsify_network


def _load_config(path: str):
    try:
        return netio.load_json(Path(path).read_text())
    except CovertopError as exc:
        raise click.ClickException(str(exc)) from exc


@click.group()
def main():
    """Coverage planning for sensor networks with uncertain locations."""


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--k", type=int, default=8, show_default=True)
@click.option("--rc", type=float, required=True)
@click.option("--eps", type=float, required=True)
@click.option("--width", type=float, default=100.0, show_default=True)
@click.option("--height", type=float, default=100.0, show_default=True)
@click.option("--seed", type=int, default=0, envvar="COVERTOP_SEED", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
def generate(n, k, rc, eps, width, height, seed, out):
    """Generate a random network and write it as JSON."""
    try:
        config = generate_random(n, k, rc, eps, Rect(0.0, 0.0, width, height), seed)
    except CovertopError as exc:
        raise click.ClickException(str(exc)) from exc
    Path(out).write_text(netio.save_json(config))
    click.echo(f"wrote {out} (n={n}, k={k})")


@main.command()
@click.option("--in", "input_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--kind", type=click.Choice(["rips", "cech"]), required=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
def probabilities(input_path, kind, out):
    """Compute the probabilistic complex and write it as JSON."""
    config = _load_config(input_path)
    pc = build_probabilistic_complex(config, ComplexKind(kind))
    Path(out).write_text(dumps_canonical(probabilistic_complex_doc(pc)))
    click.echo(f"wrote {out} ({len(pc.edge_probs)} edges, {len(pc.face_probs)} faces)")


@main.command()
@click.option("--in", "input_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--samples", type=int, default=1000, show_default=True)
@click.option("--resolution", type=float, required=True)
@click.option("--seed", type=int, default=0, envvar="COVERTOP_SEED", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
def coverage(input_path, samples, resolution, seed, out):
    """Estimate the probability of full-domain coverage."""
    config = _load_config(input_path)
    try:
        estimate = estimate_global_coverage(config, samples, resolution, seed)
    except (CovertopError, ValueError) as exc:
        raise click.ClickException(str(exc)) from exc
    Path(out).write_text(dumps_canonical(coverage_estimate_doc(estimate)))
    click.echo(f"wrote {out} (full cover prob {estimate.full_cover_prob:.4f})")


@main.command()
@click.option("--in", "input_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--instance", default="anchors", show_default=True, help="anchors or sample:SEED")
@click.option("--kind", type=click.Choice(["cech", "rips"]), default="cech", show_default=True)
def betti(input_path, instance, kind):
    """Betti numbers of one realized instance (or of the anchors)."""
    config = _load_config(input_path)
    if instance == "anchors":
        positions = config.anchor_positions()
    elif instance.startswith("sample:"):
        try:
            sample_seed = int(instance.split(":", 1)[1])
        except ValueError:
            raise click.UsageError(f"bad instance spec: {instance}")
        positions = sample_instance(config, np.random.default_rng(sample_seed)).positions()
    else:
        raise click.UsageError(f"bad instance spec: {instance}")
    builder = build_cech if kind == "cech" else build_rips
    numbers = betti_numbers(builder(positions, config.rc))
    click.echo(dumps_canonical(betti_doc(numbers, kind, instance)))


@main.command()
@click.option("--in", "input_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--resolution", type=float, required=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
def sparsify(input_path, resolution, out):
    """Remove redundant nodes without changing the anchor coverage verdict."""
    config = _load_config(input_path)
    try:
        reduced = sparsify_network(config, resolution)
    except (CovertopError, ValueError) as exc:
        raise click.ClickException(str(exc)) from exc
    Path(out).write_text(netio.save_json(reduced))
    click.echo(f"wrote {out} ({config.n} -> {reduced.n} nodes)")


@main.command()
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--static", "static_dir", type=click.Path(exists=True, file_okay=False), default=None)
@click.option("--host", default="127.0.0.1", show_default=True)
def serve(port, static_dir, host):
    """Run the HTTP API (and optionally serve the web UI)."""
    import uvicorn

    from covertop.server import create_app

    uvicorn.run(create_app(static_dir=static_dir), host=host, port=port)


if __name__ == "__main__":
    sys.exit(main())
