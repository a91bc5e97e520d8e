"""Wire serialization shared by the CLI and the HTTP API.

Probabilities travel as exact unreduced counts over k^2 (edges) or k^3
(faces) plus a convenience decimal; both transports emit the exact same
bytes for the same input.
"""

from __future__ import annotations

import json
from fractions import Fraction

from covertop.probability import CoverageEstimate, ProbabilisticComplex
from covertop.topology import BettiNumbers


def _prob_entry(p: Fraction, denominator: int) -> dict:
    num = p * denominator
    assert num.denominator == 1  # every probability is a count over k^t
    return {"num": int(num), "den": denominator, "value": float(p)}


def probabilistic_complex_doc(pc: ProbabilisticComplex) -> dict:
    k2 = pc.k**2
    k3 = pc.k**3
    return {
        "kind": pc.kind.value,
        "k": pc.k,
        "vertices": list(pc.vertices),
        "edges": [
            {"nodes": list(pair), **_prob_entry(p, k2)}
            for pair, p in sorted(pc.edge_probs.items())
        ],
        "faces": [
            {"nodes": list(triple), **_prob_entry(p, k3)}
            for triple, p in sorted(pc.face_probs.items())
        ],
    }


def coverage_estimate_doc(estimate: CoverageEstimate) -> dict:
    return {
        "samples": estimate.samples,
        "fullCoverProb": estimate.full_cover_prob,
        "meanCoveredFraction": estimate.mean_covered_fraction,
        "seed": estimate.seed,
        "method": estimate.method,
    }


def betti_doc(betti: BettiNumbers, kind: str, instance: str) -> dict:
    return {"kind": kind, "instance": instance, "b0": betti.b0, "b1": betti.b1, "b2": betti.b2}


def dumps_canonical(doc: dict) -> str:
    """Deterministic JSON encoding; both CLI and HTTP must use this."""
    return json.dumps(doc, separators=(",", ":"))
