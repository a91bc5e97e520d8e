"""Coverage planning for sensor networks with indecisive (uncertain) locations."""

from covertop.geometry import Point2, Ball2, RegionClass, distance, min_enclosing_ball, annulus_class
from covertop.network import (
    Rect,
    SensorNode,
    NetworkConfig,
    NetworkInstance,
    SpatialGrid,
    generate_random,
)
from covertop.complexes import ComplexKind, SimplicialComplex, build_rips, build_cech
from covertop.probability import (
    ProbabilisticComplex,
    CoverageEstimate,
    edge_probability,
    point_coverage_probability,
    union_point_coverage,
    rips_face_probability,
    cech_face_probability,
    build_probabilistic_complex,
    estimate_global_coverage,
)
from covertop.topology import (
    BettiNumbers,
    CoverageReport,
    CoverageVerdict,
    betti_numbers,
    grid_cover_oracle,
    certify_instance_coverage,
    check_interleaving,
    sparsify,
)
from covertop.errors import ConfigurationError, NodeNotFoundError, ParseError, SchemaError

__all__ = [
    "Point2",
    "Ball2",
    "RegionClass",
    "distance",
    "min_enclosing_ball",
    "annulus_class",
    "Rect",
    "SensorNode",
    "NetworkConfig",
    "NetworkInstance",
    "SpatialGrid",
    "generate_random",
    "ComplexKind",
    "SimplicialComplex",
    "build_rips",
    "build_cech",
    "ProbabilisticComplex",
    "CoverageEstimate",
    "edge_probability",
    "point_coverage_probability",
    "union_point_coverage",
    "rips_face_probability",
    "cech_face_probability",
    "build_probabilistic_complex",
    "estimate_global_coverage",
    "BettiNumbers",
    "CoverageReport",
    "CoverageVerdict",
    "betti_numbers",
    "grid_cover_oracle",
    "certify_instance_coverage",
    "check_interleaving",
    "sparsify",
    "ConfigurationError",
    "NodeNotFoundError",
    "ParseError",
    "SchemaError",
]
