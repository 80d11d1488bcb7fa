"""alpha-spectral radius of uniform hypergraphs: power iteration, upper bounds,
rho-increasing rewirings, and small-scale extremal verification."""

__version__ = "0.1.0"

from .hypergraph import (  # noqa: E402
    PathWitness,
    UniformHypergraph,
    build,
    classify,
    degrees,
    diameter,
    distance,
    is_connected,
    isomorphic,
    max_degree,
    parse,
    second_max_degree,
    serialize,
)
from .spectral import SpectralResult, alpha_apply, eigen_residual, rayleigh, spectral_radius  # noqa: E402

__all__ = [
    "PathWitness",
    "SpectralResult",
    "UniformHypergraph",
    "alpha_apply",
    "build",
    "classify",
    "degrees",
    "diameter",
    "distance",
    "eigen_residual",
    "is_connected",
    "isomorphic",
    "max_degree",
    "parse",
    "rayleigh",
    "second_max_degree",
    "serialize",
    "spectral_radius",
]
