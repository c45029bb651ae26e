"""Finite-volume solver for the relativistic Burgers equation on a
de Sitter background, with the geometry and fluid layers it is built from."""

__version__ = "0.1.0"

from .errors import ConfigError, DomainError, InstabilityError
from .fluid import (
    FluidPoint,
    FourVelocity,
    StressEnergy,
    divergence_residual,
    four_velocity,
    stress_energy,
)
from .fvsolver import (
    ConstantInit,
    FixedBoundary,
    Grid,
    RiemannInit,
    SolverConfig,
    State,
    StaticDirichlet,
    StaticInit,
    Transmissive,
    apply_boundary,
    cfl_dt,
    initial_data,
    lf_step,
    make_grid,
    run,
)
from .geometry import (
    ChristoffelTable,
    MetricDiagonal,
    SpacetimeParams,
    christoffel_closed,
    christoffel_numeric,
    metric_components,
)
from .model import BurgersModel, StaticSolution, classical_riemann_exact

__all__ = [
    "__version__",
    "BurgersModel",
    "ChristoffelTable",
    "ConfigError",
    "ConstantInit",
    "DomainError",
    "FixedBoundary",
    "FluidPoint",
    "FourVelocity",
    "Grid",
    "InstabilityError",
    "MetricDiagonal",
    "RiemannInit",
    "SolverConfig",
    "SpacetimeParams",
    "State",
    "StaticDirichlet",
    "StaticInit",
    "StaticSolution",
    "StressEnergy",
    "Transmissive",
    "apply_boundary",
    "cfl_dt",
    "christoffel_closed",
    "christoffel_numeric",
    "classical_riemann_exact",
    "divergence_residual",
    "four_velocity",
    "initial_data",
    "lf_step",
    "make_grid",
    "metric_components",
    "run",
    "stress_energy",
]
