"""Optimal three-qubit GHZ paradox for mixed states."""

from .densmat import (
    DensityMatrix,
    build_density_matrix,
    convex_mix,
    hermitian_eigenvalues,
    linear_entropy,
    purity,
)
from .errors import (
    DomainError,
    NotHermitian,
    NotPositiveSemiDefinite,
    ParseError,
    TraceNotOne,
    ValidationError,
    WeightsInvalid,
)
from .lhv import enumerate_all, satisfied_conditions
from .paradox import (
    frontier_entropy,
    frontier_invert,
    ghz_state,
    noise_mixture,
    optimal_state,
    paradox_report,
    purity_floor,
)
from .pauli import decompose, entropy_from_coefficients, reconstruct

__version__ = "0.1.0"

__all__ = [
    "DensityMatrix",
    "DomainError",
    "NotHermitian",
    "NotPositiveSemiDefinite",
    "ParseError",
    "TraceNotOne",
    "ValidationError",
    "WeightsInvalid",
    "build_density_matrix",
    "convex_mix",
    "decompose",
    "entropy_from_coefficients",
    "enumerate_all",
    "frontier_entropy",
    "frontier_invert",
    "ghz_state",
    "hermitian_eigenvalues",
    "linear_entropy",
    "noise_mixture",
    "optimal_state",
    "paradox_report",
    "purity",
    "purity_floor",
    "reconstruct",
    "satisfied_conditions",
]
