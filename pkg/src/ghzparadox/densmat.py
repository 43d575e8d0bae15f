"""Dense complex matrices and validated density matrices.

A "complex matrix" here is simply a square ``complex128`` numpy array.
:class:`DensityMatrix` wraps one that has passed the Hermitian, positivity
and unit-trace checks and stores it read-only, so instances can be shared
freely.

Basis ordering is binary ascending, ``|000>, |001>, ..., |111>``, with the
first qubit as the most significant bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    NotHermitian,
    NotPositiveSemiDefinite,
    TraceNotOne,
    ValidationError,
    WeightsInvalid,
)

DEFAULT_TOLERANCE = 1e-10
MAX_DIM = 64
_HERMITIAN_EIG_TOL = 1e-9


def as_complex_matrix(data) -> np.ndarray:
    """Coerce ``data`` to a finite, square complex128 array."""
    m = np.array(data, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise ValidationError(f"expected a non-empty square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValidationError("matrix contains non-finite entries")
    return m


def _readonly(m: np.ndarray) -> np.ndarray:
    m = np.array(m, dtype=np.complex128, copy=True)
    m.setflags(write=False)
    return m


@dataclass(frozen=True)
class EigenResult:
    eigenvalues: np.ndarray
    max_offdiagonal_residual: float


def hermitian_eigenvalues(m) -> EigenResult:
    """Eigenvalues of a Hermitian matrix, sorted ascending.

    The residual is the largest off-diagonal magnitude of ``V^H M V`` for
    the computed eigenvectors ``V``.

    Raises:
        NotHermitian: if ``max |M - M^H| > 1e-9``.
    """
    m = as_complex_matrix(m)
    if m.shape[0] > MAX_DIM:
        raise ValueError(f"dimension {m.shape[0]} exceeds {MAX_DIM}")
    asym = np.max(np.abs(m - m.conj().T))
    if asym > _HERMITIAN_EIG_TOL:
        raise NotHermitian(f"matrix is not Hermitian (max asymmetry {asym:.3e})")
    h = (m + m.conj().T) / 2
    w, v = np.linalg.eigh(h)
    rotated = v.conj().T @ h @ v
    off = rotated - np.diag(np.diag(rotated))
    residual = float(np.max(np.abs(off))) if off.size else 0.0
    return EigenResult(np.sort(w), residual)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A validated density matrix. Build instances with :func:`build_density_matrix`."""

    matrix: np.ndarray
    tolerance: float = DEFAULT_TOLERANCE

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def num_qubits(self) -> int:
        return self.dim.bit_length() - 1

    def __array__(self, dtype=None, copy=None):
        return np.array(self.matrix, dtype=dtype)


def build_density_matrix(m, tolerance: float = DEFAULT_TOLERANCE) -> DensityMatrix:
    """Validate ``m`` and return it as a :class:`DensityMatrix`.

    The stored matrix is ``(M + M^H) / 2``. Checks run in the order
    Hermitian, positive semi-definite, unit trace.
    """
    m = as_complex_matrix(m)
    dim = m.shape[0]
    if dim & (dim - 1) or dim > MAX_DIM:
        raise ValidationError(f"dimension must be a power of two <= {MAX_DIM}, got {dim}")
    asym = float(np.max(np.abs(m - m.conj().T)))
    if asym > tolerance:
        raise NotHermitian(f"matrix is not Hermitian (max asymmetry {asym:.3e})")
    h = (m + m.conj().T) / 2
    min_eig = float(np.linalg.eigvalsh(h)[0])
    if min_eig < -tolerance:
        raise NotPositiveSemiDefinite(
            f"matrix is not positive semi-definite (minimum eigenvalue {min_eig:.17g})",
            min_eig,
        )
    tr = float(np.trace(h).real)
    if abs(tr - 1.0) > tolerance:
        raise TraceNotOne(f"trace is {tr:.17g}, expected 1", tr)
    return DensityMatrix(_readonly(h), tolerance)


def maximally_mixed(dim: int = 8) -> DensityMatrix:
    return build_density_matrix(np.eye(dim) / dim)


def purity(rho: DensityMatrix) -> float:
    """Tr(rho^2), computed as the sum of squared entry magnitudes."""
    m = rho.matrix
    return float(np.sum(m.real ** 2 + m.imag ** 2))


def linear_entropy(rho: DensityMatrix) -> float:
    """Normalized linear entropy ``d/(d-1) * (1 - Tr rho^2)``, in [0, 1]."""
    d = rho.dim
    return d / (d - 1) * (1.0 - purity(rho))


def convex_mix(states: Sequence[DensityMatrix], weights: Sequence[float]) -> DensityMatrix:
    """Return ``sum_i w_i rho_i`` as a revalidated density matrix."""
    if len(states) == 0 or len(states) != len(weights):
        raise WeightsInvalid("need one weight per state and at least one state")
    w = np.asarray(weights, dtype=float)
    if np.any(~np.isfinite(w)) or np.any(w < 0):
        raise WeightsInvalid("weights must be finite and non-negative")
    if abs(w.sum() - 1.0) > 1e-12:
        raise WeightsInvalid(f"weights sum to {w.sum():.17g}, expected 1")
    dims = {s.dim for s in states}
    if len(dims) != 1:
        raise WeightsInvalid(f"states have mixed dimensions {sorted(dims)}")
    total = sum(wi * s.matrix for wi, s in zip(w, states))
    return build_density_matrix(total, tolerance=states[0].tolerance)


def basis_projector(index: int, dim: int = 8) -> DensityMatrix:
    """Projector onto computational basis state ``|index>``."""
    m = np.zeros((dim, dim), dtype=np.complex128)
    m[index, index] = 1.0
    return build_density_matrix(m)
