"""Three-qubit Pauli tensor basis.

Indices follow ``0 = I, 1 = X, 2 = Y, 3 = Z``, so ``(1, 1, 1)`` is
``X (x) X (x) X`` and ``(2, 1, 2)`` is ``Y (x) X (x) Y``. Coefficients are
stored flat in lexicographic order, ``flat = 16 r + 4 s + t``.

A state expands as ``rho = (1/8) sum p_rst  s_r (x) s_s (x) s_t`` with
``p_rst = Tr(rho s_r (x) s_s (x) s_t)``. Its linear entropy is then
``1 - (1/7) sum_{rst != 000} p_rst^2``. Note that the identity term must be
left out of that sum: including ``p_000^2 = 1`` shifts the result by
``1/7`` and gives 6/7 instead of 1 for the maximally mixed state.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .densmat import DensityMatrix, as_complex_matrix

PauliIndex = Tuple[int, int, int]

SIGMA = np.array(
    [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=np.complex128,
)
SIGMA.setflags(write=False)

INDICES: Tuple[PauliIndex, ...] = tuple(itertools.product(range(4), repeat=3))


def _build_operators() -> np.ndarray:
    ops = np.empty((64, 8, 8), dtype=np.complex128)
    for k, (r, s, t) in enumerate(INDICES):
        ops[k] = np.kron(np.kron(SIGMA[r], SIGMA[s]), SIGMA[t])
    ops.setflags(write=False)
    return ops


OPERATORS = _build_operators()


def flat_index(idx: PauliIndex) -> int:
    r, s, t = idx
    for c in (r, s, t):
        if c not in (0, 1, 2, 3):
            raise ValueError(f"Pauli index components must be in 0..3, got {idx}")
    return 16 * r + 4 * s + t


def pauli_operator(idx: PauliIndex) -> np.ndarray:
    """The 8x8 operator ``s_r (x) s_s (x) s_t`` (read-only view of the cache)."""
    return OPERATORS[flat_index(idx)]


@dataclass(frozen=True, eq=False)
class PauliCoefficients:
    values: np.ndarray

    def __post_init__(self):
        v = np.array(self.values, dtype=float).reshape(-1)
        if v.shape != (64,):
            raise ValueError(f"expected 64 coefficients, got {v.size}")
        if not np.all(np.isfinite(v)):
            raise ValueError("coefficients must be finite")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def __getitem__(self, idx: PauliIndex) -> float:
        return float(self.values[flat_index(idx)])

    def items(self):
        for idx, p in zip(INDICES, self.values):
            yield idx, float(p)

    @classmethod
    def from_mapping(cls, mapping) -> "PauliCoefficients":
        """Build from ``{(r, s, t): value}``; missing entries are zero."""
        v = np.zeros(64)
        for idx, p in mapping.items():
            v[flat_index(idx)] = p
        return cls(v)


def decompose(rho: DensityMatrix) -> PauliCoefficients:
    """Pauli coefficients ``p_rst = Tr(rho P_rst)`` of a three-qubit state."""
    m = rho.matrix if isinstance(rho, DensityMatrix) else as_complex_matrix(rho)
    if m.shape != (8, 8):
        raise ValueError(f"decompose needs an 8x8 matrix, got {m.shape}")
    # Tr(rho P) = sum_ij rho_ij P_ji
    p = np.einsum("kji,ij->k", OPERATORS, m)
    return PauliCoefficients(p.real)


def reconstruct(coeffs: PauliCoefficients) -> np.ndarray:
    """``(1/8) sum p_rst P_rst`` as an 8x8 complex array."""
    return np.einsum("k,kij->ij", coeffs.values, OPERATORS) / 8.0


def entropy_from_coefficients(coeffs: PauliCoefficients) -> float:
    """Linear entropy from Pauli coefficients, identity term excluded."""
    v = coeffs.values
    return 1.0 - float(np.sum(v[1:] ** 2)) / 7.0
