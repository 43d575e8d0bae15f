"""The three-qubit GHZ paradox for mixed states.

The four commuting observables are ``XXX``, ``YXY``, ``YYX`` and ``XYY``;
the GHZ state ``(|000> + |111>)/sqrt(2)`` is a joint eigenstate with
eigenvalues ``+1, -1, -1, -1``. For a state ``rho`` the event probabilities
``q_i`` are the probabilities of observing those signs, and the logical
inequality

    3 - q_1 - q_2 - q_3 - q_4 >= 0

holds for every local hidden variable model. In terms of Pauli coefficients
it reduces to ``1 - 4 f1 >= 0`` with ``8 f1 = p_111 - p_212 - p_221 - p_122``,
and ``f1`` equals ``Re rho[0, 7]``.

For a fixed ``f1`` the state with the largest linear entropy is the GHZ
state mixed with equal-weight "flipped" noise on the six basis states other
than ``|000>`` and ``|111>``: corners ``f1`` and diagonal entries
``f = (1 - 2 f1)/6`` elsewhere. The paradox survives iff ``f1 > 1/4``,
i.e. iff the noise weight ``1 - 2 f1`` is below one half.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import numpy as np

from .densmat import (
    DensityMatrix,
    basis_projector,
    build_density_matrix,
    convex_mix,
)
from .errors import DomainError
from .pauli import PauliCoefficients, decompose, pauli_operator

OBSERVABLE_INDICES = ((1, 1, 1), (2, 1, 2), (2, 2, 1), (1, 2, 2))
TARGET_SIGNS = (1, -1, -1, -1)
VIOLATION_SLACK = 1e-12
# Basis states carrying the flipped noise: everything except |000> and |111>.
NOISE_BASIS = (1, 2, 3, 4, 5, 6)
# frontier_entropy(1/4) = (8/7)(17/24)
MAX_PARADOX_ENTROPY = 17.0 / 21.0


@dataclass(frozen=True)
class GhzObservableSet:
    operators: Tuple[np.ndarray, ...]
    target_signs: Tuple[int, ...]

    def __post_init__(self):
        eye = np.eye(8)
        for a in self.operators:
            if np.max(np.abs(a @ a - eye)) > 1e-12:
                raise AssertionError("observable does not square to the identity")
            for b in self.operators:
                if np.max(np.abs(a @ b - b @ a)) > 1e-12:
                    raise AssertionError("observables do not commute")
        psi = _ghz_vector()
        for a, sign in zip(self.operators, self.target_signs):
            if np.max(np.abs(a @ psi - sign * psi)) > 1e-12:
                raise AssertionError("GHZ state is not an eigenstate with the target sign")


def _ghz_vector() -> np.ndarray:
    psi = np.zeros(8, dtype=np.complex128)
    psi[0] = psi[7] = 1 / math.sqrt(2)
    return psi


_OBSERVABLES = GhzObservableSet(
    tuple(pauli_operator(idx) for idx in OBSERVABLE_INDICES), TARGET_SIGNS
)


def observables() -> GhzObservableSet:
    return _OBSERVABLES


def ghz_state() -> DensityMatrix:
    psi = _ghz_vector()
    return build_density_matrix(np.outer(psi, psi.conj()))


def event_probabilities(rho: DensityMatrix) -> np.ndarray:
    """``q_i = Tr(rho (I + s_i O_i) / 2)`` for the four GHZ observables."""
    m = rho.matrix
    q = [
        0.5 * (1.0 + sign * np.trace(m @ op).real)
        for op, sign in zip(_OBSERVABLES.operators, _OBSERVABLES.target_signs)
    ]
    return np.array(q)


def event_probabilities_from_coefficients(coeffs: PauliCoefficients) -> np.ndarray:
    """The same probabilities from ``p_111, p_212, p_221, p_122``."""
    return np.array(
        [0.5 * (1.0 + sign * coeffs[idx]) for idx, sign in zip(OBSERVABLE_INDICES, TARGET_SIGNS)]
    )


def f1_from_coefficients(coeffs: PauliCoefficients) -> float:
    return (coeffs[1, 1, 1] - coeffs[2, 1, 2] - coeffs[2, 2, 1] - coeffs[1, 2, 2]) / 8.0


@dataclass(frozen=True)
class ParadoxReport:
    q: Tuple[float, float, float, float]
    inequality_value: float
    f1: float
    violated: bool

    def to_dict(self) -> dict:
        return {
            "q": list(self.q),
            "inequality_value": self.inequality_value,
            "f1": self.f1,
            "violated": self.violated,
        }


def paradox_report(rho: DensityMatrix) -> ParadoxReport:
    if rho.dim != 8:
        raise ValueError(f"paradox analysis needs a three-qubit state (dim 8), got dim {rho.dim}")
    q = event_probabilities(rho)
    value = 3.0 - float(q.sum())
    f1 = f1_from_coefficients(decompose(rho))
    if abs(value - (1.0 - 4.0 * f1)) > 1e-12:
        raise RuntimeError(
            f"inequality value {value!r} disagrees with 1 - 4 f1 = {1 - 4 * f1!r}"
        )
    return ParadoxReport(tuple(float(x) for x in q), value, f1, value < -VIOLATION_SLACK)


def _check_f1(f1: float) -> float:
    f1 = float(f1)
    if not (0.0 <= f1 <= 0.5):
        raise DomainError(f"f1 must lie in the admissible range [0, 0.5], got {f1!r}")
    return f1


@dataclass(frozen=True)
class OptimalFamilyParam:
    f1: float

    def __post_init__(self):
        _check_f1(self.f1)

    @property
    def f(self) -> float:
        return (1.0 - 2.0 * self.f1) / 6.0

    @property
    def paradox_regime(self) -> bool:
        return self.f1 > 0.25


def optimal_state(f1: float) -> DensityMatrix:
    """Maximal-entropy state for violation parameter ``f1`` in [0, 1/2].

    Corners ``(0,0), (0,7), (7,0), (7,7)`` hold ``f1``; diagonal entries
    1..6 hold ``(1 - 2 f1)/6``.
    """
    param = OptimalFamilyParam(_check_f1(f1))
    m = np.zeros((8, 8), dtype=np.complex128)
    m[0, 0] = m[0, 7] = m[7, 0] = m[7, 7] = param.f1
    for i in NOISE_BASIS:
        m[i, i] = param.f
    return build_density_matrix(m)


def optimal_state_mixture(f1: float) -> DensityMatrix:
    """The same state assembled as ``2 f1 |GHZ><GHZ| + f sum |b><b|``."""
    param = OptimalFamilyParam(_check_f1(f1))
    states = [ghz_state()] + [basis_projector(i) for i in NOISE_BASIS]
    weights = [2.0 * param.f1] + [param.f] * len(NOISE_BASIS)
    return convex_mix(states, weights)


def purity_floor(f1: float) -> float:
    """Lower bound ``4 f1^2 + (1 - 2 f1)^2 / 6`` on the purity at fixed ``f1``.

    Valid for ``f1 >= 1/8``; below that the true floor is ``2 f1^2 + 1/8``.
    """
    if f1 < 0:
        raise DomainError(f"f1 must be non-negative, got {f1!r}")
    return 4.0 * f1 * f1 + (1.0 - 2.0 * f1) ** 2 / 6.0


def frontier_entropy(f1: float) -> float:
    f1 = _check_f1(f1)
    f = (1.0 - 2.0 * f1) / 6.0
    return 8.0 / 7.0 * (1.0 - 4.0 * f1 * f1 - 6.0 * f * f)


def frontier_invert(entropy: float) -> float:
    """Return the ``f1`` in [1/4, 1/2] whose frontier entropy is ``entropy``."""
    entropy = float(entropy)
    if not (0.0 <= entropy <= MAX_PARADOX_ENTROPY + 1e-12):
        raise DomainError(
            f"entropy must lie in [0, {MAX_PARADOX_ENTROPY:.7f}] (the paradox branch), got {entropy!r}"
        )
    a, b, c = 14.0 / 3.0, -2.0 / 3.0, 7.0 * entropy / 8.0 - 5.0 / 6.0
    disc = max(b * b - 4.0 * a * c, 0.0)
    root = (-b + math.sqrt(disc)) / (2.0 * a)
    return min(max(root, 0.25), 0.5)


@dataclass(frozen=True)
class FrontierPoint:
    f1: float
    violation: float
    entropy: float
    purity_floor: float


def frontier_point(f1: float) -> FrontierPoint:
    f1 = _check_f1(f1)
    return FrontierPoint(f1, 4.0 * f1 - 1.0, frontier_entropy(f1), purity_floor(f1))


def noise_mixture(f1: float) -> Tuple[float, float]:
    """``(ghz_weight, noise_weight) = (2 f1, 1 - 2 f1)``."""
    f1 = _check_f1(f1)
    return 2.0 * f1, 1.0 - 2.0 * f1


ANTIDIAGONAL_ENTRIES = ((0, 7), (1, 6), (2, 5), (3, 4))


def antidiagonal_system(normalization: float = 1.0 / 8.0) -> np.ndarray:
    """4x4 map from ``(p_111, p_212, p_221, p_122)`` to ``Re rho`` at the
    upper anti-diagonal entries ``(0,7), (1,6), (2,5), (3,4)``."""
    return np.array(
        [
            [normalization * pauli_operator(idx)[i, j].real for idx in OBSERVABLE_INDICES]
            for i, j in ANTIDIAGONAL_ENTRIES
        ]
    )


def methods_solve_antidiagonal(f1: float, normalization: float = 1.0 / 8.0) -> PauliCoefficients:
    """Coefficients that put ``f1`` at ``rho[0, 7]`` and zero on the rest of the anti-diagonal.

    With the ``1/8`` prefactor of the Pauli expansion the solution is
    ``p_111 = 2 f1`` and ``p_212 = p_221 = p_122 = -2 f1``. Dropping the
    prefactor (``normalization=1``) gives ``f1/4`` and ``-f1/4`` instead.
    """
    a = antidiagonal_system(normalization)
    sol = _solve_exact(a, [float(f1), 0.0, 0.0, 0.0])
    return PauliCoefficients.from_mapping(dict(zip(OBSERVABLE_INDICES, sol)))


def _solve_exact(a: np.ndarray, b) -> list:
    """Gauss-Jordan elimination in rational arithmetic on the exact float values."""
    n = len(b)
    rows = [[Fraction(float(x)) for x in a[i]] + [Fraction(float(b[i]))] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            raise np.linalg.LinAlgError("singular system")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return [float(row[n]) for row in rows]
