"""Numerical checks that the flipped-noise GHZ family is optimal.

Two independent routes:

* :func:`purity_bound_scan` draws random states and checks that none has
  purity below ``4 f^2 + (1 - 2 f)^2 / 6`` where ``f = |Re rho[0, 7]|``.
  The bound only holds for ``f >= 1/8``: at smaller ``f`` the diagonal
  weight on ``|000>, |111>`` is no longer pinned at ``2 f`` by positivity,
  and the true floor becomes ``2 f^2 + 1/8`` (the maximally mixed state,
  purity 1/8, sits below ``1/6``). States outside the regime are skipped.
  The absolute value is harmless because a ``Z`` on one qubit maps
  ``rho[0, 7]`` to ``-rho[0, 7]`` without changing purity.

* :func:`minimize_purity_at_f1` minimizes purity over
  ``rho = A A^H / Tr(A A^H)`` (128 real parameters) subject to
  ``Re rho[0, 7] = f1``, using central-difference gradients, a quadratic
  penalty plus multiplier updates, and step halving.

Random draws use numpy's PCG64 (``numpy.random.default_rng``) and its
ziggurat normal sampler; sample ``i`` of a scan is drawn from seed
``seed + i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from .densmat import DensityMatrix, build_density_matrix
from .errors import DomainError
from .paradox import FrontierPoint, frontier_point, optimal_state, purity_floor

MODES = ("ginibre", "frontier-perturbation")
FLOOR_REGIME = 0.125
FLOOR_SLACK = 1e-9


@dataclass(frozen=True)
class SampleConfig:
    count: int
    seed: int = 0
    mode: str = "ginibre"
    perturbation_weight: float = 0.0

    def __post_init__(self):
        if self.count < 1:
            raise DomainError(f"count must be >= 1, got {self.count}")
        if not 0 <= self.seed < 2 ** 64:
            raise DomainError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.mode not in MODES:
            raise DomainError(f"mode must be one of {MODES}, got {self.mode!r}")
        if not 0.0 <= self.perturbation_weight <= 1.0:
            raise DomainError(f"perturbation_weight must be in [0, 1], got {self.perturbation_weight}")


def _ginibre(rng: np.random.Generator) -> np.ndarray:
    g = rng.standard_normal((8, 8)) + 1j * rng.standard_normal((8, 8))
    m = g @ g.conj().T
    return m / np.trace(m).real


def _sample_matrix(seed: int, mode: str, weight: float) -> np.ndarray:
    rng = np.random.default_rng(seed)
    if mode == "ginibre":
        return _ginibre(rng)
    if mode == "frontier-perturbation":
        f1 = rng.uniform(0.25, 0.5)
        base = optimal_state(f1).matrix
        if weight == 0.0:
            return np.array(base)
        return (1.0 - weight) * base + weight * _ginibre(rng)
    raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def sample_state(seed: int, mode: str = "ginibre", perturbation_weight: float = 0.0) -> DensityMatrix:
    """Draw one random three-qubit state, deterministic in its arguments.

    ``ginibre``: ``G G^H / Tr(G G^H)`` with standard complex normal ``G``.
    ``frontier-perturbation``: ``(1 - w) optimal_state(f1) + w * ginibre``
    with ``f1`` uniform on ``[1/4, 1/2]``.
    """
    SampleConfig(1, seed, mode, perturbation_weight)
    return build_density_matrix(_sample_matrix(seed, mode, perturbation_weight))


def purity_margin(rho) -> Optional[float]:
    """``purity - floor(|Re rho[0,7]|)``, or None outside the ``f >= 1/8`` regime."""
    m = rho.matrix if isinstance(rho, DensityMatrix) else np.asarray(rho)
    f = abs(m[0, 7].real)
    if f < FLOOR_REGIME:
        return None
    p = float(np.sum(m.real ** 2 + m.imag ** 2))
    return p - purity_floor(f)


def refined_purity_floor(f: float) -> float:
    """Purity floor at ``|Re rho[0,7]| = f`` valid for every ``f`` in [0, 1/2]."""
    if f >= FLOOR_REGIME:
        return purity_floor(f)
    return 2.0 * f * f + 0.125


@dataclass(frozen=True)
class ScanReport:
    samples: int
    checked: int
    violations: int
    worst_margin: Optional[float]
    refined_violations: int = 0
    refined_worst_margin: Optional[float] = None

    def to_dict(self) -> dict:
        return {
            "samples": self.samples,
            "checked": self.checked,
            "violations": self.violations,
            "worst_margin": self.worst_margin,
            "refined_violations": self.refined_violations,
            "refined_worst_margin": self.refined_worst_margin,
        }


def purity_bound_scan(config: SampleConfig) -> ScanReport:
    """Check sampled states against the purity floor.

    ``checked``/``violations``/``worst_margin`` cover samples in the
    ``f >= 1/8`` regime; the ``refined_*`` fields cover every sample
    against :func:`refined_purity_floor`.
    """
    checked = violations = refined_violations = 0
    worst = refined_worst = None
    for i in range(config.count):
        m = _sample_matrix(config.seed + i, config.mode, config.perturbation_weight)
        f = abs(m[0, 7].real)
        p = float(np.sum(m.real ** 2 + m.imag ** 2))
        refined = p - refined_purity_floor(f)
        if refined < -FLOOR_SLACK:
            refined_violations += 1
        refined_worst = refined if refined_worst is None else min(refined_worst, refined)
        if f < FLOOR_REGIME:
            continue
        margin = p - purity_floor(f)
        checked += 1
        if margin < -FLOOR_SLACK:
            violations += 1
        worst = margin if worst is None else min(worst, margin)
    return ScanReport(config.count, checked, violations, worst, refined_violations, refined_worst)


# -- constrained purity minimization -----------------------------------------

@dataclass(frozen=True)
class OptimizationResult:
    target_f1: float
    achieved_f1: float
    achieved_purity: float
    analytic_floor: float
    gap: float
    iterations: int
    converged: bool
    raw_f1: float = float("nan")
    raw_purity: float = float("nan")
    state: Optional[np.ndarray] = field(default=None, repr=False, compare=False)

    def to_dict(self) -> dict:
        return {
            "target_f1": self.target_f1,
            "achieved_f1": self.achieved_f1,
            "achieved_purity": self.achieved_purity,
            "analytic_floor": self.analytic_floor,
            "gap": self.gap,
            "iterations": self.iterations,
            "converged": self.converged,
            "raw_f1": self.raw_f1,
            "raw_purity": self.raw_purity,
        }


def _states(x: np.ndarray) -> np.ndarray:
    """Batch of parameter vectors (..., 128) -> normalized states (..., 8, 8)."""
    a = x[..., :64].reshape(x.shape[:-1] + (8, 8)) + 1j * x[..., 64:].reshape(x.shape[:-1] + (8, 8))
    r = a @ np.swapaxes(a.conj(), -1, -2)
    tr = np.trace(r, axis1=-2, axis2=-1).real
    return r / tr[..., None, None]


def _purity_and_f1(x: np.ndarray):
    r = _states(x)
    p = np.sum(r.real ** 2 + r.imag ** 2, axis=(-2, -1))
    return p, r[..., 0, 7].real


def _numeric_gradient(func, x, h):
    """Central differences, all 2n shifted points evaluated as one batch."""
    n = x.size
    shifts = np.concatenate([np.eye(n), -np.eye(n)]) * h
    vals = func(x[None, :] + shifts)
    return (vals[:n] - vals[n:]) / (2 * h)


def _factor(rho: DensityMatrix) -> np.ndarray:
    w, v = np.linalg.eigh(rho.matrix)
    a = v * np.sqrt(np.clip(w, 0.0, None))
    return np.concatenate([a.real.ravel(), a.imag.ravel()])


def _descend(x, target, penalty, max_iterations, tolerance, h,
             inner_cap=200, stall_window=50, stall_tol=1e-12):
    """Augmented-Lagrangian gradient descent. Returns (x, iterations, converged)."""
    purity_of = lambda y: _purity_and_f1(y)[0]
    f1_of = lambda y: _purity_and_f1(y)[1]

    # least-squares multiplier estimate at the start point
    gp = _numeric_gradient(purity_of, x, h)
    gf = _numeric_gradient(f1_of, x, h)
    multiplier = -float(gp @ gf) / max(float(gf @ gf), 1e-300)

    def objective(y):
        p, f = _purity_and_f1(y)
        c = f - target
        return p + multiplier * c + penalty * c * c

    step = 1.0
    it = 0
    while it < max_iterations:
        value = float(objective(x))
        history = [value]
        stalled = False
        for _ in range(min(inner_cap, max_iterations - it)):
            it += 1
            g = _numeric_gradient(objective, x, h)
            gnorm2 = float(g @ g)
            moved = False
            while gnorm2 > 0.0 and step > 1e-20:
                trial = x - step * g
                tv = float(objective(trial))
                if tv <= value - 1e-4 * step * gnorm2:
                    x, value = trial, tv
                    moved = True
                    step *= 2.0
                    break
                step *= 0.5
            history.append(value)
            if not moved or (len(history) > stall_window
                             and history[-stall_window - 1] - value < stall_tol):
                stalled = True
                break
        c = float(f1_of(x)) - target
        if stalled and abs(c) <= tolerance:
            return x, it, True
        multiplier += 2.0 * penalty * c
        step = max(step, 1e-6)
    return x, it, False


def _restore_feasibility(state: np.ndarray, target: float) -> np.ndarray:
    """Mix with |GHZ><GHZ| (f1 too small) or I/8 (too large) so Re rho[0,7] == target."""
    f = state[0, 7].real
    if f < target:
        other = np.zeros((8, 8), dtype=np.complex128)
        other[0, 0] = other[0, 7] = other[7, 0] = other[7, 7] = 0.5
        alpha = (target - f) / (0.5 - f)
    elif f > target:
        other = np.eye(8, dtype=np.complex128) / 8
        alpha = (f - target) / f
    else:
        return state
    return (1.0 - alpha) * state + alpha * other


def _validate_target(target_f1: float) -> float:
    target_f1 = float(target_f1)
    if not (0.25 <= target_f1 <= 0.5):
        raise DomainError(f"target_f1 must lie in [0.25, 0.5], got {target_f1!r}")
    return target_f1


def minimize_purity_at_f1(
    target_f1: float,
    restarts: int = 8,
    max_iterations: int = 2000,
    penalty_weight: float = 1e2,
    tolerance: float = 1e-6,
    *,
    seed: int = 0,
    warm_start: bool = False,
    gradient_step: float = 1e-6,
) -> OptimizationResult:
    """Smallest purity reachable at ``Re rho[0, 7] = target_f1``.

    Each restart starts from a random 8x8 complex factor (seed
    ``seed + restart``), or from a factorization of ``optimal_state`` when
    ``warm_start`` is set. A restart counts as converged once its
    objective stalls with the constraint residual within ``tolerance``.

    The descent only satisfies the constraint approximately, so the final
    state is mixed with ``|GHZ><GHZ|`` or ``I/8`` to put ``Re rho[0, 7]``
    exactly on target before its purity is compared with the floor. The
    reported state is therefore always a genuine density matrix at the
    requested ``f1``; the best one over all restarts is returned.
    """
    target_f1 = _validate_target(target_f1)
    if restarts < 1:
        raise DomainError(f"restarts must be >= 1, got {restarts}")
    floor = purity_floor(target_f1)
    best = None
    for k in range(restarts):
        if warm_start:
            x0 = _factor(optimal_state(target_f1))
        else:
            x0 = np.random.default_rng(seed + k).standard_normal(128)
        x, its, ok = _descend(x0, target_f1, penalty_weight, max_iterations, tolerance, gradient_step)
        raw_p, raw_f = (float(v) for v in _purity_and_f1(x))
        state = _restore_feasibility(_states(x), target_f1)
        p = float(np.sum(state.real ** 2 + state.imag ** 2))
        f = float(state[0, 7].real)
        res = OptimizationResult(target_f1, f, p, floor, p - floor, its, ok, raw_f, raw_p, state)
        if best is None or res.achieved_purity < best.achieved_purity:
            best = res
        if warm_start:
            break
    return best


@dataclass(frozen=True)
class FrontierComparison:
    point: Optional[FrontierPoint]
    result: Optional[OptimizationResult]
    error: Optional[str] = None


def frontier_scan(grid: Sequence[float], **optimizer_params) -> List[FrontierComparison]:
    """Pair each grid point's analytic frontier value with the optimizer's."""
    rows = []
    for f1 in grid:
        try:
            _validate_target(f1)
            rows.append(FrontierComparison(frontier_point(f1), minimize_purity_at_f1(f1, **optimizer_params)))
        except (DomainError, ValueError, ArithmeticError) as exc:
            rows.append(FrontierComparison(None, None, f"f1={f1!r}: {exc}"))
    return rows


def dephased_noise_spread(state: np.ndarray) -> float:
    """Spread (max - min) of diagonal entries 1..6 of a state."""
    d = np.real(np.diag(state))[1:7]
    return float(d.max() - d.min())
