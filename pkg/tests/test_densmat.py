from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from ghzparadox.densmat import (
    basis_projector,
    build_density_matrix,
    convex_mix,
    hermitian_eigenvalues,
    linear_entropy,
    maximally_mixed,
    purity,
)
from ghzparadox.errors import (
    NotHermitian,
    NotPositiveSemiDefinite,
    TraceNotOne,
    ValidationError,
    WeightsInvalid,
)

GHZ = np.zeros((8, 8))
GHZ[0, 0] = GHZ[0, 7] = GHZ[7, 0] = GHZ[7, 7] = 0.5


def corner_matrix(f1, diag=0.0, rest=0.0):
    m = np.diag([diag] + [rest] * 6 + [diag]).astype(complex)
    m[0, 7] = m[7, 0] = f1
    return m


def test_eigenvalues_identity():
    res = hermitian_eigenvalues(np.eye(8))
    np.testing.assert_allclose(res.eigenvalues, np.ones(8), atol=1e-14)
    assert res.max_offdiagonal_residual < 1e-12


def test_eigenvalues_anticorner():
    res = hermitian_eigenvalues(corner_matrix(0.3))
    np.testing.assert_allclose(res.eigenvalues, [-0.3] + [0] * 6 + [0.3], atol=1e-14)


def test_eigenvalues_ghz_against_characteristic_polynomial():
    lam = sympy.symbols("lam")
    exact = sympy.zeros(8, 8)
    for i, j in [(0, 0), (0, 7), (7, 0), (7, 7)]:
        exact[i, j] = sympy.Rational(1, 2)
    poly = sympy.Poly((exact - lam * sympy.eye(8)).det(), lam)
    roots = sorted(float(r) for r, k in sympy.roots(poly).items() for _ in range(k))
    assert roots == [0.0] * 7 + [1.0]
    np.testing.assert_allclose(hermitian_eigenvalues(GHZ).eigenvalues, roots, atol=1e-14)


def test_eigenvalues_reject_non_hermitian():
    m = np.eye(8, dtype=complex)
    m[0, 1] = 1e-6
    with pytest.raises(NotHermitian):
        hermitian_eigenvalues(m)


def test_eigenvalues_deterministic():
    rng = np.random.default_rng(3)
    a = rng.standard_normal((8, 8)) + 1j * rng.standard_normal((8, 8))
    h = a + a.conj().T
    np.testing.assert_array_equal(hermitian_eigenvalues(h).eigenvalues, hermitian_eigenvalues(h).eigenvalues)


@settings(max_examples=200, deadline=None)
@given(arrays(np.float64, (2, 8, 8), elements=st.floats(-10, 10)))
def test_eigenvalue_reconstruction(parts):
    a = parts[0] + 1j * parts[1]
    h = (a + a.conj().T) / 2
    w = hermitian_eigenvalues(h).eigenvalues
    assert np.all(np.diff(w) >= 0)
    scale = max(1.0, np.max(np.abs(h))) ** 2
    assert abs(w.sum() - np.trace(h).real) <= 1e-10 * scale
    assert abs((w ** 2).sum() - np.trace(h @ h).real) <= 1e-9 * scale


def test_build_maximally_mixed():
    rho = build_density_matrix(np.eye(8) / 8)
    assert rho.dim == 8 and rho.num_qubits == 3
    assert purity(rho) == pytest.approx(0.125, abs=1e-15)
    assert not rho.matrix.flags.writeable


def test_reject_nonphysical_maximizer():
    with pytest.raises(NotPositiveSemiDefinite) as info:
        build_density_matrix(corner_matrix(0.3))
    assert info.value.min_eigenvalue == pytest.approx(-0.3, abs=1e-10)


def test_reject_psd_maximizer_trace():
    with pytest.raises(TraceNotOne) as info:
        build_density_matrix(corner_matrix(0.3, diag=0.3))
    assert info.value.trace == pytest.approx(0.6, abs=1e-12)


def test_reject_non_hermitian():
    m = np.eye(8, dtype=complex) / 8
    m[1, 2] = 0.01j
    with pytest.raises(NotHermitian):
        build_density_matrix(m)


@pytest.mark.parametrize(
    "bad",
    [np.eye(6) / 6, np.ones((2, 3)), np.full((2, 2), np.nan), np.zeros((0, 0))],
)
def test_reject_malformed(bad):
    with pytest.raises(ValidationError):
        build_density_matrix(bad)


def test_build_symmetrizes():
    m = np.eye(8, dtype=complex) / 8
    m[0, 1] = 0.01 + 1e-12
    m[1, 0] = 0.01
    rho = build_density_matrix(m)
    assert rho.matrix[0, 1] == rho.matrix[1, 0]


def test_revalidation_is_idempotent(random_states):
    for rho in random_states[:200]:
        again = build_density_matrix(rho.matrix)
        assert np.max(np.abs(again.matrix - rho.matrix)) <= 1e-15


def test_purity_examples():
    assert purity(build_density_matrix(GHZ)) == pytest.approx(1.0, abs=1e-15)
    # optimal state at f1 = 0.3, summed entry by entry in exact arithmetic
    f1 = Fraction(3, 10)
    f = (1 - 2 * f1) / 6
    exact = 4 * f1 ** 2 + 6 * f ** 2
    assert exact == Fraction(29, 75)
    rho = build_density_matrix(corner_matrix(0.3, diag=0.3, rest=float(f)))
    assert purity(rho) == pytest.approx(float(exact), abs=1e-14)
    assert purity(rho) == pytest.approx(0.3866667, abs=5e-8)


def test_linear_entropy_examples():
    assert linear_entropy(build_density_matrix(GHZ)) == pytest.approx(0.0, abs=1e-14)
    assert linear_entropy(maximally_mixed(8)) == pytest.approx(1.0, abs=1e-14)
    rho = build_density_matrix(corner_matrix(0.25, diag=0.25, rest=1 / 12))
    assert linear_entropy(rho) == pytest.approx(17 / 21, abs=1e-14)
    assert linear_entropy(rho) == pytest.approx(0.8095238, abs=5e-8)


def test_entropy_purity_relation(random_states):
    for rho in random_states[:100]:
        assert linear_entropy(rho) == pytest.approx(8 / 7 * (1 - purity(rho)), abs=1e-15)
        assert 1 / 8 - 1e-12 <= purity(rho) <= 1 + 1e-12


def test_convex_mix_single():
    rho = build_density_matrix(GHZ)
    np.testing.assert_array_equal(convex_mix([rho], [1.0]).matrix, rho.matrix)


def test_convex_mix_flipped_noise():
    ghz = build_density_matrix(GHZ)
    noise = [basis_projector(i) for i in range(1, 7)]
    f = (1 - 0.6) / 6
    mixed = convex_mix([ghz] + noise, [0.6] + [f] * 6)
    np.testing.assert_allclose(mixed.matrix, corner_matrix(0.3, diag=0.3, rest=f), atol=1e-15)
    full = convex_mix([ghz] + noise, [1.0] + [0.0] * 6)
    np.testing.assert_array_equal(full.matrix, GHZ)


@pytest.mark.parametrize(
    "weights", [[0.5, 0.6], [1.2, -0.2], [0.5], [float("nan"), 1.0]]
)
def test_convex_mix_rejects_weights(weights):
    rho = maximally_mixed(8)
    with pytest.raises(WeightsInvalid):
        convex_mix([rho, rho], weights)


def test_convex_mix_rejects_mixed_dims():
    with pytest.raises(WeightsInvalid):
        convex_mix([maximally_mixed(8), maximally_mixed(4)], [0.5, 0.5])


def test_purity_is_convex(random_states):
    rng = np.random.default_rng(11)
    for _ in range(200):
        idx = rng.choice(len(random_states), size=3, replace=False)
        w = rng.dirichlet(np.ones(3))
        w = w / w.sum()
        states = [random_states[i] for i in idx]
        mix = convex_mix(states, w)
        assert purity(mix) <= sum(wi * purity(s) for wi, s in zip(w, states)) + 1e-12
    same = random_states[0]
    assert purity(convex_mix([same, same], [0.3, 0.7])) <= purity(same) + 1e-12
