import numpy as np
import pytest


def ginibre_states(n, seed):
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((n, 8, 8)) + 1j * rng.standard_normal((n, 8, 8))
    m = g @ np.swapaxes(g.conj(), -1, -2)
    return m / np.trace(m, axis1=1, axis2=2).real[:, None, None]


@pytest.fixture(scope="session")
def random_states():
    """1000 seeded Hilbert-Schmidt random three-qubit states as validated DensityMatrix."""
    from ghzparadox.densmat import build_density_matrix

    return [build_density_matrix(m) for m in ginibre_states(1000, seed=20240917)]
