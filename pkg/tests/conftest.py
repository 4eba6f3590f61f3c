import numpy as np
import pytest

from entdetect import DensityMatrix, SampleSpec, sample_reduced_state


def bell_state():
    """|Phi+><Phi+| in 2x2."""
    psi = np.zeros(4, complex)
    psi[0] = psi[3] = 1 / np.sqrt(2)
    return DensityMatrix(np.outer(psi, psi.conj()), 2, 2)


def werner_state(p):
    """p |Phi+><Phi+| + (1-p) I/4."""
    rho = p * bell_state().mat + (1 - p) * np.eye(4) / 4
    return DensityMatrix(rho, 2, 2)


def maximally_mixed(d1, d2):
    n = d1 * d2
    return DensityMatrix(np.eye(n) / n, d1, d2)


def product_pure(d1, d2, seed=0):
    """|a><a| x |b><b| for Haar-random local kets."""
    rng = np.random.default_rng(seed)
    a = rng.standard_normal(d1) + 1j * rng.standard_normal(d1)
    b = rng.standard_normal(d2) + 1j * rng.standard_normal(d2)
    a /= np.linalg.norm(a)
    b /= np.linalg.norm(b)
    psi = np.kron(a, b)
    return DensityMatrix(np.outer(psi, psi.conj()), d1, d2)


def product_mixed(d1, d2, k1=2, k2=2, seed=0):
    """rho_A (x) rho_B from two independent Wishart draws."""
    rng = np.random.default_rng(seed)

    def wishart(d, k):
        a = rng.standard_normal((d, k)) + 1j * rng.standard_normal((d, k))
        m = a @ a.conj().T
        return m / m.trace().real

    return DensityMatrix(np.kron(wishart(d1, k1), wishart(d2, k2)), d1, d2)


def random_state(d1, d2, k, seed=0, trial=0):
    return sample_reduced_state(SampleSpec(d1, d2, k, seed, trial))


def haar_unitary(d, rng):
    z = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q, r = np.linalg.qr(z)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


@pytest.fixture
def bell():
    return bell_state()
