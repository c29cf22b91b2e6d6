"""Shared test fixtures: Pauli matrices and seeded random samplers."""

import numpy as np

SX = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SY = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SZ = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
I2 = np.eye(2, dtype=complex)


def random_hermitian(rng, dim, radius=1.0):
    """Gaussian Hermitian rescaled to the given spectral radius."""
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    h = 0.5 * (g + g.conj().T)
    w = np.linalg.eigvalsh(h)
    top = max(abs(w[0]), abs(w[-1]))
    return h * (radius / top) if top > 0 else h


def random_state(rng, dim):
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return v / np.linalg.norm(v)


def random_axis(rng):
    v = rng.standard_normal(3)
    return v / np.linalg.norm(v)


def qubit_horizon(gamma, omega_a, omega_b):
    """Search horizon of the closed-form root finder (same branch rule)."""
    a = np.cos(0.5 * gamma) ** 2
    b = np.sin(0.5 * gamma) ** 2
    if a - b > 1e-12:
        return np.inf if omega_a == omega_b else np.pi / abs(omega_a - omega_b)
    return np.pi / (omega_a + omega_b)
