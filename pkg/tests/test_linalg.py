import numpy as np
import pytest
import scipy.linalg
from numpy.testing import assert_allclose

from orthotime import linalg
from orthotime.errors import (
    CutProximityError,
    DimensionMismatchError,
    NonHermitianError,
    NonUnitaryError,
)
from helpers import SX, SZ, random_hermitian


class TestHermEig:
    def test_diagonal_input(self):
        values, vectors = linalg.herm_eig(np.diag([1.0, 2.0]).astype(complex))
        assert_allclose(values, [1.0, 2.0])
        assert_allclose(vectors, np.eye(2), atol=1e-14)

    def test_pauli_x_spectrum(self):
        values, _ = linalg.herm_eig(SX)
        assert_allclose(values, [-1.0, 1.0], atol=1e-14)

    def test_reconstruction_random(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            h = random_hermitian(rng, 5, radius=3.0)
            values, vectors = linalg.herm_eig(h)
            recon = (vectors * values) @ vectors.conj().T
            assert np.linalg.norm(recon - h) <= 1e-10 * np.linalg.norm(h)
            assert np.all(np.diff(values) >= 0)

    def test_rejects_non_hermitian(self):
        with pytest.raises(NonHermitianError):
            linalg.herm_eig(np.array([[0, 1], [0, 0]], complex))


class TestUnitaryEig:
    def test_identity(self):
        phases, _ = linalg.unitary_eig(np.eye(3, dtype=complex))
        assert_allclose(phases, 0.0, atol=1e-14)

    def test_diagonal_phases(self):
        u = np.diag([np.exp(1j * np.pi / 2), np.exp(-1j * np.pi / 2)])
        phases, _ = linalg.unitary_eig(u)
        assert_allclose(phases, [-np.pi / 2, np.pi / 2], atol=1e-14)

    def test_exponential_of_pauli_x(self):
        # independent construction of e^{i 0.3 sigma_x} via the Pade-based expm
        u = scipy.linalg.expm(1j * 0.3 * SX)
        phases, _ = linalg.unitary_eig(u)
        assert_allclose(phases, [-0.3, 0.3], atol=1e-12)

    def test_reconstruction_random_up_to_dim_8(self):
        rng = np.random.default_rng(5)
        for dim in range(2, 9):
            g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
            u, _ = np.linalg.qr(g)
            phases, vectors = linalg.unitary_eig(u)
            assert np.all(phases > -np.pi) and np.all(phases <= np.pi)
            assert np.all(np.diff(phases) >= 0)
            recon = (vectors * np.exp(1j * phases)) @ vectors.conj().T
            assert np.linalg.norm(recon - u) <= 1e-10 * np.linalg.norm(u)

    def test_phase_tie_at_minus_pi_maps_to_plus_pi(self):
        phases, _ = linalg.unitary_eig(np.diag([-1.0 + 0.0j, 1.0]))
        assert_allclose(sorted(phases), [0.0, np.pi])

    def test_rejects_non_unitary(self):
        with pytest.raises(NonUnitaryError):
            linalg.unitary_eig(2.0 * np.eye(2, dtype=complex))


class TestExpmI:
    def test_zero_time_is_identity(self):
        rng = np.random.default_rng(3)
        h = random_hermitian(rng, 4)
        assert_allclose(linalg.expm_i(h, 0.0), np.eye(4), atol=1e-14)

    def test_diagonal_generator(self):
        u = linalg.expm_i(SZ, np.pi / 2)
        assert_allclose(u, np.diag([np.exp(-1j * np.pi / 2), np.exp(1j * np.pi / 2)]),
                        atol=1e-14)

    def test_matches_pade_expm(self):
        rng = np.random.default_rng(17)
        for _ in range(10):
            h = random_hermitian(rng, 5, radius=2.0)
            t = rng.uniform(-3.0, 3.0)
            assert_allclose(linalg.expm_i(h, t), scipy.linalg.expm(-1j * t * h), atol=1e-12)

    def test_group_law(self):
        rng = np.random.default_rng(23)
        for _ in range(10):
            h = random_hermitian(rng, 4, radius=2.0)
            s, t = rng.uniform(-2.0, 2.0, size=2)
            lhs = linalg.expm_i(h, s) @ linalg.expm_i(h, t)
            assert np.linalg.norm(lhs - linalg.expm_i(h, s + t)) <= 1e-10

    def test_output_is_unitary(self):
        rng = np.random.default_rng(29)
        for _ in range(10):
            u = linalg.expm_i(random_hermitian(rng, 6, radius=5.0), rng.uniform(0, 10))
            assert np.linalg.norm(u.conj().T @ u - np.eye(6)) <= 1e-10


class TestPrincipalLog:
    def test_identity_gives_zero(self):
        assert_allclose(linalg.principal_log_u(np.eye(3, dtype=complex)), 0.0, atol=1e-14)

    def test_diagonal(self):
        u = np.diag([np.exp(1j * np.pi / 4), np.exp(-1j * np.pi / 4)])
        assert_allclose(linalg.principal_log_u(u), np.diag([np.pi / 4, -np.pi / 4]),
                        atol=1e-14)

    def test_round_trip_is_minus_h(self):
        # log(e^{-i h}) = -h whenever the spectrum of h stays inside (-pi, pi)
        rng = np.random.default_rng(31)
        for _ in range(15):
            h = random_hermitian(rng, 5, radius=rng.uniform(0.1, 3.0))
            assert_allclose(linalg.principal_log_u(linalg.expm_i(h, 1.0)), -h, atol=1e-11)

    def test_output_spectrum_in_half_open_interval(self):
        rng = np.random.default_rng(37)
        for _ in range(10):
            g = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
            u, _ = np.linalg.qr(g)
            k = linalg.principal_log_u(u)
            w = np.linalg.eigvalsh(k)
            assert np.all(w > -np.pi) and np.all(w <= np.pi + 1e-12)

    def test_exact_minus_one_eigenvalue_allowed(self):
        k = linalg.principal_log_u(np.diag([-1.0 + 0.0j, 1.0]))
        assert_allclose(sorted(np.linalg.eigvalsh(k)), [0.0, np.pi], atol=1e-14)

    def test_cut_proximity_raises(self):
        u = np.diag([np.exp(1j * (np.pi - 1e-12)), 1.0])
        with pytest.raises(CutProximityError):
            linalg.principal_log_u(u)


class TestFrobenius:
    def test_zero(self):
        assert linalg.frobenius(np.zeros((3, 3))) == 0.0

    def test_identity(self):
        assert_allclose(linalg.frobenius(np.eye(3)), np.sqrt(3.0))

    def test_pauli_z(self):
        assert_allclose(linalg.frobenius(SZ), np.sqrt(2.0))

    def test_unitary_invariance(self):
        rng = np.random.default_rng(41)
        for _ in range(10):
            m = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
            g = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
            w, _ = np.linalg.qr(g)
            assert abs(linalg.frobenius(w @ m @ w.conj().T) - linalg.frobenius(m)) <= 1e-10


class TestLogFrechetDiag:
    def test_hand_computed_table(self):
        g = np.diag([1.0 + 0.0j, 2.0])
        h = np.ones((2, 2), dtype=complex)
        expected = np.array([[1.0, np.log(2.0)], [np.log(2.0), 0.5]], dtype=complex)
        assert_allclose(linalg.log_frechet_diag(g, h), expected, atol=1e-14)

    def test_identity_point_returns_h(self):
        rng = np.random.default_rng(43)
        h = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        assert_allclose(linalg.log_frechet_diag(np.eye(3, dtype=complex), h), h, atol=1e-14)

    def test_coincident_entries_use_diagonal_limit(self):
        g = np.diag([2.0 + 0.0j, 2.0])
        h = np.ones((2, 2), dtype=complex)
        assert_allclose(linalg.log_frechet_diag(g, h), np.full((2, 2), 0.5), atol=1e-14)

    def test_matches_central_finite_difference(self):
        # oracle: central difference of the scipy matrix logarithm
        rng = np.random.default_rng(47)
        checked = 0
        while checked < 12:
            dim = int(rng.integers(2, 7))
            vals = rng.uniform(0.5, 2.0, dim) * np.exp(1j * rng.uniform(-2.5, 2.5, dim))
            if np.min(np.abs(vals[:, None] - vals[None, :]) + np.eye(dim)) < 0.05:
                continue
            g = np.diag(vals)
            h = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
            step = 1e-5
            fd = (scipy.linalg.logm(g + step * h) - scipy.linalg.logm(g - step * h)) / (2 * step)
            got = linalg.log_frechet_diag(g, h)
            assert np.linalg.norm(got - fd) <= 1e-6 * np.linalg.norm(fd)
            checked += 1

    def test_cut_proximity(self):
        with pytest.raises(CutProximityError):
            linalg.log_frechet_diag(np.diag([-1.0 + 0.0j, 2.0]), np.eye(2, dtype=complex))

    def test_rejects_non_diagonal(self):
        with pytest.raises(ValueError):
            linalg.log_frechet_diag(np.ones((2, 2), complex), np.eye(2, dtype=complex))

    def test_shape_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            linalg.log_frechet_diag(np.eye(2, dtype=complex), np.eye(3, dtype=complex))
