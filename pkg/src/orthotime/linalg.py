"""Dense complex linear-algebra kernel.

Spectral operations for Hermitian and unitary matrices: eigendecompositions,
the unitary exponential of a Hermitian generator, the principal logarithm of
a unitary, Frobenius norms, and the divided-difference (directional)
derivative of the matrix logarithm at a diagonal point.

Eigenphases follow the half-open convention (-pi, pi]; a tie at -pi is
remapped to +pi.  All functions are pure and never modify their inputs, so
they are safe to call concurrently.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np
import scipy.linalg

from .errors import (
    ConvergenceError,
    CutProximityError,
    DimensionMismatchError,
    NonHermitianError,
    NonUnitaryError,
)

HERMITICITY_TOL = 1e-12
UNITARITY_TOL = 1e-10
RECONSTRUCTION_TOL = 1e-10
CUT_GUARD = 1e-9
COINCIDENT_TOL = 1e-12


class EigenSystem(NamedTuple):
    """Eigenvalues (real values, or phases for a unitary) and the unitary
    matrix whose columns are the matching orthonormal eigenvectors."""

    values: np.ndarray
    vectors: np.ndarray


def as_square_matrix(m, name: str = "matrix") -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise DimensionMismatchError(
            f"{name} must be a square matrix, got shape {a.shape}"
        )
    return a


def frobenius(m) -> float:
    """Frobenius norm sqrt(sum |m_jk|^2); zero iff m is zero."""
    return float(np.linalg.norm(np.asarray(m, dtype=complex)))


def assert_hermitian(h, tol: float = HERMITICITY_TOL, name: str = "matrix") -> np.ndarray:
    """Return ``h`` as a complex array, or raise if ||h - h*||_F > tol ||h||_F."""
    h = as_square_matrix(h, name)
    if np.linalg.norm(h - h.conj().T) > tol * np.linalg.norm(h):
        raise NonHermitianError(f"{name} fails the Hermiticity tolerance {tol}")
    return h


def assert_unitary(u, tol: float = UNITARITY_TOL, name: str = "matrix") -> np.ndarray:
    """Return ``u`` as a complex array, or raise if ||u* u - 1||_F > tol."""
    u = as_square_matrix(u, name)
    defect = np.linalg.norm(u.conj().T @ u - np.eye(u.shape[0]))
    if defect > tol:
        raise NonUnitaryError(f"{name} fails the unitarity tolerance {tol} (defect {defect:.3e})")
    return u


def herm_eig(h, tol: float = HERMITICITY_TOL) -> EigenSystem:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending."""
    h = assert_hermitian(h, tol)
    try:
        values, vectors = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"Hermitian eigensolver failed: {exc}") from exc
    return EigenSystem(values, vectors)


def unitary_eig(u, tol: float = UNITARITY_TOL) -> EigenSystem:
    """Eigenphases in (-pi, pi], ascending, with an orthonormal eigenbasis.

    Uses the complex Schur form: for a (numerically) normal matrix its
    triangular factor is diagonal, which gives an orthonormal eigenbasis even
    across degenerate eigenvalues, unlike a generic eigensolver.
    """
    u = assert_unitary(u, tol)
    try:
        t, z = scipy.linalg.schur(u, output="complex")
    except scipy.linalg.LinAlgError as exc:  # pragma: no cover - rare
        raise ConvergenceError(f"Schur decomposition failed: {exc}") from exc
    phases = np.angle(np.diagonal(t))
    phases = np.where(phases <= -np.pi, phases + 2.0 * np.pi, phases)
    order = np.argsort(phases, kind="stable")
    phases = phases[order]
    vectors = z[:, order]
    recon = (vectors * np.exp(1j * phases)) @ vectors.conj().T
    if np.linalg.norm(recon - u) > RECONSTRUCTION_TOL * max(np.linalg.norm(u), 1.0):
        raise ConvergenceError("eigendecomposition failed to reproduce the input unitary")
    return EigenSystem(phases, vectors)


def expm_i(h, t: float, tol: float = HERMITICITY_TOL) -> np.ndarray:
    """Evolution factor exp(-i h t) for Hermitian h, computed spectrally.

    The spectral route is exact up to eigensolver error and unitary by
    construction, which is why it is preferred over a series or Pade form.
    """
    values, vectors = herm_eig(h, tol)
    return (vectors * np.exp(-1j * values * float(t))) @ vectors.conj().T


def principal_log_u(u, cut_guard: float = CUT_GUARD, tol: float = UNITARITY_TOL) -> np.ndarray:
    """Hermitian k with exp(i k) = u and the spectrum of k inside (-pi, pi].

    Raises ``CutProximityError`` when an eigenphase falls within ``cut_guard``
    of the branch point -1, where the principal logarithm is discontinuous.
    A phase equal to +pi exactly sits on the included end of the half-open
    interval and is allowed.
    """
    phases, vectors = unitary_eig(u, tol)
    distance = np.pi - np.abs(phases)
    near_cut = (distance < cut_guard) & (phases != np.pi)
    if np.any(near_cut):
        worst = float(distance[near_cut].min())
        raise CutProximityError(
            f"eigenphase within {worst:.3e} of the branch point -1 (guard {cut_guard})"
        )
    k = (vectors * phases) @ vectors.conj().T
    return 0.5 * (k + k.conj().T)


def log_frechet_diag(g, h, cut_guard: float = CUT_GUARD,
                     coincident_tol: float = COINCIDENT_TOL) -> np.ndarray:
    """Directional derivative of the matrix logarithm at a diagonal point.

    For diagonal ``g`` the derivative of log(g + s h) at s = 0 is the
    entrywise product of ``h`` with the divided-difference table

        (log g_jj - log g_kk) / (g_jj - g_kk)   for j != k,
        1 / g_jj                                on the diagonal,

    where entries closer than ``coincident_tol`` use the diagonal limit.
    """
    g = as_square_matrix(g, "g")
    h = as_square_matrix(h, "h")
    if g.shape != h.shape:
        raise DimensionMismatchError(f"shape mismatch: {g.shape} vs {h.shape}")
    if np.any(g - np.diag(np.diagonal(g)) != 0):
        raise ValueError("g must be diagonal")
    d = np.diagonal(g)
    if np.any(np.abs(d) < cut_guard) or np.any(np.pi - np.abs(np.angle(d)) < cut_guard):
        raise CutProximityError("a diagonal entry lies on or near the logarithm cut")
    diff = d[:, None] - d[None, :]
    logs = np.log(d)
    with np.errstate(divide="ignore", invalid="ignore"):
        table = (logs[:, None] - logs[None, :]) / diff
    limit = np.broadcast_to((1.0 / d)[:, None], table.shape)
    table = np.where(np.abs(diff) < coincident_tol, limit, table)
    return table * h
