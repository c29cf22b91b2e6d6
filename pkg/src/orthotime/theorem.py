"""Randomized numerical verification of principal-log norm inequalities.

The core statement: for any unitaries U and V whose principal logarithms are
defined (no eigenvalue on the cut at -1),

    || log(UV) ||_F  <=  || log U ||_F + || log V ||_F.

Equivalently, for Hermitian X, Y with spectra in (-pi, pi], the Hermitian
generator Z(s) of e^{i Z(s)} = e^{i X} e^{i s Y} satisfies
||Z(s)||_F <= ||X||_F + s ||Y||_F, provided the path never crosses the cut.
This module samples seeded random instances of the endpoint inequality, the
finite-step induction inequality, and the path trace, and scans the related
maximality statement: among traceless Hermitian hb of fixed Frobenius norm,
the norm of the product generator log(e^{i hb t} e^{-i ha t}) / t is largest
for hb proportional to ha with a negative constant.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import CutProximityError, DimensionMismatchError


@dataclass(frozen=True)
class TheoremTrial:
    """One subadditivity check: lhs = ||log(UV)||_F, rhs = ||log U||_F +
    ||log V||_F, margin = rhs - lhs (NaN when skipped)."""

    dim: int
    seed: int | None
    lhs: float
    rhs: float
    margin: float
    skipped: bool
    skip_reason: str | None


@dataclass(frozen=True)
class PathTrace:
    """Norms ||Z(s)||_F on a uniform grid of s in [0, 1], with the minimal
    eigenphase distance of e^{iX} e^{isY} to the branch point over the grid."""

    grid: np.ndarray
    norms: np.ndarray
    min_cut_distance: float

    def valid(self, cut_guard: float = linalg.CUT_GUARD) -> bool:
        return self.min_cut_distance > cut_guard


@dataclass(frozen=True)
class ConjectureScan:
    """Randomized maximality check of the anti-aligned proportional choice."""

    dim: int
    k_ratio: float
    t: float
    n_samples: int
    seed: int
    anti_aligned_norm: float
    max_sample_norm: float
    margin: float


def random_unitary(dim: int, seed: int) -> np.ndarray:
    """Haar-style unitary: QR of a seeded complex Gaussian matrix with the
    R-diagonal phases absorbed.  Deterministic per seed."""
    if dim < 1:
        raise ValueError("dim must be at least 1")
    rng = np.random.default_rng(seed)
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.where(np.diagonal(r) == 0.0, 1.0, np.diagonal(r))
    return q * (d / np.abs(d))


def _phase_cut_distance(u: np.ndarray) -> float:
    phases = np.angle(np.linalg.eigvals(u))
    return float(np.min(np.pi - np.abs(phases)))


def check_subadditivity(u, v, cut_guard: float = linalg.CUT_GUARD,
                        seed: int | None = None) -> TheoremTrial:
    """Evaluate ||log(uv)||_F against ||log u||_F + ||log v||_F.

    Trials where either factor or the product carries an eigenphase within
    ``cut_guard`` of the branch point are skipped (the inequality's proof
    requires a cut-free path), not counted as violations.
    """
    u = linalg.as_square_matrix(u, "u")
    v = linalg.as_square_matrix(v, "v")
    if u.shape != v.shape:
        raise DimensionMismatchError(f"shape mismatch: {u.shape} vs {v.shape}")
    dim = u.shape[0]
    nan = float("nan")
    for name, m in (("u", u), ("v", v), ("uv", u @ v)):
        if _phase_cut_distance(m) < cut_guard:
            return TheoremTrial(dim, seed, nan, nan, nan, True,
                                f"cut proximity in {name}")
    lhs = linalg.frobenius(linalg.principal_log_u(u @ v))
    rhs = (linalg.frobenius(linalg.principal_log_u(u))
           + linalg.frobenius(linalg.principal_log_u(v)))
    return TheoremTrial(dim, seed, lhs, rhs, rhs - lhs, False, None)


def run_trials(n_trials: int, dim_max: int, seed: int) -> list[TheoremTrial]:
    """Seeded sweep of subadditivity trials; dimensions and per-factor seeds
    derive deterministically from one master seed."""
    if n_trials < 1 or dim_max < 1:
        raise ValueError("n_trials and dim_max must be at least 1")
    master = np.random.default_rng(seed)
    dims = master.integers(1, dim_max + 1, size=n_trials)
    seeds = master.integers(0, 2**63 - 1, size=(n_trials, 2))
    trials = []
    for i in range(n_trials):
        u = random_unitary(int(dims[i]), int(seeds[i, 0]))
        v = random_unitary(int(dims[i]), int(seeds[i, 1]))
        trials.append(check_subadditivity(u, v, seed=int(seeds[i, 0])))
    return trials


def _path_point(x, y, s: float) -> np.ndarray:
    """e^{i x} e^{i s y}."""
    return linalg.expm_i(-np.asarray(x, complex), 1.0) @ linalg.expm_i(-np.asarray(y, complex), float(s))


def check_induction_step(x, y, s: float, ds: float) -> tuple[float, float]:
    """(||Z(s + ds)||_F, ||Z(s)||_F + ds ||Y||_F) for the path generator Z.

    The full inequality lhs <= rhs holds for any step inside [0, 1] on a
    cut-free path; small ds probes the differential version directly.
    """
    if not (0.0 <= s and s + ds <= 1.0):
        raise ValueError("s and s + ds must lie in [0, 1]")
    z1 = linalg.principal_log_u(_path_point(x, y, s + ds))
    z0 = linalg.principal_log_u(_path_point(x, y, s))
    return linalg.frobenius(z1), linalg.frobenius(z0) + ds * linalg.frobenius(y)


def trace_path(x, y, n_grid: int = 101) -> PathTrace:
    """Evaluate ||Z(s)||_F on a uniform grid over [0, 1].

    Cut proximity anywhere on the grid is reported through
    ``min_cut_distance`` (and ``valid()``) rather than raised, so invalid
    paths can be inspected.
    """
    if n_grid < 2:
        raise ValueError("n_grid must be at least 2")
    grid = np.linspace(0.0, 1.0, n_grid)
    norms = np.empty(n_grid)
    cut = np.inf
    for i, s in enumerate(grid):
        phases = np.angle(np.linalg.eigvals(_path_point(x, y, s)))
        norms[i] = np.linalg.norm(phases)
        cut = min(cut, float(np.min(np.pi - np.abs(phases))))
    return PathTrace(grid, norms, cut)


def conjecture_scan(ha, k_ratio: float, t: float, n_samples: int, seed: int,
                    traceless: bool = True) -> ConjectureScan:
    """Compare ||log(e^{i hb t} e^{-i ha t})||_F / t over random fixed-norm
    Hermitian hb against the anti-aligned choice hb = -k_ratio * ha.

    ``ha`` is trace-projected when ``traceless`` (the default, matching the
    setting of the maximality statement); samples are Gaussian Hermitian,
    trace-projected alike, and rescaled to k_ratio times the norm of ha.
    Raises ``CutProximityError`` if the product generator reaches the branch
    cut (reduce t).
    """
    ha = linalg.assert_hermitian(ha, name="ha")
    if k_ratio <= 0.0:
        raise ValueError("k_ratio must be positive")
    if t <= 0.0:
        raise ValueError("t must be positive")
    dim = ha.shape[0]
    if traceless:
        ha = ha - (np.trace(ha) / dim) * np.eye(dim)
    norm_a = linalg.frobenius(ha)
    if norm_a == 0.0:
        raise ValueError("ha must be nonzero after trace projection")
    target = k_ratio * norm_a

    def generator_norm(hb: np.ndarray) -> float:
        prod = linalg.expm_i(-hb, t) @ linalg.expm_i(ha, t)
        return linalg.frobenius(linalg.principal_log_u(prod)) / t

    anti = generator_norm(-k_ratio * ha)
    rng = np.random.default_rng(seed)
    best = 0.0
    for _ in range(n_samples):
        g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        hb = 0.5 * (g + g.conj().T)
        if traceless:
            hb = hb - (np.trace(hb) / dim) * np.eye(dim)
        hb = hb * (target / linalg.frobenius(hb))
        best = max(best, generator_norm(hb))
    return ConjectureScan(dim, float(k_ratio), float(t), int(n_samples), int(seed),
                          float(anti), float(best), float(anti - best))
