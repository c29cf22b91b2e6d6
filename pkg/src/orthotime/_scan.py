"""First-root detection on a sampled scalar curve.

Shared between the closed-form qubit criterion and the generic eigenphase-gap
engine.  A root can show up in two ways along a grid scan that starts
positive: as a sign change (refined by bisection) or as a dip that touches
zero between samples without a nonpositive sample (hunted down by recursive
subsampling around the running minimum).  Touch hunting is only attempted
where the sampled value is within one Lipschitz step of zero, which is the
widest a sub-grid excursion to zero can hide.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class RootHit:
    t: float
    value: float
    kind: str  # "crossing" or "touch"


def _scalar(f_batch):
    def f(x: float) -> float:
        return float(np.asarray(f_batch(np.array([x])))[0])

    return f


def bisect_root(f, lo: float, hi: float, f_hi: float, xtol: float, ftol: float,
                max_iter: int = 200) -> tuple[float, float]:
    """Bisection on [lo, hi] with f(lo) > 0 >= f(hi).

    Keeps halving until the interval is below ``xtol`` and the best sampled
    |f| is below ``ftol`` (or floating point runs out); returns the evaluated
    point with the smallest |f|.
    """
    best_t, best_f = hi, f_hi
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if not (lo < mid < hi):
            break
        fm = f(mid)
        if abs(fm) < abs(best_f):
            best_t, best_f = mid, fm
        if fm <= 0.0:
            hi = mid
        else:
            lo = mid
        if hi - lo <= xtol and abs(best_f) <= ftol:
            break
    return best_t, best_f


def _touch_hunt(f_batch, lo: float, hi: float, xtol: float, ftol: float,
                touch_tol: float, points: int = 33, max_rounds: int = 40):
    """Refine a bracket suspected of dipping to (or through) zero.

    Subsamples the bracket and recentres on the minimum.  Any nonpositive
    sample hands over to crossing bisection; otherwise the dip counts as a
    root only when the refined minimum is <= ``touch_tol``.
    """
    best_t = best_f = None
    for _ in range(max_rounds):
        ts = np.linspace(lo, hi, points)
        fs = np.asarray(f_batch(ts), dtype=float)
        neg = np.nonzero(fs <= 0.0)[0]
        if neg.size:
            j = max(int(neg[0]), 1)
            t, v = bisect_root(_scalar(f_batch), float(ts[j - 1]), float(ts[j]),
                               float(fs[j]), xtol, ftol)
            return RootHit(t, v, "crossing")
        m = int(np.argmin(fs))
        best_t, best_f = float(ts[m]), float(fs[m])
        width_floor = max(xtol, 4.0 * np.finfo(float).eps * max(abs(hi), 1.0))
        if hi - lo <= width_floor:
            break
        lo, hi = float(ts[max(m - 1, 0)]), float(ts[min(m + 1, points - 1)])
    if best_f is not None and best_f <= touch_tol:
        return RootHit(best_t, best_f, "touch")
    return None


def first_root(f_batch, ts, fs, lipschitz: float | None = None,
               xtol: float = 1e-12, ftol: float = 1e-11,
               touch_tol: float = 1e-9):
    """Earliest root of a sampled curve that starts strictly positive.

    ``f_batch`` maps an array of abscissae to an array of values and must be
    consistent with the samples ``fs`` taken on the uniform grid ``ts``.
    When ``lipschitz`` is given, positive local minima within
    ``lipschitz * step`` of zero are inspected as potential sub-grid touches.
    Returns a RootHit or None.
    """
    ts = np.asarray(ts, dtype=float)
    fs = np.asarray(fs, dtype=float)
    n = ts.size
    if n < 2:
        return None
    if fs[0] <= 0.0:
        raise ValueError("scan must start at a strictly positive sample")
    step = (ts[-1] - ts[0]) / (n - 1)
    window = lipschitz * step if lipschitz is not None else None
    scalar_f = _scalar(f_batch)
    for k in range(1, n):
        if window is not None and k >= 2:
            j = k - 1
            if (0.0 < fs[j] <= window and fs[j - 1] >= fs[j] <= fs[k]
                    and fs[j - 1] > 0.0 and fs[k] > 0.0):
                hit = _touch_hunt(f_batch, float(ts[j - 1]), float(ts[k]),
                                  xtol, ftol, touch_tol)
                if hit is not None:
                    return hit
        if fs[k] <= 0.0:
            t, v = bisect_root(scalar_f, float(ts[k - 1]), float(ts[k]),
                               float(fs[k]), xtol, ftol)
            return RootHit(t, v, "crossing")
    # One-sided candidate at the horizon endpoint (tangency at the boundary).
    if window is not None and 0.0 < fs[-1] <= window and fs[-1] <= fs[-2]:
        hit = _touch_hunt(f_batch, float(ts[-2]), float(ts[-1]), xtol, ftol, touch_tol)
        if hit is not None:
            return hit
    return None
