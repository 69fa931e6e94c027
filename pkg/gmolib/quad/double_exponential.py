"""
Double-exponential quadrature

* tanh-sinh on finite intervals with (integrable) endpoint singularities
* exp-sinh on [lo, inf)

Both rules run the trapezoidal sum in the transformed variable t and halve
the step until two successive levels agree. Abscissae are built from their
distance to the nearest end so that the integrand never sees the end
itself and gap-aware integrands get that distance to full relative
precision.
"""

import math
import numpy as np
from ..errors import ConvergenceError
from ..specfun.constants import EPS, HALF_PI
from .base import QuadConfig, QuadResult, evaluate


# Largest |t|: keeps every gap and weight above the smallest normal double
_T_MAX_TANH_SINH = math.asinh(690.0 / math.pi)
_T_MAX_EXP_SINH = math.asinh(690.0 / HALF_PI)
_MIN_LEVEL = 3
_ROUNDOFF = 50.0 * EPS


def _tanh_sinh(lo, hi):
    half = 0.5 * (hi - lo)

    def transform(t):
        s = HALF_PI * np.sinh(t)
        ch = np.cosh(s)
        lo_gap = half * np.exp(s) / ch
        hi_gap = half * np.exp(-s) / ch
        x = np.where(t < 0, lo + lo_gap, hi - hi_gap)
        w = half * HALF_PI * np.cosh(t) / (ch * ch)
        return x, w, lo_gap, hi_gap
    return transform


def _exp_sinh(lo):
    def transform(t):
        e = np.exp(HALF_PI * np.sinh(t))
        w = e * HALF_PI * np.cosh(t)
        return lo + e, w, e, np.full_like(e, np.inf)
    return transform


def _abscissae(level, t_max):
    h = 2.0 ** (-level)
    m = int(math.floor(t_max / h))
    k = np.arange(-m, m + 1)
    if level > 0:
        k = k[k % 2 != 0]
    return h, k * h


def _level_sum(f, transform, t_max, cfg):
    """
    Trapezoidal sums at steps 1, 1/2, 1/4, ... on [-t_max, t_max]

    Non-finite values at |t| >= 1 truncate that tail for all later
    levels; isolated non-finite values at |t| < 1 are dropped.
    """
    total = 0j
    total_abs = 0.0
    n_evals = 0
    cut_lo, cut_hi = -np.inf, np.inf
    previous = None
    value, err = 0j, np.inf
    for level in range(cfg.max_level + 1):
        h, t = _abscissae(level, t_max)
        t = t[(t > cut_lo) & (t < cut_hi)]
        with np.errstate(all='ignore'):
            x, w, lo_gap, hi_gap = transform(t)
        fx = evaluate(f, x, lo_gap, hi_gap)
        n_evals += t.size
        with np.errstate(all='ignore'):
            wf = w * fx
        bad = ~np.isfinite(wf)
        if np.any(bad):
            tb = t[bad]
            if np.any(tb >= 1.0):
                cut_hi = min(cut_hi, tb[tb >= 1.0].min())
            if np.any(tb <= -1.0):
                cut_lo = max(cut_lo, tb[tb <= -1.0].max())
            keep = ~bad & (t > cut_lo) & (t < cut_hi)
            wf = np.where(keep, wf, 0.0)
        total += np.sum(wf)
        total_abs += np.sum(np.abs(wf))
        value = h * total
        if previous is not None:
            err = max(abs(value - previous), _ROUNDOFF * h * total_abs)
            if level >= _MIN_LEVEL and err <= cfg.tolerance(value):
                return QuadResult(value, err, n_evals, True)
        if n_evals > cfg.max_evals:
            raise ConvergenceError(
                "Evaluation budget exhausted",
                QuadResult(value, err, n_evals, False))
        previous = value
    raise ConvergenceError(
        "Step refinement cap reached",
        QuadResult(value, err, n_evals, False))


def integrate_de(f, lo, hi, cfg=None):
    """
    tanh-sinh quadrature of f over [lo, hi]

    f may diverge integrably at either end.

    Arguments:
    ---------
    f: callable
        vectorised integrand; if it has `gap_aware` set it is called as
        f(x, lo_gap=..., hi_gap=...)
    lo, hi: float
        finite interval, lo < hi
    cfg: QuadConfig, optional
        tolerances and budget

    Returns
    -------
    result: QuadResult
    """
    cfg = QuadConfig() if cfg is None else cfg
    assert lo < hi, "Empty interval [{}, {}]".format(lo, hi)
    return _level_sum(f, _tanh_sinh(lo, hi), _T_MAX_TANH_SINH, cfg)


def integrate_semi_infinite(f, lo, cfg=None):
    """
    exp-sinh quadrature of f over [lo, inf)

    f may have an integrable singularity at lo and must decay at infinity.
    """
    cfg = QuadConfig() if cfg is None else cfg
    return _level_sum(f, _exp_sinh(lo), _T_MAX_EXP_SINH, cfg)
