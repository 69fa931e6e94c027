"""
Globally adaptive Gauss-Kronrod (7, 15) quadrature for complex integrands
"""

import heapq
import numpy as np
from ..errors import ConvergenceError
from ..specfun.constants import EPS
from .base import QuadConfig, QuadResult, evaluate


# QUADPACK qk15 abscissae and weights, outermost node first
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327])


def _full_rule():
    nodes = np.concatenate([-_XGK[:7], [0.0], _XGK[6::-1]])
    wk = np.concatenate([_WGK[:7], [_WGK[7]], _WGK[6::-1]])
    wg_half = np.zeros(7)
    wg_half[1::2] = _WG[:3]
    wg = np.concatenate([wg_half, [_WG[3]], wg_half[::-1]])
    return nodes, wk, wg


NODES, WEIGHTS_KRONROD, WEIGHTS_GAUSS = _full_rule()
_ROUNDOFF = 50.0 * EPS


def gk15(f, a, b, lo=None, hi=None):
    """
    Apply the embedded (7, 15) pair on [a, b]

    Arguments:
    ---------
    f: callable
        vectorised integrand
    a, b: float
        panel
    lo, hi: float, optional
        ends of the whole interval; gaps handed to gap-aware integrands
        are measured from them

    Returns
    -------
    value: complex
        Kronrod estimate
    err: float
        |Kronrod - Gauss| with a round-off floor
    """
    lo = a if lo is None else lo
    hi = b if hi is None else hi
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    x = center + half * NODES
    lo_gap = (a - lo) + half * (1.0 + NODES)
    hi_gap = (hi - b) + half * (1.0 - NODES)
    fx = evaluate(f, x, lo_gap, hi_gap)
    if not np.all(np.isfinite(fx)):
        raise ConvergenceError(
            "Non-finite integrand value on [{}, {}]".format(a, b))
    kronrod = half * np.dot(WEIGHTS_KRONROD, fx)
    gauss = half * np.dot(WEIGHTS_GAUSS, fx)
    resabs = half * np.dot(WEIGHTS_KRONROD, np.abs(fx))
    err = max(abs(kronrod - gauss), _ROUNDOFF * resabs)
    return complex(kronrod), float(err)


def integrate_finite(f, lo, hi, cfg=None):
    """
    Integrate f over [lo, hi] by global adaptive bisection

    The panel with the largest error estimate is split until the summed
    estimate meets cfg.

    Arguments:
    ---------
    f: callable
        vectorised integrand, ndarray -> complex ndarray
    lo, hi: float
        finite interval, lo < hi
    cfg: QuadConfig, optional
        tolerances and budget

    Returns
    -------
    result: QuadResult

    Raises
    ------
    ConvergenceError: budget or depth exhausted; carries the partial result
    """
    cfg = QuadConfig() if cfg is None else cfg
    assert lo < hi, "Empty interval [{}, {}]".format(lo, hi)
    value, err = gk15(f, lo, hi, lo, hi)
    n_evals = NODES.size
    heap = [(-err, 0, lo, hi, value, err, 0)]
    counter = 1
    total, total_err = value, err
    while total_err > cfg.tolerance(total):
        if n_evals + 2 * NODES.size > cfg.max_evals:
            raise ConvergenceError(
                "Evaluation budget exhausted",
                QuadResult(total, total_err, n_evals, False))
        _, _, a, b, v, e, depth = heapq.heappop(heap)
        if depth >= cfg.max_depth:
            heapq.heappush(heap, (-e, counter, a, b, v, e, depth))
            raise ConvergenceError(
                "Maximum subdivision depth reached",
                QuadResult(total, total_err, n_evals, False))
        m = 0.5 * (a + b)
        v1, e1 = gk15(f, a, m, lo, hi)
        v2, e2 = gk15(f, m, b, lo, hi)
        n_evals += 2 * NODES.size
        for (pa, pb, pv, pe) in ((a, m, v1, e1), (m, b, v2, e2)):
            heapq.heappush(heap, (-pe, counter, pa, pb, pv, pe, depth + 1))
            counter += 1
        total += v1 + v2 - v
        total_err += e1 + e2 - e
    # Resum to drop the drift of the running totals
    total = complex(np.sum([item[4] for item in heap]))
    total_err = float(np.sum([item[5] for item in heap]))
    return QuadResult(total, total_err, n_evals, True)
