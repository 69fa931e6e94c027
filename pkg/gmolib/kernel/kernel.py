"""
The principal-branch kernel y(x) = ln(1 + e^{-2ix}) = ln(2 cos x) - ix
on (-π/2, π/2)
"""

import numpy as np
from ..errors import DomainError
from ..specfun.constants import HALF_PI, LN_2


_QUARTER_PI = 0.5 * HALF_PI


def co_angle(x, lo_gap=None, hi_gap=None, lo=-HALF_PI, hi=HALF_PI):
    """
    π/2 - |x|, replaced by the exact gap to ±π/2 when the caller knows it

    Arguments:
    ---------
    x: np.ndarray
        abscissae
    lo_gap, hi_gap: np.ndarray or None
        distances of x to lo and hi
    lo, hi: float
        interval the gaps refer to
    """
    c = HALF_PI - np.abs(x)
    if hi_gap is not None and hi == HALF_PI:
        c = np.where(x > 0, hi_gap, c)
    if lo_gap is not None and lo == -HALF_PI:
        c = np.where(x < 0, lo_gap, c)
    return c


def log_cos(x, c=None):
    """
    ln(cos x) for |x| < π/2, accurate near 0 and near ±π/2

    Near 0 it is log1p(-2 sin²(x/2)); elsewhere ln(sin c) with the
    co-angle c = π/2 - |x|.
    """
    x = np.asarray(x, dtype=np.float64)
    c = HALF_PI - np.abs(x) if c is None else c
    s = np.sin(0.5 * x)
    with np.errstate(divide='ignore', invalid='ignore'):
        return np.where(np.abs(x) < _QUARTER_PI,
                        np.log1p(-2.0 * s * s),
                        np.log(np.sin(c)))


def log_2cos(x, c=None):
    """L(x) = ln(2 cos x)"""
    return LN_2 + log_cos(x, c)


def kernel(x, c=None):
    """
    Vectorised kernel

    Returns
    -------
    L: np.ndarray
        ln(2 cos x)
    y: np.ndarray
        L - ix
    """
    x = np.asarray(x, dtype=np.float64)
    L = log_2cos(x, c)
    return L, L - 1j * x


def principal_log(x):
    """
    ln(1 + e^{-2ix}) on the principal branch, i.e. ln(2 cos x) - ix

    Raises
    ------
    DomainError: |x| >= π/2
    """
    x = float(x)
    if not abs(x) < HALF_PI:
        raise DomainError("principal_log needs |x| < π/2, got {}".format(x))
    return complex(log_2cos(np.array([x]))[0], -x)


class KernelPoint(object):
    """
    Kernel at one abscissa

    Parameters:
    -----------
    x: float
        abscissa, |x| < π/2
    """

    def __init__(self, x):
        self.y = principal_log(x)
        self.x = float(x)
        self.L = self.y.real

    def __repr__(self):
        return "x: {x}, L: {L}, y: {y}".format(**self.__dict__)


def conjugate_symmetry_check(f, samples=64, half_width=HALF_PI, tol=1e-12,
                             seed=0):
    """
    True iff f(-x) = conj(f(x)) within tol at `samples` pseudo-random points
    of (0, half_width)

    The comparison is relative to max(1, |f(x)|).
    """
    rng = np.random.RandomState(seed)
    x = rng.uniform(0.0, half_width, size=int(samples))
    x = x[x > 0]
    with np.errstate(all='ignore'):
        fp = np.asarray(f(x), dtype=np.complex128) * np.ones_like(x)
        fm = np.asarray(f(-x), dtype=np.complex128) * np.ones_like(x)
    scale = np.maximum(1.0, np.abs(fp))
    return bool(np.all(np.abs(fm - np.conj(fp)) <= tol * scale))
