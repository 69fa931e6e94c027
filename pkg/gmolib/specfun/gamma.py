"""
Gamma-function family: ln|Γ(z)| for complex z, ln Γ(x) for real x,
1/Γ(z) and the digamma function ψ(x).

All values come from Stirling's asymptotic series, evaluated after a
recurrence shift to Re z >= 10; the left half-plane is reached through
the reflection formula.
"""

import numpy as np
from scipy.special import bernoulli
from ..errors import DomainError, PoleError
from .constants import LN_2PI, LN_PI, PI, POLE_TOL


_N_TERMS = 10
_SHIFT = 10.0
_B2K = bernoulli(2 * _N_TERMS)[2::2]
_K = np.arange(1, _N_TERMS + 1)
# B_2k / (2k (2k-1)) for ln Γ and B_2k / 2k for ψ
_STIRLING = _B2K / (2 * _K * (2 * _K - 1))
_DIGAMMA = _B2K / (2 * _K)


def _as_complex(z):
    return np.asarray(z, dtype=np.complex128)


def is_pole(z, tol=POLE_TOL):
    """True when z is within `tol` of 0, -1, -2, ..."""
    z = complex(z)
    if abs(z.imag) > tol or z.real > tol:
        return False
    return abs(z.real - round(z.real)) <= tol


def _shift_count(re):
    return np.maximum(0, np.ceil(_SHIFT - re)).astype(np.int64)


def _stirling(w):
    """Complex ln Γ(w) from the asymptotic series; needs Re w >= 10"""
    winv = 1.0 / w
    winv2 = winv * winv
    series = np.zeros_like(w)
    term = winv
    for coef in _STIRLING:
        series = series + coef * term
        term = term * winv2
    return (w - 0.5) * np.log(w) - w + 0.5 * LN_2PI + series


def _log_gamma_right(z):
    """
    A complex logarithm of Γ(z) for Re z >= 0.5

    The imaginary part is not branch tracked; only its value modulo 2π
    is meaningful.
    """
    z = _as_complex(z)
    n = _shift_count(z.real)
    w = z.copy()
    acc = np.zeros_like(z)
    for k in range(int(n.max(initial=0))):
        mask = k < n
        acc[mask] += np.log(w[mask])
        w[mask] += 1.0
    return _stirling(w) - acc


def _log_abs_sin_pi(z):
    """ln|sin(πz)| without overflow for large |Im z|"""
    u, v = z.real, z.imag
    f = u - np.round(u)
    pv = PI * np.abs(v)
    with np.errstate(over='ignore', invalid='ignore'):
        near = np.log(np.hypot(np.abs(np.sin(PI * f)) * np.cosh(pv),
                               np.abs(np.cos(PI * f)) * np.sinh(pv)))
    return np.where(pv > 350.0, pv - np.log(2.0), near)


def _log_abs_gamma(z):
    """
    Vectorised ln|Γ(z)| for complex arrays

    No pole check: a pole maps to +inf.
    """
    z = _as_complex(z)
    out = np.empty(z.shape, dtype=np.float64)
    right = z.real >= 0.5
    if np.any(right):
        out[right] = _log_gamma_right(z[right]).real
    left = ~right
    if np.any(left):
        zl = z[left]
        with np.errstate(divide='ignore'):
            out[left] = LN_PI - _log_abs_sin_pi(zl) \
                - _log_gamma_right(1.0 - zl).real
    return out


def log_abs_gamma(z):
    """
    ln|Γ(z)| for complex z

    Arguments:
    ---------
    z: complex
        argument; must not be a non-positive integer

    Returns
    -------
    value: float
        ln|Γ(z)|
    """
    if is_pole(z):
        raise PoleError("Γ has a pole at z = {}".format(z))
    return float(_log_abs_gamma(np.array([z]))[0])


def log_gamma_real(x):
    """ln Γ(x) for x > 0"""
    x = float(x)
    if not x > 0:
        raise DomainError("log_gamma_real needs x > 0, got {}".format(x))
    return float(_log_abs_gamma(np.array([x]))[0])


def log_gamma_complex(z):
    """
    A complex logarithm of Γ(z), off the poles

    Computed as the principal value of -log(1/Γ(z)); this is the logarithm
    used for complex exponents, never for branch-sensitive sums.
    """
    return -np.log(reciprocal_gamma(z))


def reciprocal_gamma(z):
    """
    1/Γ(z) for complex z; exactly 0 at z = 0, -1, -2, ...
    """
    z = complex(z)
    if is_pole(z):
        return 0j
    if z.real >= 0.5:
        return complex(np.exp(-_log_gamma_right(np.array([z]))[0]))
    # 1/Γ(z) = sin(πz) Γ(1-z) / π
    lg = _log_gamma_right(np.array([1.0 - z]))[0]
    return complex(np.sin(PI * z) / PI * np.exp(lg))


def _digamma(x):
    """Vectorised ψ(x) for positive real arrays"""
    x = np.asarray(x, dtype=np.float64)
    n = _shift_count(x)
    w = x.copy()
    acc = np.zeros_like(x)
    for k in range(int(n.max(initial=0))):
        mask = k < n
        acc[mask] -= 1.0 / w[mask]
        w[mask] += 1.0
    z = 1.0 / (w * w)
    series = np.zeros_like(w)
    for coef in _DIGAMMA[::-1]:
        series = (series + coef) * z
    with np.errstate(invalid='ignore'):
        return acc + np.log(w) - 0.5 / w - series


def digamma(x):
    """ψ(x) = Γ'(x)/Γ(x) for x > 0"""
    x = float(x)
    if not x > 0:
        raise DomainError("digamma needs x > 0, got {}".format(x))
    return float(_digamma(np.array([x]))[0])
