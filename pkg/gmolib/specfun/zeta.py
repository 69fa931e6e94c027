"""
Hurwitz and Riemann zeta functions by Euler-Maclaurin summation
"""

import math
import numpy as np
from scipy.special import bernoulli, factorial
from ..errors import DomainError, PoleError
from .constants import POLE_TOL


_MAX_ORDER = 15
_J = np.arange(1, _MAX_ORDER + 1)
# B_2j / (2j)! for j = 1..15, i.e. through B_30
_BERNOULLI_RATIO = bernoulli(2 * _MAX_ORDER)[2::2] / factorial(2 * _J)
_STOP = 1e-17
_FD_STEP = 1e-5


def _n_terms(s, q):
    return max(15, math.ceil(abs(s)) + 10, math.ceil(10.0 - q))


def hurwitz_zeta(s, q):
    """
    Hurwitz zeta function ζ(s, q) = Σ_{k>=0} (q + k)^{-s}, analytically
    continued to every complex s != 1

    Arguments:
    ---------
    s: complex
        exponent
    q: float
        shift, q > 0

    Returns
    -------
    value: complex
        ζ(s, q)
    """
    s = complex(s)
    q = float(q)
    if abs(s - 1.0) < POLE_TOL:
        raise PoleError("ζ(s, q) has a pole at s = 1")
    if not q > 0:
        raise DomainError("hurwitz_zeta needs q > 0, got {}".format(q))
    n = _n_terms(s, q)
    log_k = np.log(q + np.arange(n))
    head = np.sum(np.exp(-s * log_k))
    a = q + n
    log_a = math.log(a)
    a_s = np.exp(-s * log_a)
    total = head + a * a_s / (s - 1.0) + 0.5 * a_s
    # Bernoulli corrections B_2j/(2j)! (s)_{2j-1} a^{-s-2j+1}
    rising = s
    power = a_s / a
    inv_a2 = 1.0 / (a * a)
    for j, ratio in enumerate(_BERNOULLI_RATIO, start=1):
        term = ratio * rising * power
        total += term
        if abs(term) < _STOP * abs(total):
            break
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        power *= inv_a2
    return complex(total)


def riemann_zeta(s):
    """Riemann zeta function ζ(s) = ζ(s, 1)"""
    return hurwitz_zeta(s, 1.0)


def hurwitz_zeta_s_derivative_at_0(q):
    """
    ∂ζ(s, q)/∂s at s = 0 by a central difference of step 1e-5

    Equals ln Γ(q) - ln(2π)/2 (Lerch).
    """
    q = float(q)
    if not q > 0:
        raise DomainError("derivative needs q > 0, got {}".format(q))
    h = _FD_STEP
    return ((hurwitz_zeta(h, q) - hurwitz_zeta(-h, q)) / (2 * h)).real
