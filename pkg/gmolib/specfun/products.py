"""
Infinite and partial products: the Euler function (r; r)_∞ and the
Gauss product approximants of Γ(x)
"""

import numba as nb
import numpy as np
from ..errors import DomainError


_TAIL_BOUND = 1e-17


@nb.njit(cache=True)
def _euler_product(r, cutoff):
    prod = 1.0
    rn = r
    bound = rn / (1.0 - r)
    while bound >= cutoff:
        prod *= 1.0 - rn
        rn *= r
        bound = rn / (1.0 - r)
    return prod, bound


@nb.njit(cache=True)
def _log_gauss_product(x, n):
    acc = x * np.log(n) - np.log(x)
    for k in range(1, n + 1):
        acc -= np.log1p(x / k)
    return acc


def euler_product(r, return_bound=False):
    """
    ∏_{n>=1} (1 - r^n), truncated once the geometric tail bound
    r^n / (1 - r) drops below 1e-17

    Arguments:
    ---------
    r: float
        ratio, 0 <= r < 1
    return_bound: boolean, optional, default=False
        also return the tail bound at truncation

    Returns
    -------
    prod: float
        the truncated product
    bound: float
        tail bound (only if return_bound is True)
    """
    r = float(r)
    if not 0.0 <= r < 1.0:
        raise DomainError("euler_product needs 0 <= r < 1, got {}".format(r))
    prod, bound = _euler_product(r, _TAIL_BOUND)
    if return_bound:
        return prod, bound
    return prod


def partial_euler_product(r, n_terms):
    """∏_{n=1}^{N} (1 - r^n)"""
    r = float(r)
    if not 0.0 <= r < 1.0:
        raise DomainError("partial product needs 0 <= r < 1, got {}".format(r))
    powers = r ** np.arange(1, int(n_terms) + 1)
    return float(np.prod(1.0 - powers))


def gauss_product_gamma(x, n):
    """
    n-th Gauss product approximant n! n^x / (x (x+1) ... (x+n)) of Γ(x),
    accumulated in log space
    """
    x = float(x)
    n = int(n)
    if not x > 0:
        raise DomainError("gauss_product_gamma needs x > 0, got {}".format(x))
    assert n >= 1, "Gauss product needs n >= 1"
    return float(np.exp(_log_gauss_product(x, n)))
