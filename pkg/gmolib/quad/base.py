"""
Shared pieces of the quadrature engine: configuration, results and
integrand evaluation
"""

import numpy as np


class QuadConfig(object):
    """
    Accuracy and budget of a quadrature run

    Parameters:
    -----------
    abs_tol: float, optional, default=1e-12
        absolute tolerance
    rel_tol: float, optional, default=1e-12
        relative tolerance
    max_evals: int, optional, default=200000
        integrand evaluations allowed per interval
    max_depth: int, optional, default=50
        bisection depth allowed in the adaptive rule
    max_level: int, optional, default=12
        step halvings allowed in the double-exponential rules
    """

    def __init__(self, abs_tol=1e-12, rel_tol=1e-12, max_evals=200000,
                 max_depth=50, max_level=12):
        assert abs_tol > 0, "abs_tol must be positive"
        assert rel_tol > 0, "rel_tol must be positive"
        assert max_evals >= 100, "max_evals must be at least 100"
        assert max_depth >= 5, "max_depth must be at least 5"
        assert max_level >= 3, "max_level must be at least 3"
        self.abs_tol = float(abs_tol)
        self.rel_tol = float(rel_tol)
        self.max_evals = int(max_evals)
        self.max_depth = int(max_depth)
        self.max_level = int(max_level)

    def tolerance(self, value):
        """Error allowed for an integral of the given size"""
        return max(self.abs_tol, self.rel_tol * abs(value))

    def scaled(self, factor):
        """Copy with both tolerances multiplied by factor"""
        return QuadConfig(self.abs_tol * factor, self.rel_tol * factor,
                          self.max_evals, self.max_depth, self.max_level)

    def to_dict(self):
        return dict(self.__dict__)

    def __repr__(self):
        s = "abs_tol: {abs_tol}, rel_tol: {rel_tol}, " \
            "max_evals: {max_evals}, max_depth: {max_depth}, " \
            "max_level: {max_level}"
        return s.format(**self.__dict__)


class QuadResult(object):
    """
    Outcome of a quadrature run

    Parameters:
    -----------
    value: complex
        the integral
    err_est: float
        absolute error estimate
    n_evals: int
        number of integrand evaluations
    converged: boolean
        True iff err_est met the requested tolerance
    """

    def __init__(self, value, err_est, n_evals, converged):
        self.value = complex(value)
        self.err_est = float(err_est)
        self.n_evals = int(n_evals)
        self.converged = bool(converged)

    def __add__(self, other):
        return QuadResult(self.value + other.value,
                          self.err_est + other.err_est,
                          self.n_evals + other.n_evals,
                          self.converged and other.converged)

    def __repr__(self):
        s = "value: {value}, err_est: {err_est}, n_evals: {n_evals}, " \
            "converged: {converged}"
        return s.format(**self.__dict__)


def evaluate(f, x, lo_gap=None, hi_gap=None):
    """
    Evaluate an integrand on an array of abscissae

    Gap-aware integrands (attribute `gap_aware`) also receive the distances
    of every abscissa to the ends of the interval, as computed by the
    caller's transform. Floating point warnings are silenced; non-finite
    values are handled by the caller.

    Returns
    -------
    fx: np.ndarray
        complex values, same shape as x
    """
    with np.errstate(all='ignore'):
        if getattr(f, 'gap_aware', False):
            fx = f(x, lo_gap=lo_gap, hi_gap=hi_gap)
        else:
            fx = f(x)
    fx = np.asarray(fx, dtype=np.complex128)
    if fx.shape != np.shape(x):
        fx = np.array(np.broadcast_to(fx, np.shape(x)))
    return fx
