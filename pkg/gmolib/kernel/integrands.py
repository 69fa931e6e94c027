"""
Left-hand-side integrands of the catalog cases

Every integrand is an `Integrand`: a vectorised callable over its declared
interval that computes the kernel from exact endpoint gaps when the
quadrature supplies them. Symmetric complex forms live on [-π/2, π/2] and
are split at 0, where the principal logarithm of a shifted kernel may
jump; printed real forms live on [0, π/2]; Laplace and Mellin forms on
[0, inf).
"""

import math
import numpy as np
from scipy.special import factorial
from ..errors import DomainError
from ..specfun.constants import HALF_PI, LN_2, PI
from ..specfun.gamma import _digamma, _log_abs_gamma
from .cases import CaseId, check_domain
from .kernel import co_angle, log_cos


SYMMETRIC = (-HALF_PI, HALF_PI)
HALF = (0.0, HALF_PI)
SEMI_INFINITE = (0.0, np.inf)


class Integrand(object):
    """
    Vectorised integrand with its interval and singularity tags

    Parameters:
    -----------
    func: callable
        func(x, lc) for kernel integrands, with lc = ln(cos x);
        func(y) otherwise
    interval: tuple
        (lo, hi); hi may be inf
    breakpoints: tuple, optional, default=()
        interior points where the integrand is split
    singular_ends: tuple, optional, default=()
        ends ('lo', 'hi') where the integrand or a derivative blows up
    uses_kernel: boolean, optional, default=True
        evaluate ln(cos x) for func
    real_valued: boolean, optional, default=True
        the integral is real; its imaginary part must vanish
    """
    gap_aware = True

    def __init__(self, func, interval, breakpoints=(), singular_ends=(),
                 uses_kernel=True, real_valued=True, name=''):
        self.func = func
        self.lo, self.hi = float(interval[0]), float(interval[1])
        self.breakpoints = tuple(
            b for b in breakpoints if self.lo < b < self.hi)
        self.singular_ends = tuple(singular_ends)
        self.uses_kernel = uses_kernel
        self.real_valued = real_valued
        self.name = name

    @property
    def interval(self):
        return (self.lo, self.hi)

    @property
    def semi_infinite(self):
        return math.isinf(self.hi)

    @property
    def symmetric(self):
        return self.lo == -self.hi

    def __call__(self, x, lo_gap=None, hi_gap=None):
        x = np.asarray(x, dtype=np.float64)
        if not self.uses_kernel:
            return self.func(x)
        c = co_angle(x, lo_gap, hi_gap, self.lo, self.hi)
        return self.func(x, log_cos(x, c))

    def restrict(self, lo, hi):
        """Same integrand on [lo, hi]; the kernel gaps refer to [lo, hi]"""
        singular = []
        if 'lo' in self.singular_ends and lo == self.lo:
            singular.append('lo')
        if 'hi' in self.singular_ends and hi == self.hi:
            singular.append('hi')
        return Integrand(self.func, (lo, hi), self.breakpoints, singular,
                         self.uses_kernel, self.real_valued, self.name)

    def pieces(self):
        """Integrands of the sub-intervals between breakpoints"""
        edges = (self.lo,) + self.breakpoints + (self.hi,)
        if len(edges) == 2:
            return [self]
        return [self.restrict(a, b) for a, b in zip(edges[:-1], edges[1:])]

    def __repr__(self):
        return "name: {}, interval: [{}, {}], breakpoints: {}, " \
            "singular_ends: {}".format(self.name, self.lo, self.hi,
                                       self.breakpoints, self.singular_ends)


def _hypot_ratio(num, x, s):
    """num / (x² + s²) without underflow of the denominator"""
    h = np.hypot(x, s)
    return (num / h) / h


def _log_x2_s2(x, s):
    """ln(x² + s²)"""
    return 2.0 * np.log(np.hypot(x, s))


def _y(x, lc):
    return (LN_2 + lc) - 1j * x


def _shift(lc, a):
    """ln(2 e^{-a} cos x) = (ln 2 - a) + ln cos x"""
    return (LN_2 - a) + lc


def _lambda(r):
    return -math.log(r)


# J(β) integrand: series in y for small y, literal form above
_J_ORDERS = np.arange(3, 41)


def _j_coefficients(beta):
    c = beta + 0.5
    m = _J_ORDERS
    nb = -beta
    return (nb ** (m - 1) / factorial(m - 1)
            + c * nb ** (m - 2) / factorial(m - 2)
            - 1.0 / factorial(m))


def j_integrand(beta):
    """
    Integrand of J(β) = ∫_0^∞ (1/y)[e^{-βy}/(e^y - 1) - 1/(y(1 + y(β+1/2)))] dy

    Below y0 = 0.25/(1 + |β|) the bracket is summed as a power series to
    avoid cancellation.
    """
    beta = float(beta)
    c = beta + 0.5
    coef = _j_coefficients(beta)[::-1]
    threshold = 0.25 / (1.0 + abs(beta))

    def func(y):
        ys = np.minimum(y, threshold)
        poly = np.zeros_like(ys)
        for k in coef:
            poly = poly * ys + k
        bernoulli_factor = np.where(ys > 0, ys / np.expm1(ys), 1.0)
        small = poly * bernoulli_factor / (1.0 + c * ys)
        yl = np.maximum(y, threshold)
        large = (np.exp(-(beta + 1.0) * yl) / -np.expm1(-yl)
                 - 1.0 / (yl * (1.0 + c * yl))) / yl
        return np.where(y < threshold, small, large)
    return Integrand(func, SEMI_INFINITE, singular_ends=(), uses_kernel=False,
                     name='J')


def m_integrand(a):
    """(4/π) x² / (x² + ln²(2 e^{-a} cos x)) on [0, π/2]"""
    a = float(a)

    def func(x, lc):
        return (4.0 / PI) * _hypot_ratio(x * x, x, _shift(lc, a))
    return Integrand(func, HALF, singular_ends=('hi',), name='M')


def footnote_real_integrand(a):
    """Real fold x² / (x² + ln²(2 e^{-a} cos x)) on [0, π/2]"""
    a = float(a)

    def func(x, lc):
        return _hypot_ratio(x * x, x, _shift(lc, a))
    return Integrand(func, HALF, singular_ends=('hi',), name='fold')


def telescoped_integrand(r, n_terms):
    """
    Σ_{n=1}^{N} 2 ln|(ln(2cos x) - nλ + ix) / (ln(2cos x) + nλ + ix)|
    on [0, π/2], λ = -ln r
    """
    lam = _lambda(r)
    shifts = lam * np.arange(1, int(n_terms) + 1)

    def func(x, lc):
        L = LN_2 + lc
        total = np.zeros_like(x)
        for d in shifts:
            total = total + _log_x2_s2(x, L - d) - _log_x2_s2(x, L + d)
        return total
    return Integrand(func, HALF, singular_ends=('hi',), name='telescoped')


def _build(case, p):
    case = CaseId(case)
    sym = dict(breakpoints=(0.0,), singular_ends=('lo', 'hi'))
    half = dict(singular_ends=('hi',))

    if case is CaseId.GMO_M:
        return m_integrand(p.a)

    if case is CaseId.GEN_BETA:
        beta = p.beta

        def func(x, lc):
            y = _y(x, lc)
            return x * np.exp(beta * y) / y / 2j
        return Integrand(func, SYMMETRIC, real_valued=not isinstance(
            beta, complex), **sym)

    if case is CaseId.HURWITZ_REP:
        alpha, beta = p.alpha, p.beta

        def func(x, lc):
            y = _y(x, lc)
            return np.exp(beta * y + alpha * np.log(y))
        return Integrand(func, SYMMETRIC, real_valued=not isinstance(
            alpha, complex), **sym)

    if case is CaseId.ALPHA_M1:
        beta = p.beta

        def func(x, lc):
            y = _y(x, lc)
            return np.exp(beta * y) / y
        return Integrand(func, SYMMETRIC, **sym)

    if case is CaseId.RIEMANN_REP:
        alpha = p.alpha

        def func(x, lc):
            return np.exp((alpha - 1.0) * np.log(_y(x, lc)))
        return Integrand(func, SYMMETRIC, real_valued=not isinstance(
            alpha, complex), **sym)

    if case is CaseId.INT_LOGCOS_RATIO:
        def func(x, lc):
            L = LN_2 + lc
            return _hypot_ratio(L, x, L)
        return Integrand(func, HALF, **half)

    if case is CaseId.INT_LOG_ZERO:
        def func(x, lc):
            return _log_x2_s2(x, LN_2 + lc)
        return Integrand(func, HALF, **half)

    if case is CaseId.INT_ZETA_M1:
        def func(x, lc):
            L = LN_2 + lc
            q = _hypot_ratio(1.0, x, L)
            return (L - x) * (L + x) * q * q
        return Integrand(func, HALF, **half)

    if case in (CaseId.F_LOG, CaseId.G_LOG_COS2X):
        a = p.a
        weight = case is CaseId.G_LOG_COS2X
        ends = ('lo', 'hi') if a == LN_2 else ('hi',)

        def func(x, lc):
            v = _log_x2_s2(x, _shift(lc, a))
            return v * np.cos(2.0 * x) if weight else v
        return Integrand(func, HALF, singular_ends=ends)

    if case in (CaseId.G1_PART, CaseId.G2_PART):
        a = p.a
        sign = -1.0 if case is CaseId.G1_PART else 1.0

        def func(x, lc):
            return 0.5 * np.log(_shift(lc, a) - 1j * x) \
                * np.exp(2j * sign * x)
        return Integrand(func, SYMMETRIC, **sym)

    if case is CaseId.GAMMA_RATIO_R:
        lam = _lambda(p.r)

        def func(x, lc):
            L = LN_2 + lc
            z1 = 1.0 + (L + 1j * x) / lam
            z2 = 1.0 + (1j * x - L) / lam
            return _log_abs_gamma(z1) - _log_abs_gamma(z2)
        return Integrand(func, HALF, **half)

    if case is CaseId.LOGABS_GAMMA_C:
        c = p.c
        ends = ('lo', 'hi') if c == LN_2 else ('hi',)

        def func(x, lc):
            return _log_abs_gamma(((c - LN_2) - lc) + 1j * x)
        return Integrand(func, HALF, singular_ends=ends)

    if case in (CaseId.REM1, CaseId.REM2, CaseId.N_FAMILY):
        d = p.n * _lambda(p.r)

        def func(x, lc):
            L = LN_2 + lc
            below = (L - d) - 1j * x
            above = (L + d) - 1j * x
            if case is CaseId.REM1:
                return np.log(below)
            if case is CaseId.REM2:
                return np.log(above)
            return np.log(below / above)
        return Integrand(func, SYMMETRIC, **sym)

    if case is CaseId.SHIFT_C:
        d = p.n + p.c

        def func(x, lc):
            return np.log(((LN_2 + lc) - d) - 1j * x)
        return Integrand(func, SYMMETRIC, **sym)

    if case is CaseId.LAPLACE_REL:
        a = p.a

        def func(s):
            e = np.exp(-a * s)
            return np.where(e > 0, e * _digamma(s + 1.0), 0.0)
        return Integrand(func, SEMI_INFINITE, uses_kernel=False)

    if case is CaseId.HURWITZDEF:
        alpha, beta = p.alpha, p.beta

        def func(y):
            return np.exp((alpha - 1.0) * np.log(y) - (beta + 1.0) * y) \
                / -np.expm1(-y)
        return Integrand(func, SEMI_INFINITE, singular_ends=('lo',),
                         uses_kernel=False)

    if case is CaseId.J_BETA:
        return j_integrand(p.beta)

    if case is CaseId.RATIONAL_MELLIN:
        alpha, c = p.alpha, p.beta + 0.5

        def func(y):
            return np.exp((alpha - 2.0) * np.log(y)) / (1.0 + c * y)
        return Integrand(func, SEMI_INFINITE, singular_ends=('lo',),
                         uses_kernel=False)

    if case is CaseId.LOBACHEVSKY:
        def func(x, lc):
            return LN_2 + lc
        return Integrand(func, HALF, **half)

    if case is CaseId.FOOTNOTE_EQUIV:
        a = p.a

        def func(x, lc):
            return x / (_shift(lc, a) - 1j * x) / 2j
        return Integrand(func, SYMMETRIC, **sym)

    if case in (CaseId.S3_1, CaseId.S3_2):
        weight = case is CaseId.S3_2

        def func(x, lc):
            v = _log_x2_s2(x, lc)
            return v * np.cos(2.0 * x) if weight else v
        return Integrand(func, HALF, singular_ends=('lo', 'hi'))

    if case is CaseId.S3_3:
        def func(x, lc):
            return _log_x2_s2(x, LN_2 + lc) * np.cos(2.0 * x)
        return Integrand(func, HALF, **half)

    if case is CaseId.S3_4:
        def func(x, lc):
            return _hypot_ratio(lc, x, lc)
        return Integrand(func, HALF, **half)

    if case in (CaseId.S3_5, CaseId.S3_6, CaseId.S3_8):
        a = {CaseId.S3_5: LN_2, CaseId.S3_6: 0.0}.get(case, p.a)

        def func(x, lc):
            return _hypot_ratio(x * np.sin(2.0 * x), x, _shift(lc, a))
        return Integrand(func, HALF, **half)

    if case is CaseId.S3_7:
        a, beta = p.a, p.beta

        def func(x, lc):
            y = _y(x, lc)
            return np.exp(beta * y) / (_shift(lc, a) - 1j * x)
        return Integrand(func, SYMMETRIC, **sym)

    raise DomainError("{} has no quadrature integrand".format(case))


def lhs_integrand(case, p, experimental=False):
    """
    Left-hand-side integrand of a catalog case

    Arguments:
    ---------
    case: CaseId
        identity to build
    p: CaseParams
        parameters; must lie in the case domain
    experimental: boolean, optional, default=False
        admit complex β for GEN_BETA

    Returns
    -------
    integrand: Integrand

    Raises
    ------
    DomainError: p outside the case domain, or the case has no integrand
    """
    check_domain(case, p, experimental)
    integrand = _build(case, p)
    integrand.name = str(CaseId(case))
    return integrand
