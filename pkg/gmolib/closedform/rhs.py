"""
Closed-form right-hand sides of the catalog identities

Removable singularities of the printed formulas are replaced by series
within small windows around them; `RhsValue.limit_branch_used` reports
when that happened. The unit step uses H(0) = 1/2.
"""

import math
import numpy as np
from ..errors import DomainError
from ..kernel.cases import CaseId, check_domain
from ..specfun.constants import EULER_GAMMA, LN_2, LN_2PI, PI
from ..specfun.gamma import (digamma, log_gamma_complex, log_gamma_real,
                             reciprocal_gamma)
from ..specfun.products import euler_product
from ..specfun.zeta import hurwitz_zeta, riemann_zeta


LIMIT_WINDOW = 1e-6
LOG_WINDOW = 1e-8
SERIES_WINDOW = 0.1


class RhsValue(object):
    """
    Right-hand side of an identity

    Parameters:
    -----------
    value: complex
        the closed form
    limit_branch_used: boolean, optional, default=False
        a series replaced the literal formula
    """

    def __init__(self, value, limit_branch_used=False):
        self.value = complex(value)
        self.limit_branch_used = bool(limit_branch_used)

    def __repr__(self):
        return "value: {value}, limit_branch_used: {limit_branch_used}" \
            .format(**self.__dict__)


def heaviside(x):
    """Unit step with H(0) = 1/2"""
    return float(np.heaviside(x, 0.5))


def _b(a):
    return min(a, LN_2)


def f_log(a):
    """π ln(a / (e^b - 1)), b = min(a, ln 2)"""
    if abs(a) < LOG_WINDOW:
        return RhsValue(-PI * a / 2.0, True)
    ratio = a / math.expm1(_b(a))
    assert ratio > 0, "f(a) needs a / (e^b - 1) > 0"
    return RhsValue(PI * math.log(ratio))


def g_log_cos2x(a):
    """(π/2)(1 - 1/a - e^b + 1/(e^b - 1)), b = min(a, ln 2)"""
    if abs(a) < LOG_WINDOW:
        return RhsValue(-PI / 4.0 - 11.0 * PI / 24.0 * a, True)
    b = _b(a)
    return RhsValue(PI / 2.0 * (1.0 - 1.0 / a - math.exp(b)
                                + 1.0 / math.expm1(b)))


def _s3_7(a, beta):
    c = beta + 1.0
    if abs(a) < LIMIT_WINDOW:
        return RhsValue(PI * (beta + 0.5)
                        + PI * a * (c * c / 2.0 - c / 2.0 + 1.0 / 12.0), True)
    value = -PI / a
    step = heaviside(LN_2 - a)
    if step > 0:
        value += PI * math.exp(c * a) / math.expm1(a) * step
    return RhsValue(value)


def _s3_8(a):
    if abs(a) < SERIES_WINDOW:
        a2 = a * a
        series = math.exp(a) + 1.0 / 12.0 - a2 / 240.0 \
            + a2 * a2 / 6048.0 - a2 * a2 * a2 / 172800.0
        return RhsValue(PI / 4.0 * series, True)
    value = PI / (4.0 * a * a)
    step = heaviside(LN_2 - a)
    if step > 0:
        value += PI * math.exp(a) / 4.0 \
            * (1.0 - 1.0 / math.expm1(a) ** 2) * step
    return RhsValue(value)


def _gen_beta(beta):
    if isinstance(beta, complex):
        log_gamma = log_gamma_complex(beta + 1.0)
    else:
        log_gamma = log_gamma_real(beta + 1.0)
    return PI / 8.0 * (1.0 + LN_2PI - EULER_GAMMA * (2.0 * beta + 1.0)
                       - 2.0 * log_gamma)


def _hurwitz_rep(alpha, beta):
    if abs(alpha) < LIMIT_WINDOW:
        return RhsValue(
            PI * (1.0 - alpha * (EULER_GAMMA + digamma(beta + 1.0))), True)
    return RhsValue(-PI * hurwitz_zeta(alpha + 1.0, beta + 1.0)
                    * reciprocal_gamma(-alpha))


def _riemann_rep(alpha):
    if abs(alpha - 1.0) < LIMIT_WINDOW:
        return RhsValue(PI, True)
    return RhsValue(-PI * riemann_zeta(alpha) * reciprocal_gamma(1.0 - alpha))


def rhs_J(beta):
    """
    J(β) = γ(β+1/2) + ln Γ(β+1) - ln(2π)/2 - (β+1/2) ln(β+1/2)

    Raises
    ------
    DomainError: β <= -1/2
    """
    beta = float(beta)
    if not beta > -0.5:
        raise DomainError("J(β) needs β > -1/2, got {}".format(beta))
    c = beta + 0.5
    return EULER_GAMMA * c + log_gamma_real(beta + 1.0) - 0.5 * LN_2PI \
        - c * math.log(c)


def rhs_final1(beta):
    """I(β) = -(π/4) J(β) + π/8 - (π/4)(β+1/2) ln(β+1/2)"""
    j = rhs_J(beta)
    c = float(beta) + 0.5
    return -PI / 4.0 * j + PI / 8.0 - PI / 4.0 * c * math.log(c)


def laplace_rhs(a, M_a):
    """
    M(a) - γ/a - ln(e^a - 1)/(1 - e^{-a}) H(ln 2 - a)

    Arguments:
    ---------
    a: float
        a > 0
    M_a: float
        M(a), from quadrature

    Returns
    -------
    value: float
        the Laplace transform of ψ(s+1) at a
    """
    a = float(a)
    if not a > 0:
        raise DomainError("laplace_rhs needs a > 0, got {}".format(a))
    value = M_a - EULER_GAMMA / a
    step = heaviside(LN_2 - a)
    if step > 0:
        value -= math.log(math.expm1(a)) / -math.expm1(-a) * step
    return value


def rhs_value(case, p, experimental=False):
    """
    Printed right-hand side of a catalog identity

    Arguments:
    ---------
    case: CaseId
        identity
    p: CaseParams
        parameters in the case domain
    experimental: boolean, optional, default=False
        admit complex β for GEN_BETA

    Returns
    -------
    rhs: RhsValue

    Raises
    ------
    DomainError: p outside the domain, or the case has no closed form
        (its right-hand side is a second quadrature)
    PoleError: a literal formula hits a pole outside the limit windows
    """
    case = CaseId(case)
    check_domain(case, p, experimental)

    if case is CaseId.GMO_M:
        return RhsValue(0.5 * (1.0 - EULER_GAMMA + LN_2PI))
    if case in (CaseId.GEN_BETA, CaseId.FINAL1_CHAIN):
        return RhsValue(_gen_beta(p.beta))
    if case is CaseId.HURWITZ_REP:
        return _hurwitz_rep(p.alpha, p.beta)
    if case is CaseId.ALPHA_M1:
        return RhsValue(PI * (1.0 + 2.0 * p.beta) / 2.0)
    if case is CaseId.RIEMANN_REP:
        return _riemann_rep(p.alpha)
    if case is CaseId.INT_LOGCOS_RATIO:
        return RhsValue(PI / 4.0)
    if case in (CaseId.INT_LOG_ZERO, CaseId.LOBACHEVSKY):
        return RhsValue(0.0)
    if case is CaseId.INT_ZETA_M1:
        return RhsValue(PI / 24.0)
    if case is CaseId.F_LOG:
        return f_log(p.a)
    if case is CaseId.G_LOG_COS2X:
        return g_log_cos2x(p.a)
    if case is CaseId.G1_PART:
        return RhsValue(-PI / 2.0 * math.exp(_b(p.a)))
    if case is CaseId.G2_PART:
        if abs(p.a) < LIMIT_WINDOW:
            return RhsValue(PI / 4.0 + PI * p.a / 24.0, True)
        return RhsValue(PI / 2.0 * (1.0 - 1.0 / p.a
                                    + 1.0 / math.expm1(_b(p.a))))
    if case is CaseId.GAMMA_RATIO_R:
        return RhsValue(PI / 2.0 * math.log(euler_product(p.r)))
    if case is CaseId.LOGABS_GAMMA_C:
        return RhsValue(PI / 2.0 * log_gamma_real(p.c))
    if case in (CaseId.REM1, CaseId.REM2, CaseId.N_FAMILY):
        d = p.n * -math.log(p.r)
        tail = math.log1p(-p.r ** p.n)
        if case is CaseId.REM1:
            return RhsValue(PI * math.log(d))
        if case is CaseId.REM2:
            return RhsValue(PI * (math.log(d) - tail))
        return RhsValue(PI * tail)
    if case is CaseId.SHIFT_C:
        return RhsValue(PI * math.log(p.n + p.c))
    if case is CaseId.HURWITZDEF:
        return RhsValue(math.exp(log_gamma_real(p.alpha))
                        * hurwitz_zeta(p.alpha, p.beta + 1.0).real)
    if case is CaseId.J_BETA:
        return RhsValue(rhs_J(p.beta))
    if case is CaseId.RATIONAL_MELLIN:
        c = p.beta + 0.5
        return RhsValue(-c ** (1.0 - p.alpha) * PI / math.sin(PI * p.alpha))
    if case is CaseId.FOOTNOTE_EQUIV:
        if p.a == 0:
            return RhsValue(PI / 8.0 * (1.0 + LN_2PI - EULER_GAMMA))
        raise DomainError("FOOTNOTE_EQUIV has a closed form only at a = 0")
    if case is CaseId.S3_1:
        return RhsValue(PI / 2.0 * math.log(LN_2))
    if case is CaseId.S3_2:
        return RhsValue(-PI / LN_2)
    if case is CaseId.S3_3:
        return RhsValue(-PI / 4.0)
    if case is CaseId.S3_4:
        return RhsValue(PI / 2.0 * (1.0 - 1.0 / LN_2))
    if case is CaseId.S3_5:
        return RhsValue(PI / (4.0 * LN_2 * LN_2))
    if case is CaseId.S3_6:
        return RhsValue(13.0 * PI / 48.0)
    if case is CaseId.S3_7:
        return _s3_7(p.a, p.beta)
    if case is CaseId.S3_8:
        return _s3_8(p.a)
    if case is CaseId.LAPLACE_REL:
        raise DomainError("LAPLACE_REL is checked against laplace_rhs")
    raise DomainError("No closed form for {}".format(case))


def rhs_alternatives(case, p=None):
    """
    Registered alternative closed forms of a case

    Returns
    -------
    alternatives: list
        (label, value) pairs; empty for most cases
    """
    case = CaseId(case)
    if case is CaseId.S3_1:
        return [("π ln ln 2 (f at a = ln 2)", PI * math.log(LN_2))]
    if case is CaseId.S3_2:
        return [("−π/(2 ln 2) (g at a = ln 2)", -PI / (2.0 * LN_2))]
    return []
