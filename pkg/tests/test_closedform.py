import math
import numpy as np
import pytest
import scipy.special as sc
from gmolib.closedform.rhs import (LIMIT_WINDOW, f_log, g_log_cos2x,
                                   heaviside, laplace_rhs, rhs_alternatives,
                                   rhs_final1, rhs_J, rhs_value)
from gmolib.errors import DomainError
from gmolib.kernel.cases import CaseId, CaseParams
from gmolib.specfun.constants import EULER_GAMMA, LN_2, LN_2PI, PI


def rhs(case, **kwargs):
    return rhs_value(case, CaseParams(**kwargs)).value


def test_heaviside_midpoint():
    assert heaviside(0.0) == 0.5
    assert heaviside(1e-300) == 1.0
    assert heaviside(-2.0) == 0.0


def test_gmo_constant():
    np.testing.assert_almost_equal(
        rhs(CaseId.GMO_M, a=0.0).real, 0.5 * (1 - EULER_GAMMA + LN_2PI), 15)


@pytest.mark.parametrize('beta', [-0.9, 0.0, 0.5, 2.0, 5.0])
def test_gen_beta_oracle(beta):
    expected = PI / 8 * (1 + LN_2PI - EULER_GAMMA * (2 * beta + 1)
                         - 2 * sc.gammaln(beta + 1))
    np.testing.assert_allclose(rhs(CaseId.GEN_BETA, beta=beta).real,
                               expected, rtol=1e-13, atol=1e-14)


def test_gen_beta_complex_needs_experimental():
    p = CaseParams(beta=0.5 + 0.5j)
    with pytest.raises(DomainError):
        rhs_value(CaseId.GEN_BETA, p)
    value = rhs_value(CaseId.GEN_BETA, p, experimental=True).value
    expected = PI / 8 * (1 + LN_2PI - EULER_GAMMA * (2 * p.beta + 1)
                         - 2 * sc.loggamma(p.beta + 1))
    np.testing.assert_allclose(value, expected, rtol=1e-12)


@pytest.mark.parametrize('beta', [0.0, 0.5, 3.0])
def test_hurwitz_at_minus_one_is_alpha_m1(beta):
    np.testing.assert_allclose(rhs(CaseId.HURWITZ_REP, alpha=-1.0, beta=beta),
                               rhs(CaseId.ALPHA_M1, beta=beta), rtol=1e-13)
    np.testing.assert_almost_equal(rhs(CaseId.ALPHA_M1, beta=beta).real,
                                   PI * (beta + 0.5), 14)


@pytest.mark.parametrize('beta', [0.0, 0.5, 2.0])
@pytest.mark.parametrize('sign', [1.0, -1.0])
def test_hurwitz_limit_branch_is_continuous(beta, sign):
    # quadratic through the literal formula at ±{1, 2, 3}e-4
    alphas = np.array([-3e-4, -2e-4, -1e-4, 1e-4, 2e-4, 3e-4])
    literal = []
    for alpha in alphas:
        value = rhs_value(CaseId.HURWITZ_REP,
                          CaseParams(alpha=alpha, beta=beta))
        assert not value.limit_branch_used
        literal.append(value.value.real)
    fit = np.polyfit(alphas, literal, 2)
    alpha = sign * 1e-7
    limit = rhs_value(CaseId.HURWITZ_REP, CaseParams(alpha=alpha, beta=beta))
    assert limit.limit_branch_used
    assert abs(alpha) < LIMIT_WINDOW
    np.testing.assert_allclose(limit.value.real, np.polyval(fit, alpha),
                               atol=1e-8)


def test_hurwitz_vanishes_at_positive_integers():
    # 1/Γ(-α) = 0 at α = 1, 2, ...
    assert rhs(CaseId.HURWITZ_REP, alpha=1.0, beta=0.5) == 0
    assert rhs(CaseId.RIEMANN_REP, alpha=2.0) == 0


@pytest.mark.parametrize('alpha,expected', [
    (0.0, PI / 2),
    (1.0, PI),
    (-1.0, PI / 12),
])
def test_riemann_rep(alpha, expected):
    np.testing.assert_almost_equal(rhs(CaseId.RIEMANN_REP, alpha=alpha).real,
                                   expected, 13)


@pytest.mark.parametrize('case,expected', [
    (CaseId.INT_LOGCOS_RATIO, PI / 4),
    (CaseId.INT_LOG_ZERO, 0.0),
    (CaseId.INT_ZETA_M1, PI / 24),
    (CaseId.LOBACHEVSKY, 0.0),
    (CaseId.S3_1, PI / 2 * math.log(LN_2)),
    (CaseId.S3_2, -PI / LN_2),
    (CaseId.S3_3, -PI / 4),
    (CaseId.S3_4, PI / 2 * (1 - 1 / LN_2)),
    (CaseId.S3_5, PI / (4 * LN_2 ** 2)),
    (CaseId.S3_6, 13 * PI / 48),
])
def test_constant_cases(case, expected):
    np.testing.assert_almost_equal(rhs(case).real, expected, 15)


def test_f_log():
    assert f_log(0.0).value == 0
    assert f_log(0.0).limit_branch_used
    np.testing.assert_almost_equal(f_log(0.3).value.real,
                                   PI * math.log(0.3 / math.expm1(0.3)), 14)
    np.testing.assert_almost_equal(f_log(1.5).value.real, PI * math.log(1.5),
                                   14)
    np.testing.assert_almost_equal(f_log(-2.0).value.real,
                                   PI * math.log(-2.0 / math.expm1(-2.0)), 14)


def test_f_log_window_continuity():
    inside = f_log(5e-9).value.real
    outside = f_log(2e-8).value.real
    np.testing.assert_allclose(inside, -PI * 5e-9 / 2, rtol=1e-7)
    np.testing.assert_allclose(outside, -PI * 2e-8 / 2, rtol=1e-7)


def test_g_log_cos2x():
    np.testing.assert_almost_equal(g_log_cos2x(0.0).value.real, -PI / 4, 15)
    np.testing.assert_almost_equal(g_log_cos2x(LN_2).value.real,
                                   -PI / (2 * LN_2), 14)
    np.testing.assert_allclose(g_log_cos2x(1e-9).value.real,
                               g_log_cos2x(1e-7).value.real, atol=1e-6)


@pytest.mark.parametrize('a', [-1.0, 0.3, LN_2, 1.5])
def test_g_parts_add_up(a):
    total = rhs(CaseId.G1_PART, a=a) + rhs(CaseId.G2_PART, a=a)
    np.testing.assert_allclose(total, rhs(CaseId.G_LOG_COS2X, a=a),
                               rtol=1e-13)


def test_g2_removable_point():
    np.testing.assert_almost_equal(rhs(CaseId.G2_PART, a=0.0).real, PI / 4, 15)


def test_s3_3_is_g_at_zero():
    np.testing.assert_almost_equal(rhs(CaseId.S3_3), g_log_cos2x(0.0).value,
                                   15)


def test_s3_8_at_ln2_is_s3_5():
    # the step contributes H(0) = 1/2 times a vanishing factor
    np.testing.assert_almost_equal(rhs(CaseId.S3_8, a=LN_2).real,
                                   rhs(CaseId.S3_5).real, 14)


@pytest.mark.parametrize('a', [0.02, 0.05, 0.09])
def test_s3_8_series(a):
    value = rhs_value(CaseId.S3_8, CaseParams(a=a))
    assert value.limit_branch_used
    literal = PI / (4 * a * a) + PI * math.exp(a) / 4 \
        * (1 - 1 / math.expm1(a) ** 2)
    np.testing.assert_allclose(value.value.real, literal, rtol=1e-10)


def test_s3_8_at_zero_and_above_ln2():
    np.testing.assert_almost_equal(rhs(CaseId.S3_8, a=0.0).real,
                                   PI / 4 * (1 + 1 / 12), 15)
    np.testing.assert_almost_equal(rhs(CaseId.S3_8, a=1.5).real,
                                   PI / (4 * 1.5 ** 2), 15)


@pytest.mark.parametrize('beta', [0.0, 1.0])
def test_s3_7_window(beta):
    limit = rhs_value(CaseId.S3_7, CaseParams(a=1e-7, beta=beta))
    assert limit.limit_branch_used
    a = 1e-5
    literal = -PI / a + PI * math.exp((beta + 1) * a) / math.expm1(a)
    np.testing.assert_allclose(
        rhs(CaseId.S3_7, a=a, beta=beta).real, literal, rtol=1e-12)
    a = 2e-6
    c = beta + 1
    series = PI * (beta + 0.5) + PI * a * (c * c / 2 - c / 2 + 1 / 12)
    np.testing.assert_allclose(rhs(CaseId.S3_7, a=a, beta=beta).real, series,
                               rtol=1e-9)


def test_s3_7_excludes_ln2():
    with pytest.raises(DomainError):
        rhs(CaseId.S3_7, a=LN_2, beta=0.0)


@pytest.mark.parametrize('delta', [1e-3, 1e-6])
def test_s3_7_step_midpoint_is_twice_s3_4(delta):
    # H(0) = 1/2 puts the value at ln 2 on the midpoint of the jump
    below = rhs(CaseId.S3_7, a=LN_2 - delta, beta=0.0).real
    above = rhs(CaseId.S3_7, a=LN_2 + delta, beta=0.0).real
    np.testing.assert_allclose(below - above, 2 * PI, atol=20 * delta)
    np.testing.assert_allclose((below + above) / 2,
                               2 * rhs(CaseId.S3_4).real, atol=10 * delta)


@pytest.mark.parametrize('r', [0.05, 0.25, 0.45])
def test_n_family_splits(r):
    for n in [1, 2, 5]:
        diff = rhs(CaseId.REM1, r=r, n=n) - rhs(CaseId.REM2, r=r, n=n)
        np.testing.assert_allclose(diff, rhs(CaseId.N_FAMILY, r=r, n=n),
                                   rtol=1e-13)


def test_gamma_ratio_r():
    np.testing.assert_almost_equal(
        rhs(CaseId.GAMMA_RATIO_R, r=0.25).real,
        PI / 2 * math.log(np.prod(1 - 0.25 ** np.arange(1, 60))), 14)


@pytest.mark.parametrize('c', [LN_2, 1.0, 2.0, 5.0])
def test_logabs_gamma_c(c):
    np.testing.assert_allclose(rhs(CaseId.LOGABS_GAMMA_C, c=c).real,
                               PI / 2 * sc.gammaln(c), rtol=1e-13, atol=1e-15)


def test_shift_c():
    np.testing.assert_almost_equal(rhs(CaseId.SHIFT_C, c=2.0, n=3).real,
                                   PI * math.log(5.0), 14)


@pytest.mark.parametrize('alpha,beta', [(2.0, 0.0), (3.0, 1.0), (1.5, 0.5)])
def test_hurwitzdef(alpha, beta):
    np.testing.assert_allclose(
        rhs(CaseId.HURWITZDEF, alpha=alpha, beta=beta).real,
        sc.gamma(alpha) * sc.zeta(alpha, beta + 1), rtol=1e-12)


def test_rational_mellin():
    # α = 3/2, β = 1/2: -π / sin(3π/2) = π
    np.testing.assert_almost_equal(
        rhs(CaseId.RATIONAL_MELLIN, alpha=1.5, beta=0.5).real, PI, 14)


def test_j_at_zero():
    np.testing.assert_almost_equal(rhs_J(0.0),
                                   EULER_GAMMA / 2 - 0.5 * math.log(PI), 15)
    with pytest.raises(DomainError):
        rhs_J(-0.5)


@pytest.mark.parametrize('beta', [-0.4, 0.0, 0.5, 1.0, 2.0, 5.0])
def test_final1_chain_matches_gen_beta(beta):
    np.testing.assert_allclose(rhs_final1(beta),
                               rhs(CaseId.GEN_BETA, beta=beta).real,
                               rtol=1e-12, atol=1e-15)
    np.testing.assert_allclose(rhs(CaseId.FINAL1_CHAIN, beta=beta),
                               rhs(CaseId.GEN_BETA, beta=beta))


def test_laplace_rhs():
    np.testing.assert_almost_equal(laplace_rhs(LN_2, 1.0),
                                   1.0 - EULER_GAMMA / LN_2, 15)
    np.testing.assert_almost_equal(laplace_rhs(1.5, 0.2), 0.2 - EULER_GAMMA
                                   / 1.5, 15)
    a = 0.3
    expected = 0.2 - EULER_GAMMA / a \
        - math.log(math.expm1(a)) / (1 - math.exp(-a))
    np.testing.assert_almost_equal(laplace_rhs(a, 0.2), expected, 13)
    with pytest.raises(DomainError):
        laplace_rhs(0.0, 1.0)


def test_dual_route_cases_have_no_closed_form():
    with pytest.raises(DomainError):
        rhs(CaseId.LAPLACE_REL, a=1.0)
    with pytest.raises(DomainError):
        rhs(CaseId.FOOTNOTE_EQUIV, a=0.3)
    np.testing.assert_almost_equal(
        rhs(CaseId.FOOTNOTE_EQUIV, a=0.0).real,
        PI / 4 * rhs(CaseId.GMO_M, a=0.0).real, 15)


def test_alternatives():
    (label, value), = rhs_alternatives(CaseId.S3_1)
    np.testing.assert_almost_equal(value, f_log(LN_2).value.real, 15)
    (label, value), = rhs_alternatives(CaseId.S3_2)
    np.testing.assert_almost_equal(value, g_log_cos2x(LN_2).value.real, 14)
    assert rhs_alternatives(CaseId.GMO_M) == []
