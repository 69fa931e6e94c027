import numpy as np
import pytest
from gmolib.errors import DomainError
from gmolib.kernel.cases import (DOMAINS, CaseId, CaseParams, check_domain,
                                 parse_params)
from gmolib.kernel.integrands import (HALF, SYMMETRIC, Integrand,
                                      footnote_real_integrand, j_integrand,
                                      lhs_integrand, m_integrand,
                                      telescoped_integrand)
from gmolib.kernel.kernel import (KernelPoint, co_angle,
                                  conjugate_symmetry_check, kernel, log_2cos,
                                  log_cos, principal_log)
from gmolib.specfun.constants import HALF_PI, LN_2


@pytest.mark.parametrize('x', [-1.5, -0.7, -1e-9, 0.0, 0.3, 1.2, 1.57])
def test_principal_log(x):
    expected = np.log(1.0 + np.exp(-2j * x))
    np.testing.assert_allclose(principal_log(x), expected, rtol=1e-12,
                               atol=1e-15)


@pytest.mark.parametrize('x', [HALF_PI, -HALF_PI, 2.0])
def test_principal_log_domain(x):
    with pytest.raises(DomainError):
        principal_log(x)


def test_kernel_point():
    point = KernelPoint(0.5)
    assert point.x == 0.5
    np.testing.assert_almost_equal(point.L, np.log(2 * np.cos(0.5)), 15)
    assert point.y.imag == -0.5


def test_log_cos_small_angles():
    # ln cos x = -x²/2 - x⁴/12 - ...
    x = np.array([1e-10, -1e-7, 1e-5])
    np.testing.assert_allclose(log_cos(x), -x * x / 2 - x ** 4 / 12,
                               rtol=1e-14)
    x = np.array([0.1, -0.5, 0.9, 1.4])
    np.testing.assert_allclose(log_cos(x), np.log(np.cos(x)), rtol=1e-13)


def test_log_cos_from_gaps():
    # with exact gaps ln cos x = ln sin(gap), even where x rounds to π/2
    gaps = np.array([1e-20, 1e-200, 1e-300])
    x = HALF_PI - gaps
    c = co_angle(x, lo_gap=None, hi_gap=gaps, lo=0.0, hi=HALF_PI)
    np.testing.assert_allclose(log_cos(x, c), np.log(gaps), rtol=1e-14)


def test_co_angle_ignores_gaps_of_inner_ends():
    x = np.array([-0.2, 0.2])
    gaps = np.array([5.0, 5.0])
    c = co_angle(x, lo_gap=gaps, hi_gap=gaps, lo=-HALF_PI, hi=0.0)
    np.testing.assert_allclose(c, [5.0, HALF_PI - 0.2])


def test_kernel_pair():
    x = np.array([-1.0, 0.0, 1.0])
    L, y = kernel(x)
    np.testing.assert_allclose(L, np.log(2 * np.cos(x)), rtol=1e-14)
    np.testing.assert_allclose(y, L - 1j * x)
    np.testing.assert_almost_equal(log_2cos(np.array([0.0]))[0], LN_2, 15)


def test_kernel_identities_on_dense_grid():
    x = np.linspace(-HALF_PI + 1e-3, HALF_PI - 1e-3, 1000)
    L, y = kernel(x)
    np.testing.assert_allclose(np.exp(y), 1 + np.exp(-2j * x), rtol=0,
                               atol=1e-13)
    # y(-x) = L + ix, so the odd parts cancel pairwise
    _, y_minus = kernel(-x)
    pair = (x / y + (-x) / y_minus) / 2j
    np.testing.assert_allclose(pair.real, x * x / (x * x + L * L),
                               rtol=1e-13, atol=1e-16)
    np.testing.assert_allclose(pair.imag, 0.0, atol=1e-15)


def test_conjugate_symmetry_check():
    assert conjugate_symmetry_check(lambda x: np.exp(1j * x))
    assert conjugate_symmetry_check(lambda x: np.log(principal_log_vec(x)))
    assert not conjugate_symmetry_check(lambda x: np.exp(2j * x) + x)
    assert not conjugate_symmetry_check(lambda x: 1j * np.ones_like(x))


def principal_log_vec(x):
    L, y = kernel(x)
    return y


@pytest.mark.parametrize('text,expected', [
    ('a=0.3', CaseParams(a=0.3)),
    ('alpha=-0.5,beta=1', CaseParams(alpha=-0.5, beta=1.0)),
    ('r=0.3 n=2', CaseParams(r=0.3, n=2)),
    ('beta=0.5+1j', CaseParams(beta=0.5 + 1j)),
    ('', CaseParams()),
])
def test_parse_params(text, expected):
    assert parse_params(text) == expected


@pytest.mark.parametrize('text', ['a', 'x=1', 'a=abc', 'n=1.5'])
def test_parse_params_errors(text):
    with pytest.raises(DomainError):
        parse_params(text)


def test_case_params():
    p = CaseParams(alpha=2 + 0j, beta=1)
    assert isinstance(p.alpha, float)
    assert str(p) == "alpha=2.0,beta=1.0"
    q = p.replace(beta=3.0)
    assert q.beta == 3.0 and p.beta == 1.0
    assert p.get('a') is None
    assert hash(CaseParams(a=1.0)) == hash(CaseParams(a=1.0))


def test_every_case_has_a_domain():
    assert set(DOMAINS) == set(CaseId)


@pytest.mark.parametrize('case,p', [
    (CaseId.GEN_BETA, CaseParams(beta=-1.5)),
    (CaseId.GEN_BETA, CaseParams(beta=0.5 + 1j)),
    (CaseId.GMO_M, CaseParams(a=0.3)),
    (CaseId.GAMMA_RATIO_R, CaseParams(r=0.5)),
    (CaseId.LOGABS_GAMMA_C, CaseParams(c=0.5)),
    (CaseId.REM1, CaseParams(r=0.3, n=0)),
    (CaseId.S3_7, CaseParams(a=LN_2, beta=0.0)),
    (CaseId.FOOTNOTE_EQUIV, CaseParams(a=LN_2)),
    (CaseId.HURWITZ_REP, CaseParams(alpha=0.5)),
])
def test_check_domain_rejects(case, p):
    with pytest.raises(DomainError):
        check_domain(case, p)


def test_check_domain_experimental_beta():
    check_domain(CaseId.GEN_BETA, CaseParams(beta=0.5 + 1j), experimental=True)


def test_symmetric_integrands_split_at_zero():
    f = lhs_integrand(CaseId.GEN_BETA, CaseParams(beta=0.5))
    assert f.interval == SYMMETRIC and f.symmetric
    pieces = f.pieces()
    assert [p.interval for p in pieces] == [(-HALF_PI, 0.0), (0.0, HALF_PI)]
    assert pieces[0].singular_ends == ('lo',)
    assert pieces[1].singular_ends == ('hi',)
    assert f.name == 'GEN_BETA'


@pytest.mark.parametrize('case,p', [
    (CaseId.GEN_BETA, CaseParams(beta=0.5)),
    (CaseId.HURWITZ_REP, CaseParams(alpha=-0.5, beta=2.0)),
    (CaseId.ALPHA_M1, CaseParams(beta=1.0)),
    (CaseId.RIEMANN_REP, CaseParams(alpha=0.5)),
    (CaseId.N_FAMILY, CaseParams(r=0.3, n=2)),
    (CaseId.SHIFT_C, CaseParams(c=1.0, n=1)),
    (CaseId.S3_7, CaseParams(a=0.3, beta=1.0)),
    (CaseId.FOOTNOTE_EQUIV, CaseParams(a=0.3)),
])
def test_symmetric_integrands_are_conjugate_symmetric(case, p):
    assert conjugate_symmetry_check(lhs_integrand(case, p))


def test_complex_beta_integrand_is_not_real():
    f = lhs_integrand(CaseId.GEN_BETA, CaseParams(beta=0.5 + 1j),
                      experimental=True)
    assert not f.real_valued


def test_boundary_parameter_marks_both_ends():
    f = lhs_integrand(CaseId.F_LOG, CaseParams(a=LN_2))
    assert f.singular_ends == ('lo', 'hi')
    g = lhs_integrand(CaseId.F_LOG, CaseParams(a=0.3))
    assert g.singular_ends == ('hi',)


def test_final1_chain_has_no_integrand():
    with pytest.raises(DomainError):
        lhs_integrand(CaseId.FINAL1_CHAIN, CaseParams(beta=0.0))


def test_half_interval_integrands_are_finite():
    x = np.linspace(1e-6, HALF_PI - 1e-6, 101)
    for f in [m_integrand(0.0), footnote_real_integrand(1.5),
              telescoped_integrand(0.3, 5),
              lhs_integrand(CaseId.S3_4, CaseParams())]:
        assert f.interval == HALF
        assert np.all(np.isfinite(f(x)))


def test_j_integrand_is_continuous_at_the_series_switch():
    beta = 0.5
    f = j_integrand(beta)
    y0 = 0.25 / (1.0 + beta)
    below, above = f(np.array([y0 * (1 - 1e-12), y0 * (1 + 1e-12)]))
    np.testing.assert_allclose(below, above, rtol=1e-9)


def test_j_integrand_limit_at_zero():
    f = j_integrand(0.0)
    values = f(np.array([1e-12, 1e-9]))
    assert np.all(np.isfinite(values))
    np.testing.assert_allclose(values[0], values[1], rtol=1e-6)


def test_integrand_restrict_keeps_tags():
    f = Integrand(lambda x, lc: lc, SYMMETRIC, breakpoints=(0.0,),
                  singular_ends=('lo', 'hi'))
    right = f.restrict(0.0, HALF_PI)
    assert right.singular_ends == ('hi',)
    assert right.breakpoints == ()
