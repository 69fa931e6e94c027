import math
import numpy as np
import pytest
from gmolib.errors import ConvergenceError
from gmolib.quad.adaptive import (NODES, WEIGHTS_GAUSS, WEIGHTS_KRONROD, gk15,
                                  integrate_finite)
from gmolib.quad.base import QuadConfig, QuadResult, evaluate
from gmolib.quad.double_exponential import (integrate_de,
                                            integrate_semi_infinite)
from gmolib.specfun.constants import LN_2, PI


def test_rule_weights():
    np.testing.assert_almost_equal(WEIGHTS_KRONROD.sum(), 2.0, 15)
    np.testing.assert_almost_equal(WEIGHTS_GAUSS.sum(), 2.0, 15)
    np.testing.assert_almost_equal(NODES, -NODES[::-1], 15)
    assert np.count_nonzero(WEIGHTS_GAUSS) == 7


@pytest.mark.parametrize('k', [0, 5, 13, 22])
def test_gk15_polynomials(k):
    value, err = gk15(lambda x: x ** k, 0.0, 1.0)
    np.testing.assert_almost_equal(value.real, 1.0 / (k + 1), 14)


def test_gk15_non_finite():
    with pytest.raises(ConvergenceError):
        gk15(lambda x: np.full_like(x, np.nan), 0.0, 1.0)


@pytest.mark.parametrize('f,lo,hi,exact', [
    (np.exp, 0.0, 1.0, math.e - 1.0),
    (np.sin, 0.0, PI, 2.0),
    (lambda x: 1.0 / (1.0 + 25.0 * x * x), -1.0, 1.0, 0.4 * math.atan(5.0)),
    (lambda x: np.abs(x - 0.3), 0.0, 1.0, 0.29),
    (lambda x: np.exp(1j * x), 0.0, PI, 2j),
])
def test_integrate_finite(f, lo, hi, exact):
    result = integrate_finite(f, lo, hi)
    assert result.converged
    np.testing.assert_allclose(result.value, exact, rtol=1e-11, atol=1e-12)
    assert abs(result.value - exact) <= 10 * result.err_est + 1e-14


def test_integrate_finite_budget():
    cfg = QuadConfig(max_evals=100)
    with pytest.raises(ConvergenceError) as info:
        integrate_finite(lambda x: 1.0 / np.sqrt(x), 0.0, 1.0, cfg)
    partial = info.value.result
    assert isinstance(partial, QuadResult)
    assert not partial.converged
    assert partial.n_evals <= 100


def test_integrate_finite_depth():
    cfg = QuadConfig(max_depth=5)
    with pytest.raises(ConvergenceError):
        integrate_finite(lambda x: np.log(x), 0.0, 1.0, cfg)


@pytest.mark.parametrize('f,lo,hi,exact', [
    (lambda x: 1.0 / np.sqrt(x), 0.0, 1.0, 2.0),
    (np.log, 0.0, 1.0, -1.0),
    (lambda x: np.log(np.sin(x)), 0.0, PI / 2, -PI / 2 * LN_2),
    (lambda x: np.log(np.cos(x)) * np.cos(2 * x), 0.0, PI / 2, -PI / 4),
    (lambda x: np.exp(2j * x), -PI / 2, PI / 2, 0.0),
])
def test_integrate_de(f, lo, hi, exact):
    result = integrate_de(f, lo, hi)
    assert result.converged
    np.testing.assert_allclose(result.value, exact, atol=1e-11)


def test_integrate_de_refinement_cap():
    cfg = QuadConfig(max_level=3)
    with pytest.raises(ConvergenceError) as info:
        integrate_de(lambda x: np.where(x < 0.3, 1.0, 0.0), 0.0, 1.0, cfg)
    assert not info.value.result.converged


@pytest.mark.parametrize('f,exact', [
    (lambda x: np.exp(-x), 1.0),
    (lambda x: np.exp(-x * x), math.sqrt(PI) / 2),
    (lambda x: 1.0 / (1.0 + x * x), PI / 2),
    (lambda x: np.exp(-x) / np.sqrt(x), math.sqrt(PI)),
    (lambda x: x / np.expm1(x), PI ** 2 / 6),
])
def test_integrate_semi_infinite(f, exact):
    result = integrate_semi_infinite(f, 0.0)
    np.testing.assert_allclose(result.value, exact, rtol=1e-10)


def test_gap_aware_evaluation():
    seen = {}

    class Probe(object):
        gap_aware = True

        def __call__(self, x, lo_gap=None, hi_gap=None):
            seen['gaps'] = (lo_gap, hi_gap)
            return np.ones_like(x)

    result = integrate_de(Probe(), 0.0, 2.0)
    np.testing.assert_almost_equal(result.value.real, 2.0, 13)
    lo_gap, hi_gap = seen['gaps']
    assert np.all(lo_gap > 0) and np.all(hi_gap > 0)
    # the gaps resolve abscissae far below the spacing of doubles near 2
    assert hi_gap.min() < 1e-100


def test_evaluate_broadcasts_constants():
    fx = evaluate(lambda x: 3.0, np.linspace(0, 1, 4))
    assert fx.dtype == np.complex128
    np.testing.assert_array_equal(fx, 3.0)


def test_config():
    cfg = QuadConfig(abs_tol=1e-10, rel_tol=1e-8)
    assert cfg.tolerance(1.0) == 1e-8
    assert cfg.tolerance(1e-6) == 1e-10
    half = cfg.scaled(0.5)
    assert half.abs_tol == 5e-11 and half.rel_tol == 5e-9
    assert half.max_evals == cfg.max_evals
    with pytest.raises(AssertionError):
        QuadConfig(abs_tol=0.0)


def test_result_addition():
    total = QuadResult(1.0, 1e-12, 30, True) + QuadResult(2j, 1e-11, 15, False)
    assert total.value == 1 + 2j
    assert total.n_evals == 45
    assert not total.converged
    np.testing.assert_almost_equal(total.err_est, 1.1e-11, 20)
