"""
Property suites of the special functions, the quadratures and the kernel
"""

import logging
import math
import time
import numpy as np
from ..closedform.rhs import rhs_final1, rhs_value
from ..kernel.cases import CaseId, CaseParams
from ..kernel.integrands import lhs_integrand
from ..kernel.kernel import conjugate_symmetry_check, principal_log
from ..quad.adaptive import integrate_finite
from ..quad.double_exponential import integrate_de, integrate_semi_infinite
from ..specfun.constants import EULER_GAMMA, LN_2, LN_PI, PI
from ..specfun.gamma import (digamma, log_abs_gamma, log_gamma_real,
                             reciprocal_gamma)
from ..specfun.products import gauss_product_gamma
from ..specfun.zeta import hurwitz_zeta, riemann_zeta
from .catalog import CATALOG, SYMMETRIC
from .records import Status
from .verify import verify_case


_Z_SAMPLES = [0.3 + 0.0j, 2.5 + 1.0j, -1.7 + 0.4j, 7.25 - 3.0j, 0.1 + 20.0j,
              -4.5 + 0.0j, 12.0 + 0.5j]


def _rel(value, target):
    return abs(value - target) / max(1.0, abs(target))


def log_gamma_recurrence():
    # ln|Γ(z+1)| = ln|Γ(z)| + ln|z|
    return [_rel(log_abs_gamma(z + 1.0),
                 log_abs_gamma(z) + math.log(abs(z))) < 1e-12
            for z in _Z_SAMPLES]


def reflection():
    # ln|Γ(z)| + ln|Γ(1-z)| = ln π - ln|sin πz|
    return [_rel(log_abs_gamma(z) + log_abs_gamma(1.0 - z),
                 LN_PI - np.log(abs(np.sin(PI * z)))) < 1e-11
            for z in _Z_SAMPLES if abs(z.imag) < 10]


def hurwitz_shift():
    checks = []
    for s in [0.5, 2.0, -1.5, 3.0 + 2.0j, -0.5 - 1.0j]:
        for q in [0.25, 1.0, 3.5]:
            lhs = hurwitz_zeta(s, q) - hurwitz_zeta(s, q + 1.0)
            checks.append(_rel(lhs, q ** -complex(s)) < 1e-11)
    return checks


def riemann_identity():
    cases = [(2.0, PI ** 2 / 6.0), (4.0, PI ** 4 / 90.0), (0.0, -0.5),
             (-1.0, -1.0 / 12.0), (-3.0, 1.0 / 120.0), (-2.0, 0.0)]
    return [abs(riemann_zeta(s) - target) < 1e-13 for s, target in cases]


def digamma_derivative():
    h = 1e-5
    checks = [abs(digamma(1.0) + EULER_GAMMA) < 1e-13]
    for x in [0.2, 1.5, 4.0, 25.0]:
        fd = (log_gamma_real(x + h) - log_gamma_real(x - h)) / (2 * h)
        checks.append(_rel(fd, digamma(x)) < 1e-8)
    return checks


def gauss_product_convergence():
    checks = []
    orders = [10, 100, 1000, 10000, 100000]
    for x in [0.5, 1.0, 2.5, 4.0]:
        gamma = math.exp(log_gamma_real(x))
        errors = [abs(gauss_product_gamma(x, n) / gamma - 1.0)
                  for n in orders]
        decreasing = all(b < a for a, b in zip(errors[:-1], errors[1:]))
        bounded = errors[-1] < 10.0 * x * (x + 1.0) / (2.0 * orders[-1])
        checks.append(decreasing and bounded)
    return checks


def reciprocal_gamma_modulus():
    # |1/Γ(iy)|² = y sinh(πy) / π
    checks = [reciprocal_gamma(-n) == 0 for n in range(4)]
    for y in [0.5, 1.0, 3.0, 10.0]:
        target = y * math.sinh(PI * y) / PI
        checks.append(_rel(abs(reciprocal_gamma(1j * y)) ** 2 / target, 1.0)
                      < 1e-11)
    return checks


def kernel_identity():
    # exp(y(x)) = 1 + e^{-2ix}
    xs = [-1.5707963, -1.0, -0.2, 1e-9, 0.7, 1.3, 1.5707]
    return [abs(np.exp(principal_log(x)) - (1.0 + np.exp(-2j * x))) < 1e-13
            for x in xs]


def conjugate_symmetry():
    checks = []
    for entry in CATALOG.values():
        if entry.interval != SYMMETRIC:
            continue
        f = lhs_integrand(entry.id, entry.default_params)
        checks.append(conjugate_symmetry_check(f))
    return checks


def lobachevskii_integral():
    # ∫_0^{π/2} ln(2cos x) dx = 0 by both quadratures
    record = verify_case(CaseId.LOBACHEVSKY)
    f = lhs_integrand(CaseId.LOBACHEVSKY, CaseParams())
    de = integrate_de(f, 0.0, PI / 2.0)
    return [record.status is Status.PASS, abs(de.value) < 1e-10]


def linearity():
    f = np.exp
    g = np.cos
    checks = []
    for lo, hi in [(0.0, 1.0), (-2.0, 3.0)]:
        combined = integrate_de(lambda x: 2.0 * f(x) + 3.0 * g(x), lo, hi)
        separate = 2.0 * integrate_de(f, lo, hi).value \
            + 3.0 * integrate_de(g, lo, hi).value
        checks.append(_rel(combined.value, separate) < 1e-12)
        combined = integrate_finite(lambda x: 2.0 * f(x) + 3.0 * g(x), lo, hi)
        separate = 2.0 * integrate_finite(f, lo, hi).value \
            + 3.0 * integrate_finite(g, lo, hi).value
        checks.append(_rel(combined.value, separate) < 1e-12)
    return checks


def split_additivity():
    def f(x):
        return np.log(x) * np.sin(x)
    whole = integrate_de(f, 0.0, 2.0).value
    checks = []
    for m in [0.25, 1.0, 1.75]:
        parts = integrate_de(f, 0.0, m).value + integrate_de(f, m, 2.0).value
        checks.append(abs(whole - parts) < 1e-12)
    return checks


def _honesty_cases():
    cases = []
    for k in range(10):
        cases.append((integrate_finite, (lambda x, k=k: x ** k), (0.0, 1.0),
                      1.0 / (k + 1)))
    cases += [
        (integrate_de, lambda x: 1.0 / np.sqrt(x), (0.0, 1.0), 2.0),
        (integrate_de, np.log, (0.0, 1.0), -1.0),
        (integrate_de, lambda x: np.sqrt(1.0 - x * x), (0.0, 1.0), PI / 4.0),
        (integrate_de, lambda x: np.log(np.sin(x)), (0.0, PI / 2.0),
         -PI / 2.0 * LN_2),
        (integrate_de, lambda x: 1.0 / (1.0 + x), (0.0, 1.0), LN_2),
        (integrate_finite, np.sin, (0.0, PI), 2.0),
        (integrate_semi_infinite, lambda x: np.exp(-x), (0.0,), 1.0),
        (integrate_semi_infinite, lambda x: x * np.exp(-x), (0.0,), 1.0),
        (integrate_semi_infinite, lambda x: 1.0 / (1.0 + x * x), (0.0,),
         PI / 2.0),
        (integrate_semi_infinite, lambda x: np.exp(-x * x), (0.0,),
         math.sqrt(PI) / 2.0),
    ]
    return cases


def error_estimate_honesty():
    # the true error stays below 10 err_est (with a round-off floor)
    checks = []
    for method, f, bounds, exact in _honesty_cases():
        result = method(f, *bounds)
        floor = 1e-14 * max(1.0, abs(exact))
        checks.append(abs(result.value - exact)
                      <= 10.0 * result.err_est + floor)
    return checks


def final1_chain():
    checks = []
    for p in CATALOG[CaseId.FINAL1_CHAIN].grid:
        gen = rhs_value(CaseId.GEN_BETA, p).value
        checks.append(_rel(rhs_final1(p.beta), gen) < 1e-12)
    return checks


SUITES = [
    ('log-gamma recurrence', log_gamma_recurrence),
    ('reflection', reflection),
    ('hurwitz shift', hurwitz_shift),
    ('riemann identity', riemann_identity),
    ('digamma derivative', digamma_derivative),
    ('gauss-product convergence', gauss_product_convergence),
    ('reciprocal-gamma modulus', reciprocal_gamma_modulus),
    ('kernel identity', kernel_identity),
    ('conjugate symmetry', conjugate_symmetry),
    ('lobachevskii integral', lobachevskii_integral),
    ('linearity', linearity),
    ('split additivity', split_additivity),
    ('error-estimate honesty', error_estimate_honesty),
    ('final1 chain', final1_chain),
]


class SelfTest(object):
    """
    Runs the property suites

    Parameters:
    -----------
    suites: list, optional, default=None
        (name, callable) pairs; every suite when None
    """

    def __init__(self, suites=None):
        self.suites = SUITES if suites is None else suites
        logging.basicConfig(level=logging.INFO)
        self.logger = logging.getLogger('GMO-Selftest')

    def run(self):
        """
        Returns
        -------
        results: list
            (name, passed, total) per suite
        """
        start = time.time()
        results = []
        for name, suite in self.suites:
            checks = suite()
            results.append((name, sum(bool(c) for c in checks), len(checks)))
        self.logger.info("Selftest time (sec): {}".format(time.time() - start))
        return results

    @staticmethod
    def format(results):
        lines = []
        for name, passed, total in results:
            verdict = 'PASS' if passed == total else 'FAIL'
            lines.append("{}: {} ({}/{})".format(name, verdict, passed, total))
        ok = sum(1 for _, passed, total in results if passed == total)
        lines.append("{}/{} suites passed".format(ok, len(results)))
        return "\n".join(lines)

    @staticmethod
    def passed(results):
        return all(passed == total for _, passed, total in results)
