"""
Run catalog cases: left-hand side by quadrature, right-hand side in
closed form, verdict against the tolerance tier of the case
"""

import logging
import time
import numpy as np
from joblib import Parallel, delayed
from tqdm import tqdm
from ..closedform.rhs import (laplace_rhs, rhs_alternatives, rhs_final1,
                              rhs_value)
from ..errors import ConvergenceError, DomainError
from ..kernel.cases import CaseId, CaseParams, check_domain
from ..kernel.integrands import (footnote_real_integrand, lhs_integrand,
                                 m_integrand, telescoped_integrand)
from ..quad.adaptive import integrate_finite
from ..quad.base import QuadConfig, QuadResult
from ..quad.double_exponential import integrate_de, integrate_semi_infinite
from ..specfun.constants import PI
from ..specfun.gamma import reciprocal_gamma
from ..specfun.products import partial_euler_product
from ..specfun.zeta import hurwitz_zeta
from .catalog import (CATALOG, HURWITZ_CROSSCHECK_ALPHAS,
                      HURWITZ_CROSSCHECK_BETAS, LAPLACE_GRID, Strategy, Tier,
                      get_entry)
from .records import Status, VerificationRecord


CROSSCHECK_TOL = 1e-7
MISMATCH_FACTOR = 100.0
SYMMETRY_FACTOR = 10.0
# 1/Γ(-α) vanishes at α = 0, 1, 2, ...
INVERSION_GAP = 0.1


def integrate(integrand, strategy, cfg=None):
    """
    Integral of an Integrand, summed over the pieces between its breakpoints

    Raises
    ------
    ConvergenceError: some piece failed; .result holds the partial sum
    """
    cfg = QuadConfig() if cfg is None else cfg
    strategy = Strategy(strategy)
    total = None
    for piece in integrand.pieces():
        try:
            if strategy is Strategy.SEMI_INFINITE:
                result = integrate_semi_infinite(piece, piece.lo, cfg)
            elif strategy is Strategy.ADAPTIVE:
                result = integrate_finite(piece, piece.lo, piece.hi, cfg)
            else:
                result = integrate_de(piece, piece.lo, piece.hi, cfg)
        except ConvergenceError as e:
            partial = e.result
            if total is not None and partial is not None:
                partial = total + partial
            raise ConvergenceError(str(e), partial)
        total = result if total is None else total + result
    return total


def _close(value, target, tol):
    diff = abs(value - target)
    return diff <= tol or (target != 0 and diff / abs(target) <= tol)


def _evaluate(entry, p, cfg, experimental):
    """(lhs QuadResult, rhs, lhs is real, note)"""
    case = entry.id
    if case is CaseId.FINAL1_CHAIN:
        lhs = QuadResult(rhs_final1(p.beta), 0.0, 0, True)
        return lhs, rhs_value(case, p).value, True, ''

    integrand = lhs_integrand(case, p, experimental)
    lhs = integrate(integrand, entry.strategy, cfg)
    note = ''
    if case is CaseId.LAPLACE_REL:
        m = integrate(m_integrand(p.a), Strategy.DOUBLE_EXPONENTIAL, cfg)
        rhs = laplace_rhs(p.a, m.value.real)
        note = "M(a) by quadrature, err_est {:.3g}".format(m.err_est)
    elif case is CaseId.FOOTNOTE_EQUIV:
        fold = integrate(footnote_real_integrand(p.a),
                         Strategy.DOUBLE_EXPONENTIAL, cfg)
        rhs = fold.value
        note = "real fold by quadrature, err_est {:.3g}".format(fold.err_est)
    else:
        value = rhs_value(case, p, experimental)
        rhs = value.value
        if value.limit_branch_used:
            note = "limit branch"
    return lhs, rhs, integrand.real_valued, note


def _verdict(record, entry, p, real_valued):
    lhs, tol = record.lhs, record.tol
    if real_valued and abs(lhs.imag) > SYMMETRY_FACTOR * record.lhs_err_est:
        return Status.FAIL, "symmetry violation"
    if record.passed():
        return Status.PASS, record.note
    if record.abs_diff > MISMATCH_FACTOR * tol:
        for label, value in rhs_alternatives(entry.id, p):
            if _close(lhs, value, tol):
                return Status.PAPER_MISMATCH, \
                    "printed rhs {!r}; matches alternative {} = {!r}".format(
                        record.rhs.real, label, value)
    return Status.FAIL, record.note


def verify_case(case, p=None, cfg=None, experimental=False):
    """
    Verify one catalog case at one parameter point

    Arguments:
    ---------
    case: CaseId or str
        identity to verify
    p: CaseParams, optional
        parameters; the catalog default when None
    cfg: QuadConfig, optional
        tolerances and budget of the quadrature
    experimental: boolean, optional, default=False
        admit complex β for GEN_BETA

    Returns
    -------
    record: VerificationRecord
        never raises for domain or convergence problems; they are
        reported as SKIPPED_DOMAIN and NO_CONVERGENCE
    """
    cfg = QuadConfig() if cfg is None else cfg
    entry = get_entry(case)
    p = entry.default_params if p is None else p
    start = time.time()

    def elapsed():
        return (time.time() - start) * 1000.0

    try:
        check_domain(entry.id, p, experimental)
        tol = float(entry.tier_for(p))
        lhs, rhs, real_valued, note = _evaluate(entry, p, cfg, experimental)
    except DomainError as e:
        return VerificationRecord(entry.id, p, status=Status.SKIPPED_DOMAIN,
                                  wall_ms=elapsed(), note=str(e))
    except ConvergenceError as e:
        partial = e.result
        if partial is None:
            partial = QuadResult(np.nan, np.inf, 0, False)
        return VerificationRecord(
            entry.id, p, lhs=partial.value, lhs_err_est=partial.err_est,
            tol=float(entry.tier_for(p)), status=Status.NO_CONVERGENCE,
            n_evals=partial.n_evals, wall_ms=elapsed(), note=str(e))

    record = VerificationRecord(
        entry.id, p, lhs=lhs.value, lhs_err_est=lhs.err_est, rhs=rhs,
        tol=tol, n_evals=lhs.n_evals, note=note)
    record.status, record.note = _verdict(record, entry, p, real_valued)
    record.wall_ms = elapsed()
    return record


def zeta_by_integral(s, q, cfg=None):
    """
    ζ(s, q) from the HURWITZ_REP integral: ζ(α+1, β+1) = -I(α, β) Γ(-α) / π
    with α = s - 1, β = q - 1

    Returns
    -------
    result: QuadResult
        ζ(s, q) with the error estimate of the integral carried over

    Raises
    ------
    DomainError: s within 0.1 of 1, 2, 3, ..., where 1/Γ(-α) vanishes,
        or q <= 0
    ConvergenceError: the integral did not converge
    """
    alpha = complex(s) - 1.0
    beta = float(q) - 1.0
    nearest = max(0.0, round(alpha.real))
    if abs(alpha - nearest) < INVERSION_GAP:
        raise DomainError(
            "1/Γ(-α) vanishes near α = {:g}; s = {} cannot be recovered "
            "from the integral".format(nearest, s))
    p = CaseParams(alpha=alpha, beta=beta)
    lhs = integrate(lhs_integrand(CaseId.HURWITZ_REP, p),
                    Strategy.DOUBLE_EXPONENTIAL, cfg)
    rg = reciprocal_gamma(-alpha)
    return QuadResult(-lhs.value / (PI * rg), lhs.err_est / (PI * abs(rg)),
                      lhs.n_evals, lhs.converged)


def crosscheck_hurwitz(alphas=None, betas=None, cfg=None):
    """
    ζ(α+1, β+1) two ways: from the HURWITZ_REP integral and by
    Euler-Maclaurin summation

    Points with α within 0.1 of a non-negative integer are SKIPPED_DOMAIN.
    """
    cfg = QuadConfig() if cfg is None else cfg
    alphas = HURWITZ_CROSSCHECK_ALPHAS if alphas is None else alphas
    betas = HURWITZ_CROSSCHECK_BETAS if betas is None else betas
    case_id = "{}/zeta".format(CaseId.HURWITZ_REP)
    records = []
    for alpha in alphas:
        for beta in betas:
            p = CaseParams(alpha=alpha, beta=beta)
            start = time.time()
            try:
                integral = zeta_by_integral(alpha + 1.0, beta + 1.0, cfg)
            except DomainError as e:
                records.append(VerificationRecord(
                    case_id, p, status=Status.SKIPPED_DOMAIN, note=str(e)))
                continue
            except ConvergenceError as e:
                records.append(VerificationRecord(
                    case_id, p, status=Status.NO_CONVERGENCE,
                    tol=CROSSCHECK_TOL, note=str(e)))
                continue
            record = VerificationRecord(
                case_id, p, lhs=integral.value, lhs_err_est=integral.err_est,
                rhs=hurwitz_zeta(alpha + 1.0, beta + 1.0), tol=CROSSCHECK_TOL,
                n_evals=integral.n_evals,
                note="integral route vs Euler-Maclaurin")
            record.status = Status.PASS if record.passed() else Status.FAIL
            record.wall_ms = (time.time() - start) * 1000.0
            records.append(record)
    return records


def crosscheck_laplace(a_grid=None, cfg=None):
    """
    Direct quadrature of ∫ e^{-as} ψ(s+1) ds against the M(a) route
    """
    a_grid = LAPLACE_GRID if a_grid is None else a_grid
    return [verify_case(CaseId.LAPLACE_REL, CaseParams(a=a), cfg)
            for a in a_grid]


def telescoping_check(r=0.3, n_terms=5, cfg=None):
    """
    Σ_{n<=N} of the N_FAMILY integrals against one quadrature of the
    telescoped integrand, and against π ln ∏_{n<=N}(1 - rⁿ)

    Returns
    -------
    record: VerificationRecord
        lhs: the sum of N_FAMILY integrals; rhs: the telescoped integral;
        the tolerance is the combined error estimate; the note carries the
        closed form
    """
    cfg = QuadConfig() if cfg is None else cfg
    start = time.time()
    total = None
    for n in range(1, n_terms + 1):
        result = integrate(
            lhs_integrand(CaseId.N_FAMILY, CaseParams(r=r, n=n)),
            Strategy.DOUBLE_EXPONENTIAL, cfg)
        total = result if total is None else total + result
    telescoped = integrate(telescoped_integrand(r, n_terms),
                           Strategy.DOUBLE_EXPONENTIAL, cfg)
    closed = PI * np.log(partial_euler_product(r, n_terms))
    tol = max(float(Tier.ENDPOINT),
              SYMMETRY_FACTOR * (total.err_est + telescoped.err_est))
    record = VerificationRecord(
        "{}/telescoping".format(CaseId.N_FAMILY), CaseParams(r=r, n=n_terms),
        lhs=total.value, lhs_err_est=total.err_est, rhs=telescoped.value,
        tol=tol, n_evals=total.n_evals + telescoped.n_evals,
        note="closed form {!r}".format(float(closed)))
    ok = record.passed() and _close(total.value.real, closed, tol)
    record.status = Status.PASS if ok else Status.FAIL
    record.wall_ms = (time.time() - start) * 1000.0
    return record


def catalog_tasks():
    """(case, params) of a full run, in catalog then grid order"""
    return [(entry.id, p) for entry in CATALOG.values() for p in entry.grid]


def verify_all(cfg=None, n_jobs=1, experimental=False, progress=True):
    """
    Every catalog case over its grid, then the dual-route zeta records
    and the N_FAMILY telescoping record

    The order of the records does not depend on n_jobs.
    """
    cfg = QuadConfig() if cfg is None else cfg
    tasks = catalog_tasks()
    records = Parallel(n_jobs=n_jobs)(
        delayed(verify_case)(case, p, cfg, experimental)
        for case, p in tqdm(tasks, disable=not progress))
    return list(records) + crosscheck_hurwitz(cfg=cfg) \
        + [telescoping_check(cfg=cfg)]


class Harness(object):
    """
    Verification driver

    Parameters:
    -----------
    cfg: QuadConfig, optional, default=None
        quadrature configuration; defaults when None
    n_jobs: int, optional, default=1
        parallel jobs of a full run
    experimental: boolean, optional, default=False
        admit complex β for GEN_BETA
    progress: boolean, optional, default=True
        show a progress bar during a full run
    """

    def __init__(self, cfg=None, n_jobs=1, experimental=False, progress=True):
        self.cfg = QuadConfig() if cfg is None else cfg
        self.n_jobs = n_jobs
        self.experimental = experimental
        self.progress = progress
        logging.basicConfig(level=logging.INFO)
        self.logger = logging.getLogger('GMO-Harness')
        self.logger.info("Parameters:: {}".format(str(self)))

    def _log(self, records, start):
        for record in records:
            if record.status is Status.NO_CONVERGENCE:
                self.logger.warning("No convergence: {}".format(record))
            elif record.status is Status.FAIL:
                self.logger.warning("Failed: {}".format(record))
        self.logger.info("Verification time (sec): {}".format(
            time.time() - start))

    def verify_case(self, case, p=None):
        start = time.time()
        record = verify_case(case, p, self.cfg, self.experimental)
        if record.status is Status.SKIPPED_DOMAIN:
            self.logger.warning("Skipped: {}".format(record.note))
        self._log([record], start)
        return record

    def verify_all(self):
        start = time.time()
        records = verify_all(self.cfg, self.n_jobs, self.experimental,
                             self.progress)
        self._log(records, start)
        return records

    def sweep(self, case, name, values, fixed=None):
        """
        One record per value of the slot `name`

        Arguments:
        ---------
        case: CaseId
            identity to sweep
        name: str
            parameter slot
        values: iterable
            slot values, in output order
        fixed: CaseParams, optional
            other slots; the catalog default when None
        """
        entry = get_entry(case)
        assert name in entry.slots, \
            "{} has no parameter '{}'".format(entry.id, name)
        base = entry.default_params if fixed is None else fixed
        start = time.time()
        points = [base.replace(**{name: v}) for v in values]
        records = Parallel(n_jobs=self.n_jobs)(
            delayed(verify_case)(entry.id, p, self.cfg, self.experimental)
            for p in tqdm(points, disable=not self.progress))
        self._log(records, start)
        return list(records)

    def __repr__(self):
        return "cfg: ({}), n_jobs: {}, experimental: {}".format(
            self.cfg, self.n_jobs, self.experimental)
