"""
Verification records
"""

from enum import Enum


class Status(str, Enum):
    PASS = 'PASS'
    FAIL = 'FAIL'
    PAPER_MISMATCH = 'PAPER_MISMATCH'
    SKIPPED_DOMAIN = 'SKIPPED_DOMAIN'
    NO_CONVERGENCE = 'NO_CONVERGENCE'

    def __str__(self):
        return self.value


FIELDS = ['case_id', 'params', 'lhs_re', 'lhs_im', 'lhs_err_est', 'rhs_re',
          'rhs_im', 'abs_diff', 'rel_diff', 'tol', 'status', 'n_evals',
          'wall_ms', 'note']
NUMERIC_FIELDS = ['lhs_re', 'lhs_im', 'lhs_err_est', 'rhs_re', 'rhs_im',
                  'abs_diff', 'rel_diff', 'tol', 'wall_ms']
NAN = float('nan')


class VerificationRecord(object):
    """
    Outcome of one case run

    Parameters:
    -----------
    id: str
        case identifier
    params: CaseParams
        parameters of the run
    lhs: complex
        left-hand side (quadrature)
    lhs_err_est: float
        error estimate of lhs
    rhs: complex
        right-hand side
    tol: float
        tolerance of the comparison
    status: Status
        verdict
    n_evals: int
        integrand evaluations
    wall_ms: float
        elapsed wall time
    note: str
        diagnostics
    """

    def __init__(self, id, params, lhs=NAN, lhs_err_est=NAN, rhs=NAN,
                 tol=NAN, status=Status.FAIL, n_evals=0, wall_ms=0.0,
                 note=''):
        self.id = str(id)
        self.params = params
        self.lhs = complex(lhs)
        self.lhs_err_est = float(lhs_err_est)
        self.rhs = complex(rhs)
        self.abs_diff = abs(self.lhs - self.rhs)
        if self.abs_diff == 0.0:
            self.rel_diff = 0.0
        elif self.rhs != 0:
            self.rel_diff = self.abs_diff / abs(self.rhs)
        else:
            self.rel_diff = float('inf')
        self.tol = float(tol)
        self.status = Status(status)
        self.n_evals = int(n_evals)
        self.wall_ms = float(wall_ms)
        self.note = note

    def passed(self):
        return self.abs_diff <= self.tol or self.rel_diff <= self.tol

    def to_dict(self):
        return {
            'case_id': self.id,
            'params': str(self.params),
            'lhs_re': self.lhs.real,
            'lhs_im': self.lhs.imag,
            'lhs_err_est': self.lhs_err_est,
            'rhs_re': self.rhs.real,
            'rhs_im': self.rhs.imag,
            'abs_diff': self.abs_diff,
            'rel_diff': self.rel_diff,
            'tol': self.tol,
            'status': str(self.status),
            'n_evals': self.n_evals,
            'wall_ms': self.wall_ms,
            'note': self.note}

    def __repr__(self):
        return "{}({}): {} lhs={!r} rhs={!r} abs_diff={:.3g}".format(
            self.id, self.params, self.status, self.lhs, self.rhs,
            self.abs_diff)


def summarize(records):
    """Count of records per status"""
    counts = {status: 0 for status in Status}
    for record in records:
        counts[record.status] += 1
    return counts


def summary_line(records):
    counts = summarize(records)
    return "{} pass / {} mismatch / {} skipped / {} fail / " \
        "{} no-convergence".format(
            counts[Status.PASS], counts[Status.PAPER_MISMATCH],
            counts[Status.SKIPPED_DOMAIN], counts[Status.FAIL],
            counts[Status.NO_CONVERGENCE])


def exit_code(records):
    """0 iff no FAIL and no NO_CONVERGENCE"""
    counts = summarize(records)
    if counts[Status.FAIL] or counts[Status.NO_CONVERGENCE]:
        return 1
    return 0
