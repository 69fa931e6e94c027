"""
Case identifiers, parameter bundles and parameter domains
"""

from enum import Enum
import numpy as np
from ..errors import DomainError
from ..specfun.constants import LN_2


class CaseId(str, Enum):
    GMO_M = 'GMO_M'
    GEN_BETA = 'GEN_BETA'
    HURWITZ_REP = 'HURWITZ_REP'
    ALPHA_M1 = 'ALPHA_M1'
    RIEMANN_REP = 'RIEMANN_REP'
    INT_LOGCOS_RATIO = 'INT_LOGCOS_RATIO'
    INT_LOG_ZERO = 'INT_LOG_ZERO'
    INT_ZETA_M1 = 'INT_ZETA_M1'
    F_LOG = 'F_LOG'
    G_LOG_COS2X = 'G_LOG_COS2X'
    G1_PART = 'G1_PART'
    G2_PART = 'G2_PART'
    GAMMA_RATIO_R = 'GAMMA_RATIO_R'
    LOGABS_GAMMA_C = 'LOGABS_GAMMA_C'
    REM1 = 'REM1'
    REM2 = 'REM2'
    N_FAMILY = 'N_FAMILY'
    SHIFT_C = 'SHIFT_C'
    LAPLACE_REL = 'LAPLACE_REL'
    HURWITZDEF = 'HURWITZDEF'
    J_BETA = 'J_BETA'
    RATIONAL_MELLIN = 'RATIONAL_MELLIN'
    FINAL1_CHAIN = 'FINAL1_CHAIN'
    LOBACHEVSKY = 'LOBACHEVSKY'
    FOOTNOTE_EQUIV = 'FOOTNOTE_EQUIV'
    S3_1 = 'S3_1'
    S3_2 = 'S3_2'
    S3_3 = 'S3_3'
    S3_4 = 'S3_4'
    S3_5 = 'S3_5'
    S3_6 = 'S3_6'
    S3_7 = 'S3_7'
    S3_8 = 'S3_8'

    def __str__(self):
        return self.value


SLOTS = ('a', 'alpha', 'beta', 'r', 'c', 'n')
_COMPLEX_SLOTS = ('alpha', 'beta')


class CaseParams(object):
    """
    Parameters an identity depends on; unused slots are None

    Parameters:
    -----------
    a: float, optional
        shift of the kernel, ln(2 e^{-a} cos x)
    alpha: complex, optional
        exponent of the kernel
    beta: complex, optional
        exponent of 1 + e^{-2ix}
    r: float, optional
        ratio of the Euler product
    c: float, optional
        shift of the log-gamma argument
    n: int, optional
        index of the rem1/rem2 family
    """

    def __init__(self, a=None, alpha=None, beta=None, r=None, c=None,
                 n=None):
        self.a = None if a is None else float(a)
        self.alpha = _number(alpha)
        self.beta = _number(beta)
        self.r = None if r is None else float(r)
        self.c = None if c is None else float(c)
        self.n = None if n is None else int(n)

    def get(self, name):
        return getattr(self, name)

    def replace(self, **kwargs):
        values = self.to_dict()
        values.update(kwargs)
        return CaseParams(**values)

    def items(self):
        return [(k, getattr(self, k)) for k in SLOTS
                if getattr(self, k) is not None]

    def to_dict(self):
        return dict(self.items())

    def __eq__(self, other):
        return isinstance(other, CaseParams) and self.items() == other.items()

    def __hash__(self):
        return hash(tuple(self.items()))

    def __str__(self):
        return ",".join("{}={}".format(k, _format(v)) for k, v in self.items())

    def __repr__(self):
        return "CaseParams({})".format(str(self))


def _number(value):
    if value is None:
        return None
    value = complex(value)
    if value.imag == 0.0:
        return value.real
    return value


def _format(value):
    if isinstance(value, complex):
        return repr(value).strip('()')
    return repr(value)


def parse_params(text):
    """
    Parse 'a=0.3,beta=1' (comma or space separated) into CaseParams

    alpha and beta accept complex literals such as 0.5+1j.
    """
    values = {}
    if text is None:
        return CaseParams()
    if not isinstance(text, str):
        text = ",".join(text)
    for item in text.replace(' ', ',').split(','):
        if not item:
            continue
        if '=' not in item:
            raise DomainError("Malformed parameter '{}'".format(item))
        key, _, raw = item.partition('=')
        key = key.strip()
        if key not in SLOTS:
            raise DomainError("Unknown parameter '{}'".format(key))
        try:
            if key in _COMPLEX_SLOTS:
                values[key] = complex(raw)
            elif key == 'n':
                values[key] = int(raw)
            else:
                values[key] = float(raw)
        except ValueError:
            raise DomainError("Malformed value for {}: '{}'".format(key, raw))
    return CaseParams(**values)


class Domain(object):
    """
    Parameter domain of a case

    Parameters:
    -----------
    slots: tuple
        parameters the case reads
    predicate: callable
        CaseParams -> bool, True inside the domain
    description: str
        human-readable domain
    """

    def __init__(self, slots, predicate, description):
        self.slots = tuple(slots)
        self.predicate = predicate
        self.description = description

    def __repr__(self):
        return "slots: {}, domain: {}".format(self.slots, self.description)


def _real(p, name):
    v = p.get(name)
    return v is not None and not isinstance(v, complex) and np.isfinite(v)


def _beta_ok(p, experimental=False):
    b = p.beta
    if b is None:
        return False
    if isinstance(b, complex):
        return experimental and b.real > -1
    return b > -1


def _alpha_ok(p):
    return p.alpha is not None and np.isfinite(complex(p.alpha))


def _a_real(p):
    return _real(p, 'a')


_NONE = Domain((), lambda p: True, "none")

DOMAINS = {
    CaseId.GMO_M: Domain(
        ('a',), lambda p: _real(p, 'a') and p.a == 0, "a = 0"),
    CaseId.GEN_BETA: Domain(
        ('beta',), _beta_ok, "Re β > −1 (real β; complex β experimental)"),
    CaseId.HURWITZ_REP: Domain(
        ('alpha', 'beta'),
        lambda p: _alpha_ok(p) and _real(p, 'beta') and p.beta > -1,
        "β > −1, α complex"),
    CaseId.ALPHA_M1: Domain(
        ('beta',), lambda p: _real(p, 'beta') and p.beta > -1, "β > −1"),
    CaseId.RIEMANN_REP: Domain(('alpha',), _alpha_ok, "α complex"),
    CaseId.INT_LOGCOS_RATIO: _NONE,
    CaseId.INT_LOG_ZERO: _NONE,
    CaseId.INT_ZETA_M1: _NONE,
    CaseId.F_LOG: Domain(('a',), _a_real, "a real"),
    CaseId.G_LOG_COS2X: Domain(('a',), _a_real, "a real"),
    CaseId.G1_PART: Domain(('a',), _a_real, "a real"),
    CaseId.G2_PART: Domain(('a',), _a_real, "a real"),
    CaseId.GAMMA_RATIO_R: Domain(
        ('r',), lambda p: _real(p, 'r') and 0 < p.r < 0.5, "0 < r < 1/2"),
    CaseId.LOGABS_GAMMA_C: Domain(
        ('c',), lambda p: _real(p, 'c') and p.c >= LN_2, "c ≥ ln 2"),
    CaseId.REM1: Domain(
        ('r', 'n'), lambda p: _real(p, 'r') and 0 < p.r < 0.5
        and p.n is not None and p.n >= 1, "0 < r < 1/2, n ≥ 1"),
    CaseId.REM2: Domain(
        ('r', 'n'), lambda p: _real(p, 'r') and 0 < p.r < 0.5
        and p.n is not None and p.n >= 1, "0 < r < 1/2, n ≥ 1"),
    CaseId.N_FAMILY: Domain(
        ('r', 'n'), lambda p: _real(p, 'r') and 0 < p.r < 0.5
        and p.n is not None and p.n >= 1, "0 < r < 1/2, n ≥ 1"),
    CaseId.SHIFT_C: Domain(
        ('c', 'n'), lambda p: _real(p, 'c') and p.c > LN_2
        and p.n is not None and p.n >= 0, "c > ln 2, n ≥ 0"),
    CaseId.LAPLACE_REL: Domain(
        ('a',), lambda p: _real(p, 'a') and p.a > 0, "a > 0"),
    CaseId.HURWITZDEF: Domain(
        ('alpha', 'beta'), lambda p: _real(p, 'alpha') and p.alpha > 1
        and _real(p, 'beta') and p.beta > -1, "α > 1, β > −1"),
    CaseId.J_BETA: Domain(
        ('beta',), lambda p: _real(p, 'beta') and p.beta > -0.5, "β > −1/2"),
    CaseId.RATIONAL_MELLIN: Domain(
        ('alpha', 'beta'), lambda p: _real(p, 'alpha') and 1 < p.alpha < 2
        and _real(p, 'beta') and p.beta > -0.5, "1 < α < 2, β > −1/2"),
    CaseId.FINAL1_CHAIN: Domain(
        ('beta',), lambda p: _real(p, 'beta') and p.beta > -0.5, "β > −1/2"),
    CaseId.LOBACHEVSKY: _NONE,
    CaseId.FOOTNOTE_EQUIV: Domain(
        ('a',), lambda p: _real(p, 'a') and p.a != LN_2, "a real, a ≠ ln 2"),
    CaseId.S3_1: _NONE,
    CaseId.S3_2: _NONE,
    CaseId.S3_3: _NONE,
    CaseId.S3_4: _NONE,
    CaseId.S3_5: _NONE,
    CaseId.S3_6: _NONE,
    CaseId.S3_7: Domain(
        ('a', 'beta'), lambda p: _real(p, 'a') and p.a != LN_2
        and _real(p, 'beta') and p.beta > -1, "a real, a ≠ ln 2, β > −1"),
    CaseId.S3_8: Domain(('a',), _a_real, "a real"),
}


def check_domain(case, p, experimental=False):
    """
    Raise DomainError unless p lies in the domain of case

    Only the slots a case declares are read; a missing slot is a domain
    violation.
    """
    case = CaseId(case)
    domain = DOMAINS[case]
    for slot in domain.slots:
        if p.get(slot) is None:
            raise DomainError("{} needs parameter '{}'".format(case, slot))
    if case is CaseId.GEN_BETA:
        ok = _beta_ok(p, experimental)
    else:
        ok = domain.predicate(p)
    if not ok:
        raise DomainError("{} outside domain ({}): {}".format(
            case, domain.description, p))
