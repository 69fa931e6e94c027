"""
The case catalog: one entry per identity with its interval, quadrature
strategy, tolerance tier, default parameter grid and domain
"""

from enum import Enum
from ..kernel.cases import CaseId, CaseParams, DOMAINS
from ..specfun.constants import LN_2


class Tier(float, Enum):
    EXACT = 1e-12
    SMOOTH = 1e-10
    MELLIN = 1e-8
    ENDPOINT = 1e-7
    BOUNDARY = 1e-5

    def __str__(self):
        return self.name


class Strategy(str, Enum):
    ADAPTIVE = 'adaptive'
    DOUBLE_EXPONENTIAL = 'double-exponential'
    SEMI_INFINITE = 'semi-infinite'
    CLOSED_FORM = 'closed-form'

    def __str__(self):
        return self.value


SYMMETRIC = '[-π/2, π/2]'
HALF = '[0, π/2]'
SEMI = '[0, ∞)'
NONE = '-'


class CaseEntry(object):
    """
    One catalog row

    Parameters:
    -----------
    id: CaseId
        case identifier
    interval: str
        integration interval of the left-hand side
    strategy: Strategy
        quadrature used for the left-hand side
    tier: Tier
        tolerance tier at interior parameters
    grid: list of CaseParams
        default parameter sweep; the first element is the default
    anchor: str
        the identity, LHS = RHS; cited in `CITATIONS`
    boundary: callable, optional
        CaseParams -> bool, True where the BOUNDARY tier applies
    """

    def __init__(self, id, interval, strategy, tier, grid, anchor,
                 boundary=None):
        self.id = id
        self.interval = interval
        self.strategy = strategy
        self.tier = tier
        self.grid = grid
        self.anchor = anchor
        self.boundary = boundary

    @property
    def default_params(self):
        return self.grid[0]

    @property
    def domain(self):
        return DOMAINS[self.id].description

    @property
    def slots(self):
        return DOMAINS[self.id].slots

    @property
    def reference(self):
        return "{}: {}".format(CITATIONS[self.id], self.anchor)

    def tier_for(self, p):
        if self.boundary is not None and self.boundary(p):
            return Tier.BOUNDARY
        return self.tier

    def __repr__(self):
        return "id: {}, interval: {}, strategy: {}, tier: {}, " \
            "default_params: {}".format(self.id, self.interval, self.strategy,
                                        self.tier, self.default_params)


def _grid(name, values):
    return [CaseParams(**{name: v}) for v in values]


def _product(first, first_values, second, second_values):
    return [CaseParams(**{first: u, second: v})
            for u in first_values for v in second_values]


def _at_ln2(name):
    return lambda p: p.get(name) == LN_2


CITATIONS = {
    CaseId.GMO_M: "log-cosine integral M(a) at a = 0",
    CaseId.GEN_BETA: "one-parameter generalization",
    CaseId.HURWITZ_REP: "Hurwitz zeta representation",
    CaseId.ALPHA_M1: "Hurwitz representation at α = −1",
    CaseId.RIEMANN_REP: "Riemann zeta representation",
    CaseId.INT_LOGCOS_RATIO: "generalization at β = 0",
    CaseId.INT_LOG_ZERO: "Hurwitz representation at α = 0, β = 0",
    CaseId.INT_ZETA_M1: "Riemann representation at ζ(−1) = −1/12",
    CaseId.F_LOG: "log integral f(a)",
    CaseId.G_LOG_COS2X: "cosine-weighted log integral g(a)",
    CaseId.G1_PART: "e^{-2ix} half of g(a)",
    CaseId.G2_PART: "e^{2ix} half of g(a)",
    CaseId.GAMMA_RATIO_R: "gamma-ratio integral",
    CaseId.LOGABS_GAMMA_C: "log-abs-gamma integral",
    CaseId.REM1: "shifted-log family, negative shift",
    CaseId.REM2: "shifted-log family, positive shift",
    CaseId.N_FAMILY: "Euler-product factor family",
    CaseId.SHIFT_C: "integer-shift family",
    CaseId.LAPLACE_REL: "Laplace transform of ψ(s+1)",
    CaseId.HURWITZDEF: "Mellin form of Γ(α)ζ(α, β+1)",
    CaseId.J_BETA: "regularized Mellin integral J(β)",
    CaseId.RATIONAL_MELLIN: "rational Mellin integral",
    CaseId.FINAL1_CHAIN: "J(β) assembled into the generalization",
    CaseId.LOBACHEVSKY: "Lobachevskii's integral",
    CaseId.FOOTNOTE_EQUIV: "real fold of the complex form",
    CaseId.S3_1: "unproved list, entry 1",
    CaseId.S3_2: "unproved list, entry 2",
    CaseId.S3_3: "unproved list, entry 3",
    CaseId.S3_4: "unproved list, entry 4",
    CaseId.S3_5: "unproved list, entry 5",
    CaseId.S3_6: "unproved list, entry 6",
    CaseId.S3_7: "unproved list, entry 7",
    CaseId.S3_8: "unproved list, entry 8",
}

_A_GRID = [0.0, -2.0, -0.5, 0.3, LN_2, 1.0, 3.0]
_DE = Strategy.DOUBLE_EXPONENTIAL
_SI = Strategy.SEMI_INFINITE


def _build():
    entries = [
        CaseEntry(
            CaseId.GMO_M, HALF, _DE, Tier.ENDPOINT, _grid('a', [0.0]),
            "(4/π)∫ x²/(x² + ln²(2e^{-a}cos x)) dx at a = 0 "
            "= (1/2)(1 − γ + ln 2π)"),
        CaseEntry(
            CaseId.GEN_BETA, SYMMETRIC, _DE, Tier.ENDPOINT,
            _grid('beta', [0.0, -0.9, -0.5, 0.5, 1.0, 2.0, 5.0]),
            "(1/2i)∫ x(1+e^{-2ix})^β / ln(1+e^{-2ix}) dx "
            "= (π/8)(1 + ln 2π − γ(2β+1) − 2 ln Γ(β+1))"),
        CaseEntry(
            CaseId.HURWITZ_REP, SYMMETRIC, _DE, Tier.ENDPOINT,
            _product('alpha', [-0.5, -2.5, -1.5, -1.0, 0.0, 0.5, 1.0, 1.5],
                     'beta', [0.0, 0.5, 2.0]),
            "∫ (1+e^{-2ix})^β ln^α(1+e^{-2ix}) dx "
            "= −π ζ(α+1, β+1) / Γ(−α)"),
        CaseEntry(
            CaseId.ALPHA_M1, SYMMETRIC, _DE, Tier.ENDPOINT,
            _grid('beta', [0.0, 0.5, 1.0, 3.0]),
            "∫ (1+e^{-2ix})^β / ln(1+e^{-2ix}) dx = π(1 + 2β)/2"),
        CaseEntry(
            CaseId.RIEMANN_REP, SYMMETRIC, _DE, Tier.ENDPOINT,
            _grid('alpha', [0.5, -2.0, -1.0, 0.0, 1.0, 2.0]),
            "∫ ln^{α−1}(1+e^{-2ix}) dx = −π ζ(α) / Γ(1−α)"),
        CaseEntry(
            CaseId.INT_LOGCOS_RATIO, HALF, _DE, Tier.ENDPOINT,
            [CaseParams()],
            "∫ ln(2cos x) / (x² + ln²(2cos x)) dx = π/4"),
        CaseEntry(
            CaseId.INT_LOG_ZERO, HALF, _DE, Tier.ENDPOINT, [CaseParams()],
            "∫ ln(x² + ln²(2cos x)) dx = 0"),
        CaseEntry(
            CaseId.INT_ZETA_M1, HALF, _DE, Tier.ENDPOINT, [CaseParams()],
            "∫ 1/(x² + ln²(2cos x)) − 2x²/(x² + ln²(2cos x))² dx = π/24"),
        CaseEntry(
            CaseId.F_LOG, HALF, _DE, Tier.ENDPOINT, _grid('a', _A_GRID),
            "f(a) = ∫ ln(x² + ln²(2e^{-a}cos x)) dx = π ln(a/(e^b − 1)), "
            "b = min(a, ln 2)", _at_ln2('a')),
        CaseEntry(
            CaseId.G_LOG_COS2X, HALF, _DE, Tier.ENDPOINT, _grid('a', _A_GRID),
            "g(a) = ∫ ln(x² + ln²(2e^{-a}cos x)) cos 2x dx "
            "= (π/2)(1 − 1/a − e^b + 1/(e^b − 1))", _at_ln2('a')),
        CaseEntry(
            CaseId.G1_PART, SYMMETRIC, _DE, Tier.ENDPOINT,
            _grid('a', [0.3, -1.0, 0.0, 1.5]),
            "(1/2)∫ ln(y − a) e^{-2ix} dx = −(π/2)e^b"),
        CaseEntry(
            CaseId.G2_PART, SYMMETRIC, _DE, Tier.ENDPOINT,
            _grid('a', [0.3, -1.0, 0.0, 1.5]),
            "(1/2)∫ ln(y − a) e^{2ix} dx = (π/2)(1 − 1/a + 1/(e^b − 1))"),
        CaseEntry(
            CaseId.GAMMA_RATIO_R, HALF, _DE, Tier.ENDPOINT,
            _grid('r', [0.25, 0.05, 0.45]),
            "∫ ln|Γ(1 + (ln(2cos x) + ix)/λ) / Γ(1 + (ix − ln(2cos x))/λ)| dx "
            "= (π/2) ln ∏(1 − rⁿ), λ = ln(1/r)"),
        CaseEntry(
            CaseId.LOGABS_GAMMA_C, HALF, _DE, Tier.ENDPOINT,
            _grid('c', [1.0, LN_2, 0.8, 2.0, 5.0]),
            "∫ ln|Γ(c + ix − ln(2cos x))| dx = (π/2) ln Γ(c)", _at_ln2('c')),
        CaseEntry(
            CaseId.REM1, SYMMETRIC, _DE, Tier.ENDPOINT,
            _product('r', [0.3], 'n', [1, 2, 5]),
            "∫ ln(−ix − nλ + ln(2cos x)) dx = π ln(nλ)"),
        CaseEntry(
            CaseId.REM2, SYMMETRIC, _DE, Tier.ENDPOINT,
            _product('r', [0.3], 'n', [1, 2, 5]),
            "∫ ln(−ix + nλ + ln(2cos x)) dx = π ln(nλ/(1 − rⁿ))"),
        CaseEntry(
            CaseId.N_FAMILY, SYMMETRIC, _DE, Tier.ENDPOINT,
            _product('r', [0.3], 'n', [1, 2, 5]),
            "∫ ln[(−ix − nλ + ln(2cos x))/(−ix + nλ + ln(2cos x))] dx "
            "= π ln(1 − rⁿ)"),
        CaseEntry(
            CaseId.SHIFT_C, SYMMETRIC, _DE, Tier.ENDPOINT,
            _product('c', [1.0, 2.0], 'n', [0, 1, 3]),
            "∫ ln(−ix − n − c + ln(2cos x)) dx = π ln(n + c)"),
        CaseEntry(
            CaseId.LAPLACE_REL, SEMI, _SI, Tier.ENDPOINT,
            _grid('a', [1.5, 0.2, 0.3, LN_2, 0.8, 3.0]),
            "∫_0^∞ e^{-as} ψ(s+1) ds = M(a) − γ/a − ln(e^a − 1)/(1 − e^{-a}) "
            "H(ln 2 − a)"),
        CaseEntry(
            CaseId.HURWITZDEF, SEMI, _SI, Tier.MELLIN,
            [CaseParams(alpha=2.0, beta=0.0), CaseParams(alpha=3.0, beta=1.0),
             CaseParams(alpha=1.5, beta=0.5)],
            "∫_0^∞ y^{α−1} e^{-βy}/(e^y − 1) dy = Γ(α) ζ(α, β+1)"),
        CaseEntry(
            CaseId.J_BETA, SEMI, _SI, Tier.ENDPOINT,
            _grid('beta', [0.0, 0.5, 2.0]),
            "J(β) = ∫_0^∞ (1/y)[e^{-βy}/(e^y − 1) − 1/(y(1 + y(β+1/2)))] dy "
            "= γ(β+1/2) + ln Γ(β+1) − (1/2)ln 2π − (β+1/2)ln(β+1/2)"),
        CaseEntry(
            CaseId.RATIONAL_MELLIN, SEMI, _SI, Tier.ENDPOINT,
            _product('alpha', [1.5, 1.25, 1.75], 'beta', [0.0, 1.0]),
            "∫_0^∞ y^{α−2}/(1 + y(β+1/2)) dy = −(β+1/2)^{1−α} π / sin πα"),
        CaseEntry(
            CaseId.FINAL1_CHAIN, NONE, Strategy.CLOSED_FORM, Tier.EXACT,
            _grid('beta', [0.0, -0.4, 0.5, 1.0, 2.0, 5.0]),
            "−(π/4)J(β) + π/8 − (π/4)(β+1/2)ln(β+1/2) = I(β)"),
        CaseEntry(
            CaseId.LOBACHEVSKY, HALF, Strategy.ADAPTIVE, Tier.ENDPOINT,
            [CaseParams()], "∫ ln(2cos x) dx = 0"),
        CaseEntry(
            CaseId.FOOTNOTE_EQUIV, SYMMETRIC, _DE, Tier.ENDPOINT,
            _grid('a', [0.0, 0.3, 1.5]),
            "(1/2i)∫ x/(y − a) dx = ∫_0^{π/2} x²/(x² + ln²(2e^{-a}cos x)) dx"),
        CaseEntry(
            CaseId.S3_1, HALF, _DE, Tier.BOUNDARY, [CaseParams()],
            "∫ ln(x² + ln²cos x) dx = (π/2) ln ln 2"),
        CaseEntry(
            CaseId.S3_2, HALF, _DE, Tier.BOUNDARY, [CaseParams()],
            "∫ ln(x² + ln²cos x) cos 2x dx = −π/ln 2"),
        CaseEntry(
            CaseId.S3_3, HALF, _DE, Tier.ENDPOINT, [CaseParams()],
            "∫ ln(x² + ln²(2cos x)) cos 2x dx = −π/4"),
        CaseEntry(
            CaseId.S3_4, HALF, _DE, Tier.ENDPOINT, [CaseParams()],
            "∫ ln cos x / (x² + ln²cos x) dx = (π/2)(1 − 1/ln 2)"),
        CaseEntry(
            CaseId.S3_5, HALF, _DE, Tier.ENDPOINT, [CaseParams()],
            "∫ x sin 2x / (x² + ln²cos x) dx = π/(4 ln²2)"),
        CaseEntry(
            CaseId.S3_6, HALF, _DE, Tier.ENDPOINT, [CaseParams()],
            "∫ x sin 2x / (x² + ln²(2cos x)) dx = 13π/48"),
        CaseEntry(
            CaseId.S3_7, SYMMETRIC, _DE, Tier.ENDPOINT,
            _product('beta', [0.0, 1.0], 'a', [0.3, 1.5]),
            "∫ (1+e^{-2ix})^β / (ln(1+e^{-2ix}) − a) dx "
            "= −π/a + π e^{(β+1)a}/(e^a − 1) H(ln 2 − a)"),
        CaseEntry(
            CaseId.S3_8, HALF, _DE, Tier.ENDPOINT,
            _grid('a', [0.3, LN_2, 1.5]),
            "∫ x sin 2x / (x² + ln²(2e^{-a}cos x)) dx "
            "= π/(4a²) + (πe^a/4)(1 − 1/(e^a − 1)²) H(ln 2 − a)",
            _at_ln2('a')),
    ]
    return {entry.id: entry for entry in entries}


CATALOG = _build()

# Dual-route zeta grid: α bounded away from 0 and 1
HURWITZ_CROSSCHECK_ALPHAS = [-2.5, -1.5, -1.0, -0.5, 0.5, 1.5]
HURWITZ_CROSSCHECK_BETAS = [0.0, 0.5, 2.0]
LAPLACE_GRID = [0.2, 0.3, LN_2, 0.8, 1.5, 3.0]


def get_entry(case):
    return CATALOG[CaseId(case)]
