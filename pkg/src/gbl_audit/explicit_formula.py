"""
Logarithmic integrals, the tail integral and the truncated explicit formula for π(x).

Li(x) here is the integral of 1/log u from 2 to x. Zero terms use the analytic
continuation li(x^(ρ/r)) = Ei((ρ/r)·log x) and are paired with their conjugates, so
each pair contributes 2·Re Ei(·) and the sum over zeros is real.
"""

import logging
import math
import warnings
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
import pandas as pd
from scipy import integrate, special

from . import config
from .errors import DomainError, InvalidArgumentError, OutOfRangeError
from .prime_core import PrimeCache, squarefree_moebius
from .zeta_zeros import ZeroTable

logger = logging.getLogger(__name__)

LI_2 = 1.0451637801174927848  # li(2), the principal-value integral from 0 to 2

# Values the audited argument expects for the pieces of K and L
K_LI_PART_BOUND = 2.32
K_ZERO_PART_BOUND = -0.184
K_INTEGRAL_PART_BOUND = -0.14
L_INTEGRAL_PART_BOUND = -0.2729


@dataclass(frozen=True)
class FormulaParams:
    r_max: int = config.DEFAULT_R_MAX
    zero_count: int = config.DEFAULT_ZERO_COUNT
    constant_mode: str = config.DEFAULT_CONSTANT_MODE
    quad_tol: float = config.QUAD_TOL

    def __post_init__(self):
        if self.r_max < 1:
            raise InvalidArgumentError(f"r_max must be >= 1, got {self.r_max}")
        if self.quad_tol <= 0:
            raise InvalidArgumentError(f"quad_tol must be positive, got {self.quad_tol}")
        if self.zero_count < 0:
            raise InvalidArgumentError(f"zero_count must be >= 0, got {self.zero_count}")
        if self.constant_mode not in ("paper", "classical"):
            raise InvalidArgumentError(f"constant_mode must be 'paper' or 'classical', got {self.constant_mode!r}")

    @property
    def constant(self) -> float:
        """The constant subtracted inside every r-term."""
        if self.constant_mode == "paper":
            return config.PRINTED_CONSTANT_FACTOR * math.log(2)
        return math.log(2)


@dataclass(frozen=True)
class ThreePartValue:
    li_part: float
    zero_part: float
    integral_part: float

    @property
    def total(self) -> float:
        return self.li_part + self.zero_part + self.integral_part


def _quad(func, lo: float, hi: float, tol: float) -> Tuple[float, float]:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", integrate.IntegrationWarning)
        value, error = integrate.quad(func, lo, hi, epsabs=tol, epsrel=1e-13, limit=config.QUAD_LIMIT)
    for warning in caught:
        logger.warning(f"⚠️ quad on [{lo}, {hi}]: {warning.message}")
    return value, error


def _reciprocal_log(u: float) -> float:
    return 1.0 / math.log(u)


def _tail_integrand(u: float) -> float:
    return 1.0 / (u * (u * u - 1.0) * math.log(u))


def li_real(x: float, tol: float = config.QUAD_TOL) -> float:
    """∫_2^x du / log u by adaptive Gauss–Kronrod quadrature."""
    if x < 2:
        raise InvalidArgumentError(f"Li needs x >= 2, got {x}")
    if x == 2:
        return 0.0
    return _quad(_reciprocal_log, 2.0, float(x), tol)[0]


def li_ei(x: float) -> float:
    """Li(x) through the exponential integral: Ei(log x) - Ei(log 2)."""
    if x <= 1:
        raise InvalidArgumentError(f"li_ei needs x > 1, got {x}")
    return float(special.expi(math.log(x)) - special.expi(math.log(2.0)))


def li_interval(lo: float, hi: float, tol: float = config.QUAD_TOL) -> float:
    """∫_lo^hi du / log u for 1 < lo <= hi; no reference to the lower limit 2."""
    if lo <= 1:
        raise DomainError(f"1/log u is singular at u = 1; interval starts at {lo}")
    if hi <= lo:
        return 0.0
    return _quad(_reciprocal_log, lo, hi, tol)[0]


def li_complex(z: complex, tol: float = config.QUAD_TOL) -> complex:
    """Ei(Log z) - Ei(log 2) on the principal branch.

    scipy's complex expi switches between series and continued-fraction evaluation
    internally. Real z > 1 is routed through the real-argument code path.
    """
    z = complex(z)
    if z.imag == 0.0:
        if z.real <= 1.0:
            raise DomainError(f"{z} lies on the branch cut (-inf, 1]")
        return complex(li_ei(z.real))
    return complex(special.expi(np.log(z)) - special.expi(math.log(2.0)))


def tail_integral_with_error(x: float, tol: float = config.QUAD_TOL,
                             cut: float = config.TAIL_CUT) -> Tuple[float, float]:
    """∫_x^∞ du / (u(u²-1) log u) and a certified error bound.

    The integral is taken by quadrature up to `cut`, decade by decade; the missing
    piece beyond the cut is below 1/(2 cut² log cut) and is folded into the error.
    """
    if x <= 1:
        raise DomainError(f"tail integrand is singular for u <= 1, got x = {x}")
    if math.isinf(x):
        return 0.0, 0.0
    if x >= cut:
        value, error = _quad(_tail_integrand, x, math.inf, tol)
        return value, error
    edges = [float(x)]
    while edges[-1] * 10 < cut:
        edges.append(edges[-1] * 10)
    edges.append(cut)
    pieces = [_quad(_tail_integrand, a, b, tol / len(edges)) for a, b in zip(edges, edges[1:])]
    remainder = 1.0 / (2 * cut * cut * math.log(cut))
    value = math.fsum(p[0] for p in pieces)
    error = math.fsum(p[1] for p in pieces) + remainder
    logger.debug(f"tail({x}) = {value:.12g} ± {error:.2e}")
    return value, error


def tail_integral(x: float, tol: float = config.QUAD_TOL) -> float:
    return tail_integral_with_error(x, tol)[0]


def _zeros_for(params: FormulaParams, zeros: Optional[ZeroTable]) -> np.ndarray:
    if params.zero_count == 0:
        return np.empty(0)
    if zeros is None or len(zeros) == 0:
        raise InvalidArgumentError(f"{params.zero_count} zeros requested but no zero table given")
    return zeros.head(params.zero_count).gammas


def _pair_sum(gammas: np.ndarray, r: int, log_x: float) -> Tuple[float, float]:
    """Σ_γ [Ei(ρ/r·log x) + Ei(conj(ρ)/r·log x)] in ascending γ, and the largest imaginary residue."""
    if gammas.size == 0:
        return 0.0, 0.0
    w = (0.5 + 1j * gammas) * (log_x / r)
    pairs = special.expi(w) + special.expi(np.conj(w))
    residue = float(np.max(np.abs(pairs.imag)))
    scale = max(1.0, float(np.max(np.abs(pairs.real))))
    if residue > 1e-12 * scale:
        logger.warning(f"⚠️ conjugate pairing left an imaginary residue of {residue:.3e}")
    return math.fsum(pairs.real.tolist()), residue


def riemann_pi_terms(x: float, params: FormulaParams, zeros: Optional[ZeroTable] = None) -> pd.DataFrame:
    """One row per squarefree r with x^(1/r) >= 2: the pieces of that r-term and its weighted contribution.

    In classical mode the leading term is li(y) = Li(y) + li(2), so an r = 1 term at x = 100
    reads Li(100) + li(2) - zeros + tail(100) - log 2 rather than the bare Li(100) + tail(100) - log 2;
    in paper mode the leading term is Li(y) and 3.7277·log 2 is subtracted. In both modes the
    zero terms are Ei((ρ/r)·log x), i.e. li taken from 0, with no li(2) correction.
    """
    if x < 2:
        raise InvalidArgumentError(f"riemann_pi needs x >= 2, got {x}")
    gammas = _zeros_for(params, zeros)
    r_limit = min(params.r_max, max(1, int(math.floor(math.log2(x)))))
    rows = []
    for r, mu in squarefree_moebius(r_limit):
        y = x ** (1.0 / r)
        if y < 2:
            continue
        li_term = li_real(y, params.quad_tol)
        if params.constant_mode == "classical":
            li_term += LI_2
        zero_term, residue = _pair_sum(gammas, r, math.log(x))
        tail_term = tail_integral(y, params.quad_tol)
        constant_term = params.constant
        contribution = (mu / r) * (li_term - zero_term + tail_term - constant_term)
        rows.append({
            "r": r, "mu": mu, "y": y, "li_term": li_term, "zero_term": zero_term,
            "tail_term": tail_term, "constant_term": constant_term,
            "contribution": contribution, "imag_residue": residue,
        })
    return pd.DataFrame(rows, columns=["r", "mu", "y", "li_term", "zero_term", "tail_term",
                                       "constant_term", "contribution", "imag_residue"])


def riemann_pi(x: float, params: FormulaParams, zeros: Optional[ZeroTable] = None) -> float:
    terms = riemann_pi_terms(x, params, zeros)
    value = math.fsum(terms["contribution"].tolist())
    logger.debug(f"R({x}) = {value:.6f} from {len(terms)} r-terms and {params.zero_count} zeros")
    return value


def _endpoint_value(x: float, r: int, gammas: np.ndarray, params: FormulaParams) -> Tuple[float, float, float]:
    """Li (with its constant), zero and tail pieces of the r-term of R(x); needs x^(1/r) >= 2."""
    y = x ** (1.0 / r)
    li_term = li_real(y, params.quad_tol) - params.constant
    if params.constant_mode == "classical":
        li_term += LI_2
    zero_term = _pair_sum(gammas, r, math.log(x))[0] if gammas.size else 0.0
    return li_term, zero_term, tail_integral(y, params.quad_tol)


def _three_parts(intervals: List[Tuple[int, int]], params: FormulaParams,
                 zeros: Optional[ZeroTable]) -> ThreePartValue:
    """Σ_r μ(r)/r over the (lo, hi] intervals of the Li, zero and tail differences.

    Each endpoint follows riemann_pi: its r-term is dropped once x^(1/r) < 2, so a single
    interval totals R(hi) - R(lo). When both endpoints keep the term the differences are
    integrated directly over [lo^(1/r), hi^(1/r)] and the constants cancel.
    """
    gammas = _zeros_for(params, zeros)
    li_terms, zero_terms, integral_terms = [], [], []
    for r, mu in squarefree_moebius(params.r_max):
        weight = mu / r
        for lo, hi in intervals:
            a = lo ** (1.0 / r)
            b = hi ** (1.0 / r)
            if b < 2:
                continue
            if a < 2:
                li_term, zero_term, tail_term = _endpoint_value(hi, r, gammas, params)
                li_terms.append(weight * li_term)
                zero_terms.append(-weight * zero_term)
                integral_terms.append(weight * tail_term)
                continue
            li_terms.append(weight * li_interval(a, b, params.quad_tol))
            if gammas.size:
                upper, _ = _pair_sum(gammas, r, math.log(hi))
                lower, _ = _pair_sum(gammas, r, math.log(lo))
                zero_terms.append(-weight * (upper - lower))
            integral_terms.append(-weight * _quad(_tail_integrand, a, b, params.quad_tol)[0] if b > a else 0.0)
    return ThreePartValue(li_part=math.fsum(li_terms), zero_part=math.fsum(zero_terms),
                          integral_part=math.fsum(integral_terms))


def k_decomposition(n: int, s: int, params: FormulaParams, zeros: Optional[ZeroTable] = None,
                    cache: Optional[PrimeCache] = None) -> ThreePartValue:
    """Li, zero and tail parts of K(n, n^s) over the interval (n^(s+1), n^(s+1) + sum(n)]."""
    from .conjecture_one import sum_n

    if n < 4 or n % 2:
        raise InvalidArgumentError(f"n must be even and >= 4, got {n}")
    mn = n ** (s + 1)
    top = mn + sum_n(n, cache).sum_n
    if top > config.UINT64_MAX:
        raise OutOfRangeError(f"n^(s+1) + sum(n) = {top} overflows 64 bits")
    parts = _three_parts([(mn, top)], params, zeros)
    logger.info(f"K({n}, {n}^{s}) parts: Li {parts.li_part:.6f}, zeros {parts.zero_part:.6f}, "
                f"tail {parts.integral_part:.3e}")
    return parts


def l_decomposition(n: int, intervals, params: FormulaParams,
                    zeros: Optional[ZeroTable] = None) -> ThreePartValue:
    """The same split applied to every interval of an IntervalSpec."""
    pairs = list(intervals.intervals)
    if not pairs:
        return ThreePartValue(0.0, 0.0, 0.0)
    parts = _three_parts(pairs, params, zeros)
    logger.info(f"L({n}) parts: Li {parts.li_part:.6f}, zeros {parts.zero_part:.6f}, "
                f"tail {parts.integral_part:.6f}")
    return parts


def decomposition_frame(kind: str, parts: ThreePartValue) -> pd.DataFrame:
    """Parts next to the values the audited argument expects; `within` is false when a bound is missed."""
    if kind == "K":
        expected = {"li_part": K_LI_PART_BOUND, "zero_part": K_ZERO_PART_BOUND,
                    "integral_part": K_INTEGRAL_PART_BOUND}
    else:
        expected = {"li_part": None, "zero_part": None, "integral_part": L_INTEGRAL_PART_BOUND}
    rows = []
    for name in ("li_part", "zero_part", "integral_part"):
        value = getattr(parts, name)
        bound = expected[name]
        within = None if bound is None else value >= bound
        if kind == "L" and name == "integral_part":
            within = bound <= value <= 0.0
        rows.append({"part": name, "value": value, "expected_lower": bound, "within": within})
    rows.append({"part": "total", "value": parts.total, "expected_lower": None, "within": None})
    return pd.DataFrame(rows, columns=["part", "value", "expected_lower", "within"])
