"""
Partial Euler products, their Mertens-type targets, and the ratio and bounds of the
second conjecture.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Optional

import numpy as np
import pandas as pd

from . import config
from .errors import InvalidArgumentError
from .prime_core import PrimeCache, build_cache, factorize

logger = logging.getLogger(__name__)

EXACT_CUTOFF = 100


@dataclass(frozen=True)
class ProductEstimate:
    kind: str
    cutoff: int
    value: float
    target: float

    @property
    def relative_gap(self) -> float:
        return abs(self.value - self.target) / self.target


@dataclass(frozen=True)
class SscCheck:
    n: int
    cutoff: int
    ratio: float
    lower: float
    upper: float
    lower_ok: bool
    upper_ok: bool

    def as_row(self) -> Dict[str, object]:
        return {"N": self.n, "cutoff": self.cutoff, "ratio": self.ratio, "lower_bound": self.lower,
                "upper_bound": self.upper, "lower_ok": self.lower_ok, "upper_ok": self.upper_ok}


def _primes(x: int, cache: Optional[PrimeCache], lo: int = 2) -> np.ndarray:
    if cache is None or cache.limit < x:
        cache = build_cache(max(x, 2))
    return cache.primes(lo, x)


def _log_product(factors: np.ndarray) -> float:
    """log Π(1 + f) with compensated summation of log1p terms."""
    return math.fsum(np.log1p(factors).tolist())


FACTOR_TERMS = {
    "mertens": lambda p: -1.0 / p,
    "plus": lambda p: 1.0 / p,
    "square": lambda p: -1.0 / (p * p),
    "twin": lambda p: -1.0 / ((p - 1) * (p - 1)),
}


def _target(kind: str, x: int) -> float:
    gamma = config.EULER_GAMMA
    if kind == "mertens":
        return math.exp(-gamma) / math.log(x)
    if kind == "plus":
        return 6 * math.exp(gamma) * math.log(x) / math.pi ** 2
    if kind == "square":
        return 6 / math.pi ** 2
    return config.TWIN_PRODUCT_LIMIT


def _estimate(kind: str, x: int, cache: Optional[PrimeCache]) -> ProductEstimate:
    lo = 3 if kind == "twin" else 2
    primes = _primes(x, cache, lo).astype(np.float64)
    value = math.exp(_log_product(FACTOR_TERMS[kind](primes))) if primes.size else 1.0
    cutoff = int(primes[-1]) if primes.size else 0
    return ProductEstimate(kind=kind, cutoff=cutoff, value=value, target=_target(kind, x))


def mertens_product(x: int, cache: Optional[PrimeCache] = None) -> ProductEstimate:
    """Π_{p<=x} (1 - 1/p) against e^-γ / log x."""
    if x < 2:
        raise InvalidArgumentError(f"x must be >= 2, got {x}")
    return _estimate("mertens", x, cache)


def plus_product(x: int, cache: Optional[PrimeCache] = None) -> ProductEstimate:
    """Π_{p<=x} (1 + 1/p) against 6 e^γ log x / π²."""
    if x < 2:
        raise InvalidArgumentError(f"x must be >= 2, got {x}")
    return _estimate("plus", x, cache)


def square_product(x: int, cache: Optional[PrimeCache] = None) -> ProductEstimate:
    """Π_{p<=x} (1 - 1/p²) against 6/π²."""
    if x < 2:
        raise InvalidArgumentError(f"x must be >= 2, got {x}")
    return _estimate("square", x, cache)


def twin_product(x: int, cache: Optional[PrimeCache] = None) -> ProductEstimate:
    """Π_{3<=p<=x} (1 - 1/(p-1)²) against its limit 0.6601618..."""
    if x < 3:
        raise InvalidArgumentError(f"twin product needs x >= 3, got {x}")
    return _estimate("twin", x, cache)


def exact_product(kind: str, x: int, cache: Optional[PrimeCache] = None) -> Fraction:
    """The same partial products in exact rational arithmetic, for small cutoffs."""
    if kind not in FACTOR_TERMS:
        raise InvalidArgumentError(f"unknown product {kind!r}")
    if x > EXACT_CUTOFF:
        raise InvalidArgumentError(f"exact products are limited to x <= {EXACT_CUTOFF}")
    lo = 3 if kind == "twin" else 2
    result = Fraction(1)
    for p in _primes(x, cache, lo).tolist():
        if kind == "mertens":
            result *= Fraction(p - 1, p)
        elif kind == "plus":
            result *= Fraction(p + 1, p)
        elif kind == "square":
            result *= Fraction(p * p - 1, p * p)
        else:
            result *= 1 - Fraction(1, (p - 1) ** 2)
    return result


def products_table(x: int, cache: Optional[PrimeCache] = None) -> pd.DataFrame:
    estimates = [mertens_product(x, cache), plus_product(x, cache), square_product(x, cache)]
    if x >= 3:
        estimates.append(twin_product(x, cache))
    return pd.DataFrame([{"product": e.kind, "cutoff": e.cutoff, "value": e.value, "target": e.target,
                          "relative_gap": e.relative_gap} for e in estimates])


def sandwich_values(x: int, cache: Optional[PrimeCache] = None) -> Dict[str, float]:
    primes = _primes(x, cache).astype(np.float64)
    odd = primes[primes > 2]
    return {
        "all_squares": math.exp(_log_product(-1.0 / (primes * primes))),
        "twin": math.exp(_log_product(-1.0 / ((odd - 1) * (odd - 1)))),
        "odd_squares": math.exp(_log_product(-1.0 / (odd * odd))),
    }


def sandwich_check(x: int, cache: Optional[PrimeCache] = None) -> bool:
    """Π_{2<=p<=x}(1 - 1/p²) < Π_{3<=p<=x}(1 - 1/(p-1)²) < Π_{3<=p<=x}(1 - 1/p²)."""
    if x < 13:
        raise InvalidArgumentError(f"the sandwich is checked from x = 13, got {x}")
    v = sandwich_values(x, cache)
    return v["all_squares"] < v["twin"] < v["odd_squares"]


def sandwich_scan(lo: int, hi: int, cache: Optional[PrimeCache] = None) -> pd.DataFrame:
    """The sandwich at every prime cutoff in [lo, hi], from running sums of logs."""
    if lo < 13:
        raise InvalidArgumentError(f"the sandwich is checked from x = 13, got {lo}")
    primes = _primes(hi, cache).astype(np.float64)
    odd = primes[1:]
    log_odd_squares = np.cumsum(np.log1p(-1.0 / (odd * odd)))
    log_twin = np.cumsum(np.log1p(-1.0 / ((odd - 1) * (odd - 1))))
    log_all_squares = log_odd_squares + math.log1p(-0.25)
    keep = odd >= lo
    holds = (log_all_squares < log_twin) & (log_twin < log_odd_squares)
    frame = pd.DataFrame({
        "cutoff": odd[keep].astype(np.int64),
        "all_squares": np.exp(log_all_squares[keep]),
        "twin": np.exp(log_twin[keep]),
        "odd_squares": np.exp(log_odd_squares[keep]),
        "holds": holds[keep],
    })
    logger.info(f"Sandwich scan [{lo}, {hi}]: {int((~frame['holds']).sum())} violations at {len(frame)} prime cutoffs")
    return frame


def ssc_terms(n: int, cutoff: int, slack: float = 0.0, cache: Optional[PrimeCache] = None) -> Dict[str, float]:
    """The pieces of the second-conjecture ratio, every product truncated at `cutoff`.

    `slack` is the constant c in the factor (1 + c / log N) standing in for the
    unspecified 1 + O(1/log N).
    """
    if n < 4 or n % 2:
        raise InvalidArgumentError(f"N must be even and >= 4, got {n}")
    if cutoff * cutoff < n:
        raise InvalidArgumentError(f"cutoff {cutoff} is below √N = {math.sqrt(n):.3f}")
    primes = _primes(cutoff, cache)
    odd = primes[primes > 2].astype(np.float64)
    twin = math.exp(_log_product(-1.0 / ((odd - 1) * (odd - 1))))
    divisor_factor = 1.0
    for p in factorize(n).primes:
        if 2 < p <= cutoff:
            divisor_factor *= (p - 1) / (p - 2)
    root = math.isqrt(n)
    coprime = primes[(primes > root) & (n % primes != 0)].astype(np.float64)
    denominator = math.exp(_log_product(-1.0 / (coprime - 1))) if coprime.size else 1.0
    correction = 1.0 + slack / math.log(n)
    numerator = 4 * math.exp(-config.EULER_GAMMA) * twin * divisor_factor * correction
    return {"twin": twin, "divisor_factor": divisor_factor, "correction": correction,
            "numerator": numerator, "denominator": denominator, "ratio": numerator / denominator}


def ssc_ratio(n: int, cutoff: int, slack: float = 0.0, cache: Optional[PrimeCache] = None) -> float:
    return ssc_terms(n, cutoff, slack, cache)["ratio"]


def ssc_upper_constant() -> float:
    """192 e^γ / π⁴, printed as 3.51."""
    return 192 * math.exp(config.EULER_GAMMA) / math.pi ** 4


def ssc_bounds_check(n: int, cutoff: int, slack: float = 0.0,
                     cache: Optional[PrimeCache] = None) -> SscCheck:
    """2.63 log N < ratio < 3.51 (log N)²."""
    ratio = ssc_ratio(n, cutoff, slack, cache)
    log_n = math.log(n)
    lower = config.SSC_LOWER_FACTOR * log_n
    upper = config.SSC_UPPER_FACTOR * log_n ** 2
    check = SscCheck(n=n, cutoff=cutoff, ratio=ratio, lower=lower, upper=upper,
                     lower_ok=lower < ratio, upper_ok=ratio < upper)
    if not (check.lower_ok and check.upper_ok):
        logger.warning(f"⚠️ ratio {ratio:.4f} at N={n}, cutoff={cutoff} is outside ({lower:.4f}, {upper:.4f})")
    return check


def ssc_monotonicity_scan(n: int, cutoffs: Iterable[int], slack: float = 0.0,
                          cache: Optional[PrimeCache] = None) -> pd.DataFrame:
    """Ratio at increasing cutoffs; `non_increasing` is false wherever the ratio grew."""
    rows = []
    previous = None
    for cutoff in sorted(cutoffs):
        ratio = ssc_ratio(n, cutoff, slack, cache)
        rows.append({"N": n, "cutoff": cutoff, "ratio": ratio,
                     "non_increasing": True if previous is None else ratio <= previous})
        previous = ratio
    frame = pd.DataFrame(rows, columns=["N", "cutoff", "ratio", "non_increasing"])
    grew = int((~frame["non_increasing"]).sum())
    if grew:
        logger.warning(f"⚠️ ratio grew at {grew} of {len(frame) - 1} cutoff steps for N={n}")
    return frame
