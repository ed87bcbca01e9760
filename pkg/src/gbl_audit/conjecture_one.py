"""
Exact integer quantities of the first conjecture: sum(n), M(n, m), K(n, m), the L(n)
interval system and the per-n verification record.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from . import config
from .errors import InvalidArgumentError, OutOfRangeError, OutOfScopeError
from .prime_core import (PrimeCache, build_cache, distinct_prime_count, distinct_prime_count_range,
                         factorize, goldbach_partitions, prime_pi_interval, totient, totient_range)

logger = logging.getLogger(__name__)

VERIFY_COLUMNS = ["n", "s", "sum_n", "phi", "D", "pi_n", "mn", "K", "L", "g_n", "pass", "notes"]
K_TABLE_COLUMNS = ["n", "s", "mn", "sum_n", "K", "K_paper", "rs_lower_bound", "bound_paper", "agrees", "notes"]

# n -> (printed K(n, n^3), printed value of n/(3 (log n)^2) (1 + 1/(2 log n)))
PRINTED_K_TABLE: Dict[int, Tuple[int, float]] = {
    120: (6, 1.92), 128: (2, 1.999), 146: (2, 2.156), 166: (2, 2.32), 172: (3, 2.3739),
    188: (3, 2.503), 196: (3, 2.567), 206: (3, 2.646), 226: (3, 2.8), 256: (3, 3.0253),
    554: (5, 4.993), 664: (7, 5.644), 924: (12, 7.088), 4806: (5, 23.0), 9410: (63, 39.51),
}
BOUND_TOLERANCE = 0.01


@dataclass(frozen=True)
class SumDecomposition:
    n: int
    phi: int
    d: int
    pi_n: int
    sum_n: int


@dataclass(frozen=True)
class IntervalSpec:
    n: int
    intervals: Tuple[Tuple[int, int], ...]
    generator_id: str
    anchors: Tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.intervals)


@dataclass
class VerificationRecord:
    n: int
    s: int
    sum_n: int
    phi: int
    d: int
    pi_n: int
    mn: int
    k_value: int
    l_value: int
    g_n: int
    inequality_holds: bool
    notes: List[str] = field(default_factory=list)

    def as_row(self) -> Dict[str, object]:
        return {
            "n": self.n, "s": self.s, "sum_n": self.sum_n, "phi": self.phi, "D": self.d,
            "pi_n": self.pi_n, "mn": self.mn, "K": self.k_value, "L": self.l_value,
            "g_n": self.g_n, "pass": self.inequality_holds, "notes": "; ".join(self.notes),
        }


def _require_even(n: int, minimum: int = 4) -> None:
    if n % 2 or n < minimum:
        raise InvalidArgumentError(f"n must be an even integer >= {minimum}, got {n}")


def _cache_for(cache: Optional[PrimeCache], n: int) -> PrimeCache:
    if cache is not None and cache.limit >= n:
        return cache
    return build_cache(max(n, 2))


def sum_n(n: int, cache: Optional[PrimeCache] = None) -> SumDecomposition:
    """sum(n) = n - 2φ(n) - 2D(n) + 2π(n) + 2."""
    _require_even(n)
    cache = _cache_for(cache, n)
    f = factorize(n)
    phi = totient(f)
    d = distinct_prime_count(f)
    pi_n = cache.prime_pi(n)
    return SumDecomposition(n=n, phi=phi, d=d, pi_n=pi_n, sum_n=n - 2 * phi - 2 * d + 2 * pi_n + 2)


def sum_range(lo: int, hi: int, cache: Optional[PrimeCache] = None) -> pd.DataFrame:
    """sum(n) and its ingredients for every even n in [lo, hi], from sieve tables."""
    lo = max(4, lo + (lo % 2))
    cache = _cache_for(cache, hi)
    n = np.arange(lo, hi + 1, 2, dtype=np.int64)
    phi = totient_range(cache, hi)[n]
    d = distinct_prime_count_range(cache, hi)[n].astype(np.int64)
    pi_n = cache.pi_table(hi)[n].astype(np.int64)
    total = n - 2 * phi - 2 * d + 2 * pi_n + 2
    return pd.DataFrame({"n": n, "phi": phi, "D": d, "pi_n": pi_n, "sum_n": total})


def big_m(n: int, m: int, cache: Optional[PrimeCache] = None) -> int:
    """M(n, m) = m·n + sum(n)."""
    value = m * n + sum_n(n, cache).sum_n
    if value > config.UINT64_MAX:
        raise OutOfRangeError(f"M({n}, {m}) = {value} overflows 64 bits")
    return value


def power_of_two_adjust(x: int) -> int:
    """2^d becomes 2^d + 2 for odd d and 2^d - 2 for even d; other x are returned as is.

    Both replacements keep π unchanged from d = 3 on. 4 is left alone since π(2) != π(4).
    """
    if x < 8 or x & (x - 1):
        return x
    d = x.bit_length() - 1
    return x + 2 if d % 2 else x - 2


def count_primes_between(lo: int, hi: int, cache: Optional[PrimeCache] = None) -> int:
    """Primes in (lo, hi] with power-of-two endpoints adjusted first."""
    lo, hi = power_of_two_adjust(lo), power_of_two_adjust(hi)
    if hi <= lo:
        return 0
    if cache is not None and hi <= cache.limit:
        return cache.prime_pi(hi) - cache.prime_pi(lo)
    return prime_pi_interval(lo, hi)


def k_exact(n: int, s: int, cache: Optional[PrimeCache] = None) -> int:
    """K(n, n^s): primes in (n^(s+1), n^(s+1) + sum(n)]."""
    _require_even(n)
    if s < 2:
        raise InvalidArgumentError(f"s must be >= 2, got {s}")
    mn = n ** (s + 1)
    top = mn + sum_n(n, cache).sum_n
    if top > config.UINT64_MAX:
        raise OutOfRangeError(f"n^(s+1) + sum(n) = {top} overflows 64 bits")
    return count_primes_between(mn, top, cache)


def _divisor_anchors(n: int) -> List[int]:
    return [d for d in range(2, math.isqrt(n) + 1) if n % d == 0]


def _support_anchors(n: int) -> List[int]:
    """Products d > 1 of n's prime factors (any exponents) with d² <= n."""
    bound = math.isqrt(n)
    products = {1}
    for p in factorize(n).primes:
        grown = set()
        for value in products:
            while value * p <= bound:
                value *= p
                grown.add(value)
        products |= grown
    return sorted(products - {1})


ANCHOR_GENERATORS = {"divisors": _divisor_anchors, "support_products": _support_anchors}


def _validate_intervals(n: int, intervals: Sequence[Tuple[int, int]]) -> Tuple[Tuple[int, int], ...]:
    ordered = sorted((int(lo), int(hi)) for lo, hi in intervals)
    for lo, hi in ordered:
        if not 2 <= lo < hi <= n:
            raise InvalidArgumentError(f"interval ({lo}, {hi}] is not inside (2, {n}]")
    for (_, first_hi), (second_lo, _) in zip(ordered, ordered[1:]):
        if second_lo < first_hi:
            raise InvalidArgumentError(f"intervals overlap at {second_lo} < {first_hi}")
    return tuple(ordered)


def l_intervals(n: int, generator: str = config.DEFAULT_L_GENERATOR,
                offsets: str = config.DEFAULT_L_OFFSETS,
                custom: Optional[Iterable[Tuple[int, int]]] = None) -> IntervalSpec:
    """Interval system for L(n) built from the squares a_k = d_k² of the anchors d_1 < d_2 < ...

    first (n - a_1 + 1, n], between anchors (n - a_{k+1} + 1, n - a_k - 1], last (2, n - a_K - 1].
    offsets="plus" closes each middle interval at n - a_k + 1 instead. Empty intervals are dropped.
    The default anchors are all products d > 1 of the primes dividing n with d² <= n;
    generator="divisors" keeps only those that divide n.
    """
    if custom is not None:
        return IntervalSpec(n=n, intervals=_validate_intervals(n, list(custom)), generator_id="custom")
    _require_even(n)
    if n < config.CONJECTURE_MIN_N:
        raise OutOfScopeError(f"L(n) is defined for even n >= {config.CONJECTURE_MIN_N}, got {n}")
    if generator not in ANCHOR_GENERATORS:
        raise InvalidArgumentError(f"unknown interval generator {generator!r}")
    if offsets not in ("minus", "plus"):
        raise InvalidArgumentError(f"offsets must be 'minus' or 'plus', got {offsets!r}")

    anchors = ANCHOR_GENERATORS[generator](n)
    squares = [d * d for d in anchors]
    raw = []
    if squares:
        raw.append((n - squares[0] + 1, n))
        for a_k, a_next in zip(squares, squares[1:]):
            upper = n - a_k - 1 if offsets == "minus" else n - a_k + 1
            raw.append((n - a_next + 1, upper))
        raw.append((2, n - squares[-1] - 1))
    else:
        raw.append((2, n))
    kept = [(max(lo, 2), min(hi, n)) for lo, hi in raw if max(lo, 2) < min(hi, n)]
    spec = IntervalSpec(n=n, intervals=_validate_intervals(n, kept),
                        generator_id=f"{generator}/{offsets}", anchors=tuple(anchors))
    logger.debug(f"L({n}) intervals from anchors {anchors}: {spec.intervals}")
    return spec


def l_exact(n: int, spec: IntervalSpec, cache: Optional[PrimeCache] = None) -> int:
    """Σ over the intervals of the exact prime counts."""
    if not spec.intervals:
        return 0
    cache = _cache_for(cache, n)
    return sum(count_primes_between(lo, hi, cache) for lo, hi in spec.intervals)


def verify_first(n: int, s: int = 2, cache: Optional[PrimeCache] = None,
                 spec: Optional[IntervalSpec] = None) -> VerificationRecord:
    """Evaluate L(n) - D(n) >= K(n, n^s) >= 2 with every intermediate kept.

    A failed inequality is recorded in the returned record, never raised.
    """
    if n < config.CONJECTURE_MIN_N:
        raise OutOfScopeError(f"the first conjecture is stated for n >= {config.CONJECTURE_MIN_N}, got {n}")
    _require_even(n)
    if s < 2:
        raise InvalidArgumentError(f"s must be >= 2, got {s}")
    cache = _cache_for(cache, n)
    parts = sum_n(n, cache)
    mn = n ** (s + 1)
    k_value = k_exact(n, s, cache)
    spec = spec if spec is not None else l_intervals(n)
    l_value = l_exact(n, spec, cache)
    g_n = goldbach_partitions(n, cache)

    notes = []
    if k_value < 2:
        notes.append(f"K={k_value} < 2")
    if l_value - parts.d < k_value:
        notes.append(f"L-D={l_value - parts.d} < K={k_value}")
    if n & (n - 1) == 0:
        notes.append("n is a power of two")
    if g_n < 1:
        notes.append("no Goldbach partition")
    holds = (l_value - parts.d >= k_value) and (k_value >= 2)
    return VerificationRecord(n=n, s=s, sum_n=parts.sum_n, phi=parts.phi, d=parts.d, pi_n=parts.pi_n,
                              mn=mn, k_value=k_value, l_value=l_value, g_n=g_n,
                              inequality_holds=holds, notes=notes)


def verify_first_range(lo: int, hi: int, step: int = 2, s: int = 2,
                       cache: Optional[PrimeCache] = None) -> pd.DataFrame:
    cache = _cache_for(cache, hi)
    rows = [verify_first(n, s, cache).as_row() for n in range(lo, hi + 1, step)]
    return pd.DataFrame(rows, columns=VERIFY_COLUMNS)


def k_table_bound(n: int, s: int = 2) -> float:
    """n / ((s+1)(log n)²) · (1 + 1/(2 log n)), the bound printed beside the K table."""
    log_n = math.log(n)
    return n / ((s + 1) * log_n ** 2) * (1 + 1 / (2 * log_n))


def k_table(s: int = 2, cache: Optional[PrimeCache] = None) -> pd.DataFrame:
    """Recompute every row of the printed K table; disagreements become notes, never errors."""
    cache = _cache_for(cache, max(PRINTED_K_TABLE))
    rows = []
    for n, (k_printed, bound_printed) in PRINTED_K_TABLE.items():
        parts = sum_n(n, cache)
        k_value = k_exact(n, s, cache)
        bound = k_table_bound(n, s)
        notes = []
        if k_value != k_printed:
            notes.append(f"K differs from printed {k_printed}")
            logger.warning(f"⚠️ K({n}, {n}^{s}) = {k_value}, printed {k_printed}")
        if abs(bound - bound_printed) > BOUND_TOLERANCE:
            notes.append(f"bound {bound:.4f} differs from printed {bound_printed}")
        if n == 166:
            variant = count_primes_between(120 ** 3, 120 ** 3 + parts.sum_n, cache)
            notes.append(f"printed as K(166,120^3); primes in (120^3, 120^3+sum(166)] = {variant}")
        if n & (n - 1) == 0:
            notes.append("power-of-two endpoint adjusted")
        rows.append({
            "n": n, "s": s, "mn": n ** (s + 1), "sum_n": parts.sum_n, "K": k_value,
            "K_paper": k_printed, "rs_lower_bound": bound, "bound_paper": bound_printed,
            "agrees": k_value == k_printed, "notes": "; ".join(notes),
        })
    table = pd.DataFrame(rows, columns=K_TABLE_COLUMNS)
    logger.info(f"K table: {int(table['agrees'].sum())} of {len(table)} rows agree with the printed values")
    return table
