"""
Exact arithmetic-function backbone: the odd-only sieve cache, interval prime counts,
factorization, totient, Möbius, distinct prime factors and Goldbach partitions.
"""

import logging
import os
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import List, Optional, Tuple

import numpy as np
import pandas as pd
import sympy

from . import config
from .errors import InvalidArgumentError, MalformedDataError, OutOfRangeError

logger = logging.getLogger(__name__)


def _odd_sieve(limit: int) -> np.ndarray:
    """Primality flags for the odd numbers 1, 3, 5, ... <= limit; index i stands for 2i+1."""
    size = (limit - 1) // 2 + 1 if limit >= 1 else 0
    flags = np.ones(size, dtype=bool)
    if size:
        flags[0] = False
    for i in range(1, (isqrt(limit) - 1) // 2 + 1):
        if flags[i]:
            p = 2 * i + 1
            flags[p * p // 2::p] = False
    return flags


def simple_sieve(limit: int) -> np.ndarray:
    """All primes <= limit as an int64 array."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    odd = np.flatnonzero(_odd_sieve(limit)).astype(np.int64) * 2 + 1
    return np.concatenate(([2], odd)).astype(np.int64)


class PrimeCache:
    """Sieve-backed primality and prime counts for every x <= limit.

    Only odd numbers are stored. `block_counts[k]` is the number of primes below the
    odd number 2*k*BLOCK_ODDS+1 (the prime 2 included), so π(x) costs one lookup plus
    a scan of at most one block. Instances are read-only once built.
    """

    def __init__(self, limit: int, odd_flags: np.ndarray, block_odds: int = config.BLOCK_ODDS):
        self.limit = limit
        self.block_odds = block_odds
        self._flags = odd_flags
        self._flags.setflags(write=False)
        per_block = np.add.reduceat(odd_flags, np.arange(0, odd_flags.size, block_odds),
                                     dtype=np.int64) if odd_flags.size else np.empty(0)
        counts = np.concatenate(([0], np.cumsum(per_block, dtype=np.int64)))
        self.block_counts = counts + (1 if limit >= 2 else 0)
        self.block_counts.setflags(write=False)
        self._primes: Optional[np.ndarray] = None

    def __repr__(self) -> str:
        return f"PrimeCache(limit={self.limit}, primes={self.total})"

    @property
    def total(self) -> int:
        return int(self.block_counts[-1])

    def _check(self, x: int) -> None:
        if x > self.limit:
            raise OutOfRangeError(f"{x} exceeds the cache limit {self.limit}")

    def is_prime(self, x: int) -> bool:
        self._check(x)
        if x < 2:
            return False
        if x % 2 == 0:
            return x == 2
        return bool(self._flags[x // 2])

    def is_prime_array(self, values: np.ndarray) -> np.ndarray:
        """Vectorized is_prime for an integer array with entries in [0, limit]."""
        values = np.asarray(values, dtype=np.int64)
        if values.size and int(values.max()) > self.limit:
            raise OutOfRangeError(f"{int(values.max())} exceeds the cache limit {self.limit}")
        result = np.zeros(values.shape, dtype=bool)
        odd = (values % 2 == 1)
        result[odd] = self._flags[values[odd] // 2]
        result[values == 2] = True
        return result

    def prime_pi(self, x: int) -> int:
        self._check(x)
        if x < 2:
            return 0
        last = (x - 1) // 2
        block = (last + 1) // self.block_odds
        start = block * self.block_odds
        return int(self.block_counts[block]) + int(np.count_nonzero(self._flags[start:last + 1]))

    def primes(self, lo: int = 2, hi: Optional[int] = None) -> np.ndarray:
        """Primes p with lo <= p <= hi (hi defaults to the limit)."""
        hi = self.limit if hi is None else hi
        self._check(hi)
        if self._primes is None:
            odd = np.flatnonzero(self._flags).astype(np.int64) * 2 + 1
            prefix = [2] if self.limit >= 2 else []
            self._primes = np.concatenate((np.array(prefix, dtype=np.int64), odd))
            self._primes.setflags(write=False)
        left = np.searchsorted(self._primes, lo, side="left")
        right = np.searchsorted(self._primes, hi, side="right")
        return self._primes[left:right]

    def pi_table(self, hi: Optional[int] = None) -> np.ndarray:
        """π(x) for every x in [0, hi] as an int32 array."""
        hi = self.limit if hi is None else hi
        self._check(hi)
        marks = np.zeros(hi + 1, dtype=np.int32)
        marks[self.primes(2, hi)] = 1
        return np.cumsum(marks, dtype=np.int32)


def build_cache(limit: int) -> PrimeCache:
    if limit < 2:
        raise InvalidArgumentError(f"cache limit must be >= 2, got {limit}")
    flags = _odd_sieve(limit)
    cache = PrimeCache(limit, flags)
    logger.info(f"Built prime cache to {limit:,}: {cache.total:,} primes")
    return cache


# --- base primes file -------------------------------------------------------

_installed_base: Optional[np.ndarray] = None


def save_base_primes(path: str, limit: int = config.BASE_PRIME_CEILING) -> int:
    """Write primes <= limit as: b"GBL1", little-endian u64 count, then u64 primes."""
    primes = simple_sieve(limit)
    partial = path + ".partial"
    with open(partial, "wb") as handle:
        handle.write(config.BASE_PRIMES_MAGIC)
        handle.write(np.array([primes.size], dtype="<u8").tobytes())
        handle.write(primes.astype("<u8").tobytes())
    os.replace(partial, path)
    logger.info(f"Saved {primes.size:,} base primes to {path}")
    return int(primes.size)


def load_base_primes(path: str) -> np.ndarray:
    with open(path, "rb") as handle:
        raw = handle.read()
    if raw[:4] != config.BASE_PRIMES_MAGIC:
        raise MalformedDataError("not a GBL1 base-prime file", source=path)
    if len(raw) < 12:
        raise MalformedDataError("truncated header", source=path)
    count = int(np.frombuffer(raw, dtype="<u8", count=1, offset=4)[0])
    if len(raw) != 12 + 8 * count:
        raise MalformedDataError(f"expected {count} primes, file holds {(len(raw) - 12) // 8}", source=path)
    primes = np.frombuffer(raw, dtype="<u8", count=count, offset=12).astype(np.int64)
    logger.info(f"Loaded {count:,} base primes from {path}")
    return primes


def install_base_primes(primes: Optional[np.ndarray]) -> None:
    """Serve base_primes() from `primes` while they reach far enough; None goes back to sieving."""
    global _installed_base
    if primes is not None:
        primes = np.asarray(primes, dtype=np.int64)
        primes.setflags(write=False)
    _installed_base = primes


def open_base_primes(path: str, limit: int = config.BASE_PRIME_CEILING) -> np.ndarray:
    """Load a GBL1 file, writing it first if it does not exist, and install its primes."""
    if not os.path.exists(path):
        logger.info(f"{path} not found, sieving base primes to {limit:,}")
        save_base_primes(path, limit)
    primes = load_base_primes(path)
    install_base_primes(primes)
    return primes


def _installed_covers(limit: int) -> bool:
    return _installed_base is not None and _installed_base.size > 0 and int(_installed_base[-1]) >= limit


@lru_cache(maxsize=8)
def _base_primes_bucket(bucket_limit: int) -> np.ndarray:
    primes = simple_sieve(bucket_limit)
    primes.setflags(write=False)
    return primes


def base_primes(limit: int) -> np.ndarray:
    """Primes <= limit, sieved in power-of-two buckets so repeated calls share work."""
    if _installed_covers(limit):
        return _installed_base[:np.searchsorted(_installed_base, limit, side="right")]
    bucket_limit = max(1024, 1 << max(0, limit - 1).bit_length())
    primes = _base_primes_bucket(bucket_limit)
    return primes[:np.searchsorted(primes, limit, side="right")]


# --- interval counts --------------------------------------------------------

def _sieve_segment(start: int, stop: int, odd_base: np.ndarray) -> int:
    """Count primes among the odd numbers in [start, stop); start is odd."""
    size = (stop - start + 1) // 2
    if size <= 0:
        return 0
    flags = np.ones(size, dtype=bool)
    if start == 1:
        flags[0] = False
    usable = odd_base[odd_base * odd_base < stop]
    if usable.size:
        first = np.maximum(usable * usable, ((start + usable - 1) // usable) * usable)
        first = np.where(first % 2 == 0, first + usable, first)
        for offset, p in zip(((first - start) // 2).tolist(), usable.tolist()):
            if offset < size:
                flags[offset::p] = False
    return int(np.count_nonzero(flags))


def prime_pi_interval(lo: int, hi: int, base: Optional[np.ndarray] = None,
                      segment_odds: int = config.SEGMENT_ODDS) -> int:
    """Exact number of primes p with lo < p <= hi.

    Segments of the odd numbers in [lo+1, hi] are sieved against the primes <= √hi.
    When √hi passes the base-prime ceiling the odd candidates are tested one by one
    with sympy.isprime instead.
    """
    if lo > hi:
        raise InvalidArgumentError(f"empty interval: lo={lo} > hi={hi}")
    if hi > config.UINT64_MAX:
        raise OutOfRangeError(f"{hi} overflows the 64-bit range")
    if lo < 0:
        lo = 0
    if lo == hi:
        return 0
    count = 1 if lo < 2 <= hi else 0
    first_odd = lo + 1 if (lo + 1) % 2 == 1 else lo + 2
    if first_odd > hi:
        return count
    root = isqrt(hi)
    if base is not None and base.size and int(base[-1]) >= root:
        primes = base
    elif root <= config.BASE_PRIME_CEILING or _installed_covers(root):
        primes = base_primes(root)
    else:
        logger.warning(f"√{hi} exceeds the base-prime ceiling; testing {(hi - first_odd) // 2 + 1:,} candidates with sympy.isprime")
        return count + sum(1 for c in range(first_odd, hi + 1, 2) if sympy.isprime(c))
    odd_base = primes[(primes > 2) & (primes <= root)].astype(np.int64)
    step = 2 * segment_odds
    for start in range(first_odd, hi + 1, step):
        stop = min(start + step, hi + 1)
        count += _sieve_segment(start, stop, odd_base)
    logger.debug(f"π({lo}, {hi}] = {count}")
    return count


# --- factorization and multiplicative functions -----------------------------

@dataclass(frozen=True)
class Factorization:
    n: int
    factors: Tuple[Tuple[int, int], ...]

    def value(self) -> int:
        product = 1
        for p, e in self.factors:
            product *= p ** e
        return product

    @property
    def primes(self) -> List[int]:
        return [p for p, _ in self.factors]


def factorize(n: int) -> Factorization:
    """Prime factorization via sympy.factorint (trial division, then Pollard rho)."""
    if n < 1:
        raise InvalidArgumentError(f"cannot factor {n}")
    if n > config.FACTOR_CEILING:
        raise OutOfRangeError(f"{n} is beyond the factoring ceiling {config.FACTOR_CEILING:.0e}")
    factors = tuple(sorted(sympy.factorint(n).items()))
    result = Factorization(n=n, factors=factors)
    if result.value() != n:
        raise ArithmeticError(f"factorization of {n} does not multiply back")
    return result


def totient(f: Factorization) -> int:
    result = 1
    for p, e in f.factors:
        result *= (p - 1) * p ** (e - 1)
    return result


def moebius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for _, e in f.factors):
        return 0
    return -1 if len(f.factors) % 2 else 1


def distinct_prime_count(f: Factorization) -> int:
    return len(f.factors)


def totient_range(cache: PrimeCache, hi: int) -> np.ndarray:
    """φ(k) for every k in [0, hi]; entry 0 is 0."""
    phi = np.arange(hi + 1, dtype=np.int64)
    for p in cache.primes(2, hi).tolist():
        phi[p::p] -= phi[p::p] // p
    return phi


def distinct_prime_count_range(cache: PrimeCache, hi: int) -> np.ndarray:
    omega = np.zeros(hi + 1, dtype=np.int32)
    for p in cache.primes(2, hi).tolist():
        omega[p::p] += 1
    return omega


def moebius_range(cache: PrimeCache, hi: int) -> np.ndarray:
    mu = np.ones(hi + 1, dtype=np.int8)
    mu[0] = 0
    for p in cache.primes(2, hi).tolist():
        mu[p::p] *= -1
        if p * p <= hi:
            mu[p * p::p * p] = 0
    return mu


def squarefree_moebius(r_max: int) -> List[Tuple[int, int]]:
    """(r, μ(r)) for squarefree r in [1, r_max]."""
    pairs = []
    for r in range(1, r_max + 1):
        mu = moebius(r)
        if mu:
            pairs.append((r, mu))
    return pairs


# --- Goldbach ----------------------------------------------------------------

def _ensure_cache(cache: Optional[PrimeCache], limit: int) -> PrimeCache:
    if cache is not None and cache.limit >= limit:
        return cache
    return build_cache(max(limit, 2))


def goldbach_partitions(n: int, cache: Optional[PrimeCache] = None) -> int:
    """Number of unordered prime pairs p <= q with p + q = n."""
    if n < 4 or n % 2:
        raise InvalidArgumentError(f"Goldbach partitions need an even n >= 4, got {n}")
    cache = _ensure_cache(cache, n)
    small = cache.primes(2, n // 2)
    return int(np.count_nonzero(cache.is_prime_array(n - small)))


def goldbach_scan(lo: int, hi: int, cache: Optional[PrimeCache] = None,
                  block: int = config.GOLDBACH_BLOCK) -> pd.DataFrame:
    """Check that every even n in [lo, hi] has a Goldbach partition.

    For each block the odd primes are tried in ascending order against the evens that
    are still undecided, so each n ends up with its least prime p such that n - p is
    prime. One summary row per block.
    """
    lo = max(4, lo + (lo % 2))
    cache = _ensure_cache(cache, hi)
    odd_primes = cache.primes(3, hi)
    rows = []
    for block_lo in range(lo, hi + 1, block):
        block_hi = min(block_lo + block - 1, hi)
        evens = np.arange(block_lo, block_hi + 1, 2, dtype=np.int64)
        least = np.zeros(evens.size, dtype=np.int64)
        if evens.size and evens[0] == 4:
            least[0] = 2
        pending = np.flatnonzero(least == 0)
        for p in odd_primes.tolist():
            if pending.size == 0:
                break
            candidates = evens[pending]
            reachable = candidates - p >= p
            if not reachable.any():
                break
            hit = np.zeros(pending.size, dtype=bool)
            hit[reachable] = cache.is_prime_array(candidates[reachable] - p)
            least[pending[hit]] = p
            pending = pending[~hit]
        failures = evens[pending].tolist()
        if failures:
            logger.warning(f"❌ No Goldbach partition for {failures[:10]}")
        worst = int(np.argmax(least)) if evens.size else 0
        rows.append({
            "block_lo": block_lo,
            "block_hi": block_hi,
            "evens_checked": int(evens.size),
            "max_least_prime": int(least[worst]) if evens.size else 0,
            "n_at_max": int(evens[worst]) if evens.size else 0,
            "failures": len(failures),
            "first_failure": int(failures[0]) if failures else 0,
        })
    logger.info(f"Goldbach scan [{lo:,}, {hi:,}] finished over {len(rows)} blocks")
    return pd.DataFrame(rows, columns=["block_lo", "block_hi", "evens_checked", "max_least_prime",
                                       "n_at_max", "failures", "first_failure"])
