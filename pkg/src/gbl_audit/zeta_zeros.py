"""
Loading, validation and download of tables of imaginary parts of zeta zeros.

Every zero is taken on the critical line, rho = 1/2 + i*gamma.
"""

import logging
import math
from dataclasses import dataclass
from datetime import datetime
from typing import Optional

import numpy as np
import pandas as pd
import requests

from . import config
from .errors import InvalidArgumentError, MalformedDataError, ZeroSourceError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ZeroTable:
    gammas: np.ndarray
    source: str

    def __post_init__(self):
        self.gammas.setflags(write=False)

    def __len__(self) -> int:
        return int(self.gammas.size)

    def head(self, count: int) -> "ZeroTable":
        """The first `count` zeros (all of them if the table is shorter)."""
        if count >= len(self):
            return self
        return ZeroTable(gammas=self.gammas[:count].copy(), source=f"{self.source}[:{count}]")

    def rhos(self) -> np.ndarray:
        return 0.5 + 1j * self.gammas


def rho(gamma: float) -> complex:
    if gamma <= 0:
        raise InvalidArgumentError(f"gamma must be positive, got {gamma}")
    return complex(0.5, gamma)


def bucket(gamma: float) -> int:
    """The integer M with M - 1 < gamma <= M."""
    return math.ceil(gamma)


def bucket_counts(table: ZeroTable) -> pd.Series:
    """Number of zeros in each bucket M, indexed by M."""
    if not len(table):
        return pd.Series(dtype=np.int64, name="zeros")
    buckets = np.ceil(table.gammas).astype(np.int64)
    return pd.Series(buckets).value_counts().sort_index().rename("zeros")


def load_zeros(path: str, max_count: Optional[int] = None) -> ZeroTable:
    """Parse a zeros file: one decimal per line, '#' lines and blank lines skipped.

    Reads at most `max_count` values. Raises MalformedDataError, with the line number,
    on an unparsable, non-positive or out-of-order entry.
    """
    values = []
    if max_count is not None and max_count <= 0:
        return ZeroTable(gammas=np.empty(0), source=str(path))
    try:
        with open(path, "r", encoding="utf-8") as handle:
            previous = 0.0
            for line_number, line in enumerate(handle, start=1):
                text = line.strip()
                if not text or text.startswith("#"):
                    continue
                try:
                    value = float(text.split()[0])
                except ValueError:
                    raise MalformedDataError(f"cannot parse {text!r}", line_number=line_number, source=str(path))
                if not math.isfinite(value) or value <= 0:
                    raise MalformedDataError(f"non-positive entry {text!r}", line_number=line_number, source=str(path))
                if value <= previous:
                    raise MalformedDataError(f"{value} does not exceed the previous entry {previous}",
                                             line_number=line_number, source=str(path))
                values.append(value)
                previous = value
                if max_count is not None and len(values) >= max_count:
                    break
    except OSError as e:
        raise ZeroSourceError(f"cannot read zeros file {path}: {e}") from e

    if max_count is not None and len(values) < max_count:
        logger.warning(f"⚠️ {path} holds only {len(values)} zeros, {max_count} requested")
    logger.info(f"Loaded {len(values)} zeros from {path}")
    return ZeroTable(gammas=np.array(values, dtype=np.float64), source=str(path))


def fetch_zeros(url: str = config.ZEROS_SOURCE_URL, out_path: str = "zeros.txt",
                max_count: Optional[int] = None, timeout: int = config.REQUEST_TIMEOUT) -> ZeroTable:
    """Download a published zeros table, store it with a provenance header and re-load it."""
    try:
        logger.info(f"Fetching zeros from {url}")
        response = requests.get(url, timeout=timeout)
        response.raise_for_status()
    except requests.RequestException as e:
        raise ZeroSourceError(f"download from {url} failed: {e}") from e

    lines = [line.strip() for line in response.text.splitlines() if line.strip()]
    if max_count is not None:
        lines = lines[:max_count]
    header = [
        f"# source: {url}",
        f"# fetched: {datetime.now().isoformat(timespec='seconds')}",
        f"# count: {len(lines)}",
        "# imaginary parts of nontrivial zeta zeros, one per line, as published",
    ]
    try:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write("\n".join(header + lines) + "\n")
    except OSError as e:
        raise ZeroSourceError(f"cannot write {out_path}: {e}") from e
    logger.info(f"Saved {len(lines)} zeros to {out_path}")
    return load_zeros(out_path)
