"""
Configuration settings for the gbl_audit toolkit
"""

import logging
import os
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Dict, Optional

from .errors import InvalidArgumentError

logger = logging.getLogger(__name__)

# Data source configuration
PACKAGE_DIR = Path(__file__).resolve().parent
DEFAULT_ZEROS_FILE = str(PACKAGE_DIR / "data" / "zeros_first1000.txt")
ZEROS_ENV_VAR = "GBL_ZEROS"
ZEROS_SOURCE_URL = "https://www-users.cse.umn.edu/~odlyzko/zeta_tables/zeros1"
REQUEST_TIMEOUT = 30  # seconds

# Sieve configuration
SIEVE_LIMIT = 1_000_000
BLOCK_ODDS = 1 << 16           # odd numbers per block_counts entry
SEGMENT_ODDS = 1 << 18         # odd numbers per segment of the interval sieve (~256 KiB of bools)
BASE_PRIME_CEILING = 10_000_000
FACTOR_CEILING = 10**12
UINT64_MAX = 2**63 - 1
BASE_PRIMES_MAGIC = b"GBL1"

# Explicit formula configuration
DEFAULT_R_MAX = 1
DEFAULT_ZERO_COUNT = 0
DEFAULT_CONSTANT_MODE = "classical"

# L(n) interval configuration
DEFAULT_L_GENERATOR = "support_products"
DEFAULT_L_OFFSETS = "minus"
QUAD_TOL = 1e-10
QUAD_LIMIT = 200
TAIL_CUT = 1e6

# Printed constants
PRINTED_CONSTANT_FACTOR = 3.7277
EULER_GAMMA = 0.57721566490153286
TWIN_PRODUCT_LIMIT = 0.66016181584686957
SSC_LOWER_FACTOR = 2.63
SSC_UPPER_FACTOR = 3.51
CONJECTURE_MIN_N = 120
ROSSER_SCHOENFELD_MIN_X = 59
D_FOURTH_ROOT_MIN_N = 1_000_000

# Comparison settings
RELATIVE_MARGIN = 1e-12
COSINE_TOL = 1e-10

# Scan configuration
DEFAULT_WORKERS = 1
SHARD_SIZE = 1000              # even values per work unit
CHECKPOINT_ROWS = 10_000
GOLDBACH_BLOCK = 100_000

# Output settings
RESULTS_DIR = "results"
CSV_LINE_TERMINATOR = "\n"

# Debug settings
DEBUG_MODE = False
LOG_LEVEL = "INFO"
LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'


@dataclass(frozen=True)
class RunConfig:
    """Everything one CLI invocation needs, after merging flags, config file and defaults."""
    subcommand: str = ""
    n: Optional[int] = None
    x: Optional[float] = None
    s: int = 2
    range_from: int = CONJECTURE_MIN_N
    range_to: int = 1000
    step: int = 2
    cutoff: Optional[int] = None
    slack: float = 0.0
    which: str = "mertens"
    suite: str = "all"
    zeros_file: str = DEFAULT_ZEROS_FILE
    num_zeros: int = DEFAULT_ZERO_COUNT
    r_max: int = DEFAULT_R_MAX
    constant_mode: str = DEFAULT_CONSTANT_MODE
    quad_tol: float = QUAD_TOL
    offsets: str = DEFAULT_L_OFFSETS
    generator: str = DEFAULT_L_GENERATOR
    out: Optional[str] = None
    plot: Optional[str] = None
    url: str = ZEROS_SOURCE_URL
    cache_file: Optional[str] = None
    workers: int = DEFAULT_WORKERS
    block: int = GOLDBACH_BLOCK
    resume: bool = False
    violations_only: bool = False
    log_level: str = LOG_LEVEL
    extra: Dict[str, Any] = field(default_factory=dict)

    def validate(self) -> "RunConfig":
        if self.workers < 1:
            raise InvalidArgumentError(f"workers must be >= 1, got {self.workers}")
        if self.range_from > self.range_to:
            raise InvalidArgumentError(f"empty range {self.range_from}..{self.range_to}")
        if self.step < 1:
            raise InvalidArgumentError(f"step must be positive, got {self.step}")
        if self.subcommand in ("verify-first", "goldbach-scan") and self.step % 2:
            raise InvalidArgumentError("even-n scans need an even step")
        if self.r_max < 1:
            raise InvalidArgumentError(f"r_max must be >= 1, got {self.r_max}")
        if self.quad_tol <= 0:
            raise InvalidArgumentError(f"quad_tol must be positive, got {self.quad_tol}")
        if self.constant_mode not in ("paper", "classical"):
            raise InvalidArgumentError(f"unknown constant mode {self.constant_mode!r}")
        return self


def _convert(name: str, raw: str) -> Any:
    """Cast a config-file string to the type of the RunConfig field it sets."""
    sample = getattr(RunConfig(), name)
    if isinstance(sample, bool):
        lowered = raw.strip().lower()
        if lowered in ("true", "yes", "1", "on"):
            return True
        if lowered in ("false", "no", "0", "off"):
            return False
        raise InvalidArgumentError(f"{name}: expected a boolean, got {raw!r}")
    try:
        if isinstance(sample, int):
            return int(raw)
        if isinstance(sample, float) or name == "x":
            return float(raw)
        if name in ("n", "cutoff"):
            return int(raw)
    except ValueError:
        raise InvalidArgumentError(f"{name}: cannot parse {raw!r}")
    return raw


def load_config_file(path: str) -> Dict[str, Any]:
    """Read `key = value` lines; '#' starts a comment. Dashes in keys are accepted for underscores."""
    known = {f.name for f in fields(RunConfig)} - {"extra", "subcommand"}
    values: Dict[str, Any] = {}
    with open(path, "r", encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, start=1):
            text = line.split("#", 1)[0].strip()
            if not text:
                continue
            if "=" not in text:
                raise InvalidArgumentError(f"{path}:{line_number}: expected key = value")
            key, raw = (part.strip() for part in text.split("=", 1))
            key = key.replace("-", "_")
            if key == "rmax":
                key = "r_max"
            if key not in known:
                raise InvalidArgumentError(f"{path}:{line_number}: unknown key {key!r}")
            values[key] = _convert(key, raw)
    logger.debug(f"Loaded {len(values)} settings from {path}")
    return values


def build_run_config(cli_values: Dict[str, Any], config_path: Optional[str] = None) -> RunConfig:
    """Merge with precedence CLI flags > config file > GBL_ZEROS > built-in defaults.

    `cli_values` holds only flags the user actually gave (None means absent).
    """
    config = RunConfig()
    env_zeros = os.environ.get(ZEROS_ENV_VAR)
    if env_zeros:
        config = replace(config, zeros_file=env_zeros)
    if config_path:
        config = replace(config, **load_config_file(config_path))
    explicit = {key: value for key, value in cli_values.items() if value is not None}
    config = replace(config, **explicit)
    return config.validate()
