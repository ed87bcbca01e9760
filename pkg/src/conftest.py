"""
Shared fixtures for the gbl_audit tests
"""

import pytest

from gbl_audit import config
from gbl_audit.prime_core import build_cache
from gbl_audit.zeta_zeros import load_zeros


@pytest.fixture(scope="session")
def cache_1e6():
    return build_cache(1_000_000)


@pytest.fixture(scope="session")
def small_cache():
    return build_cache(20_000)


@pytest.fixture(scope="session")
def zeros_1000():
    return load_zeros(config.DEFAULT_ZEROS_FILE, 1000)


@pytest.fixture(scope="session")
def zeros_30(zeros_1000):
    return zeros_1000.head(30)
