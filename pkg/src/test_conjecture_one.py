#!/usr/bin/env python3
"""
Tests for sum(n), K(n, m), the L(n) interval system and the first-conjecture records
"""

import pytest

from gbl_audit.conjecture_one import (PRINTED_K_TABLE, VERIFY_COLUMNS, big_m, count_primes_between, k_exact,
                                      k_table, k_table_bound, l_exact, l_intervals, power_of_two_adjust,
                                      sum_n, sum_range, verify_first, verify_first_range)
from gbl_audit.errors import InvalidArgumentError, OutOfScopeError
from gbl_audit.prime_core import build_cache

INTERVALS_120 = [(2, 19), (21, 38), (40, 55), (57, 83), (85, 94), (96, 103), (105, 110), (112, 115), (117, 120)]


def test_sum_at_120(small_cache):
    parts = sum_n(120, small_cache)
    assert (parts.phi, parts.d, parts.pi_n, parts.sum_n) == (32, 3, 30, 112)


def test_sum_small_and_odd(small_cache):
    assert sum_n(4, small_cache).sum_n == 4
    with pytest.raises(InvalidArgumentError):
        sum_n(121, small_cache)
    with pytest.raises(InvalidArgumentError):
        sum_n(2, small_cache)


def test_sum_range_matches_pointwise(small_cache):
    table = sum_range(4, 600, small_cache)
    assert table["n"].iloc[0] == 4
    for row in table.itertuples(index=False):
        assert row.sum_n == sum_n(int(row.n), small_cache).sum_n


def test_sum_at_1e6(cache_1e6):
    assert sum_n(1_000_000, cache_1e6).sum_n == 356994


def test_big_m(small_cache):
    assert big_m(120, 120 ** 2, small_cache) == 120 ** 3 + 112


def test_sum_at_powers_of_two_is_twice_pi(cache_1e6):
    for d in range(7, 20):
        assert sum_n(2 ** d, cache_1e6).sum_n == 2 * cache_1e6.prime_pi(2 ** d)


def test_sum_is_even_up_to_1e6(cache_1e6):
    table = sum_range(4, 1_000_000, cache_1e6)
    assert len(table) == 499_999
    assert (table["sum_n"] % 2 == 0).all()


def test_k_exact_agrees_with_full_cache_counts():
    cache = build_cache(3_000_000)
    for n in range(4, 142, 2):
        expected = cache.prime_pi(big_m(n, n ** 2, cache)) - cache.prime_pi(n ** 3)
        assert k_exact(n, 2, cache) == expected, n


def test_power_of_two_adjust():
    assert power_of_two_adjust(128) == 130
    assert power_of_two_adjust(256) == 254
    assert power_of_two_adjust(120) == 120
    assert power_of_two_adjust(2) == 2
    assert power_of_two_adjust(4) == 4
    assert power_of_two_adjust(8) == 10
    assert power_of_two_adjust(16) == 14
    assert power_of_two_adjust(32) == 34


def test_count_primes_between(small_cache):
    assert count_primes_between(10, 20, small_cache) == 4
    assert count_primes_between(10, 20) == 4
    assert count_primes_between(20, 10) == 0
    assert count_primes_between(2, 4) == 1


def test_k_at_120(small_cache):
    assert k_exact(120, 2, small_cache) == 6
    with pytest.raises(InvalidArgumentError):
        k_exact(120, 1, small_cache)


def test_l_intervals_at_120():
    spec = l_intervals(120)
    assert spec.anchors == (2, 3, 4, 5, 6, 8, 9, 10)
    assert list(spec.intervals) == INTERVALS_120
    assert spec.generator_id == "support_products/minus"
    assert l_exact(120, spec) == 29


def test_l_intervals_plus_offsets_do_not_overlap():
    spec = l_intervals(120, offsets="plus")
    assert spec.generator_id == "support_products/plus"
    for (_, first_hi), (second_lo, _) in zip(spec.intervals, spec.intervals[1:]):
        assert second_lo >= first_hi


def test_support_products_generator():
    assert l_intervals(126, generator="divisors").anchors == (2, 3, 6, 7, 9)
    assert l_intervals(126, generator="support_products").anchors == (2, 3, 4, 6, 7, 8, 9)


def test_default_anchors_include_non_divisors(small_cache):
    spec = l_intervals(122)
    assert spec.anchors == (2, 4, 8)
    assert list(spec.intervals) == [(2, 57), (59, 105), (107, 117), (119, 122)]
    assert l_exact(122, spec, small_cache) == 27
    assert l_intervals(122, generator="divisors").anchors == (2,)


def test_l_exact_matches_plain_prime_counts(small_cache):
    assert l_intervals(630).intervals[0] == (2, 4)
    for n in range(120, 2001, 2):
        spec = l_intervals(n)
        plain = sum(small_cache.prime_pi(hi) - small_cache.prime_pi(lo) for lo, hi in spec.intervals)
        assert l_exact(n, spec, small_cache) == plain, n


def test_l_exact_over_the_whole_range(small_cache):
    for n in range(120, 20_001, 2):
        assert l_exact(n, l_intervals(n, custom=[(2, n)]), small_cache) == small_cache.prime_pi(n) - 1


def test_l_intervals_scope_and_validation():
    with pytest.raises(OutOfScopeError):
        l_intervals(118)
    with pytest.raises(InvalidArgumentError):
        l_intervals(121)
    with pytest.raises(InvalidArgumentError):
        l_intervals(120, generator="squares")
    with pytest.raises(InvalidArgumentError):
        l_intervals(120, custom=[(2, 50), (40, 60)])
    custom = l_intervals(120, custom=[(60, 100), (2, 30)])
    assert custom.generator_id == "custom"
    assert list(custom.intervals) == [(2, 30), (60, 100)]


def test_verify_first_at_120(small_cache):
    record = verify_first(120, 2, small_cache)
    assert record.k_value == 6
    assert record.l_value == 29
    assert record.mn == 120 ** 3
    assert record.g_n == 12
    assert record.inequality_holds
    assert record.notes == []
    row = record.as_row()
    assert list(row) == VERIFY_COLUMNS


def test_verify_first_out_of_scope(small_cache):
    with pytest.raises(OutOfScopeError):
        verify_first(118, 2, small_cache)


def test_verify_first_range(small_cache):
    frame = verify_first_range(120, 140, 2, 2, small_cache)
    assert frame["n"].tolist() == list(range(120, 141, 2))
    assert list(frame.columns) == VERIFY_COLUMNS


def test_power_of_two_is_noted(small_cache):
    record = verify_first(128, 2, small_cache)
    assert "n is a power of two" in record.notes


def test_k_table_bound_column():
    assert k_table_bound(120) == pytest.approx(1.9275, abs=1e-4)
    assert k_table_bound(166) == pytest.approx(2.3245, abs=1e-4)
    assert k_table_bound(9410) == pytest.approx(39.5165, abs=1e-4)


@pytest.mark.slow
def test_k_table_against_printed_values(small_cache):
    table = k_table(2, small_cache)
    assert len(table) == len(PRINTED_K_TABLE)
    disagreeing = set(table.loc[~table["agrees"], "n"])
    assert disagreeing == {664, 924, 4806, 9410}
    computed = dict(zip(table["n"], table["K"]))
    assert computed[120] == 6
    assert (computed[664], computed[924], computed[4806], computed[9410]) == (15, 34, 113, 156)
    notes = dict(zip(table["n"], table["notes"]))
    assert "= 5" in notes[166]
    assert "bound" in notes[4806]
    assert "power-of-two" in notes[128]


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
