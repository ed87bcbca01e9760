#!/usr/bin/env python3
"""
Tests for zeros-file loading, bucketing and download
"""

import mpmath
import numpy as np
import pytest
import requests

from create_zeros_fixture import create_zeros_file
from gbl_audit.errors import InvalidArgumentError, MalformedDataError, ZeroSourceError
from gbl_audit.zeta_zeros import bucket, bucket_counts, fetch_zeros, load_zeros, rho


def test_shipped_table(zeros_30):
    assert len(zeros_30) == 30
    assert zeros_30.gammas[0] == pytest.approx(14.134725142, abs=1e-9)
    assert zeros_30.gammas[-1] == pytest.approx(101.317851006, abs=1e-8)
    assert np.all(np.diff(zeros_30.gammas) > 0)


def test_shipped_table_matches_mpmath(zeros_30):
    with mpmath.workdps(20):
        for k in (1, 2, 10, 30):
            assert zeros_30.gammas[k - 1] == pytest.approx(float(mpmath.zetazero(k).imag), abs=1e-9)


def test_table_is_read_only(zeros_30):
    with pytest.raises(ValueError):
        zeros_30.gammas[0] = 1.0


def test_head_and_rhos(zeros_30):
    five = zeros_30.head(5)
    assert len(five) == 5
    assert zeros_30.head(100) is zeros_30
    assert np.all(five.rhos().real == 0.5)
    assert rho(14.134725142) == complex(0.5, 14.134725142)
    with pytest.raises(InvalidArgumentError):
        rho(0.0)


def test_buckets(zeros_30):
    assert bucket(14.134725142) == 15
    assert bucket(21.0) == 21
    counts = bucket_counts(zeros_30)
    assert counts.sum() == 30
    assert counts[15] == 1
    assert counts.index.is_monotonic_increasing


def test_comments_and_blank_lines_are_skipped(tmp_path):
    path = tmp_path / "zeros.txt"
    path.write_text("# header\n\n14.134725142\n  21.022039639  \n# trailing\n25.010857580\n")
    table = load_zeros(str(path))
    assert len(table) == 3
    assert load_zeros(str(path), 2).gammas.tolist() == pytest.approx([14.134725142, 21.022039639])


def test_short_file_returns_what_it_has(tmp_path):
    path = tmp_path / "zeros.txt"
    path.write_text("14.134725142\n21.022039639\n")
    assert len(load_zeros(str(path), 10)) == 2
    assert len(load_zeros(str(path), 0)) == 0


@pytest.mark.parametrize("content,line", [
    ("14.134725142\nabc\n", 2),
    ("14.134725142\n-3.0\n", 2),
    ("# c\n21.0\n14.1\n", 3),
    ("14.1\n14.1\n", 2),
])
def test_malformed_files(tmp_path, content, line):
    path = tmp_path / "bad.txt"
    path.write_text(content)
    with pytest.raises(MalformedDataError) as caught:
        load_zeros(str(path))
    assert caught.value.line_number == line
    assert f":{line}" in str(caught.value)


def test_missing_file(tmp_path):
    with pytest.raises(ZeroSourceError):
        load_zeros(str(tmp_path / "missing.txt"))


class FakeResponse:
    def __init__(self, text, status=200):
        self.text = text
        self.status_code = status

    def raise_for_status(self):
        if self.status_code >= 400:
            raise requests.HTTPError(f"{self.status_code} error")


def test_fetch_zeros_writes_provenance(tmp_path, monkeypatch):
    monkeypatch.setattr(requests, "get", lambda url, timeout: FakeResponse("14.134725142\n21.022039639\n25.010857580\n"))
    out = tmp_path / "zeros.txt"
    table = fetch_zeros("https://example.org/zeros", str(out), max_count=2)
    assert len(table) == 2
    text = out.read_text()
    assert text.startswith("# source: https://example.org/zeros")
    assert "# count: 2" in text


def test_create_zeros_file(tmp_path):
    path = tmp_path / "zeros.txt"
    assert create_zeros_file(str(path), count=3, digits=10) == 3
    assert not (tmp_path / "zeros.txt.partial").exists()
    table = load_zeros(str(path))
    assert table.gammas.tolist() == pytest.approx([14.134725142, 21.022039639, 25.010857580], abs=1e-9)


def test_fetch_zeros_failure(tmp_path, monkeypatch):
    monkeypatch.setattr(requests, "get", lambda url, timeout: FakeResponse("", status=404))
    with pytest.raises(ZeroSourceError):
        fetch_zeros("https://example.org/zeros", str(tmp_path / "zeros.txt"))


def test_shipped_table_holds_1000_zeros(zeros_1000):
    assert len(zeros_1000) == 1000
    assert np.all(np.diff(zeros_1000.gammas) > 0)
    assert zeros_1000.gammas[99] == pytest.approx(236.524229665816, abs=1e-9)
    assert zeros_1000.gammas[0] == pytest.approx(14.134725141734693, abs=1e-10)
    assert zeros_1000.gammas[-1] == pytest.approx(1419.422480945995, abs=1e-8)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
