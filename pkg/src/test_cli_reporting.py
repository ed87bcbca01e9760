#!/usr/bin/env python3
"""
Tests for CSV/plot emission, checkpointing, configuration and the command line
"""

import math

import pandas as pd
import pytest

from gbl_audit import config, prime_core
from gbl_audit.cli import main
from gbl_audit.config import build_run_config, load_config_file
from gbl_audit.conjecture_one import VERIFY_COLUMNS
from gbl_audit.errors import DataError, InvalidArgumentError
from gbl_audit.reporting import CheckpointWriter, emit_plot_data, to_report_frame, write_rows
from gbl_audit.sharding import map_shards, shard_range, verify_first_task


# --- reporting ---------------------------------------------------------------

def test_booleans_are_lowercase_words():
    frame = to_report_frame([{"n": 120, "pass": True}, {"n": 122, "pass": False}])
    assert frame["pass"].tolist() == ["true", "false"]


def test_non_finite_values_are_rejected():
    with pytest.raises(DataError):
        to_report_frame([{"n": 1, "value": math.nan}])
    with pytest.raises(DataError):
        to_report_frame([{"n": 1}], columns=["n", "value"])


def test_write_rows_csv(tmp_path):
    path = tmp_path / "out" / "rows.csv"
    count = write_rows([{"n": 120, "K": 6, "pass": True}], str(path), ["n", "K", "pass"])
    assert count == 1
    assert path.read_bytes() == b"n,K,pass\n120,6,true\n"


def test_emit_plot_data(tmp_path):
    path = tmp_path / "k.dat"
    emit_plot_data([{"n": 120, "K": 6, "bound": 1.5}, {"n": 128, "K": 2, "bound": 2.0}], "n", ["K", "bound"], str(path))
    lines = path.read_text().splitlines()
    assert lines == ["# n K bound", "120 6 1.5", "128 2 2.0"]
    emit_plot_data([], "n", ["K"], str(path))
    assert path.read_text() == "# n K\n"
    with pytest.raises(DataError):
        emit_plot_data([{"n": 1}], "n", ["K"], str(path))


def rows(ns):
    return [{"n": n, "value": n * 2} for n in ns]


def test_checkpoint_flushes_and_finishes(tmp_path):
    out = tmp_path / "scan.csv"
    writer = CheckpointWriter(str(out), ["n", "value"], every=2)
    writer.add(rows([4, 6, 8]))
    assert (tmp_path / "scan.csv.partial").exists()
    assert writer.finish() == 3
    assert not (tmp_path / "scan.csv.partial").exists()
    assert pd.read_csv(out)["n"].tolist() == [4, 6, 8]


def test_checkpoint_resume_drops_a_torn_line(tmp_path):
    out = tmp_path / "scan.csv"
    (tmp_path / "scan.csv.partial").write_text("n,value\n4,8\n6,12\n8,1")
    writer = CheckpointWriter(str(out), ["n", "value"], every=2, resume=True)
    assert writer.last_key == 6
    writer.add(rows([8, 10]))
    assert writer.finish() == 4
    assert pd.read_csv(out)["n"].tolist() == [4, 6, 8, 10]


def test_checkpoint_without_resume_starts_over(tmp_path):
    out = tmp_path / "scan.csv"
    (tmp_path / "scan.csv.partial").write_text("n,value\n4,8\n")
    writer = CheckpointWriter(str(out), ["n", "value"])
    assert writer.last_key is None
    writer.add(rows([100]))
    writer.finish()
    assert pd.read_csv(out)["n"].tolist() == [100]


# --- sharding ----------------------------------------------------------------

def test_shard_range_covers_every_value():
    shards = shard_range(120, 160, 2, size=5)
    assert shards == [(120, 128, 2, 0), (130, 138, 2, 0), (140, 148, 2, 0), (150, 158, 2, 0), (160, 160, 2, 0)]
    assert shard_range(10, 4) == []


def test_pooled_shards_match_the_inline_run(small_cache):
    shards = shard_range(120, 160, 2, size=5, extra=2)
    inline = [row for chunk in map_shards(verify_first_task, shards, 20_000, cache=small_cache) for row in chunk]
    pooled = [row for chunk in map_shards(verify_first_task, shards, 20_000, workers=2) for row in chunk]
    assert pooled == inline
    assert [row["n"] for row in inline] == list(range(120, 161, 2))


def test_csv_is_byte_identical_under_eight_workers(tmp_path, small_cache):
    shards = shard_range(120, 400, 2, size=5, extra=2)
    inline = [row for chunk in map_shards(verify_first_task, shards, 20_000, cache=small_cache) for row in chunk]
    pooled = [row for chunk in map_shards(verify_first_task, shards, 20_000, workers=8) for row in chunk]
    one, eight = tmp_path / "one.csv", tmp_path / "eight.csv"
    write_rows(inline, str(one), VERIFY_COLUMNS)
    write_rows(pooled, str(eight), VERIFY_COLUMNS)
    assert len(shards) == 29
    assert one.read_bytes() == eight.read_bytes()


# --- configuration -----------------------------------------------------------

def test_config_file_and_precedence(tmp_path, monkeypatch):
    path = tmp_path / "audit.conf"
    path.write_text("# settings\nrmax = 5\nnum-zeros = 20\nconstant_mode = paper\nresume = yes\n")
    assert load_config_file(str(path)) == {"r_max": 5, "num_zeros": 20, "constant_mode": "paper", "resume": True}
    monkeypatch.setenv(config.ZEROS_ENV_VAR, "/data/zeros.txt")
    cfg = build_run_config({"subcommand": "riemann-pi", "r_max": 9, "workers": None}, str(path))
    assert cfg.r_max == 9
    assert cfg.num_zeros == 20
    assert cfg.zeros_file == "/data/zeros.txt"
    assert cfg.workers == config.DEFAULT_WORKERS


def test_config_file_rejects_unknown_keys(tmp_path):
    path = tmp_path / "audit.conf"
    path.write_text("colour = blue\n")
    with pytest.raises(InvalidArgumentError):
        load_config_file(str(path))


def test_config_validation():
    with pytest.raises(InvalidArgumentError):
        build_run_config({"subcommand": "verify-first", "step": 3})
    with pytest.raises(InvalidArgumentError):
        build_run_config({"subcommand": "verify-first", "range_from": 200, "range_to": 120})


# --- command line ------------------------------------------------------------

def test_cli_sum(capsys):
    assert main(["sum", "--n", "120"]) == 0
    assert "sum=112" in capsys.readouterr().out


def test_cli_pi(capsys):
    assert main(["pi", "--x", "100"]) == 0
    assert "= 25" in capsys.readouterr().out


def test_cli_usage_errors(capsys):
    assert main(["nope"]) == 1
    assert main(["sum"]) == 1
    assert main(["l", "--n", "100"]) == 1
    assert main(["sum", "--n", "121"]) == 1


def test_cli_io_errors(tmp_path):
    missing = str(tmp_path / "missing.txt")
    assert main(["riemann-pi", "--x", "100", "--zeros-file", missing, "--num-zeros", "5"]) == 2


def test_cli_cache_file_is_written_on_a_miss(tmp_path, capsys):
    base = tmp_path / "base.gbl1"
    assert main(["pi", "--x", "1000000", "--cache-file", str(base)]) == 0
    assert "= 78498" in capsys.readouterr().out
    assert base.read_bytes()[:4] == config.BASE_PRIMES_MAGIC
    written = base.stat().st_mtime_ns
    assert main(["pi", "--x", "100", "--cache-file", str(base)]) == 0
    assert base.stat().st_mtime_ns == written
    assert prime_core._installed_base is None


def test_cli_cache_file_reaches_the_workers(tmp_path):
    base, plain, cached = tmp_path / "base.gbl1", tmp_path / "plain.csv", tmp_path / "cached.csv"
    assert main(["verify-first", "--from", "120", "--to", "160", "--out", str(plain)]) == 0
    assert main(["verify-first", "--from", "120", "--to", "160", "--out", str(cached), "--workers", "2",
                 "--cache-file", str(base)]) == 0
    assert base.exists()
    assert cached.read_text() == plain.read_text()


def test_cli_l_prints_intervals(capsys):
    assert main(["l", "--n", "120"]) == 0
    out = capsys.readouterr().out
    assert "(117,120]" in out
    assert "L(120) = 29" in out


def test_cli_verify_first(tmp_path):
    out = tmp_path / "verify.csv"
    assert main(["verify-first", "--from", "120", "--to", "140", "--out", str(out)]) == 0
    frame = pd.read_csv(out, keep_default_na=False)
    assert list(frame.columns) == VERIFY_COLUMNS
    assert frame["n"].tolist() == list(range(120, 141, 2))
    assert frame.loc[0, "K"] == 6
    assert set(frame["pass"].astype(str).str.lower()) <= {"true", "false"}


def test_cli_verify_first_resume(tmp_path):
    out = tmp_path / "verify.csv"
    assert main(["verify-first", "--from", "120", "--to", "130", "--out", str(out)]) == 0
    full = out.read_text().splitlines()
    partial = tmp_path / "verify.csv.partial"
    partial.write_text("\n".join(full[:3]) + "\n" + full[3][:5])
    out.unlink()
    assert main(["verify-first", "--from", "120", "--to", "130", "--out", str(out), "--resume"]) == 0
    assert out.read_text().splitlines() == full


def test_cli_verify_first_workers_agree(tmp_path):
    single, pooled = tmp_path / "one.csv", tmp_path / "two.csv"
    assert main(["verify-first", "--from", "120", "--to", "160", "--out", str(single)]) == 0
    assert main(["verify-first", "--from", "120", "--to", "160", "--out", str(pooled), "--workers", "2"]) == 0
    assert single.read_text() == pooled.read_text()


def test_cli_lemmas_violations_only(tmp_path):
    out = tmp_path / "lemmas.csv"
    assert main(["lemmas", "--suite", "lemma7", "--from", "120", "--to", "400", "--violations-only",
                 "--out", str(out)]) == 0
    frame = pd.read_csv(out)
    assert (frame["holds"].astype(str).str.lower() == "false").all()
    assert "lemma7.printed.f'" in set(frame["lemma_id"])


def test_cli_products_and_second(capsys, tmp_path):
    assert main(["products", "--x", "1000", "--which", "all"]) == 0
    assert "twin" in capsys.readouterr().out
    out = tmp_path / "ssc.csv"
    assert main(["verify-second", "--n", "1000", "--cutoff", "10000", "--out", str(out)]) == 0
    row = pd.read_csv(out).iloc[0]
    assert row["N"] == 1000


def test_cli_goldbach_scan(tmp_path):
    out = tmp_path / "gb.csv"
    assert main(["goldbach-scan", "--from", "4", "--to", "20000", "--block", "5000", "--out", str(out)]) == 0
    frame = pd.read_csv(out)
    assert frame["failures"].sum() == 0
    assert frame["evens_checked"].sum() == (20_000 - 4) // 2 + 1


@pytest.mark.slow
def test_cli_report(tmp_path):
    out = tmp_path / "k_table.csv"
    assert main(["report", "--out", str(out)]) == 0
    table = pd.read_csv(out)
    assert len(table) == 15
    plot = (tmp_path / "k_table.dat").read_text().splitlines()
    assert plot[0] == "# n K rs_lower_bound"
    assert len(plot) == 16


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
