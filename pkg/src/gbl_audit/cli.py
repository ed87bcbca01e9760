#!/usr/bin/env python3
"""
Command-line entry point for the gbl_audit toolkit.

Usage:
    python -m gbl_audit verify-first --from 120 --to 1000 --step 2 --s 2 --out results.csv
    python -m gbl_audit riemann-pi --x 1000 --num-zeros 500 --rmax 9 --constant classical
    python -m gbl_audit report --out results/k_table.csv
"""

import argparse
import logging
import math
import os
import sys
from typing import Any, Callable, Dict, List, Optional

import pandas as pd

from . import config
from .config import RunConfig, build_run_config
from .conjecture_one import (VERIFY_COLUMNS, k_exact, k_table, l_exact, l_intervals, sum_n)
from .conjecture_two import (products_table, sandwich_check, sandwich_values, ssc_bounds_check, ssc_terms)
from .errors import (DataError, DomainError, GblAuditError, InvalidArgumentError, MalformedDataError,
                     OutOfRangeError, OutOfScopeError, ZeroSourceError)
from .explicit_formula import (FormulaParams, decomposition_frame, k_decomposition, l_decomposition,
                               riemann_pi_terms)
from .lemma_harness import SUITES, run_suite
from .prime_core import build_cache, install_base_primes, open_base_primes, prime_pi_interval
from .reporting import CheckpointWriter, emit_plot_data, write_rows
from .sharding import goldbach_task, map_shards, shard_range, verify_first_task
from .zeta_zeros import ZeroTable, fetch_zeros, load_zeros

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXACT_CHECK_LIMIT = 10**8


class AuditArgumentParser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; this toolkit reserves 2 for I/O and data errors."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = AuditArgumentParser(add_help=False)
    common.add_argument("--config", dest="config_path", help="key = value settings file")
    common.add_argument("--log-level", dest="log_level", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    common.add_argument("--workers", type=int)
    common.add_argument("--out", help="output CSV (stdout when omitted)")
    common.add_argument("--zeros-file", dest="zeros_file")
    common.add_argument("--num-zeros", dest="num_zeros", type=int)
    common.add_argument("--cache-file", dest="cache_file", help="GBL1 base-prime file, written on first use if missing")

    formula = AuditArgumentParser(add_help=False)
    formula.add_argument("--rmax", dest="r_max", type=int)
    formula.add_argument("--constant", dest="constant_mode", choices=["paper", "classical"])
    formula.add_argument("--tol", dest="quad_tol", type=float)

    ranged = AuditArgumentParser(add_help=False)
    ranged.add_argument("--from", dest="range_from", type=int)
    ranged.add_argument("--to", dest="range_to", type=int)

    parser = AuditArgumentParser(prog="gbl_audit", description="Numerical audit toolkit for the Goldbach/RH argument")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=AuditArgumentParser)

    p = sub.add_parser("pi", parents=[common], help="exact prime count π(x)")
    p.add_argument("--x", type=int, required=True)

    p = sub.add_parser("riemann-pi", parents=[common, formula], help="truncated explicit formula for π(x)")
    p.add_argument("--x", type=float, required=True)

    p = sub.add_parser("sum", parents=[common], help="sum(n) and its ingredients")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("k", parents=[common, formula], help="K(n, n^s) and its three parts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int)

    p = sub.add_parser("l", parents=[common, formula], help="L(n) intervals, count and three parts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--offsets", choices=["minus", "plus"])
    p.add_argument("--generator", choices=["divisors", "support_products"])

    p = sub.add_parser("verify-first", parents=[common, ranged], help="L(n) - D(n) >= K(n, n^s) >= 2 over a range")
    p.add_argument("--step", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--resume", action="store_true", default=None)

    p = sub.add_parser("verify-second", parents=[common], help="second-conjecture ratio and its bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cutoff", type=int, required=True)
    p.add_argument("--slack", type=float)

    p = sub.add_parser("products", parents=[common], help="partial Euler products")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--which", choices=["mertens", "plus", "square", "twin", "sandwich", "all"])

    p = sub.add_parser("lemmas", parents=[common, ranged], help="lemma audit suites")
    p.add_argument("--suite", choices=list(SUITES))
    p.add_argument("--violations-only", dest="violations_only", action="store_true", default=None)

    p = sub.add_parser("goldbach-scan", parents=[common, ranged], help="every even n has a Goldbach partition")
    p.add_argument("--block", type=int)

    p = sub.add_parser("report", parents=[common], help="K table against the printed values, with plot data")
    p.add_argument("--s", type=int)
    p.add_argument("--plot", help="plot-data file (defaults to the CSV path with .dat)")

    p = sub.add_parser("fetch-zeros", parents=[common], help="download a zeros table")
    p.add_argument("--url")
    return parser


def _formula_params(cfg: RunConfig) -> FormulaParams:
    return FormulaParams(r_max=cfg.r_max, zero_count=cfg.num_zeros, constant_mode=cfg.constant_mode,
                         quad_tol=cfg.quad_tol)


def _zeros(cfg: RunConfig) -> Optional[ZeroTable]:
    if cfg.num_zeros <= 0:
        return None
    return load_zeros(cfg.zeros_file, cfg.num_zeros)


def _print_frame(frame: pd.DataFrame) -> None:
    print(frame.to_string(index=False))


def cmd_pi(cfg: RunConfig) -> int:
    x = int(cfg.x)
    value = prime_pi_interval(0, x)
    print(f"π({x}) = {value}")
    return EXIT_OK


def cmd_riemann_pi(cfg: RunConfig) -> int:
    params = _formula_params(cfg)
    terms = riemann_pi_terms(cfg.x, params, _zeros(cfg))
    value = math.fsum(terms["contribution"].tolist())
    print(f"R({cfg.x:g}) = {value:.10f}  (r_max={params.r_max}, zeros={params.zero_count}, "
          f"constant={params.constant_mode})")
    if cfg.x <= EXACT_CHECK_LIMIT:
        exact = prime_pi_interval(0, int(math.floor(cfg.x)))
        print(f"📊 π({math.floor(cfg.x)}) = {exact}, error {value - exact:+.6f}")
    _print_frame(terms)
    if cfg.out:
        write_rows(terms, cfg.out)
    return EXIT_OK


def cmd_sum(cfg: RunConfig) -> int:
    parts = sum_n(cfg.n)
    print(f"n={parts.n} φ={parts.phi} D={parts.d} π={parts.pi_n} sum={parts.sum_n}")
    return EXIT_OK


def cmd_k(cfg: RunConfig) -> int:
    value = k_exact(cfg.n, cfg.s)
    print(f"K({cfg.n}, {cfg.n}^{cfg.s}) = {value}")
    frame = decomposition_frame("K", k_decomposition(cfg.n, cfg.s, _formula_params(cfg), _zeros(cfg)))
    _print_frame(frame)
    return EXIT_OK


def cmd_l(cfg: RunConfig) -> int:
    spec = l_intervals(cfg.n, generator=cfg.generator, offsets=cfg.offsets)
    print(f"anchors {list(spec.anchors)} ({spec.generator_id})")
    print("intervals " + " ".join(f"({lo},{hi}]" for lo, hi in spec.intervals))
    print(f"L({cfg.n}) = {l_exact(cfg.n, spec)}")
    frame = decomposition_frame("L", l_decomposition(cfg.n, spec, _formula_params(cfg), _zeros(cfg)))
    _print_frame(frame)
    return EXIT_OK


def cmd_verify_first(cfg: RunConfig) -> int:
    first, last = cfg.range_from, cfg.range_to
    if cfg.out is None:
        rows = [row for shard_rows in map_shards(verify_first_task, shard_range(first, last, cfg.step, extra=cfg.s),
                                                 last, cfg.workers, base_file=cfg.cache_file) for row in shard_rows]
        write_rows(rows, None, VERIFY_COLUMNS)
        return EXIT_OK

    writer = CheckpointWriter(cfg.out, VERIFY_COLUMNS, key="n", resume=cfg.resume)
    if writer.last_key is not None:
        first = writer.last_key + cfg.step
    failures = 0
    for shard_rows in map_shards(verify_first_task, shard_range(first, last, cfg.step, extra=cfg.s),
                                 last, cfg.workers, base_file=cfg.cache_file):
        failures += sum(1 for row in shard_rows if not row["pass"])
        writer.add(shard_rows)
    total = writer.finish()
    print(f"✅ {total} rows written to {cfg.out}; {failures} rows in this run fail the inequality")
    return EXIT_OK


def cmd_verify_second(cfg: RunConfig) -> int:
    check = ssc_bounds_check(cfg.n, cfg.cutoff, cfg.slack)
    terms = ssc_terms(cfg.n, cfg.cutoff, cfg.slack)
    row = dict(check.as_row(), twin=terms["twin"], divisor_factor=terms["divisor_factor"],
               denominator=terms["denominator"])
    _print_frame(pd.DataFrame([row]))
    mark = "✅" if check.lower_ok and check.upper_ok else "❌"
    print(f"{mark} 2.63 log N < ratio: {check.lower_ok}; ratio < 3.51 (log N)^2: {check.upper_ok}")
    if cfg.out:
        write_rows([row], cfg.out)
    return EXIT_OK


def cmd_products(cfg: RunConfig) -> int:
    x = int(cfg.x)
    cache = build_cache(max(x, 2))
    if cfg.which == "sandwich":
        values = sandwich_values(x, cache)
        holds = sandwich_check(x, cache)
        frame = pd.DataFrame([dict(cutoff=x, holds=holds, **values)])
    else:
        frame = products_table(x, cache)
        if cfg.which != "all":
            frame = frame[frame["product"] == cfg.which].reset_index(drop=True)
    _print_frame(frame)
    if cfg.out:
        write_rows(frame, cfg.out)
    return EXIT_OK


def cmd_lemmas(cfg: RunConfig) -> int:
    findings = run_suite(cfg.suite, cfg.range_from, cfg.range_to)
    failing = findings[~findings["holds"].astype(bool)]
    in_scope = failing[~failing["lemma_id"].str.endswith(".exploratory")]
    if cfg.violations_only:
        findings = failing.reset_index(drop=True)
    write_rows(findings, cfg.out)
    print(f"📊 {len(findings)} findings; {len(in_scope)} in-scope claims do not hold", file=sys.stderr)
    return EXIT_OK


def cmd_goldbach_scan(cfg: RunConfig) -> int:
    first, last = max(4, cfg.range_from), cfg.range_to
    shards = shard_range(first + first % 2, last, 2, size=max(1, cfg.block // 2), extra=cfg.block)
    rows = [row for shard_rows in map_shards(goldbach_task, shards, last, cfg.workers,
                                                       base_file=cfg.cache_file) for row in shard_rows]
    frame = pd.DataFrame(rows)
    write_rows(frame, cfg.out)
    failures = int(frame["failures"].sum()) if len(frame) else 0
    mark = "✅" if failures == 0 else "❌"
    print(f"{mark} {int(frame['evens_checked'].sum()) if len(frame) else 0} even numbers checked, "
          f"{failures} without a partition", file=sys.stderr)
    return EXIT_OK


def cmd_report(cfg: RunConfig) -> int:
    out = cfg.out or os.path.join(config.RESULTS_DIR, "k_table.csv")
    table = k_table(cfg.s)
    write_rows(table, out)
    plot = cfg.plot or os.path.splitext(out)[0] + ".dat"
    emit_plot_data(table, "n", ["K", "rs_lower_bound"], plot)
    agreeing = int(table["agrees"].sum())
    print(f"📊 K table: {agreeing} of {len(table)} rows agree with the printed values → {out}, {plot}")
    return EXIT_OK


def cmd_fetch_zeros(cfg: RunConfig) -> int:
    out = cfg.out or "zeros.txt"
    table = fetch_zeros(cfg.url, out, cfg.num_zeros or None)
    print(f"✅ {len(table)} zeros saved to {out}")
    return EXIT_OK


HANDLERS: Dict[str, Callable[[RunConfig], int]] = {
    "pi": cmd_pi, "riemann-pi": cmd_riemann_pi, "sum": cmd_sum, "k": cmd_k, "l": cmd_l,
    "verify-first": cmd_verify_first, "verify-second": cmd_verify_second, "products": cmd_products,
    "lemmas": cmd_lemmas, "goldbach-scan": cmd_goldbach_scan, "report": cmd_report,
    "fetch-zeros": cmd_fetch_zeros,
}


def run(cfg: RunConfig) -> int:
    """Execute one subcommand; findings never change the exit code, errors do."""
    handler = HANDLERS.get(cfg.subcommand)
    if handler is None:
        print(f"❌ unknown subcommand {cfg.subcommand!r}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if cfg.cache_file:
            open_base_primes(cfg.cache_file)
        return handler(cfg)
    except (InvalidArgumentError, OutOfScopeError, OutOfRangeError, DomainError) as e:
        logger.error(f"{cfg.subcommand}: {e}")
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ZeroSourceError, MalformedDataError, DataError, OSError) as e:
        logger.error(f"{cfg.subcommand}: {e}")
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_IO
    except GblAuditError as e:
        logger.error(f"{cfg.subcommand}: {e}")
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_IO
    finally:
        install_base_primes(None)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else EXIT_USAGE
    values: Dict[str, Any] = vars(args).copy()
    config_path = values.pop("config_path", None)
    try:
        cfg = build_run_config(values, config_path)
    except InvalidArgumentError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"❌ cannot read config file: {e}", file=sys.stderr)
        return EXIT_IO
    logging.basicConfig(level=cfg.log_level, format=config.LOG_FORMAT)
    logger.debug(f"Run configuration: {cfg}")
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
