"""
CSV and plot-data emission, plus the checkpoint file used by long range scans.
"""

import logging
import math
import os
import sys
from typing import Dict, Iterable, List, Optional, Sequence, Union

import numpy as np
import pandas as pd

from . import config
from .errors import DataError

logger = logging.getLogger(__name__)

Rows = Union[pd.DataFrame, Sequence[Dict[str, object]]]


def to_report_frame(rows: Rows, columns: Optional[Sequence[str]] = None) -> pd.DataFrame:
    """Flatten rows into a frame ready for CSV: booleans as "true"/"false", numbers checked finite."""
    frame = rows.copy() if isinstance(rows, pd.DataFrame) else pd.DataFrame(list(rows), columns=columns)
    if columns is not None:
        missing = [c for c in columns if c not in frame.columns]
        if missing:
            raise DataError(f"rows lack the fields {missing}")
        frame = frame[list(columns)]
    for column in frame.columns:
        series = frame[column]
        present = series.dropna()
        if series.dtype == bool or (series.dtype == object and len(present)
                                    and present.map(lambda v: isinstance(v, (bool, np.bool_))).all()):
            frame[column] = series.map(lambda v: "" if v is None or v is pd.NA else ("true" if bool(v) else "false"))
        elif pd.api.types.is_float_dtype(series) and not np.isfinite(series.to_numpy()).all():
            bad = frame.loc[~np.isfinite(series.to_numpy()), column].index.tolist()[:5]
            raise DataError(f"non-finite values in column {column!r} at rows {bad}")
    return frame


def _write_csv(frame: pd.DataFrame, target, header: bool = True) -> None:
    frame.to_csv(target, index=False, header=header, lineterminator=config.CSV_LINE_TERMINATOR)


def write_rows(rows: Rows, path: Optional[str], columns: Optional[Sequence[str]] = None) -> int:
    """Write rows as UTF-8 CSV with a header row (to stdout when path is None)."""
    frame = to_report_frame(rows, columns)
    if path is None:
        _write_csv(frame, sys.stdout)
    else:
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as handle:
            _write_csv(frame, handle)
        logger.info(f"Wrote {len(frame)} rows to {path}")
    return len(frame)


def emit_plot_data(rows: Rows, x_field: str, y_fields: Sequence[str], path: str) -> int:
    """Whitespace-separated columns with a '#' header line, one line per row."""
    frame = rows if isinstance(rows, pd.DataFrame) else pd.DataFrame(list(rows))
    fields = [x_field] + list(y_fields)
    if len(frame):
        missing = [f for f in fields if f not in frame.columns]
        if missing:
            raise DataError(f"plot fields {missing} are not in the rows")
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write("# " + " ".join(fields) + "\n")
        for values in frame[fields].itertuples(index=False) if len(frame) else []:
            handle.write(" ".join(_plot_value(v) for v in values) + "\n")
    logger.info(f"Wrote plot data ({len(frame)} points) to {path}")
    return len(frame)


def _plot_value(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "1" if value else "0"
    if isinstance(value, (float, np.floating)):
        if not math.isfinite(value):
            raise DataError(f"non-finite plot value {value}")
        return repr(float(value))
    return str(value)


class CheckpointWriter:
    """Buffered CSV writer for range scans.

    Rows go to `<out>.partial` every `every` rows; `finish` moves the partial file onto
    `out`. With `resume`, complete rows already in the partial file are kept and
    `last_key` tells the caller where to continue.
    """

    def __init__(self, out_path: str, columns: Sequence[str], key: str = "n",
                 every: int = config.CHECKPOINT_ROWS, resume: bool = False):
        self.out_path = out_path
        self.partial_path = out_path + ".partial"
        self.columns = list(columns)
        self.key = key
        self.every = every
        self.buffer: List[Dict[str, object]] = []
        self.written = 0
        self.last_key: Optional[int] = None
        directory = os.path.dirname(out_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        if resume and os.path.exists(self.partial_path):
            self._recover()
        elif os.path.exists(self.partial_path):
            os.remove(self.partial_path)

    def _recover(self) -> None:
        with open(self.partial_path, "r", encoding="utf-8", newline="") as handle:
            text = handle.read()
        if text and not text.endswith("\n"):
            text = text[:text.rfind("\n") + 1]
            with open(self.partial_path, "w", encoding="utf-8", newline="") as handle:
                handle.write(text)
        lines = text.splitlines()
        if len(lines) <= 1:
            os.remove(self.partial_path)
            return
        done = pd.read_csv(self.partial_path, usecols=[self.key])
        self.written = len(done)
        self.last_key = int(done[self.key].iloc[-1])
        logger.info(f"Resuming after {self.key}={self.last_key} ({self.written} rows in {self.partial_path})")

    def add(self, rows: Iterable[Dict[str, object]]) -> None:
        self.buffer.extend(rows)
        if len(self.buffer) >= self.every:
            self.flush()

    def flush(self) -> None:
        if not self.buffer:
            return
        frame = to_report_frame(self.buffer, self.columns)
        first = not os.path.exists(self.partial_path)
        with open(self.partial_path, "a", encoding="utf-8", newline="") as handle:
            _write_csv(frame, handle, header=first)
        self.written += len(frame)
        self.buffer = []
        logger.debug(f"Checkpoint: {self.written} rows in {self.partial_path}")

    def finish(self) -> int:
        self.flush()
        if not os.path.exists(self.partial_path):
            write_rows([], self.out_path, self.columns)
            return 0
        os.replace(self.partial_path, self.out_path)
        logger.info(f"Wrote {self.written} rows to {self.out_path}")
        return self.written
