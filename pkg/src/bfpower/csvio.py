"""CSV serialization of datasets."""

from __future__ import annotations

import csv
import io
import os
import sys
from typing import IO, Union

from .sweep import Dataset


class OutputError(OSError):
    pass


def format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def to_csv(dataset: Dataset) -> str:
    cols = dataset.columns
    if any(not c for c in cols):
        raise ValueError("dataset column names must be non-empty")
    if len(set(cols)) != len(cols):
        raise ValueError(f"dataset column names must be unique: {cols}")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(cols)
    for row in dataset.rows:
        writer.writerow([format_cell(v) for v in row])
    return buf.getvalue()


def emit_csv(dataset: Dataset, target: Union[str, os.PathLike, IO[str], None] = None) -> None:
    """Write ``dataset`` as UTF-8 CSV with LF line endings.

    ``target`` may be a path, an open text stream, or ``None``/``"-"`` for
    standard output.
    """
    text = to_csv(dataset)
    if target is None or target == "-":
        sys.stdout.write(text)
        return
    if hasattr(target, "write"):
        target.write(text)
        return
    try:
        with open(target, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OutputError(f"cannot write {os.fspath(target)!r}: {exc.strerror or exc}") from exc
