"""
Tabular output: CSV with 9 significant digits or a JSON array of records.
"""
from __future__ import annotations

import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Sequence, TypeVar

import pandas as pd

from .run_spec import RunSpec

FLOAT_FORMAT = "%.9g"

T = TypeVar("T")
R = TypeVar("R")

logger = logging.getLogger(__name__)


def run_jobs(fn: Callable[[T], R], items: Iterable[T], workers: int = 1) -> List[R]:
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def render(frame: pd.DataFrame, fmt: str, trailer: Sequence[str] = ()) -> str:
    if fmt == "json":
        return frame.to_json(orient="records", double_precision=15) + "\n"
    text = frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n", na_rep="")
    return text + "".join(f"# {line}\n" for line in trailer)


def write_table(
    frame: pd.DataFrame,
    spec: RunSpec,
    sort_by: Sequence[str],
    trailer: Sequence[str] = (),
):
    """Sort rows deterministically and write them to --out or stdout."""
    frame = frame.sort_values(list(sort_by), kind="mergesort").reset_index(drop=True)
    text = render(frame, spec.fmt, trailer)
    if spec.out is None:
        sys.stdout.write(text)
        return
    try:
        spec.out.parent.mkdir(parents=True, exist_ok=True)
        spec.out.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write {spec.out}: {exc.strerror or exc}") from exc
    logger.info("Wrote %d rows to %s", len(frame), spec.out)


def records_frame(records: List[dict], columns: Sequence[str]) -> pd.DataFrame:
    return pd.DataFrame.from_records(records, columns=list(columns))
