"""CSV ingestion.

The only interface to the experiment harness is its CSV file: comment lines
start with "#", then a header row, then one data row per grid point.  The
histogram columns h0..hN are padded with empty cells when a row's n is
smaller than the widest n in the run, so they arrive as floats with NaN.
"""
from __future__ import annotations

import re

import pandas as pd

REQUIRED_COLUMNS = (
    "model", "n", "d", "p", "g", "sample_size", "dominant_count", "seed",
)
_HIST = re.compile(r"h(\d+)\Z")


def histogram_columns(df: pd.DataFrame) -> list[str]:
    """The h0..hN columns in index order."""
    cols = [(int(m.group(1)), c) for c in df.columns if (m := _HIST.match(c))]
    return [c for _, c in sorted(cols)]


def load_rows(path: str) -> pd.DataFrame:
    try:
        df = pd.read_csv(path, comment="#")
    except pd.errors.EmptyDataError:
        raise ValueError(f"{path} has no header row") from None
    missing = [c for c in REQUIRED_COLUMNS if c not in df.columns]
    if missing:
        raise ValueError(f"{path} is missing columns: {', '.join(missing)}")
    if df.empty:
        raise ValueError(f"{path} has no data rows")
    # g is empty for probability models, so it reads back as float; make the
    # intent (an optional integer) explicit.
    df["g"] = df["g"].astype("Int64")
    if (df["sample_size"] <= 0).any():
        raise ValueError(f"{path} has rows with sample_size <= 0")
    return df
