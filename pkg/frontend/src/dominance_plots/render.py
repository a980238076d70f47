"""Rendering: one image file per facet, with an auditable point count.

All figure parameters that matplotlib would otherwise pull from ambient
configuration are pinned in _STYLE, and the SVG id hash salt is fixed, so
rendering the same CSV with the same spec produces byte-identical files.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import pandas as pd
from matplotlib.ticker import MaxNLocator

from .reader import histogram_columns, load_rows
from .spec import PlotSpec

LOG_SCALE_SPAN = 100.0

_STYLE = {
    "figure.figsize": (6.4, 4.2),
    "figure.dpi": 100,
    "savefig.dpi": 100,
    "font.family": "DejaVu Sans",
    "font.size": 10,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "svg.hashsalt": "dominance-plots",
    "path.simplify": False,
}


@dataclass(frozen=True)
class FacetReport:
    """What one facet produced, with the counts the audit compares.

    rows is the number of data rows selected for the facet; points is the
    number of data points recovered from the drawn artists.  The two must
    agree, otherwise the figure silently dropped data.
    """

    key: dict
    rows: int
    points: int
    path: str
    x_scale: str
    y_limits: tuple

    @property
    def complete(self) -> bool:
        return self.rows == self.points


def _facet_path(spec: PlotSpec, key: dict) -> str:
    root, ext = os.path.splitext(spec.output)
    stem = root if ext.lower() in (".png", ".svg") else spec.output
    bits = [str(key["model"]), f"n{key['n']}"]
    if "d" in key:
        bits.append(f"d{key['d']}")
    return f"{stem}_{'_'.join(bits)}.{spec.format}"


def _save(fig, path: str, fmt: str) -> None:
    parent = os.path.dirname(path)
    if parent:
        os.makedirs(parent, exist_ok=True)
    if fmt == "svg":
        metadata = {"Date": None}
    else:
        metadata = {"Software": "dominance-plots"}
    fig.savefig(path, format=fmt, metadata=metadata)


def _apply_filters(df: pd.DataFrame, spec: PlotSpec) -> pd.DataFrame:
    for column, wanted in (("model", spec.models), ("n", spec.n_values), ("d", spec.degrees)):
        if wanted is None:
            continue
        present = set(df[column].unique())
        absent = [v for v in wanted if v not in present]
        if absent:
            raise ValueError(
                f"{column} value(s) {', '.join(map(str, absent))} not present in the data"
            )
        df = df[df[column].isin(wanted)]
    return df


def _series_color(k: int, n: int) -> tuple | str:
    # generator counts 1..n share one fixed palette; 0 (the zero ideal) is
    # kept out of it so the colored bars always mean "k generators"
    if k == 0:
        return "#9e9e9e"
    return plt.get_cmap("viridis")(0.9 * (k - 1) / max(n - 1, 1))


def _x_scale(values) -> str:
    lo, hi = float(min(values)), float(max(values))
    if lo > 0 and hi / lo > LOG_SCALE_SPAN:
        return "log"
    return "linear"


def _finish_probability_axis(ax, scale: str) -> None:
    ax.set_xscale(scale)
    ax.set_ylim(0.0, 1.0)
    ax.set_xlabel("p")
    ax.set_ylabel("dominance frequency")


def _render_frequency_facet(group: pd.DataFrame, key: dict, path: str, fmt: str) -> FacetReport:
    rows = group.sort_values("p", kind="stable")
    freq = rows["dominant_count"] / rows["sample_size"]
    fig, ax = plt.subplots(layout="constrained")
    ax.plot(rows["p"].to_numpy(), freq.to_numpy(), marker="o", markersize=4,
            linewidth=1.2, color="#1f77b4")
    scale = _x_scale(rows["p"])
    _finish_probability_axis(ax, scale)
    ax.set_title(f"{key['model']} model, n={key['n']}, d={key['d']}")
    points = sum(len(line.get_xdata()) for line in ax.lines)
    _save(fig, path, fmt)
    report = FacetReport(key, len(rows), points, path, ax.get_xscale(), ax.get_ylim())
    plt.close(fig)
    return report


def _render_stacked_facet(group: pd.DataFrame, key: dict, path: str, fmt: str) -> FacetReport:
    rows = group.sort_values("p", kind="stable")
    n = int(key["n"])
    cols = [c for c in histogram_columns(rows) if not rows[c].isna().all()]
    positions = range(len(rows))
    fig, ax = plt.subplots(layout="constrained")
    bottom = pd.Series(0.0, index=rows.index)
    for col in cols:
        k = int(col[1:])
        share = rows[col].fillna(0) / rows["sample_size"]
        ax.bar(positions, share.to_numpy(), bottom=bottom.to_numpy(), width=0.8,
               color=_series_color(k, n), label=str(k))
        bottom = bottom + share
    ax.set_xticks(list(positions))
    ax.set_xticklabels([f"{p:g}" for p in rows["p"]], rotation=60, fontsize=7,
                       ha="right", rotation_mode="anchor")
    ax.set_ylim(0.0, 1.0)
    ax.set_xlabel("p")
    ax.set_ylabel("share of sample")
    ax.legend(title="generators", fontsize=8, title_fontsize=8)
    ax.set_title(f"{key['model']} model, n={key['n']}, d={key['d']}")
    points = len(ax.containers[0]) if ax.containers else 0
    _save(fig, path, fmt)
    report = FacetReport(key, len(rows), points, path, ax.get_xscale(), ax.get_ylim())
    plt.close(fig)
    return report


def _render_fixed_count_facet(group: pd.DataFrame, key: dict, path: str, fmt: str) -> FacetReport:
    fig, ax = plt.subplots(layout="constrained")
    for i, (g, rows) in enumerate(group.groupby("g", sort=True)):
        rows = rows.sort_values("d", kind="stable")
        freq = rows["dominant_count"] / rows["sample_size"]
        ax.plot(rows["d"].to_numpy(), freq.to_numpy(), marker="o", markersize=4,
                linewidth=1.2, color=plt.get_cmap("tab10")(i % 10), label=f"g={g}")
    ax.set_ylim(0.0, 1.0)
    ax.xaxis.set_major_locator(MaxNLocator(integer=True))
    ax.set_xlabel("d")
    ax.set_ylabel("dominance frequency")
    ax.legend(fontsize=8)
    ax.set_title(f"{key['model']} model, n={key['n']}")
    points = sum(len(line.get_xdata()) for line in ax.lines)
    _save(fig, path, fmt)
    report = FacetReport(key, len(group), points, path, ax.get_xscale(), ax.get_ylim())
    plt.close(fig)
    return report


def _facets(df: pd.DataFrame, spec: PlotSpec):
    """Yield (key, group, renderer) with validation done before any drawing."""
    if spec.kind == "fixed-count-panel":
        selected = df[df["g"].notna()]
        if selected.empty:
            raise ValueError("no rows with a generator count; nothing to panel")
        for (model, n), group in selected.groupby(["model", "n"], sort=True):
            yield {"model": model, "n": int(n)}, group, _render_fixed_count_facet
        return
    selected = df[df["p"].notna()]
    if selected.empty:
        raise ValueError(f"no rows with a probability value; nothing to draw for {spec.kind}")
    if spec.kind == "stacked-histogram" and not histogram_columns(selected):
        raise ValueError("stacked-histogram needs the h0..hN columns")
    renderer = (_render_frequency_facet if spec.kind == "frequency-curve"
                else _render_stacked_facet)
    for (model, n, d), group in selected.groupby(["model", "n", "d"], sort=True):
        yield {"model": model, "n": int(n), "d": int(d)}, group, renderer


def render(spec: PlotSpec) -> list[FacetReport]:
    """Draw every facet of the selected data; returns one report per file.

    Validation problems (missing columns, empty selection, filter values the
    data does not contain) raise ValueError before any file is written.
    """
    df = _apply_filters(load_rows(spec.input), spec)
    work = [(key, group, draw) for key, group, draw in _facets(df, spec)]
    reports = []
    with plt.rc_context(_STYLE):
        for key, group, draw in work:
            reports.append(draw(group, key, _facet_path(spec, key), spec.format))
    return reports
