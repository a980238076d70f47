"""Batch plotting for dominance experiment CSVs."""

from .reader import REQUIRED_COLUMNS, histogram_columns, load_rows
from .render import FacetReport, LOG_SCALE_SPAN, render
from .spec import FORMATS, KINDS, PlotSpec

__version__ = "0.1.0"

__all__ = [
    "FORMATS",
    "FacetReport",
    "KINDS",
    "LOG_SCALE_SPAN",
    "PlotSpec",
    "REQUIRED_COLUMNS",
    "histogram_columns",
    "load_rows",
    "render",
]
