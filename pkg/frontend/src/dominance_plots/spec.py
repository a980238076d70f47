"""Plot request description and its validation."""
from __future__ import annotations

from dataclasses import dataclass

KINDS = ("frequency-curve", "stacked-histogram", "fixed-count-panel")
FORMATS = ("png", "svg")


@dataclass(frozen=True)
class PlotSpec:
    """One batch plotting request.

    input is a CSV written by the dominance experiment harness.  kind picks
    the figure family.  output is a path template: every facet gets its own
    file, named by inserting the facet key before the extension.  models,
    n_values and degrees restrict which facets are drawn; None means all
    values present in the data.  Requested values that the data does not
    contain are an error, not an empty plot.
    """

    input: str
    kind: str
    output: str
    format: str = "png"
    models: tuple | None = None
    n_values: tuple | None = None
    degrees: tuple | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {', '.join(KINDS)}, got {self.kind!r}")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {', '.join(FORMATS)}, got {self.format!r}")
        if not self.input:
            raise ValueError("input CSV path is required")
        if not self.output:
            raise ValueError("output path is required")
        for name in ("models", "n_values", "degrees"):
            value = getattr(self, name)
            if value is not None:
                object.__setattr__(self, name, tuple(value))
                if not value:
                    raise ValueError(f"{name} filter is empty; use None for no filter")
        if self.n_values is not None and any(n < 1 for n in self.n_values):
            raise ValueError("n_values must be positive")
        if self.degrees is not None and any(d < 1 for d in self.degrees):
            raise ValueError("degrees must be positive")
