"""Dominance-frequency sweeps over parameter grids, with reproducible output.

A sweep walks grid points (model, n, d, p or g), draws sample_size random
ideals per point on dedicated RNG substreams, and records how many samples
were dominant together with a histogram of their minimal generator counts.
Rows append incrementally so a crash loses at most the point in flight.

The CSV schema is fixed: model,n,d,p,g,sample_size,dominant_count,
h0..h{max n},seed.  Columns that do not apply to a model stay empty, and
every non-data line starts with "#" (metadata, including the timestamp,
and skipped-point markers), so data rows are byte-identical across reruns
of one config.
"""
from __future__ import annotations

import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone

from .dominance import is_dominant_ideal
from .models import (
    ModelSpec,
    SeedSpec,
    probability_grid_basic,
    probability_grid_graded,
    sample,
)
from .monomials import count_monomials

MODEL_VARIANTS = ("basic", "graded", "fixed-count")
GRID_SOURCES = ("appendix-A", "appendix-B", "list")

# Largest candidate pool a single grid point may draw from; bigger points
# are skipped with a marker instead of exhausting memory.  Size-based so
# that reruns skip identically.
POINT_POOL_GUARD = 500_000


@dataclass(frozen=True)
class ExperimentConfig:
    model: str
    n_values: tuple
    degrees: tuple
    sample_size: int
    seed: int
    probability_source: str = "appendix-A"
    probabilities: tuple = None
    generator_counts: tuple = None
    output_format: str = "csv"
    legacy: bool = False
    threads: int = 1

    def __post_init__(self):
        if self.model not in MODEL_VARIANTS:
            raise ValueError(f"unknown model {self.model!r}")
        object.__setattr__(self, "n_values", tuple(int(n) for n in self.n_values))
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if not self.n_values or not self.degrees:
            raise ValueError("grid must cover at least one n and one degree")
        if self.sample_size < 1:
            raise ValueError("sample_size must be >= 1")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must fit in 64 unsigned bits")
        if self.output_format not in ("csv", "jsonl"):
            raise ValueError(f"unknown output format {self.output_format!r}")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")
        if self.model == "fixed-count":
            if not self.generator_counts:
                raise ValueError("fixed-count sweeps need generator_counts")
            object.__setattr__(
                self, "generator_counts",
                tuple(int(g) for g in self.generator_counts),
            )
        else:
            if self.probability_source not in GRID_SOURCES:
                raise ValueError(f"unknown probability source {self.probability_source!r}")
            if self.probability_source == "list":
                if not self.probabilities:
                    raise ValueError("explicit probability list is empty")
                object.__setattr__(
                    self, "probabilities",
                    tuple(float(p) for p in self.probabilities),
                )

    @property
    def max_n(self) -> int:
        return max(self.n_values)

    def to_json_dict(self) -> dict:
        return {
            "model": self.model,
            "n_values": list(self.n_values),
            "degrees": list(self.degrees),
            "sample_size": self.sample_size,
            "seed": self.seed,
            "probability_source": self.probability_source,
            "probabilities": list(self.probabilities) if self.probabilities else None,
            "generator_counts": list(self.generator_counts) if self.generator_counts else None,
            "output_format": self.output_format,
            "legacy": self.legacy,
            "threads": self.threads,
        }

    @staticmethod
    def from_json_dict(data: dict) -> "ExperimentConfig":
        return ExperimentConfig(
            model=data["model"],
            n_values=tuple(data["n_values"]),
            degrees=tuple(data["degrees"]),
            sample_size=int(data["sample_size"]),
            seed=int(data["seed"]),
            probability_source=data.get("probability_source", "appendix-A"),
            probabilities=tuple(data["probabilities"]) if data.get("probabilities") else None,
            generator_counts=tuple(data["generator_counts"]) if data.get("generator_counts") else None,
            output_format=data.get("output_format", "csv"),
            legacy=bool(data.get("legacy", False)),
            threads=int(data.get("threads", 1)),
        )


@dataclass(frozen=True)
class ExperimentRow:
    model: str
    n: int
    d: int
    p: float
    g: int
    sample_size: int
    dominant_count: int
    numgens_histogram: tuple
    wall_seed: int

    def __post_init__(self):
        if not 0 <= self.dominant_count <= self.sample_size:
            raise ValueError("dominant_count outside 0..sample_size")
        if len(self.numgens_histogram) != self.n + 1:
            raise ValueError("histogram must have n+1 entries")
        if sum(self.numgens_histogram) != self.dominant_count:
            raise ValueError("histogram does not sum to dominant_count")

    def to_json_dict(self) -> dict:
        return {
            "model": self.model,
            "n": self.n,
            "d": self.d,
            "p": self.p,
            "g": self.g,
            "sample_size": self.sample_size,
            "dominant_count": self.dominant_count,
            "histogram": list(self.numgens_histogram),
            "seed": self.wall_seed,
        }


@dataclass(frozen=True)
class GridPoint:
    index: int
    spec: ModelSpec
    d: int
    p: float = None
    g: int = None
    skip_reason: str = None


@dataclass
class ExperimentResult:
    rows: list = field(default_factory=list)
    skipped: list = field(default_factory=list)


def _grid_points(config: ExperimentConfig):
    """Every grid point in deterministic sweep order, oversized ones marked."""
    points = []

    def add(spec_maker, n, d, p=None, g=None):
        idx = len(points)
        try:
            spec = spec_maker()
            pool = count_monomials(n, d, "up-to")
            if pool > POINT_POOL_GUARD:
                points.append(GridPoint(idx, None, d, p, g,
                                        f"candidate pool {pool} exceeds guard"))
                return
        except ValueError as exc:
            points.append(GridPoint(idx, None, d, p, g, str(exc)))
            return
        points.append(GridPoint(idx, spec, d, p, g))

    for n in config.n_values:
        for d in config.degrees:
            if config.model == "fixed-count":
                for g in config.generator_counts:
                    add(lambda n=n, d=d, g=g: ModelSpec.single_degree_fixed_count(n, d, g),
                        n, d, g=g)
            elif config.model == "basic":
                for p in _probabilities(config, n, d):
                    add(lambda n=n, d=d, p=p: ModelSpec.basic(n, d, p), n, d, p=p)
            else:
                for p in _probabilities(config, n, d):
                    add(lambda n=n, d=d, p=p: ModelSpec.graded(
                        n, d, (0.0,) * (d - 1) + (p,)), n, d, p=p)
    return points


def _probabilities(config: ExperimentConfig, n: int, d: int):
    if config.probability_source == "appendix-A":
        return probability_grid_basic(n, d)
    if config.probability_source == "appendix-B":
        return probability_grid_graded(n, d)
    return config.probabilities


def evaluate_point(point: GridPoint, config: ExperimentConfig) -> ExperimentRow:
    """Draw the point's samples on its reserved streams and tally dominance."""
    spec = point.spec
    base = point.index * config.sample_size
    dominant = 0
    histogram = [0] * (spec.n + 1)
    for j in range(config.sample_size):
        ideal = sample(spec, SeedSpec(config.seed, base + j))
        if is_dominant_ideal(ideal):
            dominant += 1
            histogram[len(ideal)] += 1
    return ExperimentRow(
        model=spec.variant,
        n=spec.n,
        d=point.d,
        p=point.p,
        g=point.g,
        sample_size=config.sample_size,
        dominant_count=dominant,
        numgens_histogram=tuple(histogram),
        wall_seed=config.seed,
    )


def csv_header(config: ExperimentConfig) -> str:
    hcols = ",".join(f"h{k}" for k in range(config.max_n + 1))
    return f"model,n,d,p,g,sample_size,dominant_count,{hcols},seed"


def _fmt(value) -> str:
    return "" if value is None else repr(value) if isinstance(value, float) else str(value)


def csv_row(row: ExperimentRow, config: ExperimentConfig) -> str:
    hist = list(row.numgens_histogram) + [""] * (config.max_n - row.n)
    cells = [row.model, row.n, row.d, row.p, row.g, row.sample_size,
             row.dominant_count, *hist, row.wall_seed]
    return ",".join(_fmt(c) for c in cells)


def legacy_row(row: ExperimentRow) -> str:
    """Tuple-per-line records matching the published sweep outputs."""
    if row.model == "fixed-count":
        return f"({row.n},{row.g},{row.d},{row.dominant_count})"
    hist = ",".join(str(h) for h in row.numgens_histogram)
    return f"({row.d},{_fmt(row.p)},{row.dominant_count},[{hist}])"


def _skip_marker(point: GridPoint, config: ExperimentConfig) -> str:
    parts = [f"model={config.model}", f"d={point.d}"]
    if point.p is not None:
        parts.append(f"p={point.p!r}")
    if point.g is not None:
        parts.append(f"g={point.g}")
    return f"# skipped {' '.join(parts)}: {point.skip_reason}"


def run_experiment(config: ExperimentConfig, out=None) -> ExperimentResult:
    """Run the whole sweep, streaming lines to `out` as points finish.

    Points evaluate in a worker pool sized by config.threads; per-sample
    streams make the outcome schedule independent, and the single writer
    here keeps output order equal to grid order.
    """
    points = _grid_points(config)
    result = ExperimentResult()

    def emit(line: str):
        if out is not None:
            out.write(line + "\n")
            out.flush()

    if out is not None and not config.legacy:
        if config.output_format == "csv":
            emit("# dominance sweep")
            emit(f"# config: {json.dumps(config.to_json_dict())}")
            emit(f"# generated: {datetime.now(timezone.utc).isoformat()}")
            emit(csv_header(config))

    def work(point: GridPoint):
        if point.skip_reason is not None:
            return point
        return evaluate_point(point, config)

    with ThreadPoolExecutor(max_workers=config.threads) as pool:
        for outcome in pool.map(work, points):
            if isinstance(outcome, GridPoint):
                result.skipped.append(outcome)
                emit(_skip_marker(outcome, config))
                continue
            result.rows.append(outcome)
            if config.legacy:
                emit(legacy_row(outcome))
            elif config.output_format == "csv":
                emit(csv_row(outcome, config))
            else:
                emit(json.dumps(outcome.to_json_dict()))
    return result


def write_experiment(config: ExperimentConfig, path) -> ExperimentResult:
    if path == "-":
        return run_experiment(config, sys.stdout)
    with open(path, "w", encoding="utf-8") as fh:
        return run_experiment(config, fh)
