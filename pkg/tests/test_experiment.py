import io
import json

import pytest

from dominant_ideals.experiment import (
    ExperimentConfig,
    ExperimentRow,
    csv_header,
    csv_row,
    legacy_row,
    run_experiment,
    write_experiment,
)


def small_basic_config(**overrides):
    base = dict(model="basic", n_values=(3,), degrees=(3,), sample_size=10,
                seed=42, probability_source="list", probabilities=(0.1, 0.5))
    base.update(overrides)
    return ExperimentConfig(**base)


def data_lines(text: str) -> list:
    return [
        l
        for l in text.splitlines()
        if l and not l.startswith("#") and not l.startswith("model,")
    ]


class TestConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            small_basic_config(sample_size=0)
        with pytest.raises(ValueError):
            small_basic_config(degrees=())
        with pytest.raises(ValueError):
            small_basic_config(probabilities=())
        with pytest.raises(ValueError):
            ExperimentConfig(model="fixed-count", n_values=(3,), degrees=(2,),
                             sample_size=5, seed=1)

    def test_json_round_trip(self):
        cfg = small_basic_config()
        assert ExperimentConfig.from_json_dict(cfg.to_json_dict()) == cfg


def test_rows_satisfy_invariants():
    res = run_experiment(small_basic_config())
    assert len(res.rows) == 2
    for row in res.rows:
        assert 0 <= row.dominant_count <= row.sample_size
        assert sum(row.numgens_histogram) == row.dominant_count
        assert len(row.numgens_histogram) == row.n + 1


def test_row_validation():
    with pytest.raises(ValueError):
        ExperimentRow("basic", 3, 3, 0.1, None, 10, 11, (0, 0, 0, 11), 1)
    with pytest.raises(ValueError):
        ExperimentRow("basic", 3, 3, 0.1, None, 10, 5, (0, 0, 0, 4), 1)


def test_rerun_is_byte_identical():
    cfg = ExperimentConfig(model="basic", n_values=(3,), degrees=(3, 4),
                           sample_size=25, seed=77)
    first, second = io.StringIO(), io.StringIO()
    run_experiment(cfg, first)
    run_experiment(cfg, second)
    assert data_lines(first.getvalue()) == data_lines(second.getvalue())
    # metadata carries the timestamp, data rows never do
    assert any(l.startswith("# generated:") for l in first.getvalue().splitlines())


def test_schedule_independence():
    cfg1 = small_basic_config(sample_size=30)
    cfg4 = small_basic_config(sample_size=30, threads=4)
    out1, out4 = io.StringIO(), io.StringIO()
    run_experiment(cfg1, out1)
    run_experiment(cfg4, out4)
    assert data_lines(out1.getvalue()) == data_lines(out4.getvalue())


def test_fixed_count_beyond_n_never_dominant():
    cfg = ExperimentConfig(model="fixed-count", n_values=(2, 3), degrees=(2, 3),
                           sample_size=40, seed=11, generator_counts=(2, 3, 4, 5))
    res = run_experiment(cfg)
    overfull = [r for r in res.rows if r.g > r.n]
    assert overfull
    assert all(r.dominant_count == 0 for r in overfull)


def test_csv_layout():
    cfg = ExperimentConfig(model="fixed-count", n_values=(2, 3), degrees=(2,),
                           sample_size=5, seed=9, generator_counts=(2,))
    assert csv_header(cfg) == "model,n,d,p,g,sample_size,dominant_count,h0,h1,h2,h3,seed"
    res = run_experiment(cfg)
    n2 = next(r for r in res.rows if r.n == 2)
    cells = csv_row(n2, cfg).split(",")
    assert cells[0] == "fixed-count"
    assert cells[3] == ""          # p not applicable
    assert cells[-2] == ""         # h3 padding for the n=2 row
    assert cells[-1] == "9"


def test_legacy_lines():
    row = ExperimentRow("basic", 3, 5, 0.125, None, 50, 42, (1, 2, 39, 0), 7)
    assert legacy_row(row) == "(5,0.125,42,[1,2,39,0])"
    fixed = ExperimentRow("fixed-count", 3, 4, None, 3, 1000, 361, (0, 0, 0, 361), 7)
    assert legacy_row(fixed) == "(3,3,4,361)"


def test_legacy_stream():
    out = io.StringIO()
    run_experiment(small_basic_config(legacy=True), out)
    lines = data_lines(out.getvalue())
    assert len(lines) == 2
    assert all(l.startswith("(3,") and l.endswith("])") for l in lines)


def test_jsonl_format():
    out = io.StringIO()
    run_experiment(small_basic_config(output_format="jsonl"), out)
    rows = [json.loads(l) for l in data_lines(out.getvalue())]
    assert [r["p"] for r in rows] == [0.1, 0.5]
    assert all(sum(r["histogram"]) == r["dominant_count"] for r in rows)


def test_skip_markers():
    # generator count beyond the degree slice
    cfg = ExperimentConfig(model="fixed-count", n_values=(3,), degrees=(2,),
                           sample_size=5, seed=1, generator_counts=(6, 7))
    out = io.StringIO()
    res = run_experiment(cfg, out)
    assert len(res.rows) == 1 and len(res.skipped) == 1
    markers = [l for l in out.getvalue().splitlines() if l.startswith("# skipped")]
    assert len(markers) == 1 and "g=7" in markers[0]


def test_pool_guard_skips_huge_points():
    cfg = ExperimentConfig(model="basic", n_values=(3,), degrees=(200,),
                           sample_size=5, seed=1, probability_source="list",
                           probabilities=(0.5,))
    res = run_experiment(cfg)
    assert res.rows == []
    assert len(res.skipped) == 1
    assert "guard" in res.skipped[0].skip_reason


def test_write_experiment(tmp_path):
    target = tmp_path / "sweep.csv"
    res = write_experiment(small_basic_config(), str(target))
    text = target.read_text()
    assert len(data_lines(text)) == len(res.rows) == 2
    assert text.splitlines()[-1].startswith("basic,3,3,0.5,")
