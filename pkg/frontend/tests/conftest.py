"""Builders for experiment-style CSV fixtures.

The frontend's contract with the experiment harness is its CSV file, so the
fixtures write that format directly: "#" comment lines, the header, then one
row per grid point, with h columns padded out to the widest n in the file.
"""
from __future__ import annotations

COMMENTS = (
    "# dominance sweep",
    '# config: {"model": "basic"}',
    "# generated: 2026-08-25T00:00:00+00:00",
)

COLUMNS = ("model", "n", "d", "p", "g", "sample_size", "dominant_count")


def row(model, n, d, p=None, g=None, sample_size=50, hist=(), seed=99):
    hist = tuple(hist)
    assert len(hist) == n + 1
    return {
        "model": model, "n": n, "d": d, "p": p, "g": g,
        "sample_size": sample_size, "dominant_count": sum(hist),
        "hist": hist, "seed": seed,
    }


def csv_text(rows, comments=True) -> str:
    max_n = max(r["n"] for r in rows)
    lines = list(COMMENTS) if comments else []
    header = list(COLUMNS) + [f"h{k}" for k in range(max_n + 1)] + ["seed"]
    lines.append(",".join(header))
    for r in rows:
        hist = list(r["hist"]) + [""] * (max_n - r["n"])
        cells = [
            r["model"], r["n"], r["d"],
            "" if r["p"] is None else r["p"],
            "" if r["g"] is None else r["g"],
            r["sample_size"], r["dominant_count"], *hist, r["seed"],
        ]
        lines.append(",".join(str(c) for c in cells))
    return "\n".join(lines) + "\n"


def write_csv(path, rows, comments=True) -> str:
    path.write_text(csv_text(rows, comments=comments), encoding="utf-8")
    return str(path)


def tenths_sweep(model="basic", n=3, degrees=(3, 4), sample_size=50):
    """One facet per degree over p = 0.1..0.9, with a plausible histogram."""
    out = []
    for d in degrees:
        for i in range(1, 10):
            p = i / 10
            dom = min(sample_size, int(sample_size * (0.3 + 0.07 * i)))
            hist = [0] * (n + 1)
            hist[n] = dom
            if dom >= 3:
                hist[n] -= 3
                hist[0] += 1
                hist[n - 1] += 2
            out.append(row(model, n, d, p=p, sample_size=sample_size, hist=hist))
    return out
