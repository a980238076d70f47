"""Command line entry point.

Exit codes: 0 success, 2 on any error, including an audit mismatch.
"""
from __future__ import annotations

import argparse
import sys

from .render import render
from .spec import FORMATS, KINDS, PlotSpec


def _int_list(text: str) -> tuple:
    """Accepts 3,4,5 and ranges like 3-15 (mixing allowed)."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part[1:]:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    if not out:
        raise ValueError(f"empty list: {text!r}")
    return tuple(out)


def _str_list(text: str) -> tuple:
    out = tuple(p.strip() for p in text.split(",") if p.strip())
    if not out:
        raise ValueError(f"empty list: {text!r}")
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dominance-plots",
        description="Render figures from a dominance experiment CSV, one image per facet.",
    )
    parser.add_argument("--input", required=True, help="experiment CSV path")
    parser.add_argument("--kind", required=True, choices=KINDS)
    parser.add_argument("--out", required=True,
                        help="output path template; the facet key is inserted before the extension")
    parser.add_argument("--format", choices=FORMATS,
                        help="image format (default: from the --out extension, else png)")
    parser.add_argument("--model", type=_str_list, help="model filter, e.g. basic or basic,graded")
    parser.add_argument("--n", type=_int_list, help="variable counts to keep, e.g. 3 or 2-4")
    parser.add_argument("--d", type=_int_list, help="degrees to keep, e.g. 3-15 or 4,8")
    parser.add_argument("--audit", action="store_true",
                        help="print data-row vs plotted-point counts per facet and fail on mismatch")
    return parser


def _spec_from_args(args) -> PlotSpec:
    fmt = args.format
    if fmt is None:
        fmt = "svg" if args.out.lower().endswith(".svg") else "png"
    return PlotSpec(
        input=args.input,
        kind=args.kind,
        output=args.out,
        format=fmt,
        models=args.model,
        n_values=args.n,
        degrees=args.d,
    )


def _facet_label(key: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in key.items())


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        reports = render(_spec_from_args(args))
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for report in reports:
        print(f"wrote {report.path}")
    if args.audit:
        clean = True
        for report in reports:
            print(f"audit {_facet_label(report.key)}: rows={report.rows} points={report.points}")
            clean = clean and report.complete
        print("audit: OK" if clean else "audit: MISMATCH")
        if not clean:
            return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
