"""Command-line interface.

Exit codes: 0 success, 2 on any error.  The is-dominant subcommand
additionally uses 1 to report a false answer, so scripts can branch on the
result without parsing text.  The DOMINANT_IDEALS_SEED environment variable
supplies the default seed for sample and experiment runs.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import enumeration, formulas, primes
from .dominance import is_dominant_ideal
from .experiment import ExperimentConfig, run_experiment, write_experiment
from .models import ModelSpec, SeedSpec, sample as draw_sample
from .monomials import default_var_names, parse_ideal, render_ideal, render_monomial

SEED_ENV_VAR = "DOMINANT_IDEALS_SEED"


def _default_seed() -> int:
    return int(os.environ.get(SEED_ENV_VAR, "0"))


def _ideal_text(args) -> str:
    if getattr(args, "file", None):
        with open(args.file, encoding="utf-8") as fh:
            return fh.read()
    if args.ideal is None:
        raise ValueError("give the ideal inline or with --file")
    return args.ideal


def _read_ideal(args) -> tuple:
    return parse_ideal(_ideal_text(args))


def _display_names(text: str, n: int) -> tuple:
    """Echo the letters the input used; otherwise the default names."""
    letters = set(re.findall(r"[a-z]", text))
    if letters and not letters <= set("xyzw"):
        return tuple("abcdefghijklmnopqrstuvwxyz"[:n])
    return default_var_names(n)


def _int_list(text: str) -> tuple:
    """Accepts 3,4,5 and ranges like 3-15 (mixing allowed)."""
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if "-" in chunk[1:]:
            lo, hi = chunk.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif chunk:
            out.append(int(chunk))
    if not out:
        raise ValueError(f"no integers in {text!r}")
    return tuple(out)


def _lcm_tuple(text: str) -> tuple:
    m = tuple(int(x) for x in text.split(","))
    if not m or any(e < 0 for e in m):
        raise ValueError(f"bad lcm target {text!r}")
    return m


def _cmd_is_dominant(args) -> int:
    ideal = _read_ideal(args)
    answer = is_dominant_ideal(ideal)
    if args.json:
        print(json.dumps({"ideal": [list(g) for g in ideal], "dominant": answer}))
    else:
        print("true" if answer else "false")
    return 0 if answer else 1


def _cmd_enumerate_lcm(args) -> int:
    m = _lcm_tuple(args.lcm)
    names = default_var_names(len(m))
    count = 0
    for gens in enumeration.iter_dominant_with_lcm(m):
        if args.limit is not None and count >= args.limit:
            break
        if args.json:
            print(json.dumps([list(g) for g in gens]))
        else:
            print(render_ideal(gens, names))
        count += 1
    return 0


def _cmd_count(args) -> int:
    m = _lcm_tuple(args.lcm)
    report = formulas.compare_formula_vs_enumeration(m)
    if args.json:
        print(json.dumps(report))
        return 0
    if report["formula"] is not None:
        verdict = "agree" if report["agree"] else "DISAGREE"
        print(f"{report['formula']} (formula) / {report['enumeration']} (enumeration) {verdict}")
    else:
        print(f"{report['enumeration']} (enumeration)")
    return 0


def _cmd_formula(args) -> int:
    if args.symbolic or not 2 <= args.n <= 5:
        poly = formulas.symbolic_formula(args.n)
    else:
        poly = formulas.theorem_polynomial(args.n)
    print(poly.to_json() if args.json else poly.render())
    return 0


def _cmd_histogram(args) -> int:
    m = _lcm_tuple(args.lcm)
    if args.kind == "footprint":
        if args.json:
            print(enumeration.footprint_histogram_json(m))
            return 0
        records = enumeration.footprint_histogram(m)
        from .dominance import render_footprint_profile as render
    else:
        if args.json:
            print(enumeration.low_or_max_histogram_json(m))
            return 0
        records = enumeration.low_or_max_histogram(m)
        from .dominance import render_low_or_max_signature as render
    for rec in records:
        print(f"{rec.count:>8}  {render(rec.key)}")
    return 0


def _cmd_assoc_heights(args) -> int:
    text = _ideal_text(args)
    ideal = parse_ideal(text)
    heights = sorted(primes.associated_prime_heights(ideal))
    if args.json:
        out = {"heights": heights}
        if args.witnesses:
            out["witnesses"] = [
                primes.dominating_witness(ideal, k).to_json_dict() for k in heights
            ]
        if args.oracle:
            out["oracle"] = sorted(
                sorted(p) for p in primes.associated_primes_oracle(ideal)
            )
        print(json.dumps(out))
    else:
        print(" ".join(str(k) for k in heights) if heights else "none")
        if args.witnesses:
            names = _display_names(text, len(ideal[0]) if ideal else 0)
            for k in heights:
                w = primes.dominating_witness(ideal, k)
                gens_txt = ", ".join(render_monomial(g, names) for g in w.gens)
                vars_txt = ", ".join(names[i] for i in w.variables)
                print(
                    f"height {k}: gens [{gens_txt}] vars [{vars_txt}] "
                    f"annihilator {render_monomial(w.annihilator, names)}"
                )
        if args.oracle:
            oracle = sorted(sorted(p) for p in primes.associated_primes_oracle(ideal))
            print("oracle:", " ".join("{" + ",".join(map(str, p)) + "}" for p in oracle))
    return 0


def _cmd_pdim_max(args) -> int:
    ideal = _read_ideal(args)
    answer = primes.pdim_is_max(ideal)
    bound = primes.localization_pdim_bound(ideal)
    if args.json:
        print(json.dumps({"pdim_is_max": answer, "localization_bound": bound}))
    else:
        print("true" if answer else "false")
        if args.bound:
            print(f"localization bound: {bound if bound is not None else 'none'}")
    return 0


def _model_from_args(args) -> ModelSpec:
    if args.model == "basic":
        if args.p is None:
            raise ValueError("basic model needs --p")
        return ModelSpec.basic(args.n, args.degree, float(args.p))
    if args.model == "graded":
        if args.probs is None:
            raise ValueError("graded model needs --probs p1,...,pD")
        return ModelSpec.graded(args.n, args.degree,
                                tuple(float(x) for x in args.probs.split(",")))
    if args.gens is None:
        raise ValueError("fixed-count model needs --gens")
    return ModelSpec.single_degree_fixed_count(args.n, args.degree, args.gens)


def _cmd_sample(args) -> int:
    spec = _model_from_args(args)
    seed = args.seed if args.seed is not None else _default_seed()
    names = default_var_names(spec.n)
    for j in range(args.count):
        ideal = draw_sample(spec, SeedSpec(seed, args.stream + j))
        if args.json:
            print(json.dumps([list(g) for g in ideal]))
        else:
            print(render_ideal(ideal, names))
    return 0


def _cmd_experiment(args) -> int:
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            config = ExperimentConfig.from_json_dict(json.load(fh))
    else:
        if args.model is None:
            raise ValueError("give --config or at least --model")
        seed = args.seed if args.seed is not None else _default_seed()
        config = ExperimentConfig(
            model=args.model,
            n_values=_int_list(args.n),
            degrees=_int_list(args.degrees),
            sample_size=args.sample_size,
            seed=seed,
            probability_source="list" if args.probs else args.grid,
            probabilities=tuple(float(x) for x in args.probs.split(",")) if args.probs else None,
            generator_counts=_int_list(args.gens) if args.gens else None,
            output_format=args.format,
            legacy=args.legacy_format,
            threads=args.threads,
        )
    if args.output == "-":
        run_experiment(config, sys.stdout)
    else:
        result = write_experiment(config, args.output)
        print(f"{len(result.rows)} rows, {len(result.skipped)} skipped -> {args.output}",
              file=sys.stderr)
    return 0


def _add_ideal_arguments(sub):
    sub.add_argument("ideal", nargs="?", help="generators, e.g. \"x^2*y, x*z^3, y^2*z\"")
    sub.add_argument("--file", help="read the generators from a file instead")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dominant-ideals",
        description="Dominant monomial ideals: decision, enumeration, counting, sampling.",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("is-dominant", help="decide dominance; exit 0 true, 1 false")
    _add_ideal_arguments(s)
    s.set_defaults(func=_cmd_is_dominant)

    s = sub.add_parser("enumerate-lcm", help="all dominant ideals with the given lcm")
    s.add_argument("--lcm", required=True, help="exponents, e.g. 2,3,4")
    s.add_argument("--limit", type=int, help="stop after this many ideals")
    s.set_defaults(func=_cmd_enumerate_lcm)

    s = sub.add_parser("count", help="count dominant ideals with the given lcm")
    s.add_argument("--lcm", required=True)
    s.set_defaults(func=_cmd_count)

    s = sub.add_parser("formula", help="counting polynomial in m1..mn")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--symbolic", action="store_true",
                   help="regenerate from enumeration instead of the printed form")
    s.set_defaults(func=_cmd_formula)

    s = sub.add_parser("histogram", help="profile histogram over one lcm class")
    s.add_argument("--lcm", required=True)
    s.add_argument("--kind", choices=("footprint", "low-or-max"), default="footprint")
    s.set_defaults(func=_cmd_histogram)

    s = sub.add_parser("assoc-heights", help="heights of associated primes")
    _add_ideal_arguments(s)
    s.add_argument("--oracle", action="store_true", help="also run the divisor-scan oracle")
    s.add_argument("--witnesses", action="store_true", help="include witnesses in --json output")
    s.set_defaults(func=_cmd_assoc_heights)

    s = sub.add_parser("pdim-max", help="is the projective dimension maximal")
    _add_ideal_arguments(s)
    s.add_argument("--bound", action="store_true", help="also print the localization bound")
    s.set_defaults(func=_cmd_pdim_max)

    s = sub.add_parser("sample", help="draw random ideals")
    s.add_argument("--model", choices=("basic", "graded", "fixed-count"), required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--degree", type=int, required=True, help="max degree D (or the fixed degree)")
    s.add_argument("--p", type=float, help="inclusion probability (basic)")
    s.add_argument("--probs", help="per-degree probabilities p1,...,pD (graded)")
    s.add_argument("--gens", type=int, help="generator count (fixed-count)")
    s.add_argument("--count", type=int, default=1, help="how many ideals")
    s.add_argument("--seed", type=int)
    s.add_argument("--stream", type=int, default=0, help="first stream index")
    s.set_defaults(func=_cmd_sample)

    s = sub.add_parser("experiment", help="dominance-frequency sweep over a grid")
    s.add_argument("--config", help="JSON config file (overrides the flags)")
    s.add_argument("--model", choices=("basic", "graded", "fixed-count"))
    s.add_argument("--n", default="3", help="n values, e.g. 3 or 3-10")
    s.add_argument("--degrees", default="3-15", help="degree values, e.g. 3-15 or 2,4,6")
    s.add_argument("--grid", choices=("appendix-A", "appendix-B"), default="appendix-A",
                   help="probability grid family")
    s.add_argument("--probs", help="explicit probability list (overrides --grid)")
    s.add_argument("--gens", help="generator counts for fixed-count, e.g. 3-5")
    s.add_argument("--sample-size", type=int, default=50)
    s.add_argument("--seed", type=int)
    s.add_argument("--output", default="-", help="path or - for stdout")
    s.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    s.add_argument("--legacy-format", action="store_true",
                   help="tuple-per-line records instead of CSV")
    s.add_argument("--threads", type=int, default=1)
    s.set_defaults(func=_cmd_experiment)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        # downstream closed early (e.g. | head); not our error
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
