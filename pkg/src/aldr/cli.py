"""Command-line interface: ``aldr {sample,analyze,tree,bench}``.

Exit codes: 0 success, 2 malformed input, 3 outside the fixed-width
arithmetic regime, 4 invalid amplification rule, 1 anything else.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import analysis, bench
from .ddg import dump_table
from .errors import (
    AldrError,
    DomainError,
    InvalidMethodError,
    InvalidRuleError,
    OverflowRegimeError,
    WeightsError,
)
from .exactmath import WeightVector, normalize_weights
from .samplers import (
    CountingSource,
    OSEntropySource,
    SeededSource,
    aldr_preprocess,
    aldr_sample_many,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE = 2
EXIT_OVERFLOW = 3
EXIT_RULE = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_weights_text(text: str) -> list[int]:
    """Integers separated by commas or whitespace; ``#`` starts a comment."""
    tokens = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        tokens.extend(t for t in re.split(r"[,\s]+", line) if t)
    if not tokens:
        raise WeightsError("no weights given")
    out = []
    for tok in tokens:
        if not re.fullmatch(r"[+-]?\d+", tok):
            raise WeightsError(f"weight {tok!r} is not an integer")
        v = int(tok)
        if v <= 0:
            raise WeightsError(f"weight {v} is not positive")
        out.append(v)
    return out


def load_weights(arg: str) -> WeightVector:
    """Inline comma list, or the path of a whitespace-separated weights file."""
    path = Path(arg)
    if path.is_file():
        text = path.read_text()
    else:
        text = arg
    return normalize_weights(parse_weights_text(text))


def _parse_k_range(text: str, w: WeightVector) -> range:
    match = re.fullmatch(r"\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*", text)
    if not match:
        raise UsageError(f"bad --k-range {text!r}; expected A..B")
    lo = int(match.group(1))
    hi = int(match.group(2)) if match.group(2) else lo
    if hi < lo:
        raise UsageError(f"empty --k-range {text!r}")
    return range(lo, hi + 1)


def _fmt_fraction(x) -> str:
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# Subcommands


def cmd_sample(args, out, err) -> int:
    w = load_weights(args.weights)
    sampler = aldr_preprocess(w, args.rule)
    source = OSEntropySource() if args.os_entropy else SeededSource(args.seed)
    counter = CountingSource(source)
    labels = aldr_sample_many(sampler, counter, args.count, args.backend)
    if args.count:
        out.write("\n".join(map(str, labels.tolist())) + "\n")
    if args.stats:
        stats = {
            "flips": counter.flips,
            "flips_per_sample": counter.flips / args.count if args.count else 0.0,
            "K": sampler.K,
            "c": sampler.c,
            "A0": sampler.reject_weight,
        }
        out.write(json.dumps(stats) + "\n")
    return EXIT_OK


def cmd_analyze(args, out, err) -> int:
    w = load_weights(args.weights)
    Ks = _parse_k_range(args.k_range, w) if args.k_range else range(w.k, 2 * w.k + 1)
    reports = analysis.sweep_depths(w, Ks, args.precision)
    out.write(analysis.tsv_header() + "\n")
    for rep in reports:
        out.write(analysis.tsv_row(rep) + "\n")
    ky = analysis.ky_cost_exact(w)
    ky_toll = analysis.ky_toll_interval(w, args.precision)
    out.write(f"# ky_cost\t{_fmt_fraction(ky)}\t{analysis.format_decimal(ky)}\n")
    out.write(
        f"# ky_toll\t{analysis.format_decimal(ky_toll.lo, rounding='ROUND_FLOOR')}"
        f"\t{analysis.format_decimal(ky_toll.hi, rounding='ROUND_CEILING')}\n"
    )
    best = analysis.minimal_optimal_depth(w)
    if best is None:
        out.write("# minimal_optimal_depth\tnone\tno entropy-optimal ALDR depth\n")
    else:
        out.write(f"# minimal_optimal_depth\t{best[0]}\n")
    return EXIT_OK


def cmd_tree(args, out, err) -> int:
    w = load_weights(args.weights)
    rule = f"K={args.depth}" if args.depth is not None else args.rule
    sampler = aldr_preprocess(w, rule)
    out.write(dump_table(sampler.table))
    return EXIT_OK


def cmd_bench(args, out, err) -> int:
    methods = [m for m in args.methods.split(",") if m.strip()]
    for m in methods:
        bench.parse_method(m)
    if args.corpus:
        if args.corpus != "desk":
            raise UsageError(f"unknown corpus {args.corpus!r}; only 'desk' is built in")
        corpus = bench.desk_corpus(args.seed)
    else:
        w = load_weights(args.weights)
        corpus = [(args.weights, list(w.weights))]
    grouped, summary = bench.compare_suite(
        corpus, args.samples, args.seed, methods, timing_runs=args.timing_runs, backend=args.backend
    )
    reports = [r for reps in grouped for r in reps]
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    bench.write_tsv(reports, out_dir / f"{args.prefix}.tsv")
    bench.write_json(reports, out_dir / f"{args.prefix}.json", summary)
    for r in reports:
        exact = float(r.exact_expected_flips) if r.exact_expected_flips is not None else float("nan")
        chi = {True: "pass", False: "FAIL", None: "n/a"}[r.chi_pass]
        out.write(
            f"{r.label}\t{r.method}\tmean_flips={r.mean_flips:.6f}\texact={exact:.6f}"
            f"\tns/sample={r.ns_per_sample:.1f}\tchi2={chi}\n"
        )
    out.write(f"# alias_bound\t{'pass' if summary.alias_bound_holds else 'FAIL'}\n")
    out.write(
        f"# low_entropy_regime\t{summary.low_entropy_cases} cases"
        f"\t{'pass' if summary.low_entropy_aldr_wins else 'FAIL'}\n"
    )
    for v in summary.violations:
        err.write(f"aldr: warning: {v}\n")
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="aldr", description="Exact loaded-dice sampling, cost analysis and benchmarks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("sample", help="draw labels")
    s.add_argument("-w", "--weights", required=True, help="comma list like 4,7,8 or a weights file")
    s.add_argument("--rule", default="2k", help="fldr, 2k (default) or K=<int>")
    s.add_argument("-n", "--count", type=int, default=1)
    ent = s.add_mutually_exclusive_group(required=True)
    ent.add_argument("--seed", type=int)
    ent.add_argument("--os-entropy", action="store_true")
    s.add_argument("--stats", action="store_true", help="append a JSON line with flip statistics")
    s.add_argument("--backend", choices=("numba", "python"))
    s.set_defaults(func=cmd_sample)

    a = sub.add_parser("analyze", help="exact costs and tolls over a depth range")
    a.add_argument("-w", "--weights", required=True)
    a.add_argument("--k-range", help="A..B (default k..2k)")
    a.add_argument("--precision", type=int, default=128, help="entropy enclosure bits")
    a.set_defaults(func=cmd_analyze)

    t = sub.add_parser("tree", help="dump the leaf table")
    t.add_argument("-w", "--weights", required=True)
    t.add_argument("--depth", type=int, help="tree depth K (overrides --rule)")
    t.add_argument("--rule", default="2k")
    t.set_defaults(func=cmd_tree)

    b = sub.add_parser("bench", help="measure flips, timing and goodness of fit")
    src = b.add_mutually_exclusive_group(required=True)
    src.add_argument("--corpus", help="built-in corpus name ('desk')")
    src.add_argument("-w", "--weights")
    b.add_argument("-n", "--samples", type=int, default=10**5)
    b.add_argument("--methods", default="aldr,alias", help="comma list of aldr, aldr(<rule>), fldr, alias")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--out-dir", default=".")
    b.add_argument("--prefix", default="bench")
    b.add_argument("--timing-runs", type=int, default=bench.TIMING_RUNS)
    b.add_argument("--backend", choices=("numba", "python"))
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "count", 0) is not None and getattr(args, "count", 0) < 0:
            raise UsageError("--count must be nonnegative")
        if getattr(args, "samples", 1) < 1:
            raise UsageError("--samples must be positive")
        if getattr(args, "precision", 1) < 1:
            raise UsageError("--precision must be positive")
        return args.func(args, out, err)
    except UsageError as exc:
        code, msg = EXIT_PARSE, str(exc)
    except (WeightsError, InvalidMethodError, DomainError) as exc:
        code, msg = EXIT_PARSE, str(exc)
    except OverflowRegimeError as exc:
        code, msg = EXIT_OVERFLOW, str(exc)
    except InvalidRuleError as exc:
        code, msg = EXIT_RULE, str(exc)
    except AldrError as exc:
        code, msg = EXIT_FAILURE, str(exc)
    except (OSError, RuntimeError) as exc:
        code, msg = EXIT_FAILURE, str(exc)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    err.write(f"aldr: error: {msg}\n".replace("\n", " ").rstrip() + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
