"""Empirical validation and timing of the samplers."""

from __future__ import annotations

import json
import math
import statistics
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from . import _kernels
from ._chi2_table import ALPHA, MAX_DF, QUANTILES
from .analysis import expected_cost_exact
from .errors import InvalidMethodError, UndersampledError
from .exactmath import WeightVector, entropy_interval, normalize_weights
from .samplers import (
    SeededSource,
    aldr_preprocess,
    aldr_sample_many,
    alias_preprocess,
    alias_sample_many,
    parse_rule,
)

SCHEMA = "aldr-bench/1"
SIGNIFICANCE = ALPHA
MIN_SAMPLES_PER_OUTCOME = 50
TIMING_RUNS = 5

# standard normal upper quantile at 1e-3, for the Wilson-Hilferty tail
_Z_UPPER = 3.090232306167813


# ---------------------------------------------------------------------------
# Chi-square


@dataclass(frozen=True)
class ChiSquareResult:
    statistic: float
    df: int
    critical: float
    passed: bool


def chi_square_critical(df: int) -> float:
    """Upper ``SIGNIFICANCE`` quantile of chi-square with ``df`` degrees of freedom."""
    if df < 1:
        return 0.0
    if df <= MAX_DF:
        return QUANTILES[df - 1]
    h = 2.0 / (9.0 * df)
    return df * (1.0 - h + _Z_UPPER * math.sqrt(h)) ** 3


def chi_square(histogram: Sequence[int], weights) -> ChiSquareResult:
    """Pearson test of label counts ``histogram[i-1]`` against ``a_i/m``."""
    w = weights if isinstance(weights, WeightVector) else normalize_weights(weights)
    counts = np.asarray(histogram, dtype=np.int64)
    if counts.shape != (w.n,):
        raise ValueError(f"histogram has {counts.size} bins, expected {w.n}")
    N = int(counts.sum())
    if N < MIN_SAMPLES_PER_OUTCOME * w.n:
        raise UndersampledError(f"{N} samples is below {MIN_SAMPLES_PER_OUTCOME} per outcome for n={w.n}")
    expected = N * np.asarray(w.weights, dtype=np.float64) / w.m
    stat = float(np.sum((counts - expected) ** 2 / expected))
    df = w.n - 1
    crit = chi_square_critical(df)
    return ChiSquareResult(stat, df, crit, df == 0 or stat <= crit)


def histogram(labels: np.ndarray, n: int) -> np.ndarray:
    return np.bincount(labels, minlength=n + 1)[1:]


# ---------------------------------------------------------------------------
# Methods


@dataclass(frozen=True)
class Method:
    name: str
    kind: str  # "aldr" or "alias"
    rule: object = None

    def preprocess(self, weights: WeightVector):
        if self.kind == "alias":
            return alias_preprocess(weights)
        return aldr_preprocess(weights, self.rule)

    def run(self, sampler, source, count, backend=None):
        fn = alias_sample_many if self.kind == "alias" else aldr_sample_many
        return fn(sampler, source, count, backend, return_flips=True)

    def exact_cost(self, sampler) -> Fraction:
        if self.kind == "alias":
            return sampler.expected_cost()
        return expected_cost_exact(sampler.weights, sampler.K)


def parse_method(name: str) -> Method:
    """``alias``, ``fldr``, ``aldr`` (depth 2k) or ``aldr(<rule>)`` e.g. ``aldr(K=20)``."""
    text = name.strip()
    low = text.lower()
    if low == "alias":
        return Method("alias", "alias")
    if low == "fldr":
        return Method("fldr", "aldr", "fldr")
    if low == "aldr":
        return Method("aldr", "aldr", "2k")
    if low.startswith("aldr(") and low.endswith(")"):
        rule = text[5:-1]
        try:
            parse_rule(rule)
        except ValueError as exc:
            raise InvalidMethodError(str(exc)) from exc
        return Method(f"aldr({rule})", "aldr", rule)
    raise InvalidMethodError(f"unknown method {name!r}; expected aldr, aldr(<rule>), fldr or alias")


# ---------------------------------------------------------------------------
# Measurement


@dataclass
class BenchReport:
    method: str
    n: int
    m: int
    samples: int
    mean_flips: float
    flips_sd: float
    exact_expected_flips: Fraction | None
    entropy: float
    ns_per_sample: float
    preprocess_ns: float
    chi_square: float | None
    chi_df: int | None
    chi_pass: bool | None
    seed: int | None
    backend: str
    label: str = ""
    histogram: list[int] = field(default_factory=list, repr=False)

    @property
    def stderr(self) -> float:
        return self.flips_sd / math.sqrt(self.samples)

    def within_sigma(self, value, k: float = 3.0) -> bool:
        """Mean flips within ``k`` standard errors of ``value``."""
        return abs(self.mean_flips - float(value)) <= k * self.stderr

    def to_dict(self) -> dict:
        d = asdict(self)
        e = self.exact_expected_flips
        d["exact_expected_flips"] = None if e is None else f"{e.numerator}/{e.denominator}"
        d["exact_expected_flips_decimal"] = None if e is None else float(e)
        # strict JSON has no NaN
        return {k: None if isinstance(v, float) and not math.isfinite(v) else v for k, v in d.items()}


def _median_ns(fn: Callable[[], object], runs: int) -> float:
    times = []
    for _ in range(max(1, runs)):
        t0 = time.perf_counter_ns()
        fn()
        times.append(time.perf_counter_ns() - t0)
    return float(statistics.median(times))


def measure(
    method,
    weights,
    N: int,
    source=None,
    seed: int | None = None,
    backend: str | None = None,
    timing_runs: int = TIMING_RUNS,
    label: str = "",
) -> BenchReport:
    """Sample ``N`` labels, then report flip statistics, timing and a chi-square verdict.

    Statistics come from one pass over ``source`` (default: a
    :class:`SeededSource` for ``seed``).  Timing is the median of
    ``timing_runs`` further passes on fresh copies of the same stream,
    after a warm-up pass.
    """
    if N < 1:
        raise ValueError("N must be at least 1")
    meth = method if isinstance(method, Method) else parse_method(method)
    w = weights if isinstance(weights, WeightVector) else normalize_weights(weights)
    if source is None:
        source = SeededSource(0 if seed is None else seed)
    if isinstance(source, SeededSource) and seed is None:
        seed = source.seed

    pre_ns = _median_ns(lambda: meth.preprocess(w), timing_runs)
    sampler = meth.preprocess(w)
    be_name = _kernels.get_backend(backend).name

    labels, flips = meth.run(sampler, source, N, backend)
    hist = histogram(labels, w.n)
    try:
        chi = chi_square(hist, w)
    except UndersampledError:
        chi = None

    ns = float("nan")
    if isinstance(source, SeededSource) and timing_runs > 0:
        start = source.position - int(flips.sum())
        meth.run(sampler, SeededSource(source.seed, start), min(N, 1000), backend)  # warm-up
        ns = _median_ns(lambda: meth.run(sampler, SeededSource(source.seed, start), N, backend), timing_runs) / N

    return BenchReport(
        method=meth.name,
        n=w.n,
        m=w.m,
        samples=N,
        mean_flips=float(flips.mean()),
        flips_sd=float(flips.std(ddof=1)) if N > 1 else 0.0,
        exact_expected_flips=meth.exact_cost(sampler),
        entropy=float(entropy_interval(w, 64).mid),
        ns_per_sample=ns,
        preprocess_ns=pre_ns,
        chi_square=None if chi is None else chi.statistic,
        chi_df=None if chi is None else chi.df,
        chi_pass=None if chi is None else chi.passed,
        seed=seed,
        backend=be_name,
        label=label,
        histogram=[int(x) for x in hist],
    )


# ---------------------------------------------------------------------------
# Desk-scale corpus and suite


def derive_seed(seed: int, *parts: int) -> int:
    """Deterministic 64-bit sub-seed for a corpus cell."""
    x = seed & _kernels.MASK64
    for p in parts:
        x = _kernels.splitmix_block(x, p)
    return x


CORPUS_NS = (2, 4, 16, 64, 256, 1024)
CORPUS_MAX_M = 10**5


def _geometric(n: int, ratio: Fraction) -> list[int]:
    # increasing powers of ratio, truncated so the sum stays below the m cap
    vals, x = [], Fraction(1)
    for _ in range(n):
        vals.append(max(1, int(x)))
        x *= ratio
    while sum(vals) > CORPUS_MAX_M:
        vals = [max(1, v // 2) for v in vals]
    return vals


def desk_corpus(seed: int = 0) -> list[tuple[str, list[int]]]:
    """Sixty distributions: ten weight shapes for each ``n`` in :data:`CORPUS_NS`."""
    rng = np.random.default_rng(seed)
    out = []
    for n in CORPUS_NS:
        cap = CORPUS_MAX_M // n
        for j in range(3):
            base = max(1, min(1000, int(cap / 1.25)))
            ws = rng.integers(base, base + base // 8 + 1, size=n)
            out.append((f"uniformish-n{n}-{j}", [int(x) for x in ws]))
        out.append((f"geometric2-n{n}", _geometric(n, Fraction(2))))
        out.append((f"geometric1.5-n{n}", _geometric(n, Fraction(3, 2))))
        for j, spike in enumerate((1000, 20000)):
            spike = min(spike, (CORPUS_MAX_M - n) // 2)
            ws = [spike, spike] + [1] * (n - 2)
            out.append((f"twospike{spike}-n{n}", ws[:n]))
        for j in range(3):
            ws = rng.integers(1, cap + 1, size=n)
            out.append((f"random-n{n}-{j}", [int(x) for x in ws]))
    return out


@dataclass
class SuiteSummary:
    distributions: int
    alias_bound_holds: bool
    low_entropy_cases: int
    low_entropy_aldr_wins: bool
    violations: list[str]


def compare_suite(
    corpus=None,
    N: int = 10**5,
    seed: int = 0,
    methods: Sequence[str] = ("aldr", "alias"),
    workers: int | None = None,
    timing_runs: int = TIMING_RUNS,
    backend: str | None = None,
) -> tuple[list[tuple[BenchReport, ...]], SuiteSummary]:
    """Run every method on every distribution, one thread per cell.

    Reports come back grouped per distribution in corpus order.  The
    summary checks the alias bound ``mean <= ceil(log2 n) + 3`` and, in the
    low-entropy regime ``H + 2 <= ceil(log2 n)``, that ALDR is no worse
    than alias up to three combined standard errors.
    """
    if corpus is None:
        corpus = desk_corpus(seed)
    parsed = [parse_method(m) for m in methods]
    cells = [(i, j, name, ws) for i, (name, ws) in enumerate(corpus) for j in range(len(parsed))]

    def run(cell):
        i, j, name, ws = cell
        src = SeededSource(derive_seed(seed, i, j))
        return measure(parsed[j], ws, N, src, backend=backend, timing_runs=timing_runs, label=name)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(run, cells))
    grouped = [tuple(results[i * len(parsed):(i + 1) * len(parsed)]) for i in range(len(corpus))]

    violations = []
    alias_ok = True
    low_cases = 0
    low_ok = True
    for reps in grouped:
        by = {r.method: r for r in reps}
        for r in reps:
            if r.method == "alias":
                bound = math.ceil(math.log2(r.n)) + 3 if r.n > 1 else 3
                if r.mean_flips > bound:
                    alias_ok = False
                    violations.append(f"{r.label}: alias mean {r.mean_flips:.4f} > {bound}")
        a, b = by.get("aldr"), by.get("alias")
        if a is not None and b is not None and a.n > 1:
            if a.entropy + 2 <= math.ceil(math.log2(a.n)):
                low_cases += 1
                slack = 3 * math.hypot(a.stderr, b.stderr)
                if a.mean_flips > b.mean_flips + slack:
                    low_ok = False
                    violations.append(f"{a.label}: aldr {a.mean_flips:.4f} > alias {b.mean_flips:.4f}")
    summary = SuiteSummary(len(corpus), alias_ok, low_cases, low_ok, violations)
    return grouped, summary


# ---------------------------------------------------------------------------
# Backend comparison


def compare_backends(weights, N: int = 10**5, seed: int = 0, method: str = "aldr", runs: int = TIMING_RUNS) -> dict:
    """Time the compiled and pure-Python kernels on the same stream."""
    meth = parse_method(method)
    w = weights if isinstance(weights, WeightVector) else normalize_weights(weights)
    sampler = meth.preprocess(w)
    out = {}
    reference = None
    names = ["python"] + (["numba"] if _kernels.NUMBA is not None else [])
    for name in names:
        if name == "numba":
            meth.run(sampler, SeededSource(seed), 10, name)  # compile
        labels, _ = meth.run(sampler, SeededSource(seed), N, name)
        ns = _median_ns(lambda: meth.run(sampler, SeededSource(seed), N, name), runs) / N
        same = None if reference is None else bool(np.array_equal(reference, labels))
        reference = labels if reference is None else reference
        out[name] = {"ns_per_sample": ns, "matches_python": same}
    return out


# ---------------------------------------------------------------------------
# Report files

TSV_FIELDS = (
    "label", "method", "n", "m", "samples", "mean_flips", "flips_sd", "exact_expected_flips",
    "entropy", "ns_per_sample", "preprocess_ns", "chi_square", "chi_df", "chi_pass", "seed", "backend",
)


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(v)


def write_tsv(reports: Sequence[BenchReport], path) -> None:
    lines = [f"# schema: {SCHEMA}", "\t".join(TSV_FIELDS)]
    for r in reports:
        lines.append("\t".join(_cell(getattr(r, f)) for f in TSV_FIELDS))
    Path(path).write_text("\n".join(lines) + "\n")


def write_json(reports: Sequence[BenchReport], path, summary: SuiteSummary | None = None) -> None:
    doc = {
        "schema": SCHEMA,
        "significance": SIGNIFICANCE,
        "reports": [r.to_dict() for r in reports],
        "summary": None if summary is None else asdict(summary),
    }
    Path(path).write_text(json.dumps(doc, indent=2, allow_nan=False) + "\n")
