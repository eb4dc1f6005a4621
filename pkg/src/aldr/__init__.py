"""Exact sampling from rational discrete distributions with fair coin flips.

Modules:

* :mod:`aldr.exactmath` -- rationals, binary expansions, nu-entropy, entropy enclosures
* :mod:`aldr.ddg` -- leaf tables and leaf counting of rejection trees
* :mod:`aldr.samplers` -- bit sources, amplified and base loaded dice rollers, alias baseline
* :mod:`aldr.analysis` -- exact costs, tolls and optimality verdicts
* :mod:`aldr.bench` -- empirical validation and timing
"""

from .analysis import (
    compare_aldr_fldr,
    expected_cost_exact,
    ky_cost_exact,
    minimal_optimal_depth,
    optimal_amplification,
    sweep_depths,
    toll_bound_verdicts,
    toll_interval,
)
from .ddg import amplified_proposal, build_table
from .exactmath import Interval, Rational, WeightVector, entropy_interval, normalize_weights, nu_exact
from .samplers import (
    CountingSource,
    SeededSource,
    aldr_preprocess,
    aldr_sample,
    aldr_sample_many,
    alias_preprocess,
    alias_sample,
)

__version__ = "0.1.0"

__all__ = [
    "CountingSource",
    "Interval",
    "Rational",
    "SeededSource",
    "WeightVector",
    "aldr_preprocess",
    "aldr_sample",
    "aldr_sample_many",
    "alias_preprocess",
    "alias_sample",
    "amplified_proposal",
    "build_table",
    "compare_aldr_fldr",
    "entropy_interval",
    "expected_cost_exact",
    "ky_cost_exact",
    "minimal_optimal_depth",
    "normalize_weights",
    "nu_exact",
    "optimal_amplification",
    "sweep_depths",
    "toll_bound_verdicts",
    "toll_interval",
]
