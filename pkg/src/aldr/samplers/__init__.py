"""Sampling engines in the random bit model."""

from .aldr import (
    MAX_DEPTH,
    AldrSampler,
    aldr_preprocess,
    aldr_sample,
    aldr_sample_many,
    doubling_rule,
    fldr_preprocess,
    fldr_rule,
    parse_rule,
)
from .baseline import (
    AliasColumn,
    AliasTable,
    alias_preprocess,
    alias_sample,
    alias_sample_many,
    bernoulli_expected_cost,
    bernoulli_sample,
    uniform_expected_cost,
    uniform_sample,
)
from .enumerate import EnumerationResult, enumerate_outcomes
from .sources import (
    BitSource,
    ConstantSource,
    CountingSource,
    ListSource,
    OSEntropySource,
    SeededSource,
)

__all__ = [
    "MAX_DEPTH",
    "AldrSampler",
    "AliasColumn",
    "AliasTable",
    "BitSource",
    "ConstantSource",
    "CountingSource",
    "EnumerationResult",
    "ListSource",
    "OSEntropySource",
    "SeededSource",
    "aldr_preprocess",
    "aldr_sample",
    "aldr_sample_many",
    "alias_preprocess",
    "alias_sample",
    "alias_sample_many",
    "bernoulli_expected_cost",
    "bernoulli_sample",
    "doubling_rule",
    "enumerate_outcomes",
    "fldr_preprocess",
    "fldr_rule",
    "parse_rule",
    "uniform_expected_cost",
    "uniform_sample",
]
