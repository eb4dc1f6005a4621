"""Amplified loaded dice roller: preprocessing and sampling."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Union

from ..ddg import AmplifiedProposal, DdgTable, amplified_proposal, build_table
from ..errors import BudgetExhaustedError, InvalidRuleError, OverflowRegimeError
from ..exactmath import WeightVector, normalize_weights
from ._batch import run_batch
from .sources import BitSource

#: Deepest table supported by the fixed-width regime (128-bit intermediates).
MAX_DEPTH = 127

Rule = Union[str, int, Callable[[int], int]]


def fldr_rule(k: int) -> int:
    return k


def doubling_rule(k: int) -> int:
    return 2 * k


def _constant_rule(K: int) -> Callable[[int], int]:
    def rule(k: int) -> int:
        return K

    rule.__name__ = f"K={K}"
    return rule


def parse_rule(rule: Rule | None) -> Callable[[int], int]:
    """Accept ``"fldr"``, ``"2k"``, ``"K=<int>"``, a bare integer depth, or a callable."""
    if rule is None:
        return doubling_rule
    if callable(rule):
        return rule
    if isinstance(rule, bool):
        raise InvalidRuleError(f"invalid rule {rule!r}")
    if isinstance(rule, int):
        return _constant_rule(rule)
    text = str(rule).strip()
    if text.lower() == "fldr":
        return fldr_rule
    if text.lower() == "2k":
        return doubling_rule
    match = re.fullmatch(r"[Kk]\s*=\s*(\d+)", text)
    if match:
        return _constant_rule(int(match.group(1)))
    raise InvalidRuleError(f"invalid rule {rule!r}; expected fldr, 2k or K=<int>")


@dataclass(frozen=True)
class AldrSampler:
    weights: WeightVector
    K: int
    c: int
    table: DdgTable
    proposal: AmplifiedProposal

    @property
    def n(self) -> int:
        return self.weights.n

    @property
    def reject_weight(self) -> int:
        return self.proposal.reject_weight


def aldr_preprocess(weights, rule: Rule | None = None) -> AldrSampler:
    """Build the sampler at depth ``K = rule(k)`` (default ``2k``; ``"fldr"`` gives ``K = k``)."""
    w = weights if isinstance(weights, WeightVector) else normalize_weights(weights)
    K = parse_rule(rule)(w.k)
    if not isinstance(K, int) or isinstance(K, bool):
        raise InvalidRuleError(f"rule returned non-integer depth {K!r}")
    if K < w.k:
        raise InvalidRuleError(f"rule maps k={w.k} to K={K} < k")
    if K > MAX_DEPTH:
        raise OverflowRegimeError(f"depth K={K} exceeds the supported maximum {MAX_DEPTH}")
    proposal = amplified_proposal(w, K)
    return AldrSampler(w, K, proposal.c, build_table(proposal), proposal)


def fldr_preprocess(weights) -> AldrSampler:
    return aldr_preprocess(weights, fldr_rule)


def aldr_sample(sampler: AldrSampler, source: BitSource, budget: int | None = None) -> int:
    """Draw one label in ``1..n``; rejection restarts at the root.

    Nodes at each depth are indexed left to right.  The first
    ``internal[d]`` are internal and the remaining ones are leaves carrying
    the depth's labels in table order, so a 1 bit steers toward leaves.
    """
    table = sampler.table
    internal, offsets, F = table.internal_nodes, table.offsets, table.F
    used = 0
    d = v = 0
    while True:
        if v >= internal[d]:
            label = F[offsets[d] + v - internal[d]]
            if label:
                return label
            d = v = 0
            continue
        if budget is not None and used >= budget:
            raise BudgetExhaustedError(f"flip budget {budget} exhausted")
        v = 2 * v + source.flip()
        used += 1
        d += 1


def aldr_sample_many(
    sampler: AldrSampler,
    source: BitSource,
    count: int,
    backend: str | None = None,
    return_flips: bool = False,
):
    """Draw ``count`` labels (and optionally per-sample flip counts).

    Seeded sources run through the batch kernel of ``backend``.
    """
    table = sampler.table

    def args(be):
        return (
            be.prepare_array(table.internal_nodes),
            be.prepare_array(table.offsets),
            be.prepare_array(table.F),
        )

    labels, flips = run_batch(source, count, backend, "aldr_batch", args, lambda src: aldr_sample(sampler, src))
    return (labels, flips) if return_flips else labels
