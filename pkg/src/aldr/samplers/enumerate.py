"""Exhaustive enumeration of all bit strings up to a fixed length.

Paths that reach the same sampler state are merged, so the work grows
with the number of distinct states rather than with ``2**depth``.  The
result brackets each outcome probability: the resolved mass is a lower
bound and the resolved mass plus the unresolved mass an upper bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .aldr import AldrSampler
from .baseline import AliasTable


@dataclass(frozen=True)
class EnumerationResult:
    depth: int
    resolved: tuple[Fraction, ...]
    unresolved: Fraction

    def brackets(self) -> list[tuple[Fraction, Fraction]]:
        return [(p, p + self.unresolved) for p in self.resolved]

    def brackets_hold(self, probs) -> bool:
        return all(lo <= Fraction(p) <= hi for (lo, hi), p in zip(self.brackets(), probs))


def _finish(depth: int, hits: list[int], pending: int) -> EnumerationResult:
    scale = 1 << depth
    return EnumerationResult(depth, tuple(Fraction(h, scale) for h in hits), Fraction(pending, scale))


def _enumerate_aldr(sampler: AldrSampler, depth: int) -> EnumerationResult:
    table = sampler.table
    internal, offsets, F = table.internal_nodes, table.offsets, table.F
    hits = [0] * sampler.n
    # counts are numbers of bit strings of the current length
    states = {(0, 0): 1}
    for t in range(depth + 1):
        nxt: dict[tuple[int, int], int] = {}
        for (d, v), cnt in states.items():
            if v >= internal[d]:
                label = F[offsets[d] + v - internal[d]]
                if label:
                    # a string of length t, extended freely to length depth
                    hits[label - 1] += cnt << (depth - t)
                    continue
                d, v = 0, 0
                if v >= internal[0]:
                    hits[F[0] - 1] += cnt << (depth - t)
                    continue
            if t == depth:
                nxt[(d, v)] = nxt.get((d, v), 0) + cnt
                continue
            for b in (0, 1):
                key = (d + 1, 2 * v + b)
                nxt[key] = nxt.get(key, 0) + cnt
        states = nxt
    return _finish(depth, hits, sum(states.values()))


def _enumerate_alias(table: AliasTable, depth: int) -> EnumerationResult:
    n, m = table.n, table.weights.m
    cols = table.columns
    thr = [c.threshold.numerator * (m // c.threshold.denominator) for c in cols]
    hits = [0] * n

    def emit_column(col: int, cnt: int, t: int, out: dict) -> None:
        # a column with a degenerate threshold resolves without flips
        if thr[col] == m:
            hits[cols[col].primary - 1] += cnt << (depth - t)
        elif thr[col] == 0:
            hits[cols[col].alias - 1] += cnt << (depth - t)
        else:
            key = ("b", col, thr[col])
            out[key] = out.get(key, 0) + cnt

    states: dict[tuple, int] = {}
    if n == 1:
        emit_column(0, 1, 0, states)
    else:
        states[("u", 1, 0)] = 1
    for t in range(depth):
        nxt: dict[tuple, int] = {}
        for state, cnt in states.items():
            if state[0] == "u":
                _, v, c = state
                for b in (0, 1):
                    v2, c2 = 2 * v, 2 * c + b
                    if v2 >= n:
                        if c2 < n:
                            emit_column(c2, cnt, t + 1, nxt)
                            continue
                        v2, c2 = v2 - n, c2 - n
                    key = ("u", v2, c2)
                    nxt[key] = nxt.get(key, 0) + cnt
            else:
                _, col, r = state
                r *= 2
                pbit = 1 if r >= m else 0
                r -= m * pbit
                for b in (0, 1):
                    if b < pbit:
                        hits[cols[col].primary - 1] += cnt << (depth - t - 1)
                    elif b > pbit or r == 0:
                        hits[cols[col].alias - 1] += cnt << (depth - t - 1)
                    else:
                        key = ("b", col, r)
                        nxt[key] = nxt.get(key, 0) + cnt
        states = nxt
    return _finish(depth, hits, sum(states.values()))


def enumerate_outcomes(sampler, depth: int) -> EnumerationResult:
    """Mass of bit strings of length ``depth`` that finish with each label."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if isinstance(sampler, AldrSampler):
        return _enumerate_aldr(sampler, depth)
    if isinstance(sampler, AliasTable):
        return _enumerate_alias(sampler, depth)
    raise TypeError(f"cannot enumerate {type(sampler).__name__}")
