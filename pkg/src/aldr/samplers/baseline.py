"""Alias-method baseline built from entropy-optimal subsamplers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import DomainError
from ..exactmath import WeightVector, normalize_weights, nu_exact
from ._batch import run_batch
from .sources import BitSource

#: Largest ``m`` the batch kernel handles (doubling remainders stay below 2^63).
KERNEL_MAX_M = 2**62


def uniform_sample(n: int, source: BitSource) -> int:
    """Uniform label in ``1..n`` by the recycling fast dice roller."""
    if n < 1:
        raise DomainError("n must be at least 1")
    if n == 1:
        return 1
    v, c = 1, 0
    while True:
        v *= 2
        c = 2 * c + source.flip()
        if v >= n:
            if c < n:
                return c + 1
            v -= n
            c -= n


def uniform_expected_cost(n: int) -> Fraction:
    """Exact expected flips of :func:`uniform_sample`.

    The range ``v`` evolves deterministically.  After doubling to ``w``
    the loop stops with probability ``n / w`` when ``w >= n``, so
    ``E(v) = 1 + (1 - n/w) E(w - n)`` there and ``E(v) = 1 + E(w)``
    otherwise.  The ``v`` sequence is eventually periodic and the linear
    recurrence is solved around the cycle.
    """
    if n < 1:
        raise DomainError("n must be at least 1")
    if n == 1:
        return Fraction(0)
    # E(x) = 1 + cont_x * E(next); the walk either stops outright (w == n) or cycles
    seen: dict[int, int] = {}
    path: list[Fraction] = []
    v = 1
    while v not in seen:
        seen[v] = len(path)
        w = 2 * v
        if w == n:
            path.append(Fraction(0))
            break
        if w > n:
            path.append(Fraction(w - n, w))
            v = w - n
        else:
            path.append(Fraction(1))
            v = w
    else:
        start = seen[v]
        a, b = Fraction(0), Fraction(1)
        for cont in path[start:]:
            a += b
            b *= cont
        e = a / (1 - b)
        for cont in reversed(path[:start]):
            e = 1 + cont * e
        return e
    e = Fraction(0)
    for cont in reversed(path):
        e = 1 + cont * e
    return e


def bernoulli_sample(p, source: BitSource) -> int:
    """Return 1 with probability ``p`` by lazily comparing coin flips with ``p``'s bits."""
    p = Fraction(p)
    if p < 0 or p > 1:
        raise DomainError(f"{p} is outside [0, 1]")
    r, b = p.numerator, p.denominator
    if r == 0:
        return 0
    if r == b:
        return 1
    while r:
        r *= 2
        pbit = 1 if r >= b else 0
        r -= b * pbit
        u = source.flip()
        if u < pbit:
            return 1
        if u > pbit:
            return 0
    return 0


def bernoulli_expected_cost(p) -> Fraction:
    p = Fraction(p)
    return nu_exact(p) + nu_exact(1 - p)


@dataclass(frozen=True)
class AliasColumn:
    primary: int
    alias: int
    threshold: Fraction


@dataclass(frozen=True)
class AliasTable:
    weights: WeightVector
    columns: tuple[AliasColumn, ...]

    @property
    def n(self) -> int:
        return len(self.columns)

    def reconstruct(self) -> list[Fraction]:
        """Output distribution implied by the columns."""
        acc = [Fraction(0)] * self.n
        for col in self.columns:
            acc[col.primary - 1] += col.threshold
            acc[col.alias - 1] += 1 - col.threshold
        return [x / self.n for x in acc]

    def expected_cost(self) -> Fraction:
        """Exact expected flips of :func:`alias_sample`."""
        bern = sum((bernoulli_expected_cost(c.threshold) for c in self.columns), Fraction(0))
        return uniform_expected_cost(self.n) + bern / self.n


def alias_preprocess(weights) -> AliasTable:
    """Vose's construction in exact integers on scaled weights ``n*a_i`` against ``m``."""
    w = weights if isinstance(weights, WeightVector) else normalize_weights(weights)
    n, m = w.n, w.m
    scaled = [n * a for a in w.weights]
    small = [i for i in range(n) if scaled[i] < m]
    large = [i for i in range(n) if scaled[i] >= m]
    primary = list(range(1, n + 1))
    alias = list(range(1, n + 1))
    thresh = [m] * n
    while small and large:
        lo = small.pop()
        hi = large.pop()
        thresh[lo] = scaled[lo]
        alias[lo] = hi + 1
        scaled[hi] += scaled[lo] - m
        (small if scaled[hi] < m else large).append(hi)
    # leftovers are exactly full in exact arithmetic
    for i in small + large:
        thresh[i] = m
        alias[i] = i + 1
    cols = tuple(AliasColumn(primary[i], alias[i], Fraction(thresh[i], m)) for i in range(n))
    return AliasTable(w, cols)


def alias_sample(table: AliasTable, source: BitSource) -> int:
    col = table.columns[uniform_sample(table.n, source) - 1]
    return col.primary if bernoulli_sample(col.threshold, source) else col.alias


def alias_sample_many(
    table: AliasTable,
    source: BitSource,
    count: int,
    backend: str | None = None,
    return_flips: bool = False,
):
    m = table.weights.m
    cols = table.columns

    def args(be):
        # thresholds share the denominator m
        thr = [c.threshold.numerator * (m // c.threshold.denominator) for c in cols]
        return (
            be.prepare_array([c.primary for c in cols]),
            be.prepare_array([c.alias for c in cols]),
            be.prepare_array(thr),
            m,
            table.n,
        )

    labels, flips = run_batch(
        source, count, backend, "alias_batch", args if m < KERNEL_MAX_M else None,
        lambda src: alias_sample(table, src),
    )
    return (labels, flips) if return_flips else labels
