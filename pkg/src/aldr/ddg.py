"""Flattened DDG leaf tables and their exact static analysis.

A depth-``K`` table is stored as two arrays.  ``L[j]`` is the number of
leaves at depth ``j`` and ``F`` lists the leaf labels depth by depth, with
label 0 standing for "reject and restart at the root".  Within a depth the
labels appear in increasing order, reject first.  Depth ``j`` holds a leaf
with label ``i`` exactly when bit ``K - j`` of ``A_i`` is set (bit 0 being
the least significant).

When walking the tree, the nodes of a depth are indexed left to right;
internal nodes come first and the leaves occupy the rightmost positions
in table order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .errors import DomainError, EnumerationCapError, WeightsError
from .exactmath import WeightVector, bit_at, binary_expansion, normalize_weights

#: Growth guard for :func:`unroll_oracle`.
MAX_UNROLL_TIMES = 8


@dataclass(frozen=True)
class AmplifiedProposal:
    """Dyadic proposal over ``{0..n}`` at depth ``K``: ``A_i = c*a_i``, ``A_0 = 2^K - M``."""

    K: int
    c: int
    reject_weight: int
    weights: tuple[int, ...]
    M: int

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def all_weights(self) -> tuple[int, ...]:
        """``(A_0, A_1, ..., A_n)``."""
        return (self.reject_weight,) + self.weights

    @property
    def reject_prob(self) -> Fraction:
        return Fraction(self.reject_weight, 1 << self.K)


def _as_weight_vector(weights) -> WeightVector:
    return weights if isinstance(weights, WeightVector) else normalize_weights(weights)


def amplified_proposal(weights, K: int) -> AmplifiedProposal:
    """Scale the target weights by ``c = floor(2^K / m)`` at depth ``K >= k``.

    >>> amplified_proposal([4, 7, 8], 6)
    AmplifiedProposal(K=6, c=3, reject_weight=7, weights=(12, 21, 24), M=57)
    """
    w = _as_weight_vector(weights)
    if K < w.k:
        raise DomainError(f"depth K={K} is below k={w.k}")
    c = (1 << K) // w.m
    M = c * w.m
    return AmplifiedProposal(K, c, (1 << K) - M, tuple(c * a for a in w.weights), M)


def proposal_from_weights(reject_weight: int, weights: Sequence[int], K: int) -> AmplifiedProposal:
    """Wrap an explicit dyadic proposal ``(A_0, A_1..A_n) / 2^K`` (``c`` is reported as 1)."""
    weights = tuple(int(a) for a in weights)
    if reject_weight < 0 or any(a < 0 for a in weights):
        raise WeightsError("proposal weights must be nonnegative")
    if reject_weight + sum(weights) != 1 << K:
        raise WeightsError(f"proposal weights do not sum to 2^{K}")
    return AmplifiedProposal(K, 1, reject_weight, weights, sum(weights))


@dataclass(frozen=True)
class DdgTable:
    K: int
    n: int
    L: tuple[int, ...]
    F: tuple[int, ...]

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        """Index in ``F`` of the first leaf at each depth."""
        out, acc = [], 0
        for count in self.L:
            out.append(acc)
            acc += count
        return tuple(out)

    def labels_at(self, depth: int) -> tuple[int, ...]:
        start = self.offsets[depth]
        return self.F[start:start + self.L[depth]]

    def leaf_count(self, depth: int, label: int) -> int:
        if depth < 0 or depth > self.K:
            return 0
        return self.labels_at(depth).count(label)

    @cached_property
    def internal_nodes(self) -> tuple[int, ...]:
        """Number of internal nodes at each depth."""
        out, avail = [], 1
        for count in self.L:
            avail -= count
            out.append(avail)
            avail *= 2
        return tuple(out)

    @property
    def node_count(self) -> int:
        return len(self.F) + sum(self.internal_nodes)

    def reconstruct_weights(self) -> tuple[int, ...]:
        """``(A_0, ..., A_n)`` recovered from the leaf positions."""
        acc = [0] * (self.n + 1)
        for j in range(self.K + 1):
            for label in self.labels_at(j):
                acc[label] += 1 << (self.K - j)
        return tuple(acc)

    @property
    def first_reject_depth(self) -> int | None:
        for j in range(self.K + 1):
            if 0 in self.labels_at(j):
                return j
        return None


def build_table(proposal: AmplifiedProposal) -> DdgTable:
    """Leaf table of the depth-``K`` tree for ``proposal``.

    >>> build_table(amplified_proposal([1, 4], 3))
    DdgTable(K=3, n=2, L=(0, 1, 1, 2), F=(2, 0, 0, 1))
    """
    K = proposal.K
    A = proposal.all_weights
    L = [0] * (K + 1)
    F = []
    for j in range(K + 1):
        for i, a in enumerate(A):
            if (a >> (K - j)) & 1:
                L[j] += 1
                F.append(i)
    return DdgTable(K, proposal.n, tuple(L), tuple(F))


def validate_table(table: DdgTable, proposal: AmplifiedProposal | None = None) -> list[str]:
    """Return the list of violated structural invariants (empty when valid)."""
    problems = []
    K, L = table.K, table.L
    if len(L) != K + 1:
        problems.append(f"L has {len(L)} entries, expected {K + 1}")
    if sum(L) != len(table.F):
        problems.append("sum(L) != len(F)")
    if sum(c << (K - j) for j, c in enumerate(L)) != 1 << K:
        problems.append("leaf masses do not sum to 2^K")
    internal = table.internal_nodes
    if any(x < 0 for x in internal):
        problems.append("more leaves than available nodes at some depth")
    elif internal and internal[-1] != 0:
        problems.append(f"{internal[-1]} internal nodes left at the last depth")
    if any(label < 0 or label > table.n for label in table.F):
        problems.append("label out of range")
    for j in range(min(len(L), K + 1)):
        labels = table.labels_at(j)
        if list(labels) != sorted(set(labels)):
            problems.append(f"labels at depth {j} not strictly increasing")
    if proposal is not None:
        for j in range(K + 1):
            expected = sum((a >> (K - j)) & 1 for a in proposal.all_weights)
            if L[j] != expected:
                problems.append(f"L[{j}]={L[j]} but {expected} weights have bit {K - j} set")
        if table.reconstruct_weights() != proposal.all_weights:
            problems.append("leaf labels do not reproduce the proposal weights")
    return problems


# ---------------------------------------------------------------------------
# Leaf counts of the unrolled tree


@dataclass(frozen=True)
class LeafCountSeries:
    """Leaf counts ``counts[label][depth]`` for ``depth = 0..max_depth``.

    Row 0 holds reject leaves still present after a finite unrolling (all
    zero for the infinitely unrolled tree).  Entries at depths below
    ``finalized_depth`` agree with the infinitely unrolled tree.
    """

    counts: tuple[tuple[int, ...], ...]
    max_depth: int
    finalized_depth: int

    @property
    def n(self) -> int:
        return len(self.counts) - 1

    def count(self, depth: int, label: int) -> int:
        if depth < 0 or depth > self.max_depth:
            raise IndexError(f"depth {depth} outside 0..{self.max_depth}")
        return self.counts[label][depth]

    def mass(self, label: int, upto: int | None = None) -> Fraction:
        """Partial sum of ``count(d, label) * 2^-d`` over ``d <= upto``."""
        upto = self.max_depth if upto is None else upto
        row = self.counts[label]
        return sum((Fraction(row[d], 1 << d) for d in range(upto + 1) if row[d]), Fraction(0))


def _leaf_rows(table: DdgTable) -> list[list[int]]:
    rows = [[0] * (table.K + 1) for _ in range(table.n + 1)]
    for j in range(table.K + 1):
        for label in table.labels_at(j):
            rows[label][j] += 1
    return rows


def unrolled_leaf_counts(table: DdgTable, max_depth: int | None = None) -> LeafCountSeries:
    """Leaf counts of the tree obtained by replacing reject leaves by copies of the root.

    Computed by truncated power-series division ``N_i(z) / (1 - R(z))``
    where ``N_i`` and ``R`` count label-``i`` and reject leaves per depth.
    Default ``max_depth`` is ``3K + 1``.
    """
    K = table.K
    if max_depth is None:
        max_depth = 3 * K + 1
    if max_depth < 0:
        raise DomainError("max_depth must be nonnegative")
    rows = _leaf_rows(table)
    reject = rows[0]
    if reject[0] or sum(reject[j] << (K - j) for j in range(K + 1)) == 1 << K:
        raise DomainError("proposal has no accepted mass (M = 0)")
    taps = [(r, reject[r]) for r in range(1, K + 1) if reject[r]]
    out = [tuple([0] * (max_depth + 1))]
    for label in range(1, table.n + 1):
        num = rows[label]
        c = [0] * (max_depth + 1)
        for d in range(max_depth + 1):
            v = num[d] if d <= K else 0
            for r, mult in taps:
                if r > d:
                    break
                v += mult * c[d - r]
            c[d] = v
        out.append(tuple(c))
    return LeafCountSeries(tuple(out), max_depth, max_depth + 1)


def unroll_oracle(table: DdgTable, times: int, max_depth: int | None = None) -> LeafCountSeries:
    """Leaf counts after substituting a copy of the tree at every reject leaf ``times`` times.

    Independent of the series division: drives the sampling walk over all
    bit strings, restarting at most ``times`` times, and tallies where each
    path ends.  Paths are merged by walk state, so the cost is polynomial.
    """
    if times < 0:
        raise DomainError("times must be nonnegative")
    if times > MAX_UNROLL_TIMES:
        raise EnumerationCapError(f"times={times} exceeds the guard {MAX_UNROLL_TIMES}")
    K, F, off, internal = table.K, table.F, table.offsets, table.internal_nodes
    full_depth = (times + 1) * K
    if max_depth is None:
        max_depth = full_depth
    counts = [[0] * (max_depth + 1) for _ in range(table.n + 1)]

    frontier: dict[tuple[int, int, int], int] = {(0, 0, 0): 1}
    for depth in range(max_depth + 1):
        nxt: dict[tuple[int, int, int], int] = {}
        pending = list(frontier.items())
        while pending:
            (d, v, restarts), mult = pending.pop()
            if v >= internal[d]:
                label = F[off[d] + v - internal[d]]
                if label == 0 and restarts < times:
                    pending.append(((0, 0, restarts + 1), mult))
                else:
                    counts[label][depth] += mult
                continue
            for b in (0, 1):
                key = (d + 1, 2 * v + b, restarts)
                nxt[key] = nxt.get(key, 0) + mult
        frontier = nxt
        if not frontier:
            break

    r0 = table.first_reject_depth
    if r0 is None:
        final = max_depth + 1
    else:
        final = min((times + 1) * r0, max_depth + 1)
    return LeafCountSeries(tuple(tuple(row) for row in counts), max_depth, final)


def output_distribution(table: DdgTable) -> list[Fraction]:
    """Exact output probabilities ``A_i / M`` of the infinitely unrolled tree."""
    A = table.reconstruct_weights()
    M = (1 << table.K) - A[0]
    if M <= 0:
        raise DomainError("proposal has no accepted mass (M = 0)")
    q0 = Fraction(A[0], 1 << table.K)
    return [Fraction(a, 1 << table.K) / (1 - q0) for a in A[1:]]


def expansion_window(probs: Sequence[Fraction]) -> int:
    """Largest ``preperiod + period`` length over the given probabilities."""
    best = 0
    for p in probs:
        e = binary_expansion(p)
        best = max(best, len(e.preperiod) + len(e.period))
    return best


@dataclass(frozen=True)
class OptimalityVerdict:
    optimal: bool
    witness: tuple[int, int] | None = field(default=None)

    def __bool__(self) -> bool:
        return self.optimal


def is_entropy_optimal_unrolled(table: DdgTable, check_depth: int | None = None) -> OptimalityVerdict:
    """Whether the unrolled tree has exactly ``eps_d(p_i)`` leaves labelled ``i`` at each depth.

    On failure the witness ``(depth, label)`` is the shallowest depth that
    holds two or more leaves of one label, or, when no label is
    duplicated, the shallowest single-leaf mismatch.
    """
    probs = output_distribution(table)
    if check_depth is None:
        check_depth = max(expansion_window(probs), 3 * table.K + 1)
    series = unrolled_leaf_counts(table, check_depth)
    for d in range(check_depth + 1):
        for i in range(1, table.n + 1):
            if series.counts[i][d] >= 2:
                return OptimalityVerdict(False, (d, i))
    for d in range(check_depth + 1):
        for i, p in enumerate(probs, start=1):
            if series.counts[i][d] != bit_at(p, d):
                return OptimalityVerdict(False, (d, i))
    return OptimalityVerdict(True)


# ---------------------------------------------------------------------------
# Text dump


def dump_table(table: DdgTable) -> str:
    """One line per depth: ``depth<TAB>count<TAB>labels`` with reject shown as ``R``."""
    lines = []
    for j in range(table.K + 1):
        labels = " ".join("R" if x == 0 else str(x) for x in table.labels_at(j))
        lines.append(f"{j}\t{table.L[j]}\t{labels}")
    return "\n".join(lines) + "\n"


def parse_table_dump(text: str, n: int | None = None) -> DdgTable:
    """Inverse of :func:`dump_table`."""
    L, F = [], []
    for lineno, raw in enumerate(text.splitlines()):
        if not raw.strip():
            continue
        parts = raw.split("\t")
        if len(parts) < 2:
            raise ValueError(f"line {lineno + 1}: expected depth, count and labels")
        depth, count = int(parts[0]), int(parts[1])
        if depth != len(L):
            raise ValueError(f"line {lineno + 1}: depth {depth} out of sequence")
        labels = [0 if tok == "R" else int(tok) for tok in (parts[2].split() if len(parts) > 2 else [])]
        if len(labels) != count:
            raise ValueError(f"line {lineno + 1}: count {count} but {len(labels)} labels")
        L.append(count)
        F.extend(labels)
    if not L:
        raise ValueError("empty table dump")
    if n is None:
        n = max(F, default=0)
    return DdgTable(len(L) - 1, n, tuple(L), tuple(F))
