"""Exact entropy costs, tolls and structural verdicts for the sampler family."""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_CEILING, ROUND_FLOOR, ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Iterable

from .ddg import amplified_proposal, build_table
from .errors import DomainError, EnumerationCapError, OverflowRegimeError, UndecidedError
from .exactmath import (
    PRECISION_CAP,
    START_PRECISION,
    Interval,
    WeightVector,
    binary_entropy_interval,
    binary_expansion,
    compare_exact,
    entropy_interval,
    log2_interval,
    multiplication_carries,
    multiplicative_order,
    normalize_weights,
    nu_dyadic_numerator,
    nu_exact,
    two_adic_split,
)
from .samplers.aldr import MAX_DEPTH

#: Candidate cap for :func:`optimal_amplification`.
AMPLIFICATION_CAP = 2**20


def _wv(weights) -> WeightVector:
    return weights if isinstance(weights, WeightVector) else normalize_weights(weights)


def _check_depth(w: WeightVector, K: int) -> None:
    if K < w.k:
        raise DomainError(f"depth K={K} is below k={w.k}")
    if K > MAX_DEPTH:
        raise OverflowRegimeError(f"depth K={K} exceeds the supported maximum {MAX_DEPTH}")


def _cost_for_factor(w: WeightVector, K: int, c: int) -> Fraction:
    # (2^K / M) * sum_i nu(A_i / 2^K) == sum_i (2^K nu(A_i/2^K)) / M
    M = c * w.m
    total = nu_dyadic_numerator((1 << K) - M, K)
    total += sum(nu_dyadic_numerator(c * a, K) for a in w.weights)
    return Fraction(total, M)


def expected_cost_exact(weights, K: int) -> Fraction:
    """Expected flips of the depth-``K`` amplified sampler, exactly.

    >>> expected_cost_exact([4, 7, 8], 10)
    Fraction(3038, 1007)
    """
    w = _wv(weights)
    _check_depth(w, K)
    return _cost_for_factor(w, K, (1 << K) // w.m)


def ky_cost_exact(weights) -> Fraction:
    """Minimal expected flips of any exact sampler: ``sum_i nu(a_i / m)``."""
    w = _wv(weights)
    return sum((nu_exact(p) for p in w.probabilities), Fraction(0))


def toll_interval(weights, K: int, precision_bits: int = START_PRECISION) -> Interval:
    w = _wv(weights)
    return expected_cost_exact(w, K) - entropy_interval(w, precision_bits)


def ky_toll_interval(weights, precision_bits: int = START_PRECISION) -> Interval:
    w = _wv(weights)
    return ky_cost_exact(w) - entropy_interval(w, precision_bits)


def relative_toll(x, precision_bits: int = START_PRECISION) -> Interval:
    """Enclosure of ``(nu(x) - H_1(x)) / x = nu(x)/x + log2(x)``."""
    x = Fraction(x)
    if x <= 0 or x > 1:
        raise DomainError(f"relative toll needs 0 < x <= 1, got {x}")
    return log2_interval(x, precision_bits) + nu_exact(x) / x


def relative_fldr_toll(weights, K: int, i: int, precision_bits: int = START_PRECISION) -> Interval:
    """Toll attributed to outcome ``i``; its mean under ``P`` is the total toll.

    Equal to ``trel(A_i/2^K) + (2^K/M) * (H_1(M/2^K) + nu(A_0/2^K))``,
    evaluated as ``2^K nu(A_i/2^K)/A_i + 2^K nu(A_0/2^K)/M + log2(A_i/M)``
    so that only one logarithm is enclosed.
    """
    w = _wv(weights)
    _check_depth(w, K)
    if not 1 <= i <= w.n:
        raise DomainError(f"label {i} outside 1..{w.n}")
    prop = amplified_proposal(w, K)
    A_i = prop.weights[i - 1]
    rational = Fraction(nu_dyadic_numerator(A_i, K), A_i)
    rational += Fraction(nu_dyadic_numerator(prop.reject_weight, K), prop.M)
    return log2_interval(Fraction(A_i, prop.M), precision_bits) + rational


# ---------------------------------------------------------------------------
# Cost reports and sweeps


@dataclass(frozen=True)
class CostReport:
    K: int
    c: int
    A0: int
    M: int
    expected_cost: Fraction
    entropy: Interval
    toll: Interval
    trials_expected: Fraction
    reject_prob: Fraction
    tree_nodes: int
    tree_nodes_bound: int
    q_changed: bool


def cost_report(weights, K: int, precision_bits: int = START_PRECISION) -> CostReport:
    w = _wv(weights)
    _check_depth(w, K)
    prop = amplified_proposal(w, K)
    table = build_table(prop)
    cost = _cost_for_factor(w, K, prop.c)
    H = entropy_interval(w, precision_bits)
    return CostReport(
        K=K,
        c=prop.c,
        A0=prop.reject_weight,
        M=prop.M,
        expected_cost=cost,
        entropy=H,
        toll=cost - H,
        trials_expected=Fraction(1 << K, prop.M),
        reject_prob=prop.reject_prob,
        tree_nodes=table.node_count,
        tree_nodes_bound=max(1, 2 * (w.n + 1) * K),
        # c even means the depth-K proposal is the depth-(K-1) one with every weight doubled
        q_changed=prop.c % 2 == 1,
    )


def sweep_depths(weights, K_range: Iterable[int], precision_bits: int = START_PRECISION) -> list[CostReport]:
    """One :class:`CostReport` per depth in ``K_range``."""
    w = _wv(weights)
    Ks = list(K_range)
    for K in Ks:
        _check_depth(w, K)
    reports = [cost_report(w, K, precision_bits) for K in Ks]
    for rep in reports:
        if rep.K > w.k:
            prev = amplified_proposal(w, rep.K - 1)
            same = 2 * prev.reject_weight == rep.A0 and all(
                2 * a == b for a, b in zip(prev.weights, amplified_proposal(w, rep.K).weights)
            )
            assert same == (not rep.q_changed), "parity criterion disagrees with proposal comparison"
    return reports


# ---------------------------------------------------------------------------
# Entropy-optimal depths


def minimal_optimal_depth(weights, lambda_max: int | None = None) -> tuple[int, int] | None:
    """Smallest entropy-optimal depth ``(K, lambda)`` or ``None`` if none exists.

    With ``m = 2^u * x`` (``x`` odd) and ``l`` the order of 2 mod ``x``,
    depth ``u + lambda*l`` is optimal iff ``eps_d(p_i) <= eps_{d+lambda*l}(p_i)``
    for every ``i`` and ``d``.  Past the preperiod both sides are periodic,
    so only ``d <= u`` needs checking and ``lambda <= ceil(u/l)`` suffices.
    A power-of-two ``m`` returns ``(k, 0)``.
    """
    w = _wv(weights)
    u, x = two_adic_split(w.m)
    if x == 1:
        return w.k, 0
    ell = multiplicative_order(x)
    bound = max(lambda_max or 1, -(-u // ell))
    expansions = [binary_expansion(p) for p in w.probabilities]
    for lam in range(1, bound + 1):
        shift = lam * ell
        if all(e.bit(d) <= e.bit(d + shift) for e in expansions for d in range(1, u + 1)):
            return u + shift, lam
    return None


# ---------------------------------------------------------------------------
# ALDR versus FLDR


@dataclass(frozen=True)
class AldrFldrComparison:
    verdict: str  # "equal" or "less"
    aldr_cost: Fraction
    fldr_cost: Fraction
    c: int
    carrying: tuple[int, ...]

    @property
    def consistent(self) -> bool:
        """Costs are equal exactly when no product ``c * a_i`` carries."""
        return (self.verdict == "equal") == (not self.carrying)


def compare_aldr_fldr(weights, K: int) -> AldrFldrComparison:
    """Compare the depth-``K`` cost with the depth-``k`` cost and list carrying products.

    Index 0 stands for the reject weight ``a_0 = 2^k - m``.
    """
    w = _wv(weights)
    _check_depth(w, K)
    aldr = expected_cost_exact(w, K)
    fldr = expected_cost_exact(w, w.k)
    if aldr > fldr:
        raise AssertionError(f"amplified cost {aldr} exceeds base cost {fldr}")
    c = (1 << K) // w.m
    base = ((1 << w.k) - w.m,) + w.weights
    carrying = tuple(i for i, a in enumerate(base) if a and multiplication_carries(c, a))
    return AldrFldrComparison("equal" if aldr == fldr else "less", aldr, fldr, c, carrying)


# ---------------------------------------------------------------------------
# Toll verdicts


def toll_compare(weights, K: int, threshold, cap_bits: int = PRECISION_CAP) -> int:
    """Sign of ``toll - threshold`` for the depth-``K`` sampler (may raise UndecidedError)."""
    w = _wv(weights)
    cost = expected_cost_exact(w, K)
    # toll - t = cost - t - H  ->  sign is the opposite of sign(H - (cost - t))
    return -compare_exact(cost - Fraction(threshold), lambda b: entropy_interval(w, b), cap_bits=cap_bits)


def _decided(fn) -> bool | None:
    try:
        return fn()
    except UndecidedError:
        return None


@dataclass(frozen=True)
class TollVerdicts:
    """Tri-state checks (``None`` = undecided at the precision cap)."""

    nonnegative: bool | None
    generic_bound: bool | None
    two_bound_applies: bool
    below_two: bool | None
    reject_bound: bool

    @property
    def decided(self) -> bool:
        checks = [self.nonnegative, self.generic_bound]
        if self.two_bound_applies:
            checks.append(self.below_two)
        return None not in checks

    @property
    def all_true(self) -> bool:
        checks = [self.nonnegative, self.generic_bound, self.reject_bound]
        if self.two_bound_applies:
            checks.append(self.below_two)
        return all(v is True for v in checks)


def toll_bound_verdicts(weights, K: int, cap_bits: int = PRECISION_CAP) -> TollVerdicts:
    """Check ``0 <= toll < 2 + (4+K-k)/2^(K-k)``, ``toll < 2`` for ``K >= 2k`` and the reject bound."""
    w = _wv(weights)
    _check_depth(w, K)
    gap = K - w.k
    generic = 2 + Fraction(4 + gap, 1 << gap)
    prop = amplified_proposal(w, K)
    applies = K >= 2 * w.k
    return TollVerdicts(
        nonnegative=_decided(lambda: toll_compare(w, K, 0, cap_bits) >= 0),
        generic_bound=_decided(lambda: toll_compare(w, K, generic, cap_bits) < 0),
        two_bound_applies=applies,
        below_two=_decided(lambda: toll_compare(w, K, 2, cap_bits) < 0) if applies else None,
        reject_bound=prop.reject_prob < Fraction(1, (1 << gap) + 1),
    )


# ---------------------------------------------------------------------------
# Optimal amplification


def optimal_amplification(weights, K: int, cap: int = AMPLIFICATION_CAP) -> tuple[int, Fraction]:
    """Factor ``c`` in ``1..floor(2^K/m)`` minimizing expected cost (ties go to smaller ``c``)."""
    w = _wv(weights)
    _check_depth(w, K)
    top = (1 << K) // w.m
    if top > cap:
        raise EnumerationCapError(f"{top} candidate factors exceed the cap {cap}")
    best_c, best = 1, _cost_for_factor(w, K, 1)
    for c in range(2, top + 1):
        cost = _cost_for_factor(w, K, c)
        if cost < best:
            best_c, best = c, cost
    return best_c, best


# ---------------------------------------------------------------------------
# TSV rendering

TSV_COLUMNS = (
    "K", "c", "A0", "cost_num", "cost_den", "cost_decimal",
    "toll_lo", "toll_hi", "reject_prob", "q_changed",
)


def format_decimal(x: Fraction, digits: int = 12, rounding: str = ROUND_HALF_EVEN) -> str:
    """``x`` to ``digits`` significant digits with the given rounding."""
    x = Fraction(x)
    if x == 0:
        return "0"
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = rounding
        d = Decimal(x.numerator) / Decimal(x.denominator)
    text = format(d, "f")
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return text


def tsv_header() -> str:
    return "\t".join(TSV_COLUMNS)


def tsv_row(rep: CostReport) -> str:
    fields = (
        rep.K,
        rep.c,
        rep.A0,
        rep.expected_cost.numerator,
        rep.expected_cost.denominator,
        format_decimal(rep.expected_cost),
        format_decimal(rep.toll.lo, rounding=ROUND_FLOOR),
        format_decimal(rep.toll.hi, rounding=ROUND_CEILING),
        f"{rep.reject_prob.numerator}/{rep.reject_prob.denominator}",
        int(rep.q_changed),
    )
    return "\t".join(str(f) for f in fields)


def chain_rule_gap(weights, K: int, precision_bits: int = START_PRECISION) -> tuple[Interval, Interval]:
    """Enclosures of ``H(Q)`` and of ``H(P) M/2^K + H_b(M/2^K)`` (they must overlap)."""
    w = _wv(weights)
    prop = amplified_proposal(w, K)
    q = [a for a in prop.all_weights if a]
    lhs = entropy_interval(q, precision_bits)
    frac = Fraction(prop.M, 1 << K)
    rhs = entropy_interval(w, precision_bits) * frac + binary_entropy_interval(frac, precision_bits)
    return lhs, rhs


def toll_decomposition(weights, K: int, precision_bits: int = START_PRECISION) -> Interval:
    """``(2^K/M) * (toll of the optimal sampler for Q + H_b(M/2^K))``."""
    w = _wv(weights)
    prop = amplified_proposal(w, K)
    q = [a for a in prop.all_weights if a]
    ky_q = sum((nu_exact(Fraction(a, 1 << K)) for a in q), Fraction(0)) - entropy_interval(q, precision_bits)
    frac = Fraction(prop.M, 1 << K)
    return (ky_q + binary_entropy_interval(frac, precision_bits)) * (1 / frac)
