"""One test per acceptance criterion; each prints a single PASS/FAIL line."""

import contextlib
import math
import time
from fractions import Fraction as F

import numpy as np
import pytest

import conftest
from aldr import _kernels, analysis, bench
from aldr.ddg import amplified_proposal, build_table, is_entropy_optimal_unrolled, unroll_oracle, unrolled_leaf_counts
from aldr.exactmath import (
    Interval,
    addition_carries,
    binary_expansion,
    multiplication_carries,
    multiplicative_order,
    normalize_weights,
    nu_exact,
    two_adic_split,
)
from aldr.samplers import aldr_preprocess, alias_preprocess, enumerate_outcomes, uniform_expected_cost
from oracles import carries_by_digits, leaf_counts_by_polynomials, toll_corpus

SUITE_SEED = 20240601
SUITE_N = 10**5


@contextlib.contextmanager
def criterion(number, title, limit_s, already_spent=0.0):
    start = time.perf_counter() - already_spent
    status, detail = "FAIL", ""
    try:
        yield
        elapsed = time.perf_counter() - start
        if elapsed >= limit_s:
            detail = f" (runtime {elapsed:.1f}s exceeds {limit_s}s)"
            raise AssertionError(f"criterion {number} took {elapsed:.1f}s, limit {limit_s}s")
        status = "PASS"
        detail = f" ({elapsed:.2f}s)"
    except BaseException as exc:
        if not detail:
            detail = f" ({type(exc).__name__}: {str(exc).splitlines()[0][:120] if str(exc) else ''})"
        raise
    finally:
        line = f"criterion {number}: {status} {title}{detail}"
        conftest.ACCEPTANCE_LINES.append(line)
        print(line)


def decided_sign(ws, K, threshold):
    return analysis.toll_compare(ws, K, threshold)


# ---------------------------------------------------------------------------


def test_criterion_01_cost_pins():
    with criterion(1, "exact cost pins for (4,7,8)/19 at K=10,11", 1):
        assert analysis.expected_cost_exact([4, 7, 8], 10) == F(3038, 1007)
        assert analysis.expected_cost_exact([4, 7, 8], 11) == F(6150, 2033)
        # the deeper tree is more expensive here
        assert analysis.expected_cost_exact([4, 7, 8], 11) > analysis.expected_cost_exact([4, 7, 8], 10)


def test_criterion_02_proposal_pins():
    with criterion(2, "amplified proposals for (4,7,8)/19 at K=5,6,8,18", 1):
        pins = {
            5: (1, 13, (4, 7, 8)),
            6: (3, 7, (12, 21, 24)),
            8: (13, 9, (52, 91, 104)),
            18: (13797, 1, (55188, 96579, 110376)),
        }
        for K, (c, a0, A) in pins.items():
            p = amplified_proposal(normalize_weights([4, 7, 8]), K)
            assert (p.c, p.reject_weight, p.weights) == (c, a0, A), K
            assert a0 + sum(A) == 2**K


def test_criterion_03_fldr_tightness():
    with criterion(3, "FLDR toll family approaches 6", 5):
        expected = {4: 3.90, 5: 4.77, 6: 5.31}
        for k in range(4, 17):
            ws = [2, 2 ** (k - 1) - 1]
            w = normalize_weights(ws)
            assert w.k == k
            if k in expected:
                t = analysis.toll_interval(w, k)
                assert t.width < F(1, 10**20)
                assert abs(float(t.mid) - expected[k]) <= 0.01, (k, float(t.mid))
            bound = 6 - F(2 * k + 1, 1) * F(2) ** (3 - k)
            assert decided_sign(w, k, bound) == 1, k


def test_criterion_04_toll_bounds():
    with criterion(4, "toll bounds on 200 seeded distributions, K in [k, 2k+4]", 120):
        corpus = toll_corpus(count=200, seed=2024, n_max=64, m_max=10**4)
        assert len(corpus) >= 200
        assert all(w.n <= 64 and w.m <= 10**4 for w in corpus)
        checked = 0
        for w in corpus:
            for K in range(w.k, 2 * w.k + 5):
                v = analysis.toll_bound_verdicts(w, K)
                assert v.decided, (list(w.weights), K)
                assert v.nonnegative and v.generic_bound and v.reject_bound, (list(w.weights), K, v)
                if K >= 2 * w.k:
                    assert v.below_two, (list(w.weights), K)
                cmp = analysis.compare_aldr_fldr(w, K)
                assert cmp.aldr_cost <= cmp.fldr_cost
                # equality iff no c*a_i carries, with an independent carry check
                base = [2**w.k - w.m] + list(w.weights)
                carries = any(a and carries_by_digits(cmp.c, a) for a in base)
                assert (cmp.aldr_cost == cmp.fldr_cost) == (not carries), (list(w.weights), K)
                checked += 1
        assert checked > 200 * 5


def test_criterion_05_minimality():
    with criterion(5, "depth 2k is the least depth with toll below 2", 10):
        for k in range(4, 9):
            ws = [2 ** (k - 1) - 1, 2 ** (k - 1) - 2]
            w = normalize_weights(ws)
            assert w.m == 2**k - 3 and w.k == k
            for K in range(k, 2 * k):
                assert decided_sign(w, K, 2) == 1, (k, K)
            assert decided_sign(w, 2 * k, 2) == -1, k


def test_criterion_06_large_gap():
    with criterion(6, "large-gap family and the 1669 instance", 60):
        eps = F(1, 16)
        ws = [1, 1, 1] + [3] * 31
        w = normalize_weights(ws)
        assert (w.n, w.m) == (34, 96)
        assert analysis.ky_toll_interval(w).hi < eps
        for K in range(w.k, 128):
            assert decided_sign(w, K, 2 - eps) == 1, K

        b = 1669
        ws = [1, b - 1] + [b * 2**j for j in range(11)]
        w = normalize_weights(ws)
        assert w.m == 2**11 * b and w.k == 22
        t = analysis.toll_interval(w, 22)
        assert abs(float(t.mid) - 2.45) <= 0.01
        assert decided_sign(w, 37, 2) == -1


def test_criterion_07_leaf_count_oracle():
    with criterion(7, "series leaf counts equal the explicit unrolling on 100 proposals", 30):
        rng = np.random.default_rng(77)
        done = 0
        while done < 100:
            n = int(rng.integers(1, 7))
            ws = [int(x) for x in rng.integers(1, 256 // n + 1, size=n)]
            w = normalize_weights(ws)
            if w.k > 8:
                continue
            K = int(rng.integers(w.k, 9))
            table = build_table(amplified_proposal(w, K))
            times = int(rng.integers(1, 5))
            oracle = unroll_oracle(table, times)
            series = unrolled_leaf_counts(table, oracle.max_depth)
            fin = oracle.finalized_depth
            for i in range(1, w.n + 1):
                assert oracle.counts[i][:fin] == series.counts[i][:fin], (ws, K, times, i)
            # and against plain polynomial multiplication
            c = 2**K // w.m
            poly = leaf_counts_by_polynomials([2**K - c * w.m] + [c * a for a in w.weights], K, oracle.max_depth)
            assert [list(r) for r in series.counts[1:]] == poly
            done += 1
        s = unrolled_leaf_counts(build_table(amplified_proposal(normalize_weights([1, 4]), 3)))
        assert s.count(8, 1) == 2 and s.count(6, 2) == 2


def characterized_optimal(w, K):
    """Depth K is entropy optimal iff K = u + lambda*l (lambda >= 1) and the digit condition holds."""
    u, x = two_adic_split(w.m)
    if x == 1:
        return K >= w.k
    ell = multiplicative_order(x)
    # an even amplification factor repeats the proposal of the depth above
    c = 2**K // w.m
    K -= (c & -c).bit_length() - 1
    if K <= u or (K - u) % ell:
        return False
    shift = K - u
    exps = [binary_expansion(p) for p in w.probabilities]
    return all(e.bit(d) <= e.bit(d + shift) for e in exps for d in range(1, u + 1))


def test_criterion_08_optimality_characterization():
    with criterion(8, "entropy-optimal depths match the digit characterization", 10):
        assert analysis.minimal_optimal_depth([1, 2, 3, 4])[0] == 5
        assert analysis.minimal_optimal_depth([1, 4])[0] == 4
        assert analysis.minimal_optimal_depth([1, 5]) is None
        rng = np.random.default_rng(8)
        corpus = []
        while len(corpus) < 50:
            n = int(rng.integers(2, 6))
            ws = [int(x) for x in rng.integers(1, 40, size=n)]
            w = normalize_weights(ws)
            if w.n >= 2 and multiplicative_order(two_adic_split(w.m)[1]) <= 12:
                corpus.append(w)
        for w in corpus:
            top = min(127, w.k + 30)
            verdicts = {K: is_entropy_optimal_unrolled(build_table(amplified_proposal(w, K))).optimal
                        for K in range(w.k, top + 1)}
            for K, ok in verdicts.items():
                assert ok == characterized_optimal(w, K), (list(w.weights), K)
            found = analysis.minimal_optimal_depth(w)
            first = next((K for K, ok in verdicts.items() if ok), None)
            assert (found[0] if found else None) == first, list(w.weights)


@pytest.fixture(scope="module")
def desk_suite():
    start = time.perf_counter()
    corpus = bench.desk_corpus(SUITE_SEED)
    grouped, summary = bench.compare_suite(
        corpus, N=SUITE_N, seed=SUITE_SEED, methods=("aldr", "fldr", "alias"), timing_runs=1
    )
    return corpus, grouped, summary, time.perf_counter() - start


def test_criterion_09_sampling_exactness(desk_suite):
    corpus, grouped, _, suite_s = desk_suite
    # the shared sampling run counts against this criterion
    with criterion(9, "enumeration brackets and chi-square at 1e-3 on the desk corpus", 120, suite_s):
        for (name, ws), reps in zip(corpus, grouped):
            w = normalize_weights(ws)
            for rule in ("2k", "fldr"):
                s = aldr_preprocess(w, rule)
                res = enumerate_outcomes(s, 3 * s.K)
                assert res.brackets_hold(w.probabilities), (name, rule)
                # surviving 3K flips needs at least three rejections
                assert res.unresolved <= F(s.reject_weight, 2**s.K) ** 3, (name, rule)
            res = enumerate_outcomes(alias_preprocess(w), 40)
            assert res.brackets_hold(w.probabilities), name
            for r in reps:
                assert r.chi_pass, (name, r.method, r.chi_square, r.chi_df)


def alias_cost_oracle(w):
    """Uniform column cost plus the mean lazy Bernoulli cost 2 - 2^(1-L) for a length-L dyadic."""
    table = alias_preprocess(w)
    total = F(0)
    for col in table.columns:
        t = col.threshold
        if t in (0, 1):
            continue
        den = t.denominator
        if den & (den - 1):
            total += 2
        else:
            total += 2 - F(2, den)
    return uniform_expected_cost(w.n) + total / w.n


def test_criterion_10_entropy_accounting(desk_suite):
    with criterion(10, "mean flips within 3 sigma of exact cost; alias bound on the corpus", 120):
        corpus, grouped, summary, _ = desk_suite
        misses = []
        for (name, ws), reps in zip(corpus, grouped):
            w = normalize_weights(ws)
            for r in reps:
                exact = r.exact_expected_flips
                if r.method == "alias":
                    assert exact == alias_cost_oracle(w), name
                    assert r.mean_flips <= math.ceil(math.log2(w.n)) + 3, name
                elif r.method == "aldr":
                    assert exact == analysis.expected_cost_exact(w, 2 * w.k)
                else:
                    assert exact == analysis.expected_cost_exact(w, w.k)
                if not r.within_sigma(exact, 3):
                    misses.append((name, r.method, (r.mean_flips - float(exact)) / r.stderr))
        assert summary.alias_bound_holds
        assert not misses, misses


def test_criterion_11_nu_calculus():
    with criterion(11, "nu subadditivity and product rule, relative toll bounds", 60):
        # exhaustive integer pairs as dyadics
        for x in range(1, 257):
            bx = x.bit_length()
            xd = F(x, 2**bx)
            nx = nu_exact(xd)
            for y in range(1, 257):
                by = y.bit_length()
                yd = F(y, 2**by)
                lhs = nu_exact(xd * yd)
                rhs = xd * nu_exact(yd) + yd * nx
                carry = multiplication_carries(x, y)
                assert carry == carries_by_digits(x, y)
                assert lhs <= rhs and (lhs == rhs) == (not carry), (x, y)
                xs, ys = F(x, 512), F(y, 512)
                lhs = nu_exact(xs + ys)
                rhs = nu_exact(xs) + nu_exact(ys)
                assert lhs <= rhs and (lhs == rhs) == (not addition_carries(xs, ys)), (x, y)

        rng = np.random.default_rng(11)
        for _ in range(10**4):
            d1, d2 = (int(v) for v in rng.integers(2, 257, size=2))
            x = F(int(rng.integers(0, d1)), d1)
            y = F(int(rng.integers(0, d2)), d2)
            if x + y > 1:
                x, y = 1 - x, 1 - y
                if x + y > 1:
                    continue
            lhs, rhs = nu_exact(x + y), nu_exact(x) + nu_exact(y)
            assert lhs <= rhs and (lhs == rhs) == (not addition_carries(x, y)), (x, y)
            if 0 < x < F(1, 2):
                assert nu_exact(2 * x) == 2 * nu_exact(x) - 2 * x

        for _ in range(2000):
            den = int(rng.integers(2, 10**5))
            x = F(int(rng.integers(1, den + 1)), den)
            t = analysis.relative_toll(x)
            assert t.lo >= 0 and t.hi < 2, x
            # shifting by a power of two keeps the relative toll
            a = int(rng.integers(1, 8))
            while x * 2**a > 1:
                a -= 1
            if a > 0:
                shifted = analysis.relative_toll(x * 2**a)
                assert shifted.overlaps(t)
                # exact rational parts agree once the logarithm offset is removed
                assert nu_exact(x * 2**a) / (x * 2**a) + a == nu_exact(x) / x


def test_criterion_12_declared_non_reproducible(desk_suite):
    # absolute nanosecond figures depend on hardware; trend assertions stand in for them
    with criterion(12, "DECLARED non-reproducible timings; trend checks only", 120):
        _, grouped, summary, _ = desk_suite
        assert summary.low_entropy_cases > 0 and summary.low_entropy_aldr_wins, summary.violations
        by_method = {}
        for reps in grouped:
            for r in reps:
                by_method.setdefault(r.method, []).append(r.ns_per_sample)
        assert all(v > 0 for vs in by_method.values() for v in vs)
        if _kernels.NUMBA is not None:
            speed = bench.compare_backends([4, 7, 8], N=20_000, runs=1)
            assert speed["numba"]["matches_python"]
            assert speed["numba"]["ns_per_sample"] < speed["python"]["ns_per_sample"]
