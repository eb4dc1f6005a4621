import itertools
import math
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from aldr import _kernels
from aldr.analysis import expected_cost_exact
from aldr.errors import BudgetExhaustedError, InvalidRuleError, OverflowRegimeError, SourceExhaustedError
from aldr.exactmath import normalize_weights, nu_exact
from aldr.samplers import (
    AldrSampler,
    ConstantSource,
    CountingSource,
    ListSource,
    OSEntropySource,
    SeededSource,
    aldr_preprocess,
    aldr_sample,
    aldr_sample_many,
    alias_preprocess,
    alias_sample,
    alias_sample_many,
    bernoulli_expected_cost,
    bernoulli_sample,
    enumerate_outcomes,
    parse_rule,
    uniform_expected_cost,
    uniform_sample,
)

weights_st = st.lists(st.integers(1, 60), min_size=1, max_size=6)


class TestSources:
    def test_seeded_reference_bits(self):
        # first block of the stream for seed 0 is the SplitMix64 output 0xE220A8397B1DCDAF
        s = SeededSource(0)
        bits = [s.flip() for _ in range(64)]
        assert int("".join(map(str, bits)), 2) == 0xE220A8397B1DCDAF
        assert s.position == 64

    def test_seeded_is_reproducible_and_resumable(self):
        a = SeededSource(123)
        first = [a.flip() for _ in range(200)]
        b = SeededSource(123, position=70)
        assert [b.flip() for _ in range(130)] == first[70:]

    def test_seeded_balance(self):
        s = SeededSource(99)
        ones = sum(s.flip() for _ in range(200_000))
        assert abs(ones - 100_000) < 5 * math.sqrt(50_000)

    def test_counting(self):
        c = CountingSource(SeededSource(1))
        for _ in range(17):
            c.flip()
        assert c.flips == 17 and c.inner.position == 17

    def test_list_source(self):
        s = ListSource([1, 0])
        assert (s.flip(), s.flip()) == (1, 0)
        with pytest.raises(SourceExhaustedError):
            s.flip()
        cyc = ListSource([1, 0], cycle=True)
        assert [cyc.flip() for _ in range(5)] == [1, 0, 1, 0, 1]
        with pytest.raises(ValueError):
            ListSource([2])

    def test_os_entropy(self):
        s = OSEntropySource(chunk=8)
        bits = [s.flip() for _ in range(1000)]
        assert set(bits) <= {0, 1}
        assert 300 < sum(bits) < 700


class TestRules:
    def test_rules(self):
        assert parse_rule("fldr")(5) == 5
        assert parse_rule("2k")(5) == 10
        assert parse_rule(None)(3) == 6
        assert parse_rule("K=12")(5) == 12
        assert parse_rule(12)(5) == 12
        assert parse_rule(lambda k: k + 1)(5) == 6
        with pytest.raises(InvalidRuleError):
            parse_rule("3k")

    def test_rule_below_k(self):
        with pytest.raises(InvalidRuleError):
            aldr_preprocess([4, 7, 8], "K=4")

    def test_depth_regime(self):
        with pytest.raises(OverflowRegimeError):
            aldr_preprocess([4, 7, 8], "K=128")
        assert aldr_preprocess([4, 7, 8], "K=127").K == 127


class TestAldrPreprocess:
    @pytest.mark.parametrize(
        "K, c, a0, A",
        [
            (5, 1, 13, (4, 7, 8)),
            (6, 3, 7, (12, 21, 24)),
            (8, 13, 9, (52, 91, 104)),
            (18, 13797, 1, (55188, 96579, 110376)),
        ],
    )
    def test_four_seven_eight(self, K, c, a0, A):
        s = aldr_preprocess([4, 7, 8], K)
        assert (s.K, s.c, s.reject_weight, s.proposal.weights) == (K, c, a0, A)

    def test_default_is_doubling(self):
        assert aldr_preprocess([4, 7, 8]).K == 10

    def test_dyadic_no_rejection(self):
        for rule in ("fldr", "2k", "K=9"):
            assert aldr_preprocess([1, 1], rule).reject_weight == 0


class TestAldrSample:
    def test_fair_coin_scripted(self):
        s = aldr_preprocess([1, 1])
        assert aldr_sample(s, ListSource([0])) == 1
        assert aldr_sample(s, ListSource([1])) == 2

    def test_one_four_scripted(self):
        s = aldr_preprocess([1, 4], "fldr")
        assert aldr_sample(s, ListSource([1])) == 2
        # 0,0,0 reaches the reject leaf at depth 3; the walk restarts and reads 1
        src = ListSource([0, 0, 0, 1])
        assert aldr_sample(s, src) == 2 and src.position == 4
        src = ListSource([0, 0, 1])
        assert aldr_sample(s, src) == 1 and src.position == 3
        # 0,1 is the reject leaf at depth 2
        src = ListSource([0, 1, 1])
        assert aldr_sample(s, src) == 2 and src.position == 3

    def test_single_outcome_uses_no_flips(self):
        s = aldr_preprocess([7])
        c = CountingSource(SeededSource(0))
        assert aldr_sample(s, c) == 1 and c.flips == 0

    def test_budget(self):
        s = aldr_preprocess([1, 4], "fldr")
        with pytest.raises(BudgetExhaustedError):
            aldr_sample(s, ConstantSource(0), budget=50)

    @given(weights_st, st.sampled_from(["fldr", "2k"]))
    def test_short_strings_agree_with_enumeration(self, ws, rule):
        # every bit string of length D through the real sampler
        s = aldr_preprocess(ws, rule)
        D = min(10, s.K + 3)
        hits = [0] * s.n
        for bits in itertools.product((0, 1), repeat=D):
            try:
                hits[aldr_sample(s, ListSource(bits)) - 1] += 1
            except SourceExhaustedError:
                pass
        res = enumerate_outcomes(s, D)
        assert [F(h, 2**D) for h in hits] == list(res.resolved)

    @given(weights_st, st.integers(0, 4), st.integers(0, 2**32))
    def test_restart_statelessness(self, ws, forced, seed):
        # forcing rejections first does not change what follows
        s = aldr_preprocess(ws, "fldr")
        if s.reject_weight == 0:
            return
        # a bit string that ends on a reject leaf
        prefix = None
        for D in range(1, s.K + 1):
            for bits in itertools.product((0, 1), repeat=D):
                d = v = 0
                ok = True
                for b in bits:
                    if v >= s.table.internal_nodes[d]:
                        ok = False
                        break
                    v, d = 2 * v + b, d + 1
                if ok and v >= s.table.internal_nodes[d]:
                    if s.table.F[s.table.offsets[d] + v - s.table.internal_nodes[d]] == 0:
                        prefix = list(bits)
                        break
            if prefix:
                break
        tail = SeededSource(seed)
        tail_bits = [tail.flip() for _ in range(400)]
        plain = aldr_sample(s, ListSource(tail_bits))
        assert aldr_sample(s, ListSource(prefix * forced + tail_bits)) == plain


class TestBatch:
    @pytest.mark.parametrize("ws", [[4, 7, 8], [1, 4], [1], [3, 5, 9, 2, 11]])
    def test_batch_matches_scalar(self, ws):
        s = aldr_preprocess(ws)
        ref_src = SeededSource(77)
        ref = [aldr_sample(s, ref_src) for _ in range(500)]
        for backend in ["python"] + (["numba"] if _kernels.NUMBA is not None else []):
            src = CountingSource(SeededSource(77))
            labels, flips = aldr_sample_many(s, src, 500, backend, return_flips=True)
            assert labels.tolist() == ref
            assert src.flips == ref_src.position == int(flips.sum())

    @pytest.mark.parametrize("ws", [[4, 7, 8], [1, 3], [1], [5, 5, 1, 9]])
    def test_alias_batch_matches_scalar(self, ws):
        t = alias_preprocess(ws)
        ref_src = SeededSource(5)
        ref = [alias_sample(t, ref_src) for _ in range(500)]
        for backend in ["python"] + (["numba"] if _kernels.NUMBA is not None else []):
            src = SeededSource(5)
            labels, flips = alias_sample_many(t, src, 500, backend, return_flips=True)
            assert labels.tolist() == ref
            assert src.position == ref_src.position == int(flips.sum())

    def test_generic_source_path(self):
        s = aldr_preprocess([4, 7, 8])
        labels, flips = aldr_sample_many(s, ListSource([1, 0, 1, 1, 0, 1, 0, 0], cycle=True), 20, return_flips=True)
        assert labels.shape == (20,) and flips.min() >= 1

    def test_determinism(self):
        s = aldr_preprocess([4, 7, 8], "2k")
        a = aldr_sample_many(s, SeededSource(1), 1000)
        b = aldr_sample_many(s, SeededSource(1), 1000)
        assert np.array_equal(a, b)


class TestUniform:
    def test_trivial(self):
        c = CountingSource(SeededSource(0))
        assert uniform_sample(1, c) == 1 and c.flips == 0
        assert uniform_sample(2, ListSource([0])) == 1
        assert uniform_sample(2, ListSource([1])) == 2

    def test_exact_costs(self):
        assert uniform_expected_cost(1) == 0
        assert uniform_expected_cost(2) == 1
        assert uniform_expected_cost(3) == F(8, 3)
        assert uniform_expected_cost(8) == 3

    @pytest.mark.parametrize("n", [3, 5, 6, 7, 12])
    def test_cost_against_enumeration(self, n):
        # exact mean from enumerating bit strings: sum over t of P(still running after t flips)
        running = {(1, 0): 1}
        total = F(0)
        for t in range(200):
            total += F(sum(running.values()), 2**t)
            nxt = {}
            for (v, c), cnt in running.items():
                for b in (0, 1):
                    v2, c2 = 2 * v, 2 * c + b
                    if v2 >= n:
                        if c2 < n:
                            continue
                        v2, c2 = v2 - n, c2 - n
                    nxt[(v2, c2)] = nxt.get((v2, c2), 0) + cnt
            running = nxt
        assert abs(total - uniform_expected_cost(n)) < F(1, 10**40)

    def test_three_empirical(self):
        src = CountingSource(SeededSource(2024))
        N = 10**6 // 4
        counts = np.bincount([uniform_sample(3, src) for _ in range(N)], minlength=4)
        assert abs(src.flips / N - 8 / 3) < 3 * 1.5 / math.sqrt(N)
        assert all(abs(c - N / 3) < 5 * math.sqrt(N * 2 / 9) for c in counts[1:])


class TestBernoulli:
    def test_degenerate(self):
        c = CountingSource(SeededSource(0))
        assert bernoulli_sample(0, c) == 0 and bernoulli_sample(1, c) == 1 and c.flips == 0

    def test_costs(self):
        assert bernoulli_expected_cost(F(1, 2)) == 1
        assert bernoulli_expected_cost(F(1, 4)) == F(3, 2)
        assert bernoulli_expected_cost(F(1, 3)) == 2
        assert nu_exact(F(1, 3)) + nu_exact(F(2, 3)) == 2

    @pytest.mark.parametrize("p", [F(1, 3), F(1, 4), F(5, 7), F(3, 10)])
    def test_exact_by_enumeration(self, p):
        # probability of returning 1 over all bit strings of length 40
        D = 40
        ones, tail, cost = F(0), F(0), F(0)
        states = {p.numerator: 1}
        for t in range(D):
            nxt = {}
            for r, cnt in states.items():
                r2 = 2 * r
                pbit = 1 if r2 >= p.denominator else 0
                r2 -= pbit * p.denominator
                for u in (0, 1):
                    mass = F(cnt, 2 ** (t + 1))
                    if u < pbit:
                        ones += mass
                        cost += mass * (t + 1)
                    elif u > pbit or r2 == 0:
                        cost += mass * (t + 1)
                    else:
                        nxt[r2] = nxt.get(r2, 0) + cnt
            states = nxt
        tail = F(sum(states.values()), 2**D)
        assert ones <= p <= ones + tail
        assert cost <= bernoulli_expected_cost(p) <= cost + tail * 100

    def test_lazy_scripted(self):
        # p = 1/4 = 0.01: first flip 1 already exceeds p
        assert bernoulli_sample(F(1, 4), ListSource([1])) == 0
        assert bernoulli_sample(F(1, 4), ListSource([0, 0])) == 1
        assert bernoulli_sample(F(1, 4), ListSource([0, 1])) == 0


class TestAlias:
    def test_fair_coin(self):
        t = alias_preprocess([1, 1])
        assert all(c.threshold == 1 for c in t.columns)
        assert t.expected_cost() == 1

    def test_one_three(self):
        t = alias_preprocess([1, 3])
        c1, c2 = t.columns
        assert (c1.primary, c1.threshold, c1.alias) == (1, F(1, 2), 2)
        assert (c2.primary, c2.threshold) == (2, 1)
        assert t.reconstruct() == [F(1, 4), F(3, 4)]
        assert t.expected_cost() <= math.ceil(math.log2(2)) + 3

    def test_dyadic_uniform(self):
        t = alias_preprocess([1] * 8)
        assert all(c.threshold == 1 and c.alias == c.primary for c in t.columns)
        assert t.expected_cost() == 3

    @given(st.lists(st.integers(1, 10**6), min_size=1, max_size=40))
    def test_reconstruction_identity(self, ws):
        w = normalize_weights(ws)
        t = alias_preprocess(w)
        assert t.reconstruct() == list(w.probabilities)
        for c in t.columns:
            assert 0 <= c.threshold <= 1
            assert (w.n * w.m) % c.threshold.denominator == 0


class TestEnumeration:
    @given(weights_st, st.sampled_from(["fldr", "2k"]))
    def test_aldr_brackets(self, ws, rule):
        s = aldr_preprocess(ws, rule)
        res = enumerate_outcomes(s, 3 * s.K)
        assert res.brackets_hold(s.weights.probabilities)
        # one trial rejects with probability A_0/2^K; 3 trials fit in 3K flips
        assert res.unresolved <= F(s.reject_weight, 2**s.K) ** 3 * 2 ** 0 + F(0)

    @given(weights_st)
    def test_alias_brackets(self, ws):
        t = alias_preprocess(ws)
        res = enumerate_outcomes(t, 40)
        assert res.brackets_hold(t.weights.probabilities)
        assert res.unresolved < F(1, 2**10)

    def test_rejects_unknown(self):
        with pytest.raises(TypeError):
            enumerate_outcomes(object(), 3)


def test_samplers_are_shareable_across_threads():
    from concurrent.futures import ThreadPoolExecutor

    s = aldr_preprocess([4, 7, 8])

    def run(seed):
        return aldr_sample_many(s, SeededSource(seed), 2000).tolist()

    with ThreadPoolExecutor(4) as pool:
        par = list(pool.map(run, range(8)))
    assert par == [run(seed) for seed in range(8)]
