"""Exact rational arithmetic, binary expansions, the nu-entropy, and
rigorous interval enclosures of base-2 logarithms and Shannon entropies.

Rationals are :class:`fractions.Fraction` throughout.  Irrational
quantities (entropies, logarithms) are represented by :class:`Interval`
objects whose endpoints are exact dyadic rationals; a comparison between
an exact rational and an enclosure is settled by :func:`compare_exact`,
which refines the enclosure until it excludes the rational.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

import numpy as np
from mpmath.libmp import from_int, mpf_div, mpf_ln2, mpf_log

from .errors import (
    DomainError,
    EmptyWeightsError,
    NonPositiveWeightError,
    OrderTooLargeError,
    OverflowRegimeError,
    UndecidedError,
    WeightsError,
)

Rational = Fraction

#: Largest weight sum accepted: 64-bit weights with 128-bit intermediates.
MAX_WEIGHT_SUM = 2**63 - 1

#: Interval refinement policy for rational-vs-irrational comparisons.
START_PRECISION = 128
PRECISION_CAP = 8192

#: Iteration cap for :func:`multiplicative_order`.
ORDER_CAP = 2**26


# ---------------------------------------------------------------------------
# Weight vectors


@dataclass(frozen=True)
class WeightVector:
    """Coprime positive integer weights ``a_1..a_n`` with sum ``m``.

    ``divisor`` is the gcd that was divided out of the caller's raw list,
    ``k`` is the depth ``ceil(log2(m))`` of the minimal dyadic proposal.
    """

    weights: tuple[int, ...]
    m: int
    k: int
    divisor: int = 1

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def probabilities(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self.m) for a in self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __len__(self) -> int:
        return len(self.weights)


def normalize_weights(raw: Iterable[int], max_sum: int = MAX_WEIGHT_SUM) -> WeightVector:
    """Reduce a list of positive integers by its gcd.

    >>> w = normalize_weights([2, 4, 6])
    >>> w.weights, w.m, w.k, w.divisor
    ((1, 2, 3), 6, 3, 2)
    """
    values = list(raw)
    if not values:
        raise EmptyWeightsError("weight list is empty")
    for a in values:
        if isinstance(a, bool) or not isinstance(a, numbers.Integral):
            raise WeightsError(f"weight {a!r} is not an integer")
        if a <= 0:
            raise NonPositiveWeightError(f"weight {a} is not positive")
    values = [int(a) for a in values]
    g = math.gcd(*values)
    weights = tuple(a // g for a in values)
    m = sum(weights)
    if m > max_sum:
        raise OverflowRegimeError(f"weight sum m={m} exceeds the supported maximum {max_sum}")
    return WeightVector(weights, m, (m - 1).bit_length(), g)


# ---------------------------------------------------------------------------
# Intervals


def _as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Interval:
    """Closed interval ``[lo, hi]`` with exact rational endpoints."""

    lo: Fraction
    hi: Fraction
    precision_bits: int = field(default=0, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "lo", _as_fraction(self.lo))
        object.__setattr__(self, "hi", _as_fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x, precision_bits: int = 0) -> "Interval":
        x = _as_fraction(x)
        return cls(x, x, precision_bits)

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self) -> float:
        return float(self.mid)

    def contains(self, x) -> bool:
        x = _as_fraction(x)
        return self.lo <= x <= self.hi

    def overlaps(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def _prec(self, other) -> int:
        if isinstance(other, Interval):
            if not self.precision_bits:
                return other.precision_bits
            if not other.precision_bits:
                return self.precision_bits
            return min(self.precision_bits, other.precision_bits)
        return self.precision_bits

    def __add__(self, other) -> "Interval":
        if isinstance(other, Interval):
            return Interval(self.lo + other.lo, self.hi + other.hi, self._prec(other))
        other = _as_fraction(other)
        return Interval(self.lo + other, self.hi + other, self.precision_bits)

    __radd__ = __add__

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo, self.precision_bits)

    def __sub__(self, other) -> "Interval":
        return self + (-other)

    def __rsub__(self, other) -> "Interval":
        return (-self) + other

    def __mul__(self, other) -> "Interval":
        if isinstance(other, Interval):
            ends = [self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi]
            return Interval(min(ends), max(ends), self._prec(other))
        c = _as_fraction(other)
        if c >= 0:
            return Interval(self.lo * c, self.hi * c, self.precision_bits)
        return Interval(self.hi * c, self.lo * c, self.precision_bits)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Interval":
        if isinstance(other, Interval):
            raise TypeError("division by an interval is not supported")
        return self * (1 / _as_fraction(other))

    def __repr__(self) -> str:
        if self.is_point:
            return f"Interval({self.lo})"
        return f"Interval([{float(self.lo):.12g}, {float(self.hi):.12g}], prec={self.precision_bits})"


def compare_exact(
    value,
    enclosure: Callable[[int], Interval],
    start_bits: int = START_PRECISION,
    cap_bits: int = PRECISION_CAP,
) -> int:
    """Return the sign of ``X - value`` where ``X`` is enclosed by ``enclosure(bits)``.

    Precision starts at ``start_bits`` and doubles until the enclosure
    excludes ``value``.  Point enclosures are compared exactly.
    """
    value = _as_fraction(value)
    bits = start_bits
    while bits <= cap_bits:
        iv = enclosure(bits)
        if iv.lo > value:
            return 1
        if iv.hi < value:
            return -1
        if iv.is_point:
            return 0
        bits *= 2
    raise UndecidedError(f"could not separate {value} from enclosure at {cap_bits} bits")


# ---------------------------------------------------------------------------
# Binary expansions and the nu-entropy


def two_adic_split(m: int) -> tuple[int, int]:
    """Write ``m = 2**u * x`` with ``x`` odd; return ``(u, x)``."""
    if m <= 0:
        raise DomainError("m must be positive")
    u = (m & -m).bit_length() - 1
    return u, m >> u


def _small_factorization(x: int, bound: int = 1 << 20) -> dict[int, int] | None:
    """Prime factorization by trial division, or None if a cofactor above ``bound**2`` remains."""
    out: dict[int, int] = {}
    twos = (x & -x).bit_length() - 1
    if twos:
        out[2] = twos
        x >>= twos
    p = 3
    while p * p <= x and p <= bound:
        while x % p == 0:
            out[p] = out.get(p, 0) + 1
            x //= p
        p += 2
    if x > 1:
        if x > bound * bound:
            return None
        out[x] = out.get(x, 0) + 1
    return out


@lru_cache(maxsize=4096)
def multiplicative_order(x: int, cap: int = ORDER_CAP) -> int:
    """Smallest ``l >= 1`` with ``2**l = 1 (mod x)``; 0 for ``x = 1``."""
    if x < 1 or x % 2 == 0:
        raise DomainError(f"multiplicative order of 2 needs an odd positive modulus, got {x}")
    if x == 1:
        return 0
    factors = _small_factorization(x)
    phi_primes: set[int] = set()
    if factors is not None:
        for p in factors:
            sub = _small_factorization(p - 1)
            if sub is None:
                factors = None
                break
            phi_primes.update(sub)
    if factors is not None:
        # the order divides phi(x); remove prime factors while 2^l stays 1
        phi_primes.update(factors)
        ell = 1
        for p, e in factors.items():
            ell *= p ** (e - 1) * (p - 1)
        for q in phi_primes:
            while ell % q == 0 and pow(2, ell // q, x) == 1:
                ell //= q
        if ell > cap:
            raise OrderTooLargeError(f"order of 2 mod {x} exceeds {cap}")
        return ell
    r = 2 % x
    ell = 1
    while r != 1:
        if ell >= cap:
            raise OrderTooLargeError(f"order of 2 mod {x} exceeds {cap}")
        r = (2 * r) % x
        ell += 1
    return ell


@dataclass(frozen=True)
class BitExpansion:
    """Concise binary expansion ``0.(preperiod)(period)(period)...``."""

    preperiod: tuple[int, ...]
    period: tuple[int, ...]
    value: Fraction

    def bit(self, d: int) -> int:
        """The bit ``floor(2**d * value) mod 2`` for ``d >= 1``."""
        if d < 1:
            raise DomainError("bit positions start at 1")
        u = len(self.preperiod)
        if d <= u:
            return self.preperiod[d - 1]
        if not self.period:
            return 0
        return self.period[(d - u - 1) % len(self.period)]

    def bits(self, count: int) -> list[int]:
        return [self.bit(d) for d in range(1, count + 1)]


def _check_unit(x) -> Fraction:
    x = _as_fraction(x)
    if x < 0 or x > 1:
        raise DomainError(f"{x} is outside [0, 1]")
    return x


def _long_division_bits(num: int, den: int, count: int) -> tuple[int, list[int]]:
    bits = []
    r = num
    for _ in range(count):
        r <<= 1
        if r >= den:
            bits.append(1)
            r -= den
        else:
            bits.append(0)
    return r, bits


def binary_expansion(x) -> BitExpansion:
    """Preperiod and period of the concise binary expansion of ``x`` in [0, 1].

    >>> binary_expansion(Fraction(5, 6)).preperiod, binary_expansion(Fraction(5, 6)).period
    ((1,), (1, 0))
    """
    x = _check_unit(x)
    if x == 1 or x == 0:
        return BitExpansion((), (), x)
    u, odd = two_adic_split(x.denominator)
    ell = multiplicative_order(odd)
    r, pre = _long_division_bits(x.numerator, x.denominator, u)
    _, per = _long_division_bits(r, x.denominator, ell)
    return BitExpansion(tuple(pre), tuple(per), x)


def bit_at(x, d: int) -> int:
    """``floor(2**d * x) mod 2`` for rational ``x`` in [0, 1] and ``d >= 0``."""
    x = _check_unit(x)
    return (x.numerator << d) // x.denominator & 1


def _position_weighted(value: int) -> int:
    """Sum of ``b * 2**b`` over set bits ``b`` of ``value`` (split in halves, so long periods stay fast)."""
    n = value.bit_length()
    if n <= 64:
        total = 0
        while value:
            low = value & -value
            total += (low.bit_length() - 1) * low
            value ^= low
        return total
    h = n // 2
    hi, lo = value >> h, value & ((1 << h) - 1)
    return _position_weighted(lo) + ((_position_weighted(hi) + h * hi) << h)


def _weighted_bit_sum(value: int, width: int, offset: int = 0) -> int:
    """Sum of ``(offset + t) * 2**(width - t)`` over set bits at positions t=1..width."""
    return (offset + width) * value - _position_weighted(value)


def nu_exact(x) -> Fraction:
    """Exact value of ``sum_d d * eps_d(x) * 2**-d`` for rational ``x`` in [0, 1].

    The periodic tail is summed in closed form.  By convention
    ``nu(0) = nu(1) = 0``.

    >>> nu_exact(Fraction(7, 8)), nu_exact(Fraction(1, 3))
    (Fraction(11, 8), Fraction(8, 9))
    """
    x = _check_unit(x)
    if x == 0 or x == 1:
        return Fraction(0)
    u, odd = two_adic_split(x.denominator)
    # preperiod as a u-bit integer, remainder drives the periodic part
    pre = (x.numerator << u) // x.denominator
    pre_sum = _weighted_bit_sum(pre, u)
    if odd == 1:
        return Fraction(pre_sum, 1 << u)
    ell = multiplicative_order(odd)
    rem = (x.numerator << u) - pre * x.denominator
    per = (rem << ell) // x.denominator
    s1 = _weighted_bit_sum(per, ell)
    # geometric sum over repeated periods, kept in integers: one gcd at the end
    q = (1 << ell) - 1
    tail_num = (u * per + s1) * q + ell * per
    return Fraction(pre_sum * q * q + tail_num, q * q << u)


def nu_dyadic_numerator(a: int, depth: int) -> int:
    """``2**depth * nu(a / 2**depth)`` as an exact integer, for ``0 <= a <= 2**depth``."""
    if a < 0 or a > (1 << depth):
        raise DomainError(f"{a}/2^{depth} is outside [0, 1]")
    if a == 1 << depth:
        return 0
    return _weighted_bit_sum(a, depth)


def nu_dyadic(a: int, depth: int) -> Fraction:
    return Fraction(nu_dyadic_numerator(a, depth), 1 << depth)


# ---------------------------------------------------------------------------
# Logarithm and entropy enclosures


def _mpf_to_fraction(v) -> Fraction:
    sign, man, exp, _ = v
    man = int(man)
    if sign:
        man = -man
    if exp >= 0:
        return Fraction(man << exp)
    return Fraction(man, 1 << -exp)


@lru_cache(maxsize=4096)
def _log2_odd_bounds(b: int, wp: int) -> tuple[Fraction, Fraction]:
    ln_lo = mpf_log(from_int(b), wp, "f")
    ln_hi = mpf_log(from_int(b), wp, "c")
    lo = _mpf_to_fraction(mpf_div(ln_lo, mpf_ln2(wp, "c"), wp, "f"))
    hi = _mpf_to_fraction(mpf_div(ln_hi, mpf_ln2(wp, "f"), wp, "c"))
    # one extra ulp each way so correctness never rests on libm rounding
    slack = Fraction(b.bit_length(), 1 << (wp - 2))
    return lo - slack, hi + slack


def log2_interval(x, precision_bits: int) -> Interval:
    """Enclosure of ``log2(x)`` for positive rational ``x``; exact for powers of two."""
    x = _as_fraction(x)
    if x <= 0:
        raise DomainError("log2 of a non-positive number")
    if precision_bits <= 0:
        raise DomainError("precision_bits must be positive")
    un, on = two_adic_split(x.numerator)
    ud, od = two_adic_split(x.denominator)
    result = Interval.point(un - ud, precision_bits)
    wp = precision_bits + 16
    if on != 1:
        lo, hi = _log2_odd_bounds(on, wp)
        result = result + Interval(lo, hi, precision_bits)
    if od != 1:
        lo, hi = _log2_odd_bounds(od, wp)
        result = result - Interval(lo, hi, precision_bits)
    return result


def _coprime_base(values: Iterable[int]) -> list[int]:
    base: list[int] = []
    work = [v for v in values if v > 1]
    while work:
        y = work.pop()
        if y == 1:
            continue
        for idx, b in enumerate(base):
            g = math.gcd(y, b)
            if g > 1:
                base.pop(idx)
                work.extend((g, b // g, y // g))
                break
        else:
            base.append(y)
    return sorted(base)


def _exponents(v: int, base: Sequence[int]) -> dict[int, int]:
    out = {}
    for b in base:
        e = 0
        while v % b == 0:
            v //= b
            e += 1
        if e:
            out[b] = e
    if v != 1:
        raise AssertionError("coprime base does not cover value")
    return out


@lru_cache(maxsize=1024)
def _entropy_log_form(weights: tuple[int, ...]) -> tuple[Fraction, tuple[tuple[Fraction, int], ...]]:
    """Write ``H(P) = r + sum_j c_j * log2(b_j)`` with pairwise coprime odd ``b_j > 1``.

    Logarithms of pairwise coprime integers are linearly independent over
    the rationals, so ``H(P)`` is rational exactly when no term survives.
    """
    m = sum(weights)
    counts: dict[int, int] = {}
    for a in weights:
        counts[a] = counts.get(a, 0) + 1
    odd_parts = {two_adic_split(v)[1] for v in list(counts) + [m]}
    base = _coprime_base(odd_parts)

    u_m, odd_m = two_adic_split(m)
    rational = Fraction(u_m)
    coef: dict[int, Fraction] = {b: Fraction(e) for b, e in _exponents(odd_m, base).items()}
    for a, mult in counts.items():
        u_a, odd_a = two_adic_split(a)
        rational -= Fraction(a * mult * u_a, m)
        for b, e in _exponents(odd_a, base).items():
            coef[b] = coef.get(b, Fraction(0)) - Fraction(a * mult * e, m)
    terms = tuple((c, b) for b, c in sorted(coef.items()) if c != 0)
    return rational, terms


def _weights_of(P) -> tuple[int, ...]:
    if isinstance(P, WeightVector):
        return P.weights
    return normalize_weights(P).weights


def entropy_exact(P) -> Fraction | None:
    """``H(P)`` as a rational when it is rational, otherwise ``None``."""
    rational, terms = _entropy_log_form(_weights_of(P))
    return None if terms else rational


def entropy_interval(P, precision_bits: int = START_PRECISION) -> Interval:
    """Enclosure of the Shannon entropy (bits) of the distribution ``P``.

    The width is at most ``2**(1 - precision_bits) * n``; rational
    entropies come back as point intervals.
    """
    if precision_bits <= 0:
        raise DomainError("precision_bits must be positive")
    rational, terms = _entropy_log_form(_weights_of(P))
    total = Interval.point(rational, precision_bits)
    if not terms:
        return total
    guard = 24 + len(terms).bit_length() + max(abs(c).numerator.bit_length() for c, _ in terms)
    wp = precision_bits + guard
    for c, b in terms:
        lo, hi = _log2_odd_bounds(b, wp)
        total = total + Interval(lo, hi, precision_bits) * c
    return total


def h1_interval(x, precision_bits: int = START_PRECISION) -> Interval:
    """Enclosure of ``x * log2(1/x)`` (zero at ``x = 0``)."""
    x = _check_unit(x)
    if x == 0:
        return Interval.point(0, precision_bits)
    return -(log2_interval(x, precision_bits) * x)


def binary_entropy_interval(x, precision_bits: int = START_PRECISION) -> Interval:
    """Enclosure of ``H_b(x) = H_1(x) + H_1(1 - x)``."""
    x = _check_unit(x)
    if x == 0 or x == 1:
        return Interval.point(0, precision_bits)
    return entropy_interval((x.numerator, x.denominator - x.numerator), precision_bits)


# ---------------------------------------------------------------------------
# Carries


def _bits_lsb(v: int) -> np.ndarray:
    return np.array([(v >> i) & 1 for i in range(v.bit_length())], dtype=np.int64)


def multiplication_carries(x: int, y: int) -> bool:
    """True iff the digit-polynomial product of ``x`` and ``y`` has a coefficient >= 2.

    >>> multiplication_carries(3, 5), multiplication_carries(3, 3)
    (False, True)
    """
    if x < 1 or y < 1:
        raise DomainError("multiplication_carries needs positive integers")
    conv = np.convolve(_bits_lsb(x), _bits_lsb(y))
    return bool(conv.max() >= 2)


def _is_dyadic(x: Fraction) -> bool:
    d = x.denominator
    return d & (d - 1) == 0


def addition_carries(x, y) -> bool:
    """True iff the base-2 addition ``x + y`` of rationals in [0, 1] carries.

    A carry happens when both concise expansions share a set bit, or when
    the sum is dyadic while a summand is not.
    """
    x, y = _check_unit(x), _check_unit(y)
    s = x + y
    if s > 1:
        raise DomainError(f"{x} + {y} exceeds 1")
    if _is_dyadic(s) and not (_is_dyadic(x) and _is_dyadic(y)):
        return True
    ux, ox = two_adic_split(x.denominator)
    uy, oy = two_adic_split(y.denominator)
    u = max(ux, uy)
    lx, ly = multiplicative_order(ox), multiplicative_order(oy)
    period = math.lcm(lx, ly) if lx and ly else max(lx, ly)

    def split(v: Fraction) -> tuple[int, int]:
        head = (v.numerator << u) // v.denominator
        frac = Fraction(v.numerator << u, v.denominator) - head
        tail = int(frac * ((1 << period) - 1)) if period else 0
        return head, tail

    hx, tx = split(x)
    hy, ty = split(y)
    return bool((hx & hy) or (tx & ty))


def is_power_of_two(v: int) -> bool:
    return v > 0 and v & (v - 1) == 0
