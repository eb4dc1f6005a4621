"""Batch sampling kernels.

Each kernel is written once and instantiated twice: compiled with
``numba.njit`` and as plain Python.  The compiled variant is used unless
numba is missing or the environment variable ``ALDR_DISABLE_NUMBA`` is set
to a true value.  Both variants read the counter-based SplitMix64 stream
of :class:`aldr.samplers.SeededSource` directly from ``(seed, position)``
and return the advanced position, so the two backends are bit-identical.
Per-sample flip counts are written alongside the labels.
"""

import os

import numpy as np

GOLDEN = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB
MASK64 = (1 << 64) - 1


def _flag(name):
    return os.environ.get(name, "").strip().lower() not in ("", "0", "false", "no", "off")


NUMBA_DISABLED = _flag("ALDR_DISABLE_NUMBA")

try:
    if NUMBA_DISABLED:
        raise ImportError("disabled by ALDR_DISABLE_NUMBA")
    from numba import njit
except ImportError:
    njit = None


def splitmix_block(seed, idx):
    """64-bit block ``idx`` of the stream for ``seed`` (pure Python)."""
    z = (seed + (idx + 1) * GOLDEN) & MASK64
    z = ((z ^ (z >> 30)) * MIX1) & MASK64
    z = ((z ^ (z >> 27)) * MIX2) & MASK64
    return z ^ (z >> 31)


def _py_bit(seed, pos, blk, blk_idx):
    idx = pos >> 6
    if idx != blk_idx:
        blk = splitmix_block(seed, idx)
        blk_idx = idx
    return (blk >> (63 - (pos & 63))) & 1, blk, blk_idx


def _make_nb_bit():
    golden, m1, m2 = np.uint64(GOLDEN), np.uint64(MIX1), np.uint64(MIX2)
    s30, s27, s31, s63, one = np.uint64(30), np.uint64(27), np.uint64(31), np.uint64(63), np.uint64(1)

    @njit(inline="always")
    def block(seed, idx):
        z = seed + np.uint64(idx + 1) * golden
        z = (z ^ (z >> s30)) * m1
        z = (z ^ (z >> s27)) * m2
        return z ^ (z >> s31)

    @njit(inline="always")
    def bit(seed, pos, blk, blk_idx):
        idx = pos >> 6
        if idx != blk_idx:
            blk = block(seed, idx)
            blk_idx = idx
        return np.int64((blk >> (s63 - np.uint64(pos & 63))) & one), blk, blk_idx

    return bit


def _make_kernels(bit, jit):
    def aldr_batch(internal, offsets, F, seed, pos, out, flips):
        blk_idx = (pos >> 6) - 1  # forces a block load on the first bit
        blk = seed ^ seed
        for s in range(len(out)):
            start = pos
            d = 0
            v = 0
            while True:
                if v >= internal[d]:
                    label = F[offsets[d] + v - internal[d]]
                    if label != 0:
                        out[s] = label
                        flips[s] = pos - start
                        break
                    d = 0
                    v = 0
                    continue
                b, blk, blk_idx = bit(seed, pos, blk, blk_idx)
                pos += 1
                v = 2 * v + b
                d += 1
        return pos

    def alias_batch(primary, alias, thresh, m, n, seed, pos, out, flips):
        blk_idx = (pos >> 6) - 1
        blk = seed ^ seed
        for s in range(len(out)):
            start = pos
            # uniform column index, entropy-recycling fast dice roller
            col = 0
            if n > 1:
                v = 1
                c = 0
                while True:
                    b, blk, blk_idx = bit(seed, pos, blk, blk_idx)
                    pos += 1
                    v = 2 * v
                    c = 2 * c + b
                    if v >= n:
                        if c < n:
                            col = c
                            break
                        v -= n
                        c -= n
            # lazy Bernoulli(thresh[col] / m)
            t = thresh[col]
            take = 1
            if t < m:
                take = 0
                r = t
                while r != 0:
                    r = 2 * r
                    pbit = 0
                    if r >= m:
                        pbit = 1
                        r -= m
                    b, blk, blk_idx = bit(seed, pos, blk, blk_idx)
                    pos += 1
                    if b < pbit:
                        take = 1
                        break
                    if b > pbit:
                        break
            out[s] = primary[col] if take == 1 else alias[col]
            flips[s] = pos - start
        return pos

    if jit is not None:
        return jit(nogil=True)(aldr_batch), jit(nogil=True)(alias_batch)
    return aldr_batch, alias_batch


class Backend:
    """A named pair of batch kernels."""

    def __init__(self, name, aldr_batch, alias_batch, compiled):
        self.name = name
        self.aldr_batch = aldr_batch
        self.alias_batch = alias_batch
        self.compiled = compiled

    def prepare_seed(self, seed):
        return np.uint64(seed) if self.compiled else int(seed)

    def prepare_array(self, arr):
        return np.ascontiguousarray(arr, dtype=np.int64) if self.compiled else [int(x) for x in arr]

    def __repr__(self):
        return f"Backend({self.name!r})"


PYTHON = Backend("python", *_make_kernels(_py_bit, None), compiled=False)
NUMBA = Backend("numba", *_make_kernels(_make_nb_bit(), njit), compiled=True) if njit is not None else None
DEFAULT = NUMBA if NUMBA is not None else PYTHON


def get_backend(name=None):
    """Resolve ``"numba"``, ``"python"`` or ``None`` (the default backend)."""
    if name is None:
        return DEFAULT
    if name == "python":
        return PYTHON
    if name == "numba":
        if NUMBA is None:
            raise RuntimeError("numba backend unavailable (not installed or disabled)")
        return NUMBA
    raise ValueError(f"unknown backend {name!r}")
