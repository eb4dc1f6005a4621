"""Fair-coin bit sources with flip accounting."""

from __future__ import annotations

import os
from typing import Iterable, Protocol, runtime_checkable

from .._kernels import MASK64, splitmix_block
from ..errors import SourceExhaustedError


@runtime_checkable
class BitSource(Protocol):
    def flip(self) -> int:
        """Return one fair bit."""
        ...


class SeededSource:
    """Deterministic counter-based stream.

    Block ``i`` is SplitMix64's output mix applied to
    ``seed + (i + 1) * 0x9E3779B97F4A7C15``; bits are read from each
    64-bit block most-significant first.  The entire state is ``position``,
    the index of the next bit, which also equals the number of flips taken.
    """

    def __init__(self, seed: int, position: int = 0):
        self.seed = int(seed) & MASK64
        self.position = int(position)
        self._idx = -1
        self._blk = 0

    def flip(self) -> int:
        pos = self.position
        idx = pos >> 6
        if idx != self._idx:
            self._blk = splitmix_block(self.seed, idx)
            self._idx = idx
        self.position = pos + 1
        return (self._blk >> (63 - (pos & 63))) & 1

    def fork(self) -> "SeededSource":
        return SeededSource(self.seed, self.position)

    def __repr__(self) -> str:
        return f"SeededSource(seed={self.seed}, position={self.position})"


class OSEntropySource:
    """Bits from the operating system's cryptographic RNG, buffered."""

    def __init__(self, chunk: int = 4096):
        self._chunk = chunk
        self._buf = b""
        self._bit = 0

    def flip(self) -> int:
        byte_idx = self._bit >> 3
        if byte_idx >= len(self._buf):
            self._buf = os.urandom(self._chunk)
            self._bit = 0
            byte_idx = 0
        b = (self._buf[byte_idx] >> (7 - (self._bit & 7))) & 1
        self._bit += 1
        return b


class ListSource:
    """Replays a fixed bit sequence; optionally cycles."""

    def __init__(self, bits: Iterable[int], cycle: bool = False):
        self.bits = [int(b) for b in bits]
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("bits must be 0 or 1")
        self.cycle = cycle
        self.position = 0

    def flip(self) -> int:
        if self.position >= len(self.bits):
            if not self.cycle or not self.bits:
                raise SourceExhaustedError(f"scripted source exhausted after {self.position} bits")
            self.position = 0
        b = self.bits[self.position]
        self.position += 1
        return b


class ConstantSource:
    """Always returns the same bit (a deliberately broken source)."""

    def __init__(self, bit: int = 0):
        self.bit = int(bit)

    def flip(self) -> int:
        return self.bit


class CountingSource:
    """Wraps a source and counts delegated flips."""

    def __init__(self, inner: BitSource):
        self.inner = inner
        self.flips = 0

    def flip(self) -> int:
        self.flips += 1
        return self.inner.flip()

    def reset(self) -> None:
        self.flips = 0


def seeded_core(source) -> tuple[SeededSource | None, CountingSource | None]:
    """Return the underlying :class:`SeededSource` (and counting wrapper) if batchable."""
    if isinstance(source, SeededSource):
        return source, None
    if isinstance(source, CountingSource) and isinstance(source.inner, SeededSource):
        return source.inner, source
    return None, None
