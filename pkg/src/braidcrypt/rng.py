"""Deterministic sampling from a caller-supplied seed.

Output block ``j`` of a stream is ``SHA-256(seed || j)`` with ``j`` encoded as an
8-byte big-endian counter. Integers are drawn from consecutive 8-byte chunks of
that output with rejection sampling, so every draw is unbiased and the whole
sequence is a pure function of the seed.
"""

from __future__ import annotations

import hashlib

_CHUNK = 8
_SPACE = 1 << (8 * _CHUNK)


class SeedStream:
    def __init__(self, seed: bytes):
        if not seed:
            raise ValueError("seed must be nonempty")
        self._seed = bytes(seed)
        self._counter = 0
        self._buffer = b""

    def read(self, size: int) -> bytes:
        while len(self._buffer) < size:
            block = self._seed + self._counter.to_bytes(8, "big")
            self._buffer += hashlib.sha256(block).digest()
            self._counter += 1
        out, self._buffer = self._buffer[:size], self._buffer[size:]
        return out

    def randbelow(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)``."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = _SPACE - _SPACE % bound
        while True:
            value = int.from_bytes(self.read(_CHUNK), "big")
            if value < limit:
                return value % bound

    def randint(self, low: int, high: int) -> int:
        """Uniform integer in ``[low, high]``, both ends inclusive."""
        return low + self.randbelow(high - low + 1)
