"""Deterministic random stream for scenario runs.

Scenario reproducibility is a file-format promise: the same config must
produce byte-identical outputs on any host or language. The stdlib Mersenne
Twister is deterministic but its float path and language-specific stream
layout make it a poor cross-implementation contract, so scenarios use
splitmix64 — a tiny, widely documented 64-bit generator that is trivial to
reimplement from its three constants.

Stream contract (documented for independent reimplementation):

* state starts at ``seed`` taken modulo 2**64;
* each step adds 0x9E3779B97F4A7C15 to the state and returns the state
  passed through two xor-shift-multiply rounds (0xBF58476D1CE4E5B9 with
  shift 30, 0x94D049BB133111EB with shift 27) and a final 31-bit xor-shift;
* bounded draws use plain modulo. The modulo bias is at most ``bound/2**64``
  and is accepted in exchange for exact reproducibility — rejection
  sampling would make the number of raw draws data-dependent.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """splitmix64 generator producing a reproducible uint64 stream."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_uint64(self) -> int:
        """Advance one step and return the next 64-bit output."""
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Return an integer in [0, bound) via one modulo-reduced draw.

        ``bound`` must be positive. Consumes exactly one uint64 regardless
        of the bound, which keeps draw counts config-independent.
        """
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        return self.next_uint64() % bound
