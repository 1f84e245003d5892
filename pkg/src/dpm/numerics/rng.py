"""Seeded random source with deterministic child-stream derivation."""

from __future__ import annotations

import numpy as np

__all__ = ["SeededRng"]

_MASK64 = 0xFFFFFFFFFFFFFFFF


def _splitmix64(z: int) -> int:
    z = (z + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


class SeededRng:
    """PCG64 stream keyed by a 64-bit seed.

    The generator is numpy's PCG64 via ``default_rng(seed)``, which is
    specified and platform-stable: identical seeds give identical streams.
    ``child(i)`` derives an independent stream for task ``i`` by mixing
    (seed, i) through SplitMix64, so parallel work stays reproducible.
    """

    def __init__(self, seed: int):
        self.seed = int(seed) & _MASK64
        self.generator = np.random.default_rng(self.seed)

    def child(self, task_index: int) -> "SeededRng":
        mixed = _splitmix64(self.seed ^ _splitmix64((int(task_index) + 1) & _MASK64))
        return SeededRng(mixed)

    def __repr__(self) -> str:
        return f"SeededRng(seed={self.seed})"
