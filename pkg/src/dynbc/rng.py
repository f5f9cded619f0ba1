"""Deterministic, splittable random streams.

Stream coordinates (seed, label, label, ...) are collapsed into a single
64-bit value with splitmix64, and that value seeds an ordinary
``random.Random``. The mapping is pure integer arithmetic, so the same
coordinates produce the same draws on every platform, and distinct
coordinates give statistically independent streams. This is what lets
per-iteration sampling be replayed (or, in principle, run concurrently)
without sharing generator state.
"""

import random

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def splitmix64(x):
    """One splitmix64 scramble (Steele/Lea/Flood constants)."""
    x = (x + _GOLDEN) & _MASK
    x ^= x >> 30
    x = (x * 0xBF58476D1CE4E5B9) & _MASK
    x ^= x >> 27
    x = (x * 0x94D049BB133111EB) & _MASK
    x ^= x >> 31
    return x


def derive(seed, *labels):
    """Mix (seed, labels...) down to one 64-bit stream identifier."""
    h = splitmix64(seed & _MASK)
    for lab in labels:
        h = splitmix64(h ^ ((lab * _GOLDEN) & _MASK))
    return h


def stream(seed, *labels):
    """A fresh random.Random dedicated to the given stream coordinates."""
    return random.Random(derive(seed, *labels))
