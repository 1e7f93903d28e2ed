"""Deterministic random streams keyed by integer tuples.

Every stochastic routine in the package derives its generator from a key
such as ``(master_seed, point_index, trial_index)`` so that Monte Carlo
trials can run in any order, on any number of workers, and still produce
identical results.
"""

from __future__ import annotations

import numpy as np


def rng_from_key(*key: int) -> np.random.Generator:
    """Return a PCG64 generator seeded by the given integer key tuple.

    Keys must be non-negative integers. Distinct keys give statistically
    independent streams; equal keys give bitwise-identical streams.
    """
    parts = []
    for part in key:
        value = int(part)
        if value < 0:
            raise ValueError("rng keys must be non-negative integers")
        parts.append(value)
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(parts)))


def as_key(seed) -> tuple[int, ...]:
    """Normalize an int or tuple-of-ints seed into a key tuple."""
    if isinstance(seed, (tuple, list)):
        return tuple(int(s) for s in seed)
    return (int(seed),)
