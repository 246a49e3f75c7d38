"""Counter-based random streams keyed by (master seed, block index, purpose).

Each stream is a Philox generator seeded from a ``SeedSequence`` whose spawn
key encodes where the draws are used, so any block of bits can be simulated
independently of how blocks are scheduled across workers.
"""
from __future__ import annotations

import enum

import numpy as np

RUN_LEVEL = 2**32 - 1


class Purpose(enum.IntEnum):
    BITS = 0
    CHAOS = 1
    NOISE = 2
    JAMMING = 3
    TONE_PHASES = 4
    SUBSEED = 5


def stream(seed: int, index: int, purpose: Purpose) -> np.random.Generator:
    ss = np.random.SeedSequence(entropy=seed, spawn_key=(int(index), int(purpose)))
    return np.random.Generator(np.random.Philox(ss))


def run_stream(seed: int, purpose: Purpose) -> np.random.Generator:
    """Stream for draws made once per run, such as tone phases."""
    return stream(seed, RUN_LEVEL, purpose)


def subseed(seed: int, index: int) -> int:
    """Deterministic 64-bit child seed for the ``index``-th point of a sweep."""
    ss = np.random.SeedSequence(entropy=seed, spawn_key=(RUN_LEVEL, int(Purpose.SUBSEED), int(index)))
    return int(ss.generate_state(1, dtype=np.uint64)[0])
