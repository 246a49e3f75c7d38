"""Logistic-map chaos source.

The map ``x -> 1 - 2x^2`` keeps [-1, 1] invariant and its invariant density
is the arcsine law, whose second moment is 1/2.  Samples are therefore scaled
by sqrt(2) so that the per-sample signal power is exactly one.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

SCALE = math.sqrt(2.0)
DEFAULT_BURN_IN = 1000
SEED_GUARD = 1e-6

# Points whose orbit lands on a fixed point (0.5 or -1) within three steps.
DEGENERATE_POINTS = (0.5, -0.5, 0.0, 1.0 / math.sqrt(2.0), -1.0 / math.sqrt(2.0), -1.0)


class InvalidSeedError(ValueError):
    pass


@dataclass(frozen=True)
class ChaoticSequence:
    samples: np.ndarray
    seed_state: float
    normalized: bool = True

    def __len__(self) -> int:
        return len(self.samples)


def logistic_next(x: float) -> float:
    """One step of the logistic map ``1 - 2x^2`` on [-1, 1]."""
    if not -1.0 <= x <= 1.0:
        raise ValueError(f"logistic map is defined on [-1, 1], got {x!r}")
    return 1.0 - 2.0 * x * x


def check_seed(seed: float) -> None:
    if not -1.0 < seed < 1.0:
        raise InvalidSeedError(f"seed must lie in (-1, 1), got {seed!r}")
    if any(seed == p for p in DEGENERATE_POINTS):
        raise InvalidSeedError(f"seed {seed!r} falls onto a fixed point of the map")


def generate(seed: float, count: int, burn_in: int = DEFAULT_BURN_IN) -> ChaoticSequence:
    """Iterate the map ``burn_in`` times from ``seed`` and emit ``count`` scaled samples.

    With ``burn_in=0`` the first emitted sample is ``sqrt(2) * seed``.
    """
    check_seed(seed)
    if count < 1:
        raise ValueError("count must be positive")
    if burn_in < 0:
        raise ValueError("burn_in must be nonnegative")

    x = float(seed)
    for _ in range(burn_in):
        x = 1.0 - 2.0 * x * x
    raw = np.empty(count)
    for k in range(count):
        raw[k] = x
        x = 1.0 - 2.0 * x * x
    return ChaoticSequence(samples=SCALE * raw, seed_state=float(seed), normalized=True)


def draw_seeds(rng: np.random.Generator, n: int) -> np.ndarray:
    """Uniform seeds on (-1, 1) pushed out of a small guard band around degenerate points."""
    seeds = rng.uniform(-1.0, 1.0, n)
    for p in DEGENERATE_POINTS:
        near = np.abs(seeds - p) < SEED_GUARD
        seeds[near] = p + np.copysign(SEED_GUARD, seeds[near] - p if p > -1.0 else 1.0)
    return seeds


def generate_batch(seeds: np.ndarray, count: int, burn_in: int = DEFAULT_BURN_IN) -> np.ndarray:
    """Vectorized :func:`generate`: one independent orbit per seed, shape ``(len(seeds), count)``."""
    x = np.array(seeds, dtype=float)
    tmp = np.empty_like(x)
    for _ in range(burn_in):
        np.multiply(x, x, out=tmp)
        tmp *= -2.0
        tmp += 1.0
        x, tmp = tmp, x
    out = np.empty((x.size, count))
    for k in range(count):
        out[:, k] = x
        np.multiply(x, x, out=tmp)
        tmp *= -2.0
        tmp += 1.0
        x, tmp = tmp, x
    out *= SCALE
    return out
