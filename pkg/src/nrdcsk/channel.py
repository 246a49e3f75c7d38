"""Link power calibration and the additive jamming + AWGN channel."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class LinkBudget:
    signal_power: float
    e_b: float
    n0: float
    p_j: float
    ebn0_db: float
    jsr_db: float | None

    @property
    def noise_variance(self) -> float:
        """Per-sample AWGN variance, N0/2."""
        return self.n0 / 2.0


def db_to_linear(db: float) -> float:
    return 10.0 ** (db / 10.0)


def calibrate(ebn0_db: float, jsr_db: float | None, beta: int, signal_power: float = 1.0) -> LinkBudget:
    """Powers for a given Eb/N0 and jamming-to-signal ratio.

    ``ebn0_db = inf`` gives a noiseless link; ``jsr_db = None`` (or ``-inf``)
    switches the jammer off.  E_b is ``2 * beta * signal_power``.
    """
    if beta < 1:
        raise ValueError(f"beta must be >= 1, got {beta}")
    e_b = 2.0 * beta * signal_power
    n0 = 0.0 if math.isinf(ebn0_db) and ebn0_db > 0 else e_b / db_to_linear(ebn0_db)
    if jsr_db is None or (math.isinf(jsr_db) and jsr_db < 0):
        p_j = 0.0
    else:
        p_j = signal_power * db_to_linear(jsr_db)
    return LinkBudget(signal_power, e_b, n0, p_j, ebn0_db, jsr_db)


def apply_channel(frame, jam, budget: LinkBudget, rng: np.random.Generator) -> np.ndarray:
    """``frame + jam + n`` with n i.i.d. Gaussian of variance N0/2.

    ``frame`` may be an :class:`~nrdcsk.modem.NrDcskFrame` or an array; a 2-D
    array is treated as a batch of frames.
    """
    s = np.asarray(getattr(frame, "samples", frame), dtype=float)
    j = np.asarray(jam, dtype=float)
    if s.shape != j.shape:
        raise ValueError(f"frame and jamming shapes differ: {s.shape} vs {j.shape}")
    out = s + j
    if budget.n0 > 0.0:
        out += math.sqrt(budget.noise_variance) * rng.standard_normal(s.shape)
    return out
