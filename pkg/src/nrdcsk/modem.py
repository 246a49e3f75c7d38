"""NR-DCSK transmitter and block-average-filter correlation receiver.

Every bit occupies ``2 * beta`` samples.  The first half carries ``beta / p``
chaotic values, each repeated ``p`` times; the second half is the same
reference multiplied by the bit.  The receiver averages blocks of ``p``
samples and correlates the averaged reference half with the averaged
information half.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ModemParams:
    beta: int
    p: int = 1

    def __post_init__(self):
        if self.beta < 1:
            raise ValueError(f"beta must be a positive integer, got {self.beta}")
        if self.p < 1:
            raise ValueError(f"p must be a positive integer, got {self.p}")
        if self.beta % self.p:
            raise ValueError(f"beta mod p must be 0 (beta={self.beta}, p={self.p})")

    @property
    def distinct(self) -> int:
        """Number of distinct chaotic values per half-bit."""
        return self.beta // self.p

    @property
    def frame_len(self) -> int:
        return 2 * self.beta


@dataclass(frozen=True)
class NrDcskFrame:
    samples: np.ndarray
    bit: int
    distinct_samples: np.ndarray


@dataclass(frozen=True)
class DecisionRecord:
    decision_variable: float
    decoded_bit: int


def _check_len(arr: np.ndarray, expected: int, what: str) -> None:
    if arr.shape[-1] != expected:
        raise ValueError(f"{what} must have length {expected}, got {arr.shape[-1]}")


def modulate(bit: int, x, params: ModemParams) -> NrDcskFrame:
    if bit not in (1, -1):
        raise ValueError(f"bit must be +1 or -1, got {bit!r}")
    x = np.asarray(x, dtype=float)
    _check_len(x, params.distinct, "chaotic vector")
    ref = np.repeat(x, params.p)
    return NrDcskFrame(samples=np.concatenate([ref, bit * ref]), bit=bit, distinct_samples=x)


def modulate_batch(bits: np.ndarray, x: np.ndarray, params: ModemParams) -> np.ndarray:
    """Frames for many bits at once; ``x`` has shape ``(n, beta/p)``, result ``(n, 2*beta)``."""
    _check_len(x, params.distinct, "chaotic vector")
    ref = np.repeat(x, params.p, axis=-1)
    return np.concatenate([ref, bits[:, None] * ref], axis=-1)


def block_average(received, params: ModemParams) -> np.ndarray:
    """Mean of each consecutive block of ``p`` samples along the last axis."""
    r = np.asarray(received, dtype=float)
    _check_len(r, params.frame_len, "received vector")
    return r.reshape(*r.shape[:-1], -1, params.p).mean(axis=-1)


def correlate(averaged: np.ndarray, params: ModemParams) -> np.ndarray:
    """Decision variable from block-averaged halves (last axis has ``2*beta/p`` entries)."""
    n = params.distinct
    return np.einsum("...k,...k->...", averaged[..., :n], averaged[..., n:])


def decide(b: np.ndarray | float) -> np.ndarray:
    # B == 0 decodes as +1
    return np.where(np.asarray(b) >= 0.0, 1, -1)


def demodulate(received, params: ModemParams) -> DecisionRecord:
    b = float(correlate(block_average(received, params), params))
    return DecisionRecord(decision_variable=b, decoded_bit=int(decide(b)))


def demodulate_batch(received: np.ndarray, params: ModemParams) -> np.ndarray:
    """Decoded bits for a ``(n, 2*beta)`` array of received frames."""
    return decide(correlate(block_average(received, params), params))
