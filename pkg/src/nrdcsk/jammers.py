"""Discrete-baseband jamming waveforms.

Four families are supported: broad-band Gaussian noise (``bbj``), partial-time
Gaussian noise switched on per bit with probability ``rho`` (``ptj``), a sum of
``m`` sinusoids (``tj``) and a linear sinusoidal frequency sweep (``swj``).
Frequencies are normalized to the bit rate (``F = f * T_b``), so a tone with
``F`` completes ``F`` cycles during one ``2 * beta``-sample bit.

Tone and sweep waveforms are evaluated at the absolute sample index of the
bit stream, so they are phase-continuous across bit boundaries.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

KINDS = ("none", "bbj", "ptj", "tj", "swj")

# Irrational spacing keeps default tones incommensurate with the bit rate; all
# of them fall inside the block-average filter passband for p <= 20.
_TONE_BASE = 4.0 * math.e
_TONE_STEP = -math.sqrt(3.0)


def default_tone_freqs(m: int) -> tuple[float, ...]:
    """Normalized frequencies used when a tone jammer does not list its own."""
    return tuple(_TONE_BASE + i * _TONE_STEP for i in range(m))


@dataclass(frozen=True)
class JammerSpec:
    kind: str = "none"
    p_j: float = 0.0
    rho: float = 1.0
    m: int = 1
    tone_freqs: tuple[float, ...] | None = None
    tone_phases: tuple[float, ...] | None = None
    f_start_norm: float = 0.0
    f_stop_norm: float = 0.0
    sweep_time_ratio: float = 1.0
    sweep_phase: float = 0.0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown jammer kind {self.kind!r}; expected one of {KINDS}")
        if not self.p_j >= 0.0:
            raise ValueError(f"p_j must be nonnegative, got {self.p_j}")
        if not 0.0 < self.rho <= 1.0:
            raise ValueError(f"rho must lie in (0, 1], got {self.rho}")
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.tone_freqs is not None:
            object.__setattr__(self, "tone_freqs", tuple(float(f) for f in self.tone_freqs))
            if len(self.tone_freqs) != self.m:
                raise ValueError(f"tone_freqs has {len(self.tone_freqs)} entries, m = {self.m}")
        if self.tone_phases is not None:
            object.__setattr__(self, "tone_phases", tuple(float(t) for t in self.tone_phases))
            if len(self.tone_phases) != self.m:
                raise ValueError(f"tone_phases has {len(self.tone_phases)} entries, m = {self.m}")
            if any(abs(t) > math.pi for t in self.tone_phases):
                raise ValueError("tone phases must lie in [-pi, pi]")
        if not self.sweep_time_ratio > 0.0 or not math.isfinite(self.sweep_time_ratio):
            raise ValueError(f"sweep_time_ratio must be positive, got {self.sweep_time_ratio}")

    @property
    def freqs(self) -> tuple[float, ...]:
        return self.tone_freqs if self.tone_freqs is not None else default_tone_freqs(self.m)

    @property
    def sweep_rate(self) -> float:
        """Normalized sweep rate (F_stop - F_start) / (T_sw / T_b)."""
        return (self.f_stop_norm - self.f_start_norm) / self.sweep_time_ratio

    def sweep_period(self, beta: int) -> int:
        """Sweep period in samples."""
        return max(1, round(2 * beta * self.sweep_time_ratio))

    def with_phases(self, rng: np.random.Generator) -> "JammerSpec":
        """Fill unset tone phases with uniform draws from [-pi, pi]."""
        if self.kind != "tj" or self.tone_phases is not None:
            return self
        return replace(self, tone_phases=tuple(rng.uniform(-math.pi, math.pi, self.m)))


def bbj_samples(p_j: float, count: int, rng: np.random.Generator) -> np.ndarray:
    if p_j < 0:
        raise ValueError(f"jamming power must be nonnegative, got {p_j}")
    return math.sqrt(p_j) * rng.standard_normal(count)


def ptj_bit_samples(p_j: float, rho: float, frame_len: int, rng: np.random.Generator):
    """One frame of partial-time jamming: ``(jammed, samples)``.

    The frame is jammed with probability ``rho``; a jammed frame carries Gaussian
    noise of variance ``p_j / rho`` so the long-run power stays ``p_j``.
    """
    if not 0.0 < rho <= 1.0:
        raise ValueError(f"rho must lie in (0, 1], got {rho}")
    if p_j < 0:
        raise ValueError(f"jamming power must be nonnegative, got {p_j}")
    jammed = bool(rng.random() < rho)
    if not jammed:
        return False, np.zeros(frame_len)
    return True, math.sqrt(p_j / rho) * rng.standard_normal(frame_len)


def tj_samples(spec: JammerSpec, k, beta: int) -> np.ndarray:
    """Sum of ``m`` tones of amplitude ``sqrt(2 p_j / m)`` at sample indices ``k``."""
    if spec.kind != "tj":
        raise ValueError(f"tone samples need a 'tj' spec, got {spec.kind!r}")
    if spec.tone_phases is None:
        raise ValueError("tone phases are unset; call with_phases() first")
    k = np.asarray(k, dtype=float)
    amp = math.sqrt(2.0 * spec.p_j / spec.m)
    out = np.zeros(k.shape)
    for f, theta in zip(spec.freqs, spec.tone_phases):
        out += np.sin(math.pi * f / beta * k + theta)
    return amp * out


def swj_samples(spec: JammerSpec, k, beta: int) -> np.ndarray:
    """Linear sweep evaluated at absolute sample indices ``k``, restarting every sweep period."""
    if spec.kind != "swj":
        raise ValueError(f"sweep samples need a 'swj' spec, got {spec.kind!r}")
    local = np.mod(np.asarray(k, dtype=np.int64), spec.sweep_period(beta)).astype(float)
    phase = (
        math.pi * spec.f_start_norm / beta * local
        + math.pi * spec.sweep_rate / (4.0 * beta * beta) * local * local
        + spec.sweep_phase
    )
    return math.sqrt(2.0 * spec.p_j) * np.sin(phase)


@dataclass
class JammerStream:
    """Jamming for consecutive bits starting at absolute bit index ``start_bit``.

    ``counter`` is the absolute index of the next sample; ``jammed`` records the
    on/off state of every partial-time frame produced so far.
    """

    spec: JammerSpec
    beta: int
    rng: np.random.Generator
    start_bit: int = 0
    counter: int = field(init=False)
    jammed: list = field(init=False, default_factory=list)

    def __post_init__(self):
        self.counter = 2 * self.beta * self.start_bit
        if self.spec.kind == "tj" and self.spec.tone_phases is None:
            raise ValueError("tone phases must be fixed before streaming")

    def _indices(self, n: int) -> np.ndarray:
        frame = 2 * self.beta
        return self.counter + np.arange(n * frame, dtype=np.int64).reshape(n, frame)

    def _gaussian_std(self, n: int) -> np.ndarray:
        kind = self.spec.kind
        if kind == "bbj":
            return np.full(n, math.sqrt(self.spec.p_j))
        on = self.rng.random(n) < self.spec.rho
        self.jammed.extend(on.tolist())
        return np.where(on, math.sqrt(self.spec.p_j / self.spec.rho), 0.0)

    def frames(self, n: int) -> np.ndarray:
        """Per-sample jamming for the next ``n`` bits, shape ``(n, 2*beta)``."""
        frame = 2 * self.beta
        kind = self.spec.kind
        if kind == "none":
            out = np.zeros((n, frame))
        elif kind in ("bbj", "ptj"):
            std = self._gaussian_std(n)
            out = std[:, None] * self.rng.standard_normal((n, frame))
        elif kind == "tj":
            out = tj_samples(self.spec, self._indices(n), self.beta)
        else:
            out = swj_samples(self.spec, self._indices(n), self.beta)
        self.counter += n * frame
        return out

    def averaged_frames(self, n: int, p: int) -> np.ndarray:
        """Block-averaged jamming for the next ``n`` bits, shape ``(n, 2*beta/p)``.

        Gaussian families draw the block means directly (variance divided by
        ``p``), which has the same distribution as averaging ``p`` samples.
        """
        frame = 2 * self.beta
        blocks = frame // p
        kind = self.spec.kind
        if kind == "none":
            out = np.zeros((n, blocks))
        elif kind in ("bbj", "ptj"):
            std = self._gaussian_std(n) / math.sqrt(p)
            out = std[:, None] * self.rng.standard_normal((n, blocks))
        else:
            idx = self._indices(n)
            raw = tj_samples(self.spec, idx, self.beta) if kind == "tj" else swj_samples(self.spec, idx, self.beta)
            out = raw.reshape(n, blocks, p).mean(axis=-1)
        self.counter += n * frame
        return out
