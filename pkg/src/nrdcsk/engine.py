"""Monte-Carlo BER estimation for the NR-DCSK link.

Bits are simulated in fixed-size blocks.  All randomness of a block comes from
streams keyed by ``(seed, block index, purpose)``, and blocks are accumulated
in index order with the stopping rule checked after each one, so the result
does not depend on the number of workers.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np
from scipy.stats import norm

from . import chaos
from .analysis import AnalysisPoint, ber_ptj
from .channel import LinkBudget, apply_channel, calibrate
from .jammers import JammerSpec, JammerStream
from .modem import ModemParams, correlate, decide, demodulate_batch, modulate_batch
from .seeding import Purpose, run_stream, stream, subseed

BLOCK_BITS = 4096
FIDELITIES = ("block", "sample")
SWEEP_AXES = ("ebn0_db", "jsr_db", "rho", "p", "m", "f_start_norm", "sweep_time_ratio", "p_j")


@dataclass(frozen=True)
class StopRule:
    target_errors: int = 100
    max_bits: int = 10**8

    def __post_init__(self):
        if self.target_errors < 1:
            raise ValueError("target_errors must be >= 1")
        if self.max_bits < 1:
            raise ValueError("max_bits must be >= 1")


@dataclass(frozen=True)
class Scenario:
    """One simulated operating point.

    ``jsr_db = None`` disables jamming power regardless of the jammer kind.
    ``fidelity`` selects how Gaussian noise and Gaussian jamming reach the
    receiver: ``"sample"`` draws every channel sample and runs the block
    average filter; ``"block"`` draws the block averages directly, which has
    the same distribution and is ``p`` times cheaper.
    """

    modem: ModemParams
    jammer: JammerSpec = field(default_factory=JammerSpec)
    ebn0_db: float = 10.0
    jsr_db: float | None = None
    seed: int = 0
    stop: StopRule = field(default_factory=StopRule)
    burn_in: int = chaos.DEFAULT_BURN_IN
    fidelity: str = "block"

    def __post_init__(self):
        if self.fidelity not in FIDELITIES:
            raise ValueError(f"fidelity must be one of {FIDELITIES}, got {self.fidelity!r}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.burn_in < 0:
            raise ValueError("burn_in must be nonnegative")

    def budget(self) -> LinkBudget:
        jsr = None if self.jammer.kind == "none" else self.jsr_db
        return calibrate(self.ebn0_db, jsr, self.modem.beta)

    def effective_jammer(self) -> JammerSpec:
        """Jammer with calibrated power and run-level tone phases filled in."""
        spec = replace(self.jammer, p_j=self.budget().p_j)
        return spec.with_phases(run_stream(self.seed, Purpose.TONE_PHASES))


@dataclass(frozen=True)
class BerEstimate:
    bits: int
    errors: int
    ber: float
    ci_low: float
    ci_high: float
    analytic_ref: float | None = None


def wilson_interval(errors: int, bits: int, confidence: float = 0.95) -> tuple[float, float]:
    """Wilson score interval; with zero errors only the one-sided upper bound is returned."""
    if bits <= 0:
        return 0.0, 1.0
    if errors == 0:
        z = float(norm.ppf(confidence))
        return 0.0, z * z / (bits + z * z)
    z = float(norm.ppf(0.5 + confidence / 2.0))
    phat = errors / bits
    denom = 1.0 + z * z / bits
    centre = (phat + z * z / (2 * bits)) / denom
    half = z * math.sqrt(phat * (1 - phat) / bits + z * z / (4 * bits * bits)) / denom
    # clamp so rounding never pushes the point estimate outside its own interval
    return max(0.0, min(centre - half, phat)), min(1.0, max(centre + half, phat))


def analytic_reference(scenario: Scenario) -> float | None:
    """Closed-form BER where one exists (no jamming, broad-band, partial-time)."""
    kind = scenario.jammer.kind
    if kind not in ("none", "bbj", "ptj"):
        return None
    jsr = scenario.jsr_db if kind != "none" else None
    rho = scenario.jammer.rho if kind == "ptj" else 1.0
    pt = AnalysisPoint(scenario.ebn0_db, jsr, scenario.modem.beta, scenario.modem.p, rho)
    return ber_ptj(pt)


def simulate_block(scenario: Scenario, block: int, n_bits: int, spec: JammerSpec | None = None) -> int:
    """Bit errors among ``n_bits`` bits starting at bit ``block * BLOCK_BITS``."""
    params = scenario.modem
    budget = scenario.budget()
    if spec is None:
        spec = scenario.effective_jammer()
    seed = scenario.seed

    bits = 2 * stream(seed, block, Purpose.BITS).integers(0, 2, n_bits) - 1
    seeds = chaos.draw_seeds(stream(seed, block, Purpose.CHAOS), n_bits)
    x = chaos.generate_batch(seeds, params.distinct, scenario.burn_in)
    jammer = JammerStream(spec, params.beta, stream(seed, block, Purpose.JAMMING), start_bit=block * BLOCK_BITS)
    noise_rng = stream(seed, block, Purpose.NOISE)

    if scenario.fidelity == "sample":
        frames = modulate_batch(bits, x, params)
        received = apply_channel(frames, jammer.frames(n_bits), budget, noise_rng)
        decoded = demodulate_batch(received, params)
    else:
        n = params.distinct
        averaged = jammer.averaged_frames(n_bits, params.p)
        averaged[:, :n] += x
        averaged[:, n:] += bits[:, None] * x
        if budget.n0 > 0.0:
            averaged += math.sqrt(budget.noise_variance / params.p) * noise_rng.standard_normal(averaged.shape)
        decoded = decide(correlate(averaged, params))
    return int(np.count_nonzero(decoded != bits))


def _block_sizes(max_bits: int):
    block = 0
    while block * BLOCK_BITS < max_bits:
        yield block, min(BLOCK_BITS, max_bits - block * BLOCK_BITS)
        block += 1


def run(scenario: Scenario, workers: int = 1) -> BerEstimate:
    if workers < 1:
        raise ValueError("workers must be >= 1")
    spec = scenario.effective_jammer()
    stop = scenario.stop
    bits = errors = 0
    plan = _block_sizes(stop.max_bits)

    if workers == 1:
        for block, n in plan:
            errors += simulate_block(scenario, block, n, spec)
            bits += n
            if errors >= stop.target_errors:
                break
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            done = False
            while not done:
                wave = [next(plan, None) for _ in range(workers)]
                wave = [w for w in wave if w is not None]
                if not wave:
                    break
                futures = [pool.submit(simulate_block, scenario, b, n, spec) for b, n in wave]
                for (_, n), fut in zip(wave, futures):
                    errors += fut.result()
                    bits += n
                    if errors >= stop.target_errors:
                        done = True
                        break
                for fut in futures:
                    fut.cancel()

    lo, hi = wilson_interval(errors, bits)
    return BerEstimate(bits, errors, errors / bits, lo, hi, analytic_reference(scenario))


def with_axis(base: Scenario, axis: str, value) -> Scenario:
    """Copy of ``base`` with one named parameter changed."""
    if axis == "ebn0_db":
        return replace(base, ebn0_db=float(value))
    if axis == "jsr_db":
        return replace(base, jsr_db=None if value is None else float(value))
    if axis == "p_j":
        jsr = None if value <= 0 else 10.0 * math.log10(value)
        return replace(base, jsr_db=jsr)
    if axis == "p":
        return replace(base, modem=ModemParams(base.modem.beta, int(value)))
    if axis == "rho":
        return replace(base, jammer=replace(base.jammer, rho=float(value)))
    if axis == "m":
        return replace(base, jammer=_with_tone_count(base.jammer, int(value)))
    if axis in ("f_start_norm", "sweep_time_ratio"):
        return replace(base, jammer=replace(base.jammer, **{axis: float(value)}))
    raise ValueError(f"unknown sweep axis {axis!r}; expected one of {SWEEP_AXES}")


def _with_tone_count(spec: JammerSpec, m: int) -> JammerSpec:
    freqs = spec.tone_freqs[:m] if spec.tone_freqs and len(spec.tone_freqs) >= m else None
    phases = spec.tone_phases[:m] if spec.tone_phases and len(spec.tone_phases) >= m else None
    return replace(spec, m=m, tone_freqs=freqs, tone_phases=phases)


def sweep_scenarios(base: Scenario, axis: str, values: Sequence) -> list[Scenario]:
    if axis not in SWEEP_AXES:
        raise ValueError(f"unknown sweep axis {axis!r}; expected one of {SWEEP_AXES}")
    return [replace(with_axis(base, axis, v), seed=subseed(base.seed, i)) for i, v in enumerate(values)]


def sweep(base: Scenario, axis: str, values: Sequence, workers: int = 1) -> list[BerEstimate]:
    """One estimate per value, each run under its own derived seed."""
    return [run(s, workers) for s in sweep_scenarios(base, axis, values)]
