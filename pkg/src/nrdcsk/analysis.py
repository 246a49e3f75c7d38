"""Closed-form BER of NR-DCSK under partial-time and broad-band jamming.

The decision variable is approximated as Gaussian, giving
``BER = 0.5 * erfc((2 var / mean^2) ** -0.5)``.  Partial-time jamming is a
``rho``-weighted mix of a jammed bit (Gaussian jamming of power ``P_j / rho``)
and an unjammed one.  Broad-band jamming is the ``rho = 1`` case.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import erfc

from .channel import calibrate

RHO_MIN = 1e-4
GRID_POINTS = 1000
INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class AnalysisPoint:
    ebn0_db: float
    jsr_db: float | None
    beta: int
    p: int = 1
    rho: float = 1.0

    def __post_init__(self):
        if self.beta < 1 or self.p < 1 or self.beta % self.p:
            raise ValueError(f"beta mod p must be 0 (beta={self.beta}, p={self.p})")
        if not 0.0 < self.rho <= 1.0:
            raise ValueError(f"rho must lie in (0, 1], got {self.rho}")

    def powers(self) -> tuple[float, float, float]:
        """``(E_b, N0, P_j)`` under unit per-sample signal power."""
        b = calibrate(self.ebn0_db, self.jsr_db, self.beta)
        return b.e_b, b.n0, b.p_j


def _half_erfc_inv_sqrt(x: float) -> float:
    """``0.5 * erfc(x ** -0.5)``, with x = 0 mapping to 0."""
    if x <= 0.0:
        return 0.0
    return 0.5 * float(erfc(1.0 / math.sqrt(x)))


def _jammed_term(e_b: float, n0: float, p_j: float, beta: int, p: int, rho: float) -> float:
    a = p_j / rho + n0 / 2.0
    return _half_erfc_inv_sqrt(8.0 * a / e_b + 8.0 * beta * a * a / (p * e_b * e_b))


def _unjammed_term(e_b: float, n0: float, beta: int, p: int) -> float:
    return _half_erfc_inv_sqrt(4.0 * n0 / e_b + 2.0 * beta * n0 * n0 / (p * e_b * e_b))


def ber_ptj(pt: AnalysisPoint) -> float:
    e_b, n0, p_j = pt.powers()
    on = _jammed_term(e_b, n0, p_j, pt.beta, pt.p, pt.rho)
    off = _unjammed_term(e_b, n0, pt.beta, pt.p)
    return pt.rho * on + (1.0 - pt.rho) * off


def ber_bbj(pt: AnalysisPoint) -> float:
    """Broad-band jamming BER, defined as :func:`ber_ptj` at ``rho = 1``."""
    e_b, n0, p_j = pt.powers()
    return _jammed_term(e_b, n0, p_j, pt.beta, pt.p, 1.0)


def ber_lower_bound(pt: AnalysisPoint) -> float:
    """Limit of :func:`ber_ptj` as the repetition count grows without bound."""
    e_b, n0, p_j = pt.powers()
    on = _half_erfc_inv_sqrt(8.0 / e_b * (p_j / pt.rho + n0 / 2.0))
    off = _half_erfc_inv_sqrt(4.0 * n0 / e_b)
    return pt.rho * on + (1.0 - pt.rho) * off


def decision_moments(pt: AnalysisPoint, jammed: bool) -> tuple[float, float]:
    """Mean and variance of the decision variable for bit +1.

    The variance collects two chaos-jamming cross terms, the jamming-jamming
    term, two chaos-noise terms, two jamming-noise terms and the noise-noise
    term.
    """
    e_b, n0, p_j = pt.powers()
    beta, p = pt.beta, pt.p
    e_p = e_b / (2.0 * p)
    pj = p_j / pt.rho if jammed else 0.0
    var = (
        2.0 * e_p * pj / p
        + beta * pj * pj / p**3
        + e_p * n0 / p
        + beta * pj * n0 / p**3
        + beta * n0 * n0 / (4.0 * p**3)
    )
    return e_p, var


def ber_from_moments(mean: float, variance: float) -> float:
    """Gaussian-approximation error probability ``0.5 erfc(mean / sqrt(2 var))``."""
    if variance <= 0.0:
        return 0.0
    return 0.5 * float(erfc(abs(mean) / math.sqrt(2.0 * variance)))


def golden_section_max(f, lo: float, hi: float, tol: float = 1e-10) -> float:
    """Maximizer of a unimodal ``f`` on ``[lo, hi]``."""
    a, b = lo, hi
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def optimal_rho(ebn0_db: float, jsr_db: float, beta: int, p: int) -> tuple[float, float]:
    """Jamming factor in ``[1e-4, 1]`` that maximizes the partial-time BER.

    A log-spaced grid locates the peak; golden-section search refines it
    inside the bracketing grid cells.
    """
    def ber(rho: float) -> float:
        return ber_ptj(AnalysisPoint(ebn0_db, jsr_db, beta, p, rho))

    grid = np.geomspace(RHO_MIN, 1.0, GRID_POINTS)
    values = [ber(r) for r in grid]
    i = int(np.argmax(values))
    lo, hi = grid[max(i - 1, 0)], grid[min(i + 1, GRID_POINTS - 1)]
    rho = golden_section_max(ber, lo, hi)
    # The peak may sit on a boundary of the search domain.
    best = max((rho, lo, hi), key=ber)
    return float(best), float(ber(best))
