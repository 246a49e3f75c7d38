"""Reference implementations kept independent of the package code paths."""
from __future__ import annotations

import math

import mpmath
import numpy as np
from scipy import integrate
from scipy.stats import ncf

mpmath.mp.dps = 50


def ber_ptj_mp(ebn0_db, jsr_db, beta, p, rho):
    """Partial-time closed form written out directly in arbitrary precision."""
    ebn0_db, jsr_db, rho = mpmath.mpf(ebn0_db), mpmath.mpf(jsr_db), mpmath.mpf(rho)
    e_b = 2 * mpmath.mpf(beta)
    n0 = e_b / mpmath.power(10, ebn0_db / 10)
    p_j = mpmath.power(10, jsr_db / 10)
    a = p_j / rho + n0 / 2
    on = mpmath.erfc((8 * a / e_b + 8 * beta * a**2 / (p * e_b**2)) ** mpmath.mpf(-0.5))
    off = mpmath.erfc((4 * n0 / e_b + 2 * beta * n0**2 / (p * e_b**2)) ** mpmath.mpf(-0.5))
    return rho / 2 * on + (1 - rho) / 2 * off


def ber_ptj_onoff_mp(ebn0_db, jsr_db, beta, p, rho):
    """Same quantity assembled from the per-bit on/off forms written with E_P."""
    e_b = 2 * mpmath.mpf(beta)
    n0 = e_b / mpmath.power(10, mpmath.mpf(ebn0_db) / 10)
    p_j = mpmath.power(10, mpmath.mpf(jsr_db) / 10)
    rho = mpmath.mpf(rho)
    e_p = e_b / (2 * p)
    on_x = (4 * p_j / rho + 2 * n0) / (p * e_p) + beta * (2 * p_j * n0 / rho + 2 * p_j**2 / rho**2 + n0**2 / 2) / (
        p**3 * e_p**2)
    off_x = 2 * n0 / (p * e_p) + beta * (n0**2 / 2) / (p**3 * e_p**2)
    on = mpmath.erfc(on_x ** mpmath.mpf(-0.5)) / 2
    off = mpmath.erfc(off_x ** mpmath.mpf(-0.5)) / 2
    return rho * on + (1 - rho) * off


def exact_ber_single_chaos(ebn0_db, jsr_db, beta, rho=1.0):
    """Exact BER for beta == p (one chaotic value per half-bit) under Gaussian jamming.

    Given the chaotic value x and block-averaged noise variance s2, the decision
    variable error event is a noncentral F(1, 1, 2 x^2 / s2) falling below one.
    The chaotic value follows the scaled arcsine law, x = sqrt(2) cos(pi u).
    """
    p = beta
    e_b = 2.0 * beta
    n0 = e_b / 10 ** (ebn0_db / 10)
    p_j = 10 ** (jsr_db / 10) if jsr_db is not None else 0.0

    def conditional(s2):
        f = lambda u: ncf.cdf(1.0, 1, 1, 2.0 * (2.0 * math.cos(math.pi * u) ** 2) / s2)
        return integrate.quad(f, 0.0, 1.0, limit=200)[0]

    on = conditional((p_j / rho + n0 / 2) / p)
    off = conditional((n0 / 2) / p) if rho < 1.0 else 0.0
    return rho * on + (1 - rho) * off


def block_average_loops(received, p):
    out = []
    for k in range(len(received) // p):
        total = 0.0
        for q in range(k * p, (k + 1) * p):
            total += received[q]
        out.append(total / p)
    return out


def decision_variable_loops(received, beta, p):
    avg = block_average_loops(received, p)
    n = beta // p
    return sum(avg[k] * avg[k + n] for k in range(n))


def wilson_mp(errors, bits, z):
    n, x, z = mpmath.mpf(bits), mpmath.mpf(errors), mpmath.mpf(z)
    ph = x / n
    centre = (ph + z**2 / (2 * n)) / (1 + z**2 / n)
    half = z / (1 + z**2 / n) * mpmath.sqrt(ph * (1 - ph) / n + z**2 / (4 * n**2))
    return float(centre - half), float(centre + half)


def mean_power(x):
    x = np.asarray(x, dtype=float)
    return float(np.mean(x * x))
