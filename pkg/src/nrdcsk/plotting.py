"""Figures written next to the CSV output."""
from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .report import ResultRow  # noqa: E402

AXIS_LABELS = {
    "ebn0_db": r"$E_b/N_0$ (dB)",
    "jsr_db": "JSR (dB)",
    "rho": r"jamming factor $\rho$",
    "p": "repetition count P",
    "m": "number of tones M",
    "f_start_norm": r"$F_{start}$",
    "sweep_time_ratio": r"$T_{sw}/T_b$",
    "p_j": r"$P_j$",
}
TAG_LABELS = {"rho": "ρ", "p": "P", "m": "M", "ebn0_db": "Eb/N0", "jsr_db": "JSR", "p_j": "Pj",
              "f_start_norm": "Fstart", "sweep_time_ratio": "Tsw/Tb"}


def _style(ax):
    ax.grid(True, which="both", ls=":", lw=0.5)
    ax.tick_params(direction="in", which="both", top=True, right=True)


def _label(tags) -> str:
    return ", ".join(f"{TAG_LABELS.get(k, k)}={v:g}" for k, v in tags) or "simulation"


def plot_ber(rows: list[ResultRow], axis: str | None, values, cell_tags: dict, path) -> Path:
    """BER against the sweep axis, one curve per grid cell.

    Simulated points carry their confidence intervals; analytic values are
    drawn as dashed lines of the same colour.
    """
    path = Path(path)
    fig, ax = plt.subplots(figsize=(6.4, 4.4))
    cells = sorted({r.cell for r in rows})
    x_all = np.asarray(values if axis else [0.0], dtype=float)
    for i, c in enumerate(cells):
        cell_rows = [r for r in rows if r.cell == c]
        x = x_all[: len(cell_rows)]
        colour = f"C{i % 10}"
        label = _label(cell_tags.get(c, ()))
        sims = [r.estimate for r in cell_rows]
        if all(e is not None for e in sims):
            ber = np.array([e.ber for e in sims])
            lo = np.array([e.ci_low for e in sims])
            hi = np.array([e.ci_high for e in sims])
            ok = ber > 0
            ax.errorbar(x[ok], ber[ok], yerr=[ber[ok] - lo[ok], hi[ok] - ber[ok]], fmt="o", ms=4,
                        color=colour, capsize=2, label=label)
            label = None
        ana = [r.analytic_ber for r in cell_rows]
        if all(a is not None for a in ana):
            ax.plot(x, ana, "--", color=colour, lw=1.2, label=label)
    ax.set_yscale("log")
    ax.set_xlabel(AXIS_LABELS.get(axis, "point"))
    ax.set_ylabel("BER")
    _style(ax)
    if ax.get_legend_handles_labels()[1]:
        ax.legend(fontsize=8, frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_rho_curve(rhos, bers, rho_star: float, ber_star: float, path) -> Path:
    """Partial-time BER against the jamming factor with the maximizer marked."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(6.4, 4.4))
    ax.semilogx(rhos, bers, "-", color="C0", lw=1.4)
    ax.plot([rho_star], [ber_star], "o", color="C3", label=f"ρ* = {rho_star:.5f}")
    ax.set_xlabel(AXIS_LABELS["rho"])
    ax.set_ylabel("BER")
    _style(ax)
    ax.legend(fontsize=8, frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
