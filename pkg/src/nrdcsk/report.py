"""CSV output and text summaries of simulation and analysis results."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path

from .engine import BerEstimate, Scenario

COLUMNS = (
    "scenario_id", "jammer_kind", "beta", "p", "ebn0_db", "jsr_db", "rho", "m_tones",
    "f_start_norm", "f_stop_norm", "sweep_time_ratio", "bits", "errors", "ber",
    "ci_low", "ci_high", "analytic_ber",
)


@dataclass(frozen=True)
class ResultRow:
    scenario_id: str
    scenario: Scenario
    estimate: BerEstimate | None = None
    analytic_ber: float | None = None
    cell: int = 0


def _num(x) -> str:
    if x is None:
        return ""
    if isinstance(x, int):
        return str(x)
    return format(float(x), ".12g")


def row_fields(row: ResultRow) -> dict[str, str]:
    s = row.scenario
    j = s.jammer
    kind = j.kind
    est = row.estimate
    return {
        "scenario_id": row.scenario_id,
        "jammer_kind": kind,
        "beta": str(s.modem.beta),
        "p": str(s.modem.p),
        "ebn0_db": _num(s.ebn0_db),
        "jsr_db": _num(s.jsr_db) if kind != "none" else "",
        "rho": _num(j.rho) if kind == "ptj" else "",
        "m_tones": str(j.m) if kind == "tj" else "",
        "f_start_norm": _num(j.f_start_norm) if kind == "swj" else "",
        "f_stop_norm": _num(j.f_stop_norm) if kind == "swj" else "",
        "sweep_time_ratio": _num(j.sweep_time_ratio) if kind == "swj" else "",
        "bits": _num(est.bits) if est else "",
        "errors": _num(est.errors) if est else "",
        "ber": _num(est.ber) if est else "",
        "ci_low": _num(est.ci_low) if est else "",
        "ci_high": _num(est.ci_high) if est else "",
        "analytic_ber": _num(row.analytic_ber),
    }


def csv_text(rows: list[ResultRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row_fields(row))
    return buf.getvalue()


def emit_csv(rows: list[ResultRow], path) -> Path:
    if not rows:
        raise ValueError("no results to write")
    path = Path(path)
    path.write_text(csv_text(rows), encoding="utf-8")
    return path


def summary(rows: list[ResultRow]) -> str:
    """Fixed-width table for the terminal."""
    lines = [f"{'id':>8} {'jammer':>6} {'P':>3} {'Eb/N0':>6} {'JSR':>6} {'bits':>10} {'errors':>7} "
             f"{'ber':>11} {'95% CI':>25} {'analytic':>11}"]
    for row in rows:
        f = row_fields(row)
        ci = f"[{f['ci_low'][:10]}, {f['ci_high'][:10]}]" if row.estimate else ""
        lines.append(
            f"{row.scenario_id:>8} {f['jammer_kind']:>6} {f['p']:>3} {f['ebn0_db']:>6} {f['jsr_db']:>6} "
            f"{f['bits']:>10} {f['errors']:>7} {f['ber'][:11]:>11} {ci:>25} {f['analytic_ber'][:11]:>11}"
        )
    return "\n".join(lines)
