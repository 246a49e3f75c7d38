"""Run configuration documents.

A configuration is a JSON document with five sections::

    {
      "modem":   {"beta": 200, "p": 10},
      "jammer":  {"kind": "ptj", "rho": 0.5},
      "channel": {"ebn0_db": 10, "jsr_db": 5},
      "sweep":   {"axis": "ebn0_db", "values": [5, 10, 15],
                  "grid": {"rho": [0.3, 1.0], "p": [1, 5, 20]}},
      "run":     {"seed": 1, "workers": 1, "target_errors": 100,
                  "max_bits": 100000000, "out": "results.csv",
                  "analysis_overlay": true}
    }

``sweep.grid`` is optional; its Cartesian product (in key order) defines the
cells of the plan, and every cell is swept along ``sweep.axis``.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, fields, replace
from typing import Any

from .chaos import DEFAULT_BURN_IN
from .engine import SWEEP_AXES, Scenario, StopRule, sweep_scenarios, with_axis
from .jammers import JammerSpec
from .modem import ModemParams
from .seeding import subseed

SECTIONS = ("modem", "jammer", "channel", "sweep", "run")
_MODEM_KEYS = {"beta", "p"}
_JAMMER_KEYS = {f.name for f in fields(JammerSpec)} - {"p_j"}
_CHANNEL_KEYS = {"ebn0_db", "jsr_db"}
_SWEEP_KEYS = {"axis", "values", "grid"}
_RUN_KEYS = {"seed", "workers", "target_errors", "max_bits", "out", "analysis_overlay", "fidelity", "burn_in"}


class ConfigError(ValueError):
    """Invalid configuration; ``key`` is the dotted path of the offending entry."""

    def __init__(self, message: str, key: str | None = None):
        self.key = key
        super().__init__(f"{key}: {message}" if key else message)


@dataclass(frozen=True)
class Cell:
    index: int
    tags: tuple[tuple[str, Any], ...]
    scenarios: tuple[Scenario, ...]


@dataclass(frozen=True)
class RunConfig:
    base: Scenario
    axis: str | None = None
    values: tuple = ()
    grid: tuple[tuple[str, tuple], ...] = ()
    workers: int = 1
    out: str | None = None
    analysis_overlay: bool = True

    def cells(self) -> list[Cell]:
        """Expand the grid and sweep axis into per-cell scenario lists."""
        names = [name for name, _ in self.grid]
        combos = list(itertools.product(*(vals for _, vals in self.grid))) or [()]
        cells = []
        for c, combo in enumerate(combos):
            scenario = self.base
            for name, value in zip(names, combo):
                scenario = with_axis(scenario, name, value)
            if self.grid:
                scenario = replace(scenario, seed=subseed(self.base.seed, c))
            if self.axis is None:
                points = (scenario,)
            else:
                points = tuple(sweep_scenarios(scenario, self.axis, self.values))
            cells.append(Cell(c, tuple(zip(names, combo)), points))
        return cells

    def to_dict(self) -> dict:
        """Canonical document; ``parse_config(json.dumps(cfg.to_dict()))`` returns ``cfg``."""
        b = self.base
        jammer = {f.name: getattr(b.jammer, f.name) for f in fields(JammerSpec) if f.name != "p_j"}
        for key in ("tone_freqs", "tone_phases"):
            if jammer[key] is not None:
                jammer[key] = list(jammer[key])
        sweep: dict[str, Any] = {}
        if self.axis is not None:
            sweep["axis"] = self.axis
            sweep["values"] = list(self.values)
        if self.grid:
            sweep["grid"] = {name: list(vals) for name, vals in self.grid}
        return {
            "modem": {"beta": b.modem.beta, "p": b.modem.p},
            "jammer": jammer,
            "channel": {"ebn0_db": b.ebn0_db, "jsr_db": b.jsr_db},
            "sweep": sweep,
            "run": {
                "seed": b.seed,
                "workers": self.workers,
                "target_errors": b.stop.target_errors,
                "max_bits": b.stop.max_bits,
                "out": self.out,
                "analysis_overlay": self.analysis_overlay,
                "fidelity": b.fidelity,
                "burn_in": b.burn_in,
            },
        }


def _section(doc: dict, name: str, allowed: set) -> dict:
    sec = doc.get(name, {})
    if sec is None:
        sec = {}
    if not isinstance(sec, dict):
        raise ConfigError("section must be an object", name)
    for key in sec:
        if key not in allowed:
            raise ConfigError(f"unknown key (expected one of {sorted(allowed)})", f"{name}.{key}")
    return sec


def _typed(sec: dict, section: str, key: str, kind, default):
    value = sec.get(key, default)
    if value is None or kind is None:
        return value
    try:
        if kind is int:
            if isinstance(value, bool) or (isinstance(value, float) and not value.is_integer()):
                raise TypeError
            return int(value)
        if kind is float:
            if isinstance(value, bool):
                raise TypeError
            return float(value)
        if kind is bool:
            if not isinstance(value, bool):
                raise TypeError
            return value
        if kind is str:
            if not isinstance(value, str):
                raise TypeError
            return value
    except (TypeError, ValueError):
        raise ConfigError(f"expected {kind.__name__}, got {value!r}", f"{section}.{key}") from None
    return value


def _float_list(value, key: str):
    if value is None:
        return None
    if not isinstance(value, list):
        raise ConfigError("expected a list of numbers", key)
    try:
        return tuple(float(v) for v in value)
    except (TypeError, ValueError):
        raise ConfigError("expected a list of numbers", key) from None


def _build(what: str, key: str, fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except ConfigError:
        raise
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"invalid {what}: {exc}", key) from None


def parse_config(text: str) -> RunConfig:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ConfigError("top level must be an object")
    for key in doc:
        if key not in SECTIONS:
            raise ConfigError(f"unknown section (expected one of {list(SECTIONS)})", key)

    m = _section(doc, "modem", _MODEM_KEYS)
    if "beta" not in m:
        raise ConfigError("missing required key", "modem.beta")
    modem = _build(
        "modem", "modem",
        ModemParams, _typed(m, "modem", "beta", int, None), _typed(m, "modem", "p", int, 1),
    )

    j = _section(doc, "jammer", _JAMMER_KEYS)
    jammer = _build(
        "jammer", "jammer", JammerSpec,
        kind=_typed(j, "jammer", "kind", str, "none"),
        rho=_typed(j, "jammer", "rho", float, 1.0),
        m=_typed(j, "jammer", "m", int, 1),
        tone_freqs=_float_list(j.get("tone_freqs"), "jammer.tone_freqs"),
        tone_phases=_float_list(j.get("tone_phases"), "jammer.tone_phases"),
        f_start_norm=_typed(j, "jammer", "f_start_norm", float, 0.0),
        f_stop_norm=_typed(j, "jammer", "f_stop_norm", float, 0.0),
        sweep_time_ratio=_typed(j, "jammer", "sweep_time_ratio", float, 1.0),
        sweep_phase=_typed(j, "jammer", "sweep_phase", float, 0.0),
    )

    ch = _section(doc, "channel", _CHANNEL_KEYS)
    r = _section(doc, "run", _RUN_KEYS)
    stop = _build(
        "stop rule", "run", StopRule,
        _typed(r, "run", "target_errors", int, 100), _typed(r, "run", "max_bits", int, 10**8),
    )
    base = _build(
        "scenario", "run", Scenario,
        modem=modem,
        jammer=jammer,
        ebn0_db=_typed(ch, "channel", "ebn0_db", float, 10.0),
        jsr_db=_typed(ch, "channel", "jsr_db", float, None),
        seed=_typed(r, "run", "seed", int, 0),
        stop=stop,
        burn_in=_typed(r, "run", "burn_in", int, DEFAULT_BURN_IN),
        fidelity=_typed(r, "run", "fidelity", str, "block"),
    )
    workers = _typed(r, "run", "workers", int, 1)
    if workers < 1:
        raise ConfigError("must be >= 1", "run.workers")

    s = _section(doc, "sweep", _SWEEP_KEYS)
    axis = _typed(s, "sweep", "axis", str, None)
    values: tuple = ()
    if axis is not None:
        if axis not in SWEEP_AXES:
            raise ConfigError(f"unknown axis {axis!r}; expected one of {list(SWEEP_AXES)}", "sweep.axis")
        values = _float_list(s.get("values", []), "sweep.values")
    elif "values" in s:
        raise ConfigError("values given without an axis", "sweep.values")

    grid_doc = s.get("grid") or {}
    if not isinstance(grid_doc, dict):
        raise ConfigError("grid must be an object mapping axis names to value lists", "sweep.grid")
    grid = []
    for name, vals in grid_doc.items():
        if name not in SWEEP_AXES:
            raise ConfigError(f"unknown axis; expected one of {list(SWEEP_AXES)}", f"sweep.grid.{name}")
        if name == axis:
            raise ConfigError("axis appears both in grid and as the sweep axis", f"sweep.grid.{name}")
        grid.append((name, _float_list(vals, f"sweep.grid.{name}")))

    cfg = RunConfig(
        base=base,
        axis=axis,
        values=values,
        grid=tuple(grid),
        workers=workers,
        out=_typed(r, "run", "out", str, None),
        analysis_overlay=_typed(r, "run", "analysis_overlay", bool, True),
    )
    _validate_plan(cfg)
    return cfg


def _validate_plan(cfg: RunConfig) -> None:
    """Build every scenario of the plan so invariant violations surface before any work."""
    names = [name for name, _ in cfg.grid]
    for combo in itertools.product(*(vals for _, vals in cfg.grid)):
        scenario = cfg.base
        for name, value in zip(names, combo):
            scenario = _build("grid cell", f"sweep.grid.{name}", with_axis, scenario, name, value)
        for i, value in enumerate(cfg.values):
            _build("sweep value", f"sweep.values[{i}]", with_axis, scenario, cfg.axis, value)
