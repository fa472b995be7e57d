"""Scenario layer: config documents, experiment presets, sweeps, pulse
calibration, reference-table verification, and CSV/JSON persistence.

Config files are YAML with strict key checking: an unknown key anywhere is
a hard error, since a silently ignored typo is the usual way a physics run
goes wrong. An empty document runs the model defaults with no channel.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Sequence

import numpy as np
import yaml

from .dynamics import (
    ChannelKind,
    ChannelSpec,
    ConstantRate,
    ExpCosineRate,
    IntegratorConfig,
    TrajectoryRecord,
    commutator_superop,
    run_two_phase,
)
from .errors import ConfigError, InputError
from .linalg import hermitian_eigen
from .model import (
    ModelParams,
    PULSE_PATTERN,
    build_h0,
    charging_pulse_center,
    charging_window_end,
    ground_state,
)
from .observables import ObservableSet, l1_coherence
from . import reference

CSV_HEADER = "t,energy,purity,coherence,ergotropy,min_eig,rate"

# Pulse amplitude selected by calibrate_pulse_amplitude on the default grid
# (coherence target hit with residual ~2e-5). Presets bake this in so their
# output matches the verified tables without re-running the calibration.
CALIBRATED_PULSE_AMPLITUDE = 9.7082

COHERENCE_TARGET = 2.1013

# Default calibration grid: a coarse pass over the amplitude window whose
# charged state reproduces the tabulated ergotropy scale, then two
# refinement passes around the running best point.
CALIBRATION_COARSE = (9.4, 10.0, 0.05)
CALIBRATION_REFINE_STEPS = (0.0025, 0.0001)


@dataclass(frozen=True)
class ScenarioConfig:
    model: ModelParams = ModelParams()
    channel: ChannelSpec = ChannelSpec.none()
    integrator: IntegratorConfig = IntegratorConfig()
    charging_dt: float = 1e-4
    snapshot_times: tuple[float, ...] = ()
    output_dir: Path = Path("out")
    label: str = "scenario"

    def __post_init__(self) -> None:
        if not self.label:
            raise ConfigError("label must be non-empty")
        if not re.fullmatch(r"[A-Za-z0-9._-]+", self.label):
            raise ConfigError(f"label {self.label!r} is not filesystem-safe")
        for t in self.snapshot_times:
            if t < 0 or t > self.integrator.t_end:
                raise ConfigError(
                    f"snapshot time {t} outside [0, {self.integrator.t_end}]"
                )
        if self.charging_dt <= 0:
            raise ConfigError("charging_dt must be positive")


def _require_keys(section: dict, allowed: set[str], where: str) -> None:
    unknown = set(section) - allowed
    if unknown:
        raise ConfigError(f"unknown key(s) in {where}: {', '.join(sorted(unknown))}")


def _float_field(section: dict, key: str, where: str) -> float:
    value = section[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{where}.{key} must be a number, got {value!r}")
    return float(value)


def _parse_model(section: dict) -> ModelParams:
    allowed = {"lambda", "alpha", "eta", "n_x", "n_y", "b_s", "tau"}
    _require_keys(section, allowed, "model")
    kwargs = {}
    rename = {"lambda": "lam"}
    for key in section:
        kwargs[rename.get(key, key)] = _float_field(section, key, "model")
    try:
        return ModelParams(**kwargs)
    except InputError as exc:
        raise ConfigError(f"model: {exc}") from exc


def _parse_rate(section: dict) -> ConstantRate | ExpCosineRate:
    _require_keys(section, {"form", "gamma", "gamma0", "beta", "omega"}, "channel.rate")
    form = section.get("form", "constant")
    try:
        if form == "constant":
            _require_keys(section, {"form", "gamma"}, "channel.rate (constant)")
            return ConstantRate(_float_field(section, "gamma", "channel.rate")
                                if "gamma" in section else 0.0)
        if form == "exp_cosine":
            _require_keys(section, {"form", "gamma0", "beta", "omega"},
                          "channel.rate (exp_cosine)")
            missing = {"gamma0", "beta", "omega"} - set(section)
            if missing:
                raise ConfigError(
                    f"channel.rate (exp_cosine) missing: {', '.join(sorted(missing))}"
                )
            return ExpCosineRate(
                gamma0=_float_field(section, "gamma0", "channel.rate"),
                beta=_float_field(section, "beta", "channel.rate"),
                omega=_float_field(section, "omega", "channel.rate"),
            )
    except InputError as exc:
        raise ConfigError(f"channel.rate: {exc}") from exc
    raise ConfigError(f"channel.rate.form must be 'constant' or 'exp_cosine', got {form!r}")


def _parse_channel(section: dict) -> ChannelSpec:
    _require_keys(section, {"kind", "rate"}, "channel")
    kind_name = section.get("kind", "none")
    try:
        kind = ChannelKind(kind_name)
    except ValueError:
        valid = ", ".join(k.value for k in ChannelKind)
        raise ConfigError(f"channel.kind must be one of {valid}, got {kind_name!r}")
    rate = _parse_rate(section.get("rate", {}))
    try:
        return ChannelSpec(kind, rate)
    except InputError as exc:
        raise ConfigError(f"channel: {exc}") from exc


def _parse_integrator(section: dict) -> IntegratorConfig:
    allowed = {"dt", "t_end", "sample_stride", "positivity_tol"}
    _require_keys(section, allowed, "integrator")
    kwargs = {}
    for key in section:
        if key == "sample_stride":
            value = section[key]
            if isinstance(value, bool) or not isinstance(value, int):
                raise ConfigError(f"integrator.sample_stride must be an integer")
            kwargs[key] = value
        else:
            kwargs[key] = _float_field(section, key, "integrator")
    try:
        return IntegratorConfig(**kwargs)
    except InputError as exc:
        raise ConfigError(f"integrator: {exc}") from exc


def load_config(source: str | Path) -> ScenarioConfig:
    """Parse a YAML config document (path or literal text)."""
    if isinstance(source, Path):
        text = source.read_text(encoding="utf-8")
    else:
        text = source
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ConfigError(f"config does not parse: {exc}") from exc
    if doc is None:
        doc = {}
    if not isinstance(doc, dict):
        raise ConfigError("config root must be a mapping")
    return config_from_dict(doc)


def config_from_dict(doc: dict) -> ScenarioConfig:
    allowed = {"model", "channel", "integrator", "charging_dt",
               "snapshot_times", "output_dir", "label"}
    _require_keys(doc, allowed, "config root")

    for name in ("model", "channel", "integrator"):
        if name in doc and not isinstance(doc[name], dict):
            raise ConfigError(f"{name} must be a mapping")

    snapshot_times = doc.get("snapshot_times", [])
    if not isinstance(snapshot_times, list):
        raise ConfigError("snapshot_times must be a list of numbers")
    for t in snapshot_times:
        if isinstance(t, bool) or not isinstance(t, (int, float)):
            raise ConfigError(f"snapshot_times entries must be numbers, got {t!r}")

    charging_dt = doc.get("charging_dt", 1e-4)
    if isinstance(charging_dt, bool) or not isinstance(charging_dt, (int, float)):
        raise ConfigError("charging_dt must be a number")

    label = doc.get("label", "scenario")
    if not isinstance(label, str):
        raise ConfigError("label must be a string")

    return ScenarioConfig(
        model=_parse_model(doc.get("model", {})),
        channel=_parse_channel(doc.get("channel", {})),
        integrator=_parse_integrator(doc.get("integrator", {})),
        charging_dt=float(charging_dt),
        snapshot_times=tuple(float(t) for t in snapshot_times),
        output_dir=Path(doc.get("output_dir", "out")),
        label=label,
    )


def config_to_dict(cfg: ScenarioConfig) -> dict:
    """Round-trippable plain-dict form of a config (for meta.json echo)."""
    rate = cfg.channel.rate
    if isinstance(rate, ConstantRate):
        rate_doc = {"form": "constant", "gamma": rate.gamma}
    else:
        rate_doc = {"form": "exp_cosine", "gamma0": rate.gamma0,
                    "beta": rate.beta, "omega": rate.omega}
    return {
        "label": cfg.label,
        "model": {
            "lambda": cfg.model.lam, "alpha": cfg.model.alpha,
            "eta": cfg.model.eta, "n_x": cfg.model.n_x, "n_y": cfg.model.n_y,
            "b_s": cfg.model.b_s, "tau": cfg.model.tau,
        },
        "channel": {"kind": cfg.channel.kind.value, "rate": rate_doc},
        "integrator": {
            "dt": cfg.integrator.dt, "t_end": cfg.integrator.t_end,
            "sample_stride": cfg.integrator.sample_stride,
            "positivity_tol": cfg.integrator.positivity_tol,
        },
        "charging_dt": cfg.charging_dt,
        "snapshot_times": list(cfg.snapshot_times),
        "output_dir": str(cfg.output_dir),
    }


# --- presets -----------------------------------------------------------

def _preset(label: str, channel: ChannelSpec) -> ScenarioConfig:
    return ScenarioConfig(
        model=ModelParams(b_s=CALIBRATED_PULSE_AMPLITUDE),
        channel=channel,
        integrator=IntegratorConfig(dt=1e-3, t_end=100.0, sample_stride=100),
        snapshot_times=(0.0, 10.0, 40.0, 100.0),
        label=label,
    )


def preset_catalog() -> dict[str, ScenarioConfig]:
    nm = lambda beta: ChannelSpec.amplitude_damping(
        ExpCosineRate(gamma0=0.5, beta=beta, omega=1.0))
    return {
        "ad-weak": _preset("ad-weak", ChannelSpec.amplitude_damping(0.1)),
        "ad-mid": _preset("ad-mid", ChannelSpec.amplitude_damping(0.5)),
        "ad-strong": _preset("ad-strong", ChannelSpec.amplitude_damping(1.0)),
        "deph-weak": _preset("deph-weak", ChannelSpec.dephasing(0.1)),
        "deph-strong": _preset("deph-strong", ChannelSpec.dephasing(1.0)),
        "markov": _preset("markov", ChannelSpec.amplitude_damping(0.5)),
        "nonmarkov-b01": _preset("nonmarkov-b01", nm(0.1)),
        "nonmarkov-b05": _preset("nonmarkov-b05", nm(0.5)),
        "nonmarkov-b10": _preset("nonmarkov-b10", nm(1.0)),
    }


def get_preset(name: str) -> ScenarioConfig:
    catalog = preset_catalog()
    if name not in catalog:
        raise InputError(
            f"unknown preset {name!r}; available: {', '.join(sorted(catalog))}"
        )
    return catalog[name]


# --- persistence -------------------------------------------------------

def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def render_csv(record: TrajectoryRecord) -> str:
    """Render the documented time-series schema; 17 significant digits."""
    required = {
        "energy": record.energy, "purity": record.purity,
        "coherence": record.coherence, "ergotropy": record.ergotropy,
    }
    missing = [name for name, col in required.items() if col is None]
    if missing:
        raise InputError(f"record lacks column(s): {', '.join(missing)}")
    lines = [CSV_HEADER]
    for i, t in enumerate(record.times):
        lines.append(",".join([
            _fmt(t), _fmt(record.energy[i]), _fmt(record.purity[i]),
            _fmt(record.coherence[i]), _fmt(record.ergotropy[i]),
            _fmt(record.min_eig[i]), _fmt(record.rate[i]),
        ]))
    return "\n".join(lines) + "\n"


def snapshot_document(t: float, rho: np.ndarray) -> dict:
    eig = hermitian_eigen(rho)
    return {
        "t": t,
        "dim": int(rho.shape[0]),
        "entries": [[float(z.real), float(z.imag)] for z in rho.reshape(-1)],
        "eigenvalues": [float(x) for x in eig.values[::-1]],
    }


def write_scenario_outputs(
    cfg: ScenarioConfig,
    record: TrajectoryRecord,
    output_dir: Path | None = None,
    calibration_residual: float | None = None,
) -> Path:
    """Write timeseries.csv, snapshot_t*.json, meta.json under <dir>/<label>."""
    base = Path(output_dir if output_dir is not None else cfg.output_dir) / cfg.label
    try:
        base.mkdir(parents=True, exist_ok=True)
        (base / "timeseries.csv").write_text(render_csv(record), encoding="utf-8")
        if record.snapshots:
            for t, rho in sorted(record.snapshots.items()):
                doc = snapshot_document(t, rho)
                (base / f"snapshot_t{t:g}.json").write_text(
                    json.dumps(doc, indent=2) + "\n", encoding="utf-8")
        meta = {
            "config": config_to_dict(cfg),
            "warnings": list(record.warnings),
            "positivity_events": [[t, v] for t, v in record.positivity_events],
            "trace_drift_max": record.trace_drift_max,
            "trace_correction_max": record.trace_correction_max,
            "trace_correction_total": record.trace_correction_total,
            "calibration_residual": calibration_residual,
        }
        (base / "meta.json").write_text(
            json.dumps(meta, indent=2) + "\n", encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot write outputs under {base}: {exc}") from exc
    return base


def run_scenario(
    cfg: ScenarioConfig,
    output_dir: Path | None = None,
    write: bool = True,
) -> TrajectoryRecord:
    """Run the two-phase experiment for a config and persist its outputs."""
    observables = ObservableSet(snapshots=bool(cfg.snapshot_times))
    _, record = run_two_phase(
        cfg.model,
        cfg.channel,
        cfg.integrator,
        charging_dt=cfg.charging_dt,
        observables=observables,
        snapshot_times=cfg.snapshot_times,
    )
    if write:
        write_scenario_outputs(cfg, record, output_dir=output_dir)
    return record


# --- sweeps ------------------------------------------------------------

_AXIS_PATHS = {
    "model.lambda": ("model", "lambda"),
    "model.alpha": ("model", "alpha"),
    "model.eta": ("model", "eta"),
    "model.n_x": ("model", "n_x"),
    "model.n_y": ("model", "n_y"),
    "model.b_s": ("model", "b_s"),
    "model.tau": ("model", "tau"),
    "channel.rate.gamma": ("channel", "rate", "gamma"),
    "channel.rate.gamma0": ("channel", "rate", "gamma0"),
    "channel.rate.beta": ("channel", "rate", "beta"),
    "channel.rate.omega": ("channel", "rate", "omega"),
    "integrator.dt": ("integrator", "dt"),
    "integrator.t_end": ("integrator", "t_end"),
    "charging_dt": ("charging_dt",),
}


def _set_path(doc: dict, path: tuple[str, ...], value: float) -> None:
    node = doc
    for key in path[:-1]:
        node = node.setdefault(key, {})
    node[path[-1]] = value


def run_sweep(
    base: ScenarioConfig,
    axis: str,
    values: Sequence[float],
    output_dir: Path | None = None,
    write: bool = True,
) -> list[dict]:
    """One independent trajectory per axis value, plus a terminal-row summary.

    Each run is executed through the exact single-scenario code path, so
    summary rows are identical to the terminal rows of the corresponding
    individual runs.
    """
    if axis not in _AXIS_PATHS:
        raise InputError(
            f"unknown sweep axis {axis!r}; available: {', '.join(sorted(_AXIS_PATHS))}"
        )
    if not values:
        return []

    summary = []
    out_base = Path(output_dir if output_dir is not None else base.output_dir)
    for value in values:
        doc = config_to_dict(base)
        _set_path(doc, _AXIS_PATHS[axis], float(value))
        doc["label"] = f"{base.label}-{axis.split('.')[-1]}-{value:g}"
        cfg = config_from_dict(doc)
        record = run_scenario(cfg, output_dir=out_base if write else None, write=write)
        summary.append({
            "value": float(value),
            "label": cfg.label,
            "terminal_row": render_csv(record).splitlines()[-1],
        })

    if write:
        out_base.mkdir(parents=True, exist_ok=True)
        lines = ["value," + CSV_HEADER]
        for row in summary:
            lines.append(_fmt(row["value"]) + "," + row["terminal_row"])
        sweep_name = f"{base.label}-sweep-{axis.replace('.', '_')}.csv"
        (out_base / sweep_name).write_text("\n".join(lines) + "\n", encoding="utf-8")
    return summary


# --- pulse calibration -------------------------------------------------

def _charge_batch(params: ModelParams, amplitudes: np.ndarray, dt: float) -> np.ndarray:
    """Charged states for many pulse amplitudes in one batched integration.

    Same RK4 recursion and charging window as the scenario path, vectorized
    over the amplitude axis. Used only by the calibration search; scenario
    runs always go through `integrate`.
    """
    rho0 = ground_state(params)
    h0 = build_h0(params)
    a0_t = commutator_superop(h0).T.copy()
    ap_t = commutator_superop(PULSE_PATTERN).T.copy()
    center = charging_pulse_center(params)
    tau = params.tau

    n_batch = len(amplitudes)
    v = np.tile(rho0.reshape(-1), (n_batch, 1))
    n_steps = int(round(charging_window_end(params) / dt))
    bs = np.asarray(amplitudes, dtype=float)

    def envelope(t: float) -> np.ndarray:
        x = (t - center) / tau
        return (bs * math.exp(-0.5 * x * x))[:, None]

    half = 0.5 * dt
    for step in range(n_steps):
        t = step * dt
        e0, eh, e1 = envelope(t), envelope(t + half), envelope(t + dt)
        k1 = v @ a0_t + e0 * (v @ ap_t)
        w = v + half * k1
        k2 = w @ a0_t + eh * (w @ ap_t)
        w = v + half * k2
        k3 = w @ a0_t + eh * (w @ ap_t)
        w = v + dt * k3
        k4 = w @ a0_t + e1 * (w @ ap_t)
        v = v + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        m = v.reshape(n_batch, 4, 4)
        m = 0.5 * (m + np.conj(np.swapaxes(m, 1, 2)))
        v = m.reshape(n_batch, 16)
    return v.reshape(n_batch, 4, 4)


@dataclass(frozen=True)
class CalibrationResult:
    pulse_amplitude: float
    residual: float
    coherence: float
    grid_description: str


def calibrate_pulse_amplitude(
    params: ModelParams | None = None,
    target: float = COHERENCE_TARGET,
    charging_dt: float = 1e-4,
) -> CalibrationResult:
    """Grid-search the pulse amplitude whose charged state hits the
    coherence target.

    Three passes: a coarse grid over the documented amplitude window, then
    two successively finer grids centered on the running best point. The
    window starts where the charged state also reproduces the tabulated
    ergotropy scale; the coherence target alone recurs at many amplitudes.
    """
    if params is None:
        params = ModelParams()
    lo, hi, step = CALIBRATION_COARSE
    grid = np.arange(lo, hi + step / 2, step)
    descr = [f"coarse [{lo}, {hi}] step {step}"]

    best_bs, best_coh = _calibration_pass(params, grid, target, charging_dt)
    for fine_step in CALIBRATION_REFINE_STEPS:
        prev_step = step
        grid = np.arange(best_bs - prev_step, best_bs + prev_step + fine_step / 2,
                         fine_step)
        grid = grid[grid >= 0.0]
        descr.append(f"refine +-{prev_step} step {fine_step}")
        best_bs, best_coh = _calibration_pass(params, grid, target, charging_dt)
        step = fine_step

    return CalibrationResult(
        pulse_amplitude=float(best_bs),
        residual=float(abs(best_coh - target)),
        coherence=float(best_coh),
        grid_description="; ".join(descr),
    )


def _calibration_pass(
    params: ModelParams, grid: np.ndarray, target: float, dt: float
) -> tuple[float, float]:
    states = _charge_batch(params, grid, dt)
    coherences = [l1_coherence(m) for m in states]
    idx = int(np.argmin([abs(c - target) for c in coherences]))
    return float(grid[idx]), float(coherences[idx])


# --- verification against the reference tables --------------------------

@dataclass(frozen=True)
class VerifyTolerances:
    quantitative_rel: float = 0.10     # relative tolerance on coherence/ergotropy cells
    plateau_abs: float = 1e-3          # |erg(40) - erg(100)| for the plateau checks
    weak_decay_fraction: float = 0.25  # erg(100) below this fraction of erg(0)
    coherence_cut: float = 0.02        # dephasing coherence by t=40
    ergotropy_cut: float = 0.01        # dephasing ergotropy by t=100
    mixed_eigen_abs: float = 0.01      # distance of rho(100) spectrum from 1/4
    backflow_margin: float = 0.02      # non-Markovian terminal-ergotropy margin


def verify_tables(
    tolerances: VerifyTolerances | None = None,
    skip_calibration: bool = False,
    output_dir: Path | None = None,
) -> dict:
    """Run every preset scenario and compare against the reference tables.

    Produces a report dict (also written to verify_report.json when an
    output directory is given) with three sections: the calibration result,
    per-cell quantitative deltas, and calibration-independent qualitative
    checks. Quantitative cells are informative; the qualitative checks are
    the ones a healthy build must pass.
    """
    tol = tolerances or VerifyTolerances()

    if skip_calibration:
        calibration = {
            "skipped": True,
            "pulse_amplitude": CALIBRATED_PULSE_AMPLITUDE,
            "residual": None,
            "grid": None,
        }
        b_s = CALIBRATED_PULSE_AMPLITUDE
    else:
        result = calibrate_pulse_amplitude()
        calibration = {
            "skipped": False,
            "pulse_amplitude": result.pulse_amplitude,
            "residual": result.residual,
            "coherence": result.coherence,
            "grid": result.grid_description,
        }
        b_s = result.pulse_amplitude

    records: dict[str, TrajectoryRecord] = {}
    csv_texts: dict[str, str] = {}
    for name, preset in preset_catalog().items():
        cfg = replace(preset, model=ModelParams(b_s=b_s))
        record = run_scenario(cfg, output_dir=output_dir, write=output_dir is not None)
        records[name] = record
        csv_texts[name] = render_csv(record)

    quantitative = _quantitative_section(records, tol)
    qualitative = _qualitative_section(records, csv_texts, tol)

    report = {
        "calibration": calibration,
        "quantitative": quantitative,
        "qualitative": qualitative,
        "all_qualitative_pass": all(q["pass"] for q in qualitative),
    }
    if output_dir is not None:
        path = Path(output_dir)
        path.mkdir(parents=True, exist_ok=True)
        (path / "verify_report.json").write_text(
            json.dumps(report, indent=2) + "\n", encoding="utf-8")
    return report


def _row_values(record: TrajectoryRecord, t: float) -> dict:
    i = record.at_time(t)
    snapshot = None
    if record.snapshots and t in record.snapshots:
        snapshot = record.snapshots[t]
    return {
        "coherence": float(record.coherence[i]),
        "ergotropy": float(record.ergotropy[i]),
        "snapshot": snapshot,
    }


def _quantitative_section(records, tol: VerifyTolerances) -> list[dict]:
    cells = []
    for table in reference.TABLES:
        record = records.get(table.preset)
        if record is None:
            continue
        for row in table.rows:
            sim = _row_values(record, row.t)
            for metric, ref_value in (("coherence", row.coherence),
                                      ("ergotropy", row.ergotropy)):
                sim_value = sim[metric]
                delta = sim_value - ref_value
                rel = abs(delta) / max(abs(ref_value), 1e-12)
                cells.append({
                    "table": table.name,
                    "preset": table.preset,
                    "t": row.t,
                    "metric": metric,
                    "reference": ref_value,
                    "simulated": sim_value,
                    "delta": delta,
                    "relative": rel,
                    "within_tolerance": rel <= tol.quantitative_rel,
                })
            if sim["snapshot"] is not None:
                eig = hermitian_eigen(sim["snapshot"]).values
                populations = np.diag(sim["snapshot"]).real
                ref_sorted = np.sort(np.asarray(row.quadruple))[::-1]
                cells.append({
                    "table": table.name,
                    "preset": table.preset,
                    "t": row.t,
                    "metric": "spectrum",
                    "reference": list(row.quadruple),
                    "simulated_eigenvalues_desc": [float(x) for x in eig[::-1]],
                    "simulated_populations": [float(x) for x in populations],
                    "max_abs_delta_eigenvalues": float(
                        np.abs(np.sort(eig)[::-1] - ref_sorted).max()),
                    "max_abs_delta_populations": float(
                        np.abs(populations - np.asarray(row.quadruple)).max()),
                })
    return cells


def _erg_at(record: TrajectoryRecord, t: float) -> float:
    return float(record.ergotropy[record.at_time(t)])


def _coh_at(record: TrajectoryRecord, t: float) -> float:
    return float(record.coherence[record.at_time(t)])


def _qualitative_section(records, csv_texts, tol: VerifyTolerances) -> list[dict]:
    checks = []

    def add(name: str, value, threshold, passed: bool, detail: str = "") -> None:
        checks.append({"check": name, "value": value, "threshold": threshold,
                       "pass": bool(passed), "detail": detail})

    for preset in ("ad-strong", "ad-mid"):
        gap = abs(_erg_at(records[preset], 40.0) - _erg_at(records[preset], 100.0))
        add(f"{preset} ergotropy plateau", gap, tol.plateau_abs, gap < tol.plateau_abs,
            "|erg(40) - erg(100)|")

    e0 = _erg_at(records["ad-weak"], 0.0)
    e100 = _erg_at(records["ad-weak"], 100.0)
    add("ad-weak ergotropy decay", e100, tol.weak_decay_fraction * e0,
        e100 < tol.weak_decay_fraction * e0, "erg(100) vs fraction of erg(0)")

    for preset in ("deph-weak", "deph-strong"):
        c40 = _coh_at(records[preset], 40.0)
        add(f"{preset} coherence suppressed", c40, tol.coherence_cut,
            c40 < tol.coherence_cut, "coherence(40)")
        e_end = _erg_at(records[preset], 100.0)
        add(f"{preset} ergotropy suppressed", e_end, tol.ergotropy_cut,
            e_end < tol.ergotropy_cut, "ergotropy(100)")
        snap = records[preset].snapshots.get(100.0)
        eig = hermitian_eigen(snap).values
        dist = float(np.abs(eig - 0.25).max())
        add(f"{preset} maximally mixed endpoint", dist, tol.mixed_eigen_abs,
            dist < tol.mixed_eigen_abs, "max |eig - 1/4| at t=100")

    # monotone decay of dephasing coherence across the tabulated times
    for preset in ("deph-weak", "deph-strong"):
        cs = [_coh_at(records[preset], t) for t in (0.0, 10.0, 40.0, 100.0)]
        monotone = all(a > b for a, b in zip(cs, cs[1:]))
        add(f"{preset} coherence monotone decay", cs, None, monotone,
            "coherence at t=0,10,40,100 strictly decreasing")

    # non-Markovian backflow: at least one strictly increasing sampled interval
    coh = records["nonmarkov-b05"].coherence
    increases = int(np.sum(np.diff(coh) > 0.0))
    add("nonmarkov-b05 coherence backflow", increases, 1, increases >= 1,
        "count of strictly increasing sampled coherence intervals")

    markov_term = _erg_at(records["markov"], 100.0)
    for preset in ("nonmarkov-b05", "nonmarkov-b10"):
        term = _erg_at(records[preset], 100.0)
        add(f"{preset} terminal ergotropy above markovian", term,
            markov_term + tol.backflow_margin,
            term > markov_term + tol.backflow_margin,
            f"vs markov terminal {markov_term:.6f} + margin")

    identical = csv_texts["ad-mid"] == csv_texts["markov"]
    add("markov preset reproduces ad-mid byte-for-byte", identical, True, identical,
        "identical CSV text from one code path")

    return checks
