import json

import numpy as np
import pytest

from gqbsim.dynamics import (
    ChannelKind,
    ChannelSpec,
    ConstantRate,
    ExpCosineRate,
    IntegratorConfig,
    integrate,
)
from gqbsim.errors import ConfigError, InputError
from gqbsim.model import ModelParams, ground_state
from gqbsim.dynamics import charging_hamiltonian
from gqbsim.scenario import (
    CSV_HEADER,
    ScenarioConfig,
    _charge_batch,
    config_from_dict,
    config_to_dict,
    get_preset,
    load_config,
    preset_catalog,
    render_csv,
    run_scenario,
    run_sweep,
    snapshot_document,
)

FAST_DOC = """
label: fast
channel:
  kind: amplitude_damping
  rate:
    form: constant
    gamma: 0.5
integrator:
  dt: 0.001
  t_end: 2.0
  sample_stride: 100
charging_dt: 0.001
snapshot_times: [0, 2]
"""


def fast_config(**overrides) -> ScenarioConfig:
    import yaml

    doc = yaml.safe_load(FAST_DOC)
    doc.update(overrides)
    return config_from_dict(doc)


# --- config parsing


def test_empty_document_gives_defaults():
    cfg = load_config("")
    assert cfg.model == ModelParams()
    assert cfg.channel.kind is ChannelKind.NONE
    assert cfg.integrator == IntegratorConfig()
    assert cfg.label == "scenario"


def test_constant_ad_document():
    cfg = load_config(FAST_DOC)
    assert cfg.channel.kind is ChannelKind.AMPLITUDE_DAMPING
    assert cfg.channel.rate == ConstantRate(0.5)
    assert cfg.integrator.t_end == 2.0
    assert cfg.snapshot_times == (0.0, 2.0)


def test_exp_cosine_document():
    cfg = load_config(
        "channel:\n  kind: amplitude_damping\n  rate:\n"
        "    form: exp_cosine\n    gamma0: 0.5\n    beta: 0.5\n    omega: 1.0\n")
    assert cfg.channel.rate == ExpCosineRate(0.5, 0.5, 1.0)


def test_invalid_tau_names_field():
    with pytest.raises(ConfigError, match="tau"):
        load_config("model:\n  tau: -1\n")


def test_unknown_key_is_hard_error():
    with pytest.raises(ConfigError, match="gamm"):
        load_config("channel:\n  kind: amplitude_damping\n  rate:\n    gamm: 0.5\n")
    with pytest.raises(ConfigError, match="modle"):
        load_config("modle:\n  tau: 1\n")


def test_bad_kind_and_form():
    with pytest.raises(ConfigError, match="kind"):
        load_config("channel:\n  kind: squeezing\n")
    with pytest.raises(ConfigError, match="form"):
        load_config("channel:\n  kind: dephasing\n  rate:\n    form: linear\n")


def test_exp_cosine_missing_fields():
    with pytest.raises(ConfigError, match="omega"):
        load_config("channel:\n  kind: dephasing\n  rate:\n"
                    "    form: exp_cosine\n    gamma0: 0.5\n    beta: 0.1\n")


def test_root_must_be_mapping():
    with pytest.raises(ConfigError):
        load_config("- 1\n- 2\n")
    with pytest.raises(ConfigError):
        load_config("model: [1, 2]\n")


def test_unparseable_document():
    with pytest.raises(ConfigError, match="parse"):
        load_config("model: {tau: 1\n")


def test_label_validation():
    with pytest.raises(ConfigError):
        config_from_dict({"label": ""})
    with pytest.raises(ConfigError):
        config_from_dict({"label": "bad/label"})


def test_snapshot_times_must_lie_in_window():
    with pytest.raises(ConfigError):
        config_from_dict({"snapshot_times": [500.0]})


def test_config_round_trip():
    cfg = fast_config()
    assert config_from_dict(config_to_dict(cfg)) == cfg


# --- presets


def test_preset_catalog_contents():
    catalog = preset_catalog()
    assert set(catalog) == {
        "ad-weak", "ad-mid", "ad-strong", "deph-weak", "deph-strong",
        "markov", "nonmarkov-b01", "nonmarkov-b05", "nonmarkov-b10",
    }
    assert catalog["ad-weak"].channel.rate == ConstantRate(0.1)
    assert catalog["deph-strong"].channel.kind is ChannelKind.DEPHASING
    assert catalog["markov"].channel == catalog["ad-mid"].channel
    assert catalog["nonmarkov-b05"].channel.rate == ExpCosineRate(0.5, 0.5, 1.0)
    for name, cfg in catalog.items():
        assert cfg.label == name
        assert cfg.integrator.t_end == 100.0


def test_unknown_preset():
    with pytest.raises(InputError, match="unknown preset"):
        get_preset("ad-maximal")


# --- outputs


def test_run_scenario_writes_documented_layout(tmp_path):
    cfg = fast_config()
    record = run_scenario(cfg, output_dir=tmp_path)
    assert np.all(np.diff(record.times) > 0)
    base = tmp_path / "fast"
    csv_text = (base / "timeseries.csv").read_text()
    lines = csv_text.strip().split("\n")
    assert lines[0] == CSV_HEADER
    assert len(lines) == 1 + len(record.times)
    assert (base / "snapshot_t0.json").exists()
    assert (base / "snapshot_t2.json").exists()
    meta = json.loads((base / "meta.json").read_text())
    assert meta["config"]["label"] == "fast"
    assert meta["trace_correction_max"] < 1e-12

    snap = json.loads((base / "snapshot_t2.json").read_text())
    assert snap["dim"] == 4
    assert len(snap["entries"]) == 16
    eigs = snap["eigenvalues"]
    assert eigs == sorted(eigs, reverse=True)
    assert sum(eigs) == pytest.approx(1.0, abs=1e-9)


def test_csv_uses_17_significant_digits(tmp_path):
    record = run_scenario(fast_config(), write=False)
    row = render_csv(record).strip().split("\n")[1].split(",")
    assert float(row[0]) == 0.0
    # a third-of-like fraction would round-trip; check a few survive parsing
    for cell in row:
        float(cell)


def test_closed_channel_purity_constant():
    cfg = fast_config(channel={"kind": "none"})
    record = run_scenario(cfg, write=False)
    assert np.abs(record.purity - record.purity[0]).max() < 1e-8
    assert np.array_equal(record.rate, np.zeros_like(record.rate))


def test_scenario_determinism_in_memory():
    cfg = fast_config()
    a = render_csv(run_scenario(cfg, write=False))
    b = render_csv(run_scenario(cfg, write=False))
    assert a == b


def test_render_csv_requires_all_columns():
    from gqbsim.observables import ObservableSet
    from gqbsim.dynamics import run_two_phase

    cfg = fast_config()
    _, record = run_two_phase(cfg.model, cfg.channel, cfg.integrator,
                              charging_dt=cfg.charging_dt,
                              observables=ObservableSet(energy=False))
    with pytest.raises(InputError, match="energy"):
        render_csv(record)


# --- sweeps


def test_sweep_empty_values(tmp_path):
    assert run_sweep(fast_config(), "channel.rate.gamma", [],
                     output_dir=tmp_path) == []
    assert list(tmp_path.iterdir()) == []


def test_sweep_unknown_axis():
    with pytest.raises(InputError, match="axis"):
        run_sweep(fast_config(), "channel.rate.lambda", [0.1])


def test_sweep_rows_equal_individual_runs(tmp_path):
    base = fast_config()
    summary = run_sweep(base, "channel.rate.gamma", [0.1, 1.0],
                        output_dir=tmp_path)
    assert [row["value"] for row in summary] == [0.1, 1.0]
    for row in summary:
        doc = config_to_dict(base)
        doc["channel"]["rate"]["gamma"] = row["value"]
        doc["label"] = row["label"]
        individual = run_scenario(config_from_dict(doc), write=False)
        assert row["terminal_row"] == render_csv(individual).strip().split("\n")[-1]

    sweep_csv = tmp_path / "fast-sweep-channel_rate_gamma.csv"
    lines = sweep_csv.read_text().strip().split("\n")
    assert lines[0] == "value," + CSV_HEADER
    assert len(lines) == 3
    assert (tmp_path / "fast-gamma-0.1" / "timeseries.csv").exists()


def test_sweep_axis_incompatible_with_rate_form():
    cfg = fast_config()  # constant-rate channel has no beta field
    with pytest.raises(ConfigError):
        run_sweep(cfg, "channel.rate.beta", [0.5], write=False)


# --- calibration internals


def test_batched_charging_matches_integrate_path():
    cfg = IntegratorConfig(dt=1e-3, t_end=10.0, sample_stride=10000)
    batch = _charge_batch(ModelParams(b_s=2.0), np.array([1.0, 2.0]), dt=1e-3)
    for amplitude, state in [(1.0, batch[0]), (2.0, batch[1])]:
        params = ModelParams(b_s=amplitude)
        single = integrate(ground_state(params), charging_hamiltonian(params),
                           ChannelSpec.none(), cfg).final_state
        assert np.abs(state - single).max() < 1e-12


def test_snapshot_document_structure(rng):
    from helpers import random_density_matrix

    rho = random_density_matrix(rng)
    doc = snapshot_document(1.5, rho)
    entries = np.array(doc["entries"])
    rebuilt = (entries[:, 0] + 1j * entries[:, 1]).reshape(4, 4)
    assert np.abs(rebuilt - rho).max() < 1e-15
    assert doc["eigenvalues"] == sorted(doc["eigenvalues"], reverse=True)
