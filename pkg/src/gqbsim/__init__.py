"""Simulator for a four-level spin-valley quantum battery: Gaussian-pulse
charging, Markovian and non-Markovian dissipation, and work-extraction
diagnostics (energy, purity, l1-coherence, ergotropy)."""

from .errors import (
    ConfigError,
    ConvergenceError,
    DegenerateGroundLevelError,
    GqbError,
    InputError,
    NonHermitianError,
    NumericalError,
)
from .linalg import (
    EigenDecomposition,
    adjoint,
    hermitian_eigen,
    kron,
    mat_add,
    mat_mul,
    trace,
)
from .model import (
    ModelParams,
    SpectrumClosedForm,
    build_h0,
    closed_form_spectrum,
    ground_state,
    pulse_hamiltonian,
)
from .observables import (
    ObservableSet,
    PassiveState,
    energy,
    ergotropy,
    l1_coherence,
    passive_state,
    purity_fidelity,
)
from .dynamics import (
    ChannelKind,
    ChannelSpec,
    ConstantRate,
    ExpCosineRate,
    IntegratorConfig,
    TimeDependentHamiltonian,
    TrajectoryRecord,
    collapse_operator,
    evaluate_rate,
    integrate,
    lindblad_rhs,
    run_two_phase,
)
from .scenario import (
    CalibrationResult,
    ScenarioConfig,
    VerifyTolerances,
    calibrate_pulse_amplitude,
    get_preset,
    load_config,
    preset_catalog,
    run_scenario,
    run_sweep,
    verify_tables,
)

__version__ = "0.1.0"

__all__ = [
    "ChannelKind", "ChannelSpec", "ConfigError", "ConstantRate",
    "ConvergenceError", "CalibrationResult", "DegenerateGroundLevelError",
    "EigenDecomposition", "ExpCosineRate", "GqbError", "InputError",
    "IntegratorConfig", "ModelParams", "NonHermitianError", "NumericalError",
    "ObservableSet", "PassiveState", "ScenarioConfig", "SpectrumClosedForm",
    "TimeDependentHamiltonian", "TrajectoryRecord", "VerifyTolerances",
    "adjoint", "build_h0", "calibrate_pulse_amplitude", "closed_form_spectrum",
    "collapse_operator", "energy", "ergotropy", "evaluate_rate", "get_preset",
    "ground_state", "hermitian_eigen", "integrate", "kron", "l1_coherence",
    "lindblad_rhs", "load_config", "mat_add", "mat_mul", "passive_state",
    "preset_catalog", "pulse_hamiltonian", "purity_fidelity", "run_scenario",
    "run_sweep", "run_two_phase", "trace", "verify_tables",
]
