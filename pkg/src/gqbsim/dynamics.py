"""Open-system evolution: channels, rate profiles, the master-equation
right-hand side, a fixed-step RK4 integrator, and the two-phase
(charge, then dissipate) runner.

The integrator propagates the vectorized density matrix with the
Liouvillian written as a 16x16 superoperator; this is algebraically the
same RK4 recursion as stepping the matrix form, just much cheaper per
step. `lindblad_rhs` keeps the matrix form as the reference definition
and the tests pin the two against each other.

Negative instantaneous rates (the exponential-cosine profile) are
integrated as written: clamping them would erase the information-backflow
physics this model exists to exhibit. Positivity of the state is
monitored, not enforced; violations beyond tolerance are recorded as
warnings on the trajectory.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Union

import numpy as np

from .errors import InputError, NumericalError
from .linalg import as_complex_matrix, hermiticity_defect, hermitian_eigen, kron
from .model import (
    ModelParams,
    PULSE_PATTERN,
    build_h0,
    charging_pulse_center,
    charging_window_end,
    ground_state,
)
from .observables import ObservableSet, l1_coherence
from .tolerances import DEFAULT as TOL

SIGMA_MINUS = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
SIGMA_Z = np.diag([1.0, -1.0]).astype(complex)
IDENTITY_2 = np.eye(2, dtype=complex)


class ChannelKind(Enum):
    AMPLITUDE_DAMPING = "amplitude_damping"
    DEPHASING = "dephasing"
    NONE = "none"


@dataclass(frozen=True)
class ConstantRate:
    gamma: float = 0.0

    def __post_init__(self) -> None:
        if not math.isfinite(self.gamma) or self.gamma < 0.0:
            raise InputError(f"constant rate must be finite and >= 0, got {self.gamma}")


@dataclass(frozen=True)
class ExpCosineRate:
    """gamma0 * exp(-beta t) * cos(omega t); may be negative at times."""

    gamma0: float
    beta: float
    omega: float

    def __post_init__(self) -> None:
        if not all(math.isfinite(x) for x in (self.gamma0, self.beta, self.omega)):
            raise InputError("rate parameters must be finite")
        if self.gamma0 < 0.0:
            raise InputError(f"gamma0 must be >= 0, got {self.gamma0}")
        if self.beta < 0.0:
            raise InputError(f"beta must be >= 0, got {self.beta}")


RateProfile = Union[ConstantRate, ExpCosineRate]


def evaluate_rate(profile: RateProfile, t: float) -> float:
    """Instantaneous rate at t >= 0."""
    if t < 0.0:
        raise InputError(f"rate requested at negative time {t}")
    if isinstance(profile, ConstantRate):
        return profile.gamma
    return profile.gamma0 * math.exp(-profile.beta * t) * math.cos(profile.omega * t)


@dataclass(frozen=True)
class ChannelSpec:
    kind: ChannelKind
    rate: RateProfile

    def __post_init__(self) -> None:
        if self.kind is ChannelKind.NONE:
            if not isinstance(self.rate, ConstantRate) or self.rate.gamma != 0.0:
                raise InputError("a disabled channel must carry a zero constant rate")

    @staticmethod
    def none() -> "ChannelSpec":
        return ChannelSpec(ChannelKind.NONE, ConstantRate(0.0))

    @staticmethod
    def amplitude_damping(rate: RateProfile | float) -> "ChannelSpec":
        if isinstance(rate, (int, float)):
            rate = ConstantRate(float(rate))
        return ChannelSpec(ChannelKind.AMPLITUDE_DAMPING, rate)

    @staticmethod
    def dephasing(rate: RateProfile | float) -> "ChannelSpec":
        if isinstance(rate, (int, float)):
            rate = ConstantRate(float(rate))
        return ChannelSpec(ChannelKind.DEPHASING, rate)


def collapse_operator(kind: ChannelKind) -> np.ndarray:
    """Collective two-pseudospin collapse operator for the channel."""
    if kind is ChannelKind.AMPLITUDE_DAMPING:
        return kron(SIGMA_MINUS, IDENTITY_2) + kron(IDENTITY_2, SIGMA_MINUS)
    if kind is ChannelKind.DEPHASING:
        return kron(SIGMA_Z, IDENTITY_2) + kron(IDENTITY_2, SIGMA_Z)
    raise InputError("the disabled channel has no collapse operator")


def validate_density_matrix(rho: np.ndarray, positivity_tol: float = TOL.positivity) -> np.ndarray:
    """Check Hermiticity, unit trace, and positivity; return the array."""
    rho = as_complex_matrix(rho)
    defect = hermiticity_defect(rho)
    if defect > TOL.hermiticity:
        raise InputError(f"density matrix not Hermitian: defect {defect:.3e}")
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > TOL.unit_trace:
        raise InputError(f"density matrix trace {tr:.12f} is not 1")
    min_eig = float(hermitian_eigen(rho).values[0])
    if min_eig < -positivity_tol:
        raise InputError(f"density matrix has eigenvalue {min_eig:.3e} < -{positivity_tol:.1e}")
    return rho


@dataclass(frozen=True)
class TimeDependentHamiltonian:
    """h(t) = static + envelope(t) * drive; drive may be absent."""

    static: np.ndarray
    drive: np.ndarray | None = None
    envelope: Callable[[float], float] | None = None

    def __post_init__(self) -> None:
        if (self.drive is None) != (self.envelope is None):
            raise InputError("drive matrix and envelope must be given together")

    def at(self, t: float) -> np.ndarray:
        if self.drive is None:
            return self.static
        return self.static + self.envelope(t) * self.drive

    @property
    def is_static(self) -> bool:
        return self.drive is None


def lindblad_rhs(
    rho: np.ndarray,
    h: np.ndarray,
    channel: ChannelSpec,
    t: float = 0.0,
) -> np.ndarray:
    """d rho / dt in matrix form: -i[h, rho] + gamma(t) D[L] rho."""
    rho = as_complex_matrix(rho)
    h = as_complex_matrix(h)
    if hermiticity_defect(h) > TOL.hermiticity:
        raise InputError("hamiltonian must be Hermitian")
    out = -1j * (h @ rho - rho @ h)
    if channel.kind is not ChannelKind.NONE:
        gamma = evaluate_rate(channel.rate, t)
        L = collapse_operator(channel.kind)
        Ld = L.conj().T
        LdL = Ld @ L
        out = out + gamma * (L @ rho @ Ld - 0.5 * (LdL @ rho + rho @ LdL))
    return out


# --- superoperator construction (row-major vec: vec(A rho B) = (A kron B^T) vec(rho))

def commutator_superop(h: np.ndarray) -> np.ndarray:
    n = h.shape[0]
    eye = np.eye(n)
    return -1j * (np.kron(h, eye) - np.kron(eye, h.T))


def dissipator_superop(L: np.ndarray) -> np.ndarray:
    n = L.shape[0]
    eye = np.eye(n)
    LdL = L.conj().T @ L
    return np.kron(L, L.conj()) - 0.5 * (np.kron(LdL, eye) + np.kron(eye, LdL.T))


@dataclass(frozen=True)
class IntegratorConfig:
    dt: float = 1e-3
    t_end: float = 100.0
    sample_stride: int = 100
    positivity_tol: float = TOL.positivity

    def __post_init__(self) -> None:
        if not (math.isfinite(self.dt) and self.dt > 0.0):
            raise InputError(f"dt must be positive, got {self.dt}")
        if not (math.isfinite(self.t_end) and self.t_end > 0.0):
            raise InputError(f"t_end must be positive, got {self.t_end}")
        if self.dt > self.t_end:
            raise InputError("dt must not exceed t_end")
        if self.sample_stride < 1:
            raise InputError("sample_stride must be a positive integer")
        if self.positivity_tol <= 0.0:
            raise InputError("positivity_tol must be positive")


@dataclass
class TrajectoryRecord:
    """Sampled observables of one trajectory, plus integration diagnostics."""

    times: np.ndarray
    energy: np.ndarray | None
    purity: np.ndarray | None
    coherence: np.ndarray | None
    ergotropy: np.ndarray | None
    min_eig: np.ndarray
    rate: np.ndarray
    snapshots: dict[float, np.ndarray] | None = None
    warnings: list[str] = field(default_factory=list)
    positivity_events: list[tuple[float, float]] = field(default_factory=list)
    trace_drift_max: float = 0.0
    trace_correction_max: float = 0.0
    trace_correction_total: float = 0.0
    final_state: np.ndarray | None = None

    def at_time(self, t: float) -> int:
        """Index of the sample closest to t."""
        idx = int(np.argmin(np.abs(self.times - t)))
        return idx


def _rk4_evolve(
    v: np.ndarray,
    deriv,
    dt: float,
    t: float,
) -> np.ndarray:
    k1 = deriv(t, v)
    k2 = deriv(t + 0.5 * dt, v + (0.5 * dt) * k1)
    k3 = deriv(t + 0.5 * dt, v + (0.5 * dt) * k2)
    k4 = deriv(t + dt, v + dt * k3)
    return v + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def _rk4_step_matrix(m: np.ndarray, dt: float) -> np.ndarray:
    """One-step RK4 map for v' = m v: the degree-4 Taylor polynomial of dt*m."""
    eye = np.eye(m.shape[0], dtype=complex)
    hm = dt * m
    acc = eye + hm / 4.0
    acc = eye + (hm / 3.0) @ acc
    acc = eye + (hm / 2.0) @ acc
    return eye + hm @ acc


def integrate(
    rho0: np.ndarray,
    hamiltonian: TimeDependentHamiltonian,
    channel: ChannelSpec,
    cfg: IntegratorConfig,
    observables: ObservableSet | None = None,
    snapshot_times: tuple[float, ...] = (),
) -> TrajectoryRecord:
    """Propagate rho0 with fixed-step RK4 and record sampled observables.

    Every step the state is re-symmetrized, its trace renormalized (the
    per-step corrections stay at rounding scale and their sizes are
    accumulated on the record), and checked for non-finite entries. At
    sampled times the spectrum of rho is computed for the ergotropy and the
    positivity monitor.
    """
    if observables is None:
        observables = ObservableSet()
    rho0 = validate_density_matrix(rho0, cfg.positivity_tol)
    dim = rho0.shape[0]

    h_static = as_complex_matrix(hamiltonian.static)
    if hermiticity_defect(h_static) > TOL.hermiticity:
        raise InputError("static hamiltonian must be Hermitian")

    a_static = commutator_superop(h_static)
    a_drive = None
    if not hamiltonian.is_static:
        a_drive = commutator_superop(as_complex_matrix(hamiltonian.drive))
        envelope = hamiltonian.envelope

    dissipator = None
    rate_profile = channel.rate
    if channel.kind is not ChannelKind.NONE:
        dissipator = dissipator_superop(collapse_operator(channel.kind))
        if isinstance(rate_profile, ConstantRate):
            # constant generator: fold the dissipator in once
            a_static = a_static + rate_profile.gamma * dissipator
            dissipator = None

    step_propagator = None
    deriv = None
    if a_drive is None and dissipator is None:
        # Constant generator: the classical RK4 step of a linear autonomous
        # system is exactly v + hMv + (hM)^2 v/2 + (hM)^3 v/6 + (hM)^4 v/24,
        # so precompute that polynomial once and step with a single matvec.
        step_propagator = _rk4_step_matrix(a_static, cfg.dt)
    elif dissipator is None:

        def deriv(t: float, v: np.ndarray) -> np.ndarray:
            return a_static @ v + envelope(t) * (a_drive @ v)

    elif a_drive is None:

        def deriv(t: float, v: np.ndarray) -> np.ndarray:
            return a_static @ v + evaluate_rate(rate_profile, t) * (dissipator @ v)

    else:

        def deriv(t: float, v: np.ndarray) -> np.ndarray:
            return (
                a_static @ v
                + envelope(t) * (a_drive @ v)
                + evaluate_rate(rate_profile, t) * (dissipator @ v)
            )

    n_steps = int(round(cfg.t_end / cfg.dt))
    if abs(n_steps * cfg.dt - cfg.t_end) > 1e-9 * max(1.0, cfg.t_end):
        raise InputError(
            f"t_end={cfg.t_end} must be an integer number of steps of dt={cfg.dt}"
        )

    # map snapshot requests onto the sampling grid
    sample_dt = cfg.sample_stride * cfg.dt
    snap_by_sample: dict[int, list[float]] = {}
    for t_req in snapshot_times:
        if t_req < 0.0 or t_req > cfg.t_end:
            raise InputError(f"snapshot time {t_req} outside [0, {cfg.t_end}]")
        k = int(round(t_req / sample_dt))
        snap_by_sample.setdefault(k, []).append(t_req)

    # precompute the energy eigenbasis for ergotropy when h is static
    h_eigenvalues = hermitian_eigen(h_static).values if observables.ergotropy else None

    times: list[float] = []
    out_energy: list[float] = []
    out_purity: list[float] = []
    out_coherence: list[float] = []
    out_ergotropy: list[float] = []
    out_min_eig: list[float] = []
    out_rate: list[float] = []
    snapshots: dict[float, np.ndarray] = {}
    warnings: list[str] = []
    positivity_events: list[tuple[float, float]] = []
    drift_max = 0.0
    corr_max = 0.0
    corr_total = 0.0

    log_d = math.log(dim)

    def record(sample_index: int, t: float, m: np.ndarray) -> None:
        times.append(t)
        rho_eig = hermitian_eigen(m).values
        min_eig = float(rho_eig[0])
        out_min_eig.append(min_eig)
        if min_eig < -cfg.positivity_tol:
            positivity_events.append((t, min_eig))
        if channel.kind is ChannelKind.NONE:
            out_rate.append(0.0)
        else:
            out_rate.append(evaluate_rate(rate_profile, t))
        if observables.energy:
            out_energy.append(float(np.einsum("ij,ji->", h_static, m).real))
        if observables.purity:
            tr2 = float(np.einsum("ij,ji->", m, m).real)
            out_purity.append(math.log(dim * tr2) / log_d)
        if observables.coherence:
            out_coherence.append(l1_coherence(m))
        if observables.ergotropy:
            if hamiltonian.is_static:
                e_levels = h_eigenvalues
                h_t = h_static
            else:
                h_t = hamiltonian.at(t)
                e_levels = hermitian_eigen(h_t).values
            e_active = float(np.einsum("ij,ji->", h_t, m).real)
            raw = e_active - float(np.dot(rho_eig[::-1], e_levels))
            out_ergotropy.append(max(raw, 0.0))
        if observables.snapshots and sample_index in snap_by_sample:
            for t_req in snap_by_sample[sample_index]:
                if abs(t - t_req) <= 0.5 * sample_dt + 1e-12:
                    snapshots[t_req] = m.copy()

    v = rho0.reshape(-1).copy()
    record(0, 0.0, rho0)

    diag_idx = np.arange(0, dim * dim, dim + 1)

    for step in range(n_steps):
        t = step * cfg.dt
        if step_propagator is not None:
            v = step_propagator @ v
        else:
            v = _rk4_evolve(v, deriv, cfg.dt, t)

        m = v.reshape(dim, dim)
        m = 0.5 * (m + m.conj().T)
        v = m.reshape(-1)

        tr = float(v[diag_idx].sum().real)
        drift = abs(tr - 1.0)
        if drift > 0.0:
            if drift > drift_max:
                drift_max = drift
            v = v / tr
            corr_total += drift
            corr_max = max(corr_max, drift)

        if not np.isfinite(v.view(float)).all():
            raise NumericalError(f"state became non-finite at t={t + cfg.dt:.6f}")

        step_index = step + 1
        if step_index % cfg.sample_stride == 0 or step_index == n_steps:
            record(step_index // cfg.sample_stride, step_index * cfg.dt, v.reshape(dim, dim))

    if positivity_events:
        worst = min(e[1] for e in positivity_events)
        warnings.append(
            f"positivity violated at {len(positivity_events)} sampled times "
            f"(worst eigenvalue {worst:.3e}); time-local negative rates can do "
            "this and the trajectory is reported as-is"
        )

    def arr(values: list[float], enabled: bool) -> np.ndarray | None:
        return np.asarray(values) if enabled else None

    return TrajectoryRecord(
        times=np.asarray(times),
        energy=arr(out_energy, observables.energy),
        purity=arr(out_purity, observables.purity),
        coherence=arr(out_coherence, observables.coherence),
        ergotropy=arr(out_ergotropy, observables.ergotropy),
        min_eig=np.asarray(out_min_eig),
        rate=np.asarray(out_rate),
        snapshots=snapshots if observables.snapshots else None,
        warnings=warnings,
        positivity_events=positivity_events,
        trace_drift_max=drift_max,
        trace_correction_max=corr_max,
        trace_correction_total=corr_total,
        final_state=v.reshape(dim, dim),
    )


def charging_hamiltonian(params: ModelParams) -> TimeDependentHamiltonian:
    """h(t) = h0 + pulse, with the pulse peak at the center of the window."""
    center = charging_pulse_center(params)
    tau = params.tau
    b_s = params.b_s

    def envelope(t: float) -> float:
        x = (t - center) / tau
        return b_s * math.exp(-0.5 * x * x)

    return TimeDependentHamiltonian(
        static=build_h0(params), drive=PULSE_PATTERN, envelope=envelope
    )


def run_two_phase(
    params: ModelParams,
    channel: ChannelSpec,
    cfg: IntegratorConfig,
    charging_dt: float = 1e-4,
    observables: ObservableSet | None = None,
    snapshot_times: tuple[float, ...] = (),
) -> tuple[np.ndarray, TrajectoryRecord]:
    """Charge the battery unitarily, then dissipate under the channel.

    Phase 1 integrates the ground state under h0 plus the Gaussian pulse
    over the charging window with its own (finer) step. Phase 2 restarts
    the clock at zero from the charged state and evolves under h0 and the
    channel. The returned record covers phase 2.
    """
    charging_cfg = IntegratorConfig(
        dt=charging_dt,
        t_end=charging_window_end(params),
        sample_stride=max(1, int(round(charging_window_end(params) / charging_dt / 100))),
        positivity_tol=cfg.positivity_tol,
    )
    rho0 = ground_state(params)
    charge_record = integrate(
        rho0,
        charging_hamiltonian(params),
        ChannelSpec.none(),
        charging_cfg,
        observables=ObservableSet(energy=False, purity=True, coherence=False,
                                  ergotropy=False),
    )
    charged = charge_record.final_state

    dissipative = integrate(
        charged,
        TimeDependentHamiltonian(static=build_h0(params)),
        channel,
        cfg,
        observables=observables,
        snapshot_times=snapshot_times,
    )
    return charged, dissipative
