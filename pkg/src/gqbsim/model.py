"""Battery model: four-level Hamiltonian, closed-form spectrum, ground state,
and the Gaussian charging pulse.

The system couples a sublattice pseudospin to a valley pseudospin; the
computational basis is {|00>, |01>, |10>, |11>} with the sublattice index
first. All parameters are dimensionless.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateGroundLevelError, InputError
from .linalg import hermitian_eigen
from .tolerances import DEFAULT as TOL

# The pulse couples to the valley polarization: diag(+1, -1, +1, -1).
PULSE_PATTERN = np.diag([1.0, -1.0, 1.0, -1.0]).astype(complex)

# Charging window: the pulse peaks at 5*tau and the closed phase integrates
# t in [0, 10*tau], so the envelope at both window edges is exp(-12.5) of
# its peak and the dissipative phase starts from a fully charged state.
PULSE_CENTER_FACTOR = 5.0
CHARGING_WINDOW_FACTOR = 10.0


@dataclass(frozen=True)
class ModelParams:
    """Physical constants of the battery and drive.

    lam    : overall energy scale (> 0)
    alpha  : anisotropy phase of the inter-sublattice coupling, radians
    eta    : kinetic-to-interaction coupling ratio
    n_x    : momentum component along x
    n_y    : momentum component along y
    b_s    : pulse amplitude (>= 0)
    tau    : pulse width (> 0)
    """

    lam: float = 1.0
    alpha: float = math.pi / 4
    eta: float = 0.5
    n_x: float = 1.0
    n_y: float = 5.0
    b_s: float = 1.0
    tau: float = 1.0

    def __post_init__(self) -> None:
        fields = (self.lam, self.alpha, self.eta, self.n_x, self.n_y, self.b_s, self.tau)
        if not all(math.isfinite(x) for x in fields):
            raise InputError("model parameters must be finite")
        if self.lam <= 0:
            raise InputError(f"lam must be positive, got {self.lam}")
        if self.tau <= 0:
            raise InputError(f"tau must be positive, got {self.tau}")
        if self.b_s < 0:
            raise InputError(f"b_s must be non-negative, got {self.b_s}")

    @property
    def k1(self) -> float:
        return self.eta * self.n_x / self.lam

    @property
    def k2(self) -> float:
        return self.eta * self.n_y / self.lam


@dataclass(frozen=True)
class SpectrumClosedForm:
    """The four closed-form energy levels."""

    e1: float
    e2: float
    e3: float
    e4: float

    def sorted_values(self) -> np.ndarray:
        return np.sort(np.array([self.e1, self.e2, self.e3, self.e4]))


def build_h0(params: ModelParams) -> np.ndarray:
    """Static Hamiltonian of the battery, Hermitian by construction."""
    lam = params.lam
    phase = np.exp(-1j * params.alpha)
    z = params.eta * (params.n_x + 1j * params.n_y)  # lam * (eta/lam) * (n_x + i n_y)
    h = np.array(
        [
            [lam, lam * phase, np.conj(z), 0.0],
            [lam * np.conj(phase), lam, 0.0, z],
            [z, 0.0, lam, lam * phase],
            [0.0, np.conj(z), lam * np.conj(phase), lam],
        ],
        dtype=complex,
    )
    return h


def closed_form_spectrum(params: ModelParams) -> SpectrumClosedForm:
    """Analytic eigenvalues of build_h0; the eigensolver's independent oracle."""
    k1, k2 = params.k1, params.k2
    plus = math.sqrt(1.0 + k1 * k1 + 2.0 * k1 + k2 * k2)
    minus = math.sqrt(1.0 + k1 * k1 - 2.0 * k1 + k2 * k2)
    lam = params.lam
    return SpectrumClosedForm(
        e1=lam * (1.0 - plus),
        e2=lam * (1.0 + plus),
        e3=lam * (1.0 - minus),
        e4=lam * (1.0 + minus),
    )


def ground_state(params: ModelParams) -> np.ndarray:
    """Projector onto the lowest energy eigenstate of build_h0.

    Raises DegenerateGroundLevelError when the two lowest levels are closer
    than the configured gap tolerance: a ground state is then ill-defined
    and silently picking one vector would be arbitrary.
    """
    eig = hermitian_eigen(build_h0(params))
    gap = eig.values[1] - eig.values[0]
    if gap <= TOL.ground_state_gap:
        raise DegenerateGroundLevelError(
            f"ground level is degenerate (gap {gap:.3e}); "
            "cannot prepare a unique ground state"
        )
    vec = eig.vectors[:, 0]
    return np.outer(vec, vec.conj())


def pulse_envelope(params: ModelParams, t: float) -> float:
    """Scalar pulse amplitude at time t measured from the pulse peak."""
    x = t / params.tau
    return params.b_s * math.exp(-0.5 * x * x)


def pulse_hamiltonian(params: ModelParams, t: float) -> np.ndarray:
    """Drive term at time t measured from the pulse peak."""
    return pulse_envelope(params, t) * PULSE_PATTERN


def charging_pulse_center(params: ModelParams) -> float:
    return PULSE_CENTER_FACTOR * params.tau


def charging_window_end(params: ModelParams) -> float:
    return CHARGING_WINDOW_FACTOR * params.tau
