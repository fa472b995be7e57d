"""Figures of merit: stored energy, fidelity purity, l1-coherence,
passive state, and ergotropy.

All functions are pure and accept plain complex arrays. The coherence is
always taken in the computational basis, the basis in which the model
Hamiltonian is written.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InputError, NumericalError
from .linalg import as_complex_matrix, hermitian_eigen, is_hermitian
from .tolerances import DEFAULT as TOL

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ObservableSet:
    """Flags selecting which quantities a trajectory records."""

    energy: bool = True
    purity: bool = True
    coherence: bool = True
    ergotropy: bool = True
    snapshots: bool = False

    def __post_init__(self) -> None:
        if not (self.energy or self.purity or self.coherence
                or self.ergotropy or self.snapshots):
            raise InputError("at least one observable must be selected")


def energy(rho: np.ndarray, h: np.ndarray) -> float:
    """Re Tr[h rho]; raises if the imaginary residue is non-negligible."""
    rho = as_complex_matrix(rho)
    h = as_complex_matrix(h)
    if not is_hermitian(h):
        raise InputError("hamiltonian must be Hermitian")
    val = complex(np.einsum("ij,ji->", h, rho))
    if abs(val.imag) > TOL.energy_imaginary:
        raise NumericalError(
            f"energy has imaginary residue {val.imag:.3e} above tolerance"
        )
    return val.real


def purity_fidelity(rho: np.ndarray, d: int) -> float:
    """log_d(d Tr rho^2): 1 for pure states, 0 for the maximally mixed state."""
    rho = as_complex_matrix(rho)
    if d != rho.shape[0]:
        raise InputError(f"d={d} does not match matrix dimension {rho.shape[0]}")
    tr2 = float(np.einsum("ij,ji->", rho, rho).real)
    return math.log(d * tr2) / math.log(d)


def l1_coherence(rho: np.ndarray) -> float:
    """Sum of |rho_ij| over i != j in the computational basis."""
    rho = as_complex_matrix(rho)
    mags = np.abs(rho)
    np.fill_diagonal(mags, 0.0)
    return float(mags.sum())


@dataclass(frozen=True)
class PassiveState:
    """Zero-extractable-work counterpart of a state.

    permutation_applied[k] is the index of the energy level (ascending
    order) that received the k-th density-matrix eigenvalue, where those
    eigenvalues are listed in the ascending order the eigensolver returns.
    """

    mat: np.ndarray
    permutation_applied: np.ndarray = field(repr=False)


def passive_state(rho: np.ndarray, h: np.ndarray) -> PassiveState:
    """Populations sorted descending onto energy levels sorted ascending.

    Degenerate energy levels keep the eigensolver's stable ordering; any
    assignment within a degenerate block yields the same energy, so the
    choice does not affect ergotropy.
    """
    rho_eig = hermitian_eigen(as_complex_matrix(rho))
    h_eig = hermitian_eigen(as_complex_matrix(h))
    d = rho_eig.values.shape[0]
    # rho values come out ascending; reversing pairs them descending with
    # ascending energies, i.e. rho's k-th ascending value goes to level d-1-k.
    populations = rho_eig.values[::-1]
    vectors = h_eig.vectors
    mat = (vectors * populations) @ vectors.conj().T
    permutation = np.arange(d - 1, -1, -1)
    return PassiveState(mat=mat, permutation_applied=permutation)


def passive_energy(rho: np.ndarray, h: np.ndarray) -> float:
    """Energy of the passive counterpart, without building the matrix."""
    p = hermitian_eigen(as_complex_matrix(rho)).values
    e = hermitian_eigen(as_complex_matrix(h)).values
    return float(np.dot(p[::-1], e))


def ergotropy(rho: np.ndarray, h: np.ndarray) -> float:
    """Maximum work extractable by unitaries: energy minus passive energy.

    The raw difference can dip a hair below zero from roundoff; it is
    clamped to zero and the raw value logged. A dip beyond the configured
    floor indicates a genuine numerical problem and raises.
    """
    raw = energy(rho, h) - passive_energy(rho, h)
    if raw < 0.0:
        if raw < -TOL.ergotropy_floor:
            raise NumericalError(f"ergotropy {raw:.3e} below the numerical floor")
        log.debug("clamping slightly negative ergotropy %.3e to 0", raw)
        return 0.0
    return raw
