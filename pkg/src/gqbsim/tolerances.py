"""Central numeric tolerances.

Every module and the test-suite read thresholds from the same record so a
tolerance is never pinned in two places.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    hermiticity: float = 1e-9          # max-abs(a - a^dag) accepted on input
    jacobi_off_diagonal: float = 1e-12  # eigensolver convergence target
    jacobi_max_sweeps: int = 100
    eigen_reconstruction: float = 1e-10
    unit_trace: float = 1e-9
    positivity: float = 1e-6           # min eigenvalue of a density matrix
    trace_renormalization: float = 1e-12  # bound on any per-step renorm correction
    energy_imaginary: float = 1e-10
    ergotropy_floor: float = 1e-10     # most negative raw ergotropy tolerated
    ground_state_gap: float = 1e-9     # degeneracy threshold for the ground level


DEFAULT = Tolerances()
