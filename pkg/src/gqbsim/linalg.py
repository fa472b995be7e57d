"""Dense complex matrix helpers and a Hermitian eigensolver.

Matrices are plain numpy arrays of complex128. The public operations
validate their contracts (square shape, matching dimensions, finite
entries) and raise InputError on violation, which plain numpy would not.

The eigensolver is a cyclic Jacobi iteration with complex plane rotations.
At the 4x4 sizes this package works with it is exact to roundoff within a
handful of sweeps, and it keeps the eigenpath independent of any LAPACK
backend so the closed-form spectrum can be used as a true cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, InputError, NonHermitianError
from .tolerances import DEFAULT as TOL


def as_complex_matrix(a: np.ndarray) -> np.ndarray:
    """Coerce to a square, finite complex128 array; raise InputError otherwise."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InputError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] < 1:
        raise InputError("matrix dimension must be at least 1")
    if not (np.isfinite(m.real).all() and np.isfinite(m.imag).all()):
        raise InputError("matrix contains NaN or Inf entries")
    return m


def mat_add(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = as_complex_matrix(a)
    b = as_complex_matrix(b)
    if a.shape != b.shape:
        raise InputError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return a + b


def mat_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = as_complex_matrix(a)
    b = as_complex_matrix(b)
    if a.shape != b.shape:
        raise InputError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return a @ b


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product; block (i, j) equals a[i, j] * b."""
    return np.kron(as_complex_matrix(a), as_complex_matrix(b))


def adjoint(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return as_complex_matrix(a).conj().T


def trace(a: np.ndarray) -> complex:
    return complex(np.trace(as_complex_matrix(a)))


def hermiticity_defect(a: np.ndarray) -> float:
    """Max-abs entry of a - a^dag."""
    return float(np.abs(a - a.conj().T).max())


def is_hermitian(a: np.ndarray, tol: float = TOL.hermiticity) -> bool:
    return hermiticity_defect(np.asarray(a, dtype=complex)) <= tol


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues sorted ascending; column k of `vectors` pairs with values[k]."""

    values: np.ndarray
    vectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        v = self.vectors
        return (v * self.values) @ v.conj().T


def _jacobi_rotation(w: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    """Zero w[p, q] with a unitary plane rotation, updating w and v in place."""
    apq = w[p, q]
    r = abs(apq)
    if r == 0.0:
        return
    phase = apq / r
    tau = (w[q, q].real - w[p, p].real) / (2.0 * r)
    if tau >= 0.0:
        t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
    else:
        t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
    c = 1.0 / math.sqrt(1.0 + t * t)
    s = t * c

    rot = np.eye(w.shape[0], dtype=complex)
    rot[p, p] = c
    rot[q, q] = c
    rot[p, q] = s * phase
    rot[q, p] = -s * np.conj(phase)

    w[:] = rot.conj().T @ w @ rot
    v[:] = v @ rot


def hermitian_eigen(
    a: np.ndarray,
    tol: float | None = None,
    max_sweeps: int | None = None,
) -> EigenDecomposition:
    """Diagonalize a Hermitian matrix by cyclic Jacobi sweeps.

    Raises NonHermitianError if the input fails the hermiticity check, and
    ConvergenceError if the off-diagonal norm has not dropped below `tol`
    after `max_sweeps` full sweeps.
    """
    a = as_complex_matrix(a)
    if tol is None:
        tol = TOL.jacobi_off_diagonal
    if tol <= 0.0:
        raise InputError("tol must be positive")
    if max_sweeps is None:
        max_sweeps = TOL.jacobi_max_sweeps
    if hermiticity_defect(a) > TOL.hermiticity:
        raise NonHermitianError(
            f"matrix is not Hermitian: defect {hermiticity_defect(a):.3e}"
        )

    n = a.shape[0]
    w = 0.5 * (a + a.conj().T)
    v = np.eye(n, dtype=complex)
    if n == 1:
        return EigenDecomposition(values=w.real.diagonal().copy(), vectors=v)

    for _ in range(max_sweeps):
        if _max_off_diagonal(w) < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(w[p, q]) > 0.0:
                    _jacobi_rotation(w, v, p, q)
    else:
        raise ConvergenceError(
            f"Jacobi iteration did not reach off-diagonal {tol:.3e} "
            f"within {max_sweeps} sweeps"
        )

    values = w.real.diagonal().copy()
    order = np.argsort(values, kind="stable")
    return EigenDecomposition(values=values[order], vectors=v[:, order])


def _max_off_diagonal(w: np.ndarray) -> float:
    mask = ~np.eye(w.shape[0], dtype=bool)
    return float(np.abs(w[mask]).max())


def eigenvalues_only(a: np.ndarray) -> np.ndarray:
    """Ascending eigenvalues of a Hermitian matrix."""
    return hermitian_eigen(a).values
