"""Shared test utilities: random state generators and independent oracles.

The oracles here deliberately avoid the package's own code paths: spectra
come from numpy.linalg.eigh and the ergotropy floor from brute force over
all population-to-level assignments.
"""

from __future__ import annotations

import itertools

import numpy as np


def random_hermitian(rng: np.random.Generator, dim: int = 4, scale: float = 1.0) -> np.ndarray:
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return scale * 0.5 * (a + a.conj().T)


def random_density_matrix(rng: np.random.Generator, dim: int = 4) -> np.ndarray:
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real


def random_unitary(rng: np.random.Generator, dim: int = 4) -> np.ndarray:
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(a)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def brute_force_ergotropy(rho: np.ndarray, h: np.ndarray) -> float:
    """Energy minus the minimum energy over all 4! spectrum assignments."""
    populations = np.linalg.eigvalsh(rho)
    levels = np.linalg.eigvalsh(h)
    active = float(np.einsum("ij,ji->", h, rho).real)
    best = min(
        float(np.dot(populations[list(perm)], levels))
        for perm in itertools.permutations(range(len(levels)))
    )
    return active - best
