import math

import numpy as np
import pytest

from gqbsim.errors import ConvergenceError, InputError, NonHermitianError
from gqbsim.linalg import (
    adjoint,
    hermitian_eigen,
    kron,
    mat_add,
    mat_mul,
    trace,
)
from gqbsim.model import ModelParams, build_h0

from helpers import random_density_matrix, random_hermitian

# matrix literals used throughout; sigma_minus here lowers |0> -> |1>
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.diag([1.0, -1.0]).astype(complex)
SM = np.array([[0, 0], [1, 0]], dtype=complex)
I2 = np.eye(2, dtype=complex)


def test_mat_add_identity():
    a = np.arange(16, dtype=float).reshape(4, 4) + 0j
    assert np.array_equal(mat_add(a, np.zeros((4, 4))), a)


def test_mat_add_doubles_identity():
    assert np.array_equal(mat_add(I2, I2), np.diag([2.0, 2.0]))


def test_mat_add_round_trip(rng):
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    b = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    assert np.abs(mat_add(a, b) - b - a).max() < 1e-15


def test_mat_add_dimension_mismatch():
    with pytest.raises(InputError):
        mat_add(I2, np.eye(3))


def test_mat_mul_identity(rng):
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    assert np.abs(mat_mul(a, np.eye(4)) - a).max() == 0.0


def test_mat_mul_lowering_nilpotent():
    assert np.abs(mat_mul(SM, SM)).max() == 0.0


def test_mat_mul_pauli_algebra():
    assert np.abs(mat_mul(SX, SY) - 1j * SZ).max() == 0.0


def test_mat_mul_dimension_mismatch():
    with pytest.raises(InputError):
        mat_mul(SX, np.eye(3))


def test_mat_rejects_nonfinite():
    bad = np.array([[np.nan, 0], [0, 1]], dtype=complex)
    with pytest.raises(InputError):
        mat_add(bad, I2)


def test_kron_identities():
    assert np.array_equal(kron(I2, I2), np.eye(4))
    assert np.array_equal(kron(SZ, I2), np.diag([1.0, 1.0, -1.0, -1.0]))


def test_kron_collective_lowering_entries():
    collective = kron(SM, I2) + kron(I2, SM)
    expected = np.zeros((4, 4), dtype=complex)
    for i, j in [(2, 0), (3, 1), (1, 0), (3, 2)]:
        expected[i, j] = 1.0
    assert np.array_equal(collective, expected)


def test_kron_associative_on_integer_matrices(rng):
    a = rng.integers(-3, 4, size=(2, 2)).astype(complex)
    b = rng.integers(-3, 4, size=(2, 2)).astype(complex)
    c = rng.integers(-3, 4, size=(2, 2)).astype(complex)
    assert np.array_equal(kron(kron(a, b), c), kron(a, kron(b, c)))


def test_adjoint_involution(rng):
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    assert np.array_equal(adjoint(adjoint(a)), a)
    assert np.array_equal(adjoint(np.eye(4)), np.eye(4))


def test_adjoint_of_lowering_is_raising():
    assert np.array_equal(adjoint(SM), np.array([[0, 1], [0, 0]], dtype=complex))


def test_trace_values():
    assert trace(np.eye(4)) == 4.0
    assert trace(SX) == 0.0


def test_trace_cyclicity(rng):
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    b = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    assert abs(trace(a @ b) - trace(b @ a)) < 1e-12


def test_frobenius_is_real_nonnegative(rng):
    for _ in range(20):
        a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        val = trace(adjoint(a) @ a)
        assert abs(val.imag) < 1e-12
        assert val.real >= 0.0


def test_eigen_already_diagonal():
    eig = hermitian_eigen(np.diag([3.0, 1.0, 2.0]).astype(complex))
    assert np.allclose(eig.values, [1.0, 2.0, 3.0], atol=0)


def test_eigen_pauli_x():
    eig = hermitian_eigen(SX)
    assert np.abs(eig.values - np.array([-1.0, 1.0])).max() < 1e-12


def test_eigen_matches_closed_forms_at_defaults():
    # independent evaluation of the level formulas with k1=0.5, k2=2.5
    plus = math.sqrt(1 + 0.25 + 1.0 + 6.25)
    minus = math.sqrt(1 + 0.25 - 1.0 + 6.25)
    expected = np.sort([1 - plus, 1 + plus, 1 - minus, 1 + minus])
    eig = hermitian_eigen(build_h0(ModelParams()))
    assert np.abs(eig.values - expected).max() < 1e-10


def test_eigen_reconstruction_and_orthonormality(rng):
    for dim in (2, 3, 4, 5, 6):
        for _ in range(10):
            a = random_hermitian(rng, dim, scale=rng.uniform(0.1, 5.0))
            eig = hermitian_eigen(a)
            v = eig.vectors
            assert np.abs(v.conj().T @ v - np.eye(dim)).max() < 1e-10
            assert np.abs(eig.reconstruct() - a).max() < 1e-10
            assert np.abs(np.sort(eig.values) - eig.values).max() == 0.0


def test_eigen_agrees_with_lapack_oracle(rng):
    for _ in range(25):
        a = random_hermitian(rng, 4)
        ours = hermitian_eigen(a).values
        lapack = np.linalg.eigvalsh(a)
        assert np.abs(ours - lapack).max() < 1e-10


def test_eigen_degenerate_spectrum():
    a = np.diag([2.0, 2.0, 1.0]).astype(complex)
    eig = hermitian_eigen(a)
    assert np.allclose(eig.values, [1.0, 2.0, 2.0], atol=0)
    assert np.abs(eig.reconstruct() - a).max() < 1e-12


def test_density_matrix_eigenvalues_sum_to_one(rng):
    for _ in range(10):
        rho = random_density_matrix(rng)
        assert abs(hermitian_eigen(rho).values.sum() - 1.0) < 1e-10


def test_eigen_rejects_non_hermitian():
    with pytest.raises(NonHermitianError):
        hermitian_eigen(np.array([[0, 1], [0, 0]], dtype=complex))


def test_eigen_rejects_bad_tolerance():
    with pytest.raises(InputError):
        hermitian_eigen(SX, tol=0.0)


def test_eigen_convergence_cap():
    with pytest.raises(ConvergenceError):
        hermitian_eigen(SX, max_sweeps=0)


def test_eigen_dim_one():
    eig = hermitian_eigen(np.array([[2.5]], dtype=complex))
    assert eig.values[0] == 2.5
