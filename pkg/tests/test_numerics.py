import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from controlbound.errors import DimensionMismatch, DimensionTooLarge, NotHermitian
from controlbound.numerics import basis_state, expm_unitary, hermitian_eigen, inner, norm
from oracles import PAULI, SWAP, charpoly_eigenvalues, random_hermitian


def _dagger(m):
    return np.conj(np.swapaxes(m, -1, -2))


def test_eigen_sigma_z():
    w, v = hermitian_eigen(PAULI["Z"])
    np.testing.assert_allclose(w, [-1, 1], atol=1e-15)


def test_eigen_sigma_x():
    w, v = hermitian_eigen(PAULI["X"])
    np.testing.assert_allclose(w, [-1, 1], atol=1e-15)
    np.testing.assert_allclose(PAULI["X"] @ v, v * w, atol=1e-14)


def test_eigen_matches_characteristic_polynomial():
    m = random_hermitian(np.random.default_rng(42), 6)
    w, _ = hermitian_eigen(m)
    np.testing.assert_allclose(w, charpoly_eigenvalues(m), atol=1e-8)


def test_eigen_agrees_with_lapack():
    rng = np.random.default_rng(3)
    for n in (2, 3, 5, 8, 16):
        m = random_hermitian(rng, n)
        np.testing.assert_allclose(hermitian_eigen(m).eigenvalues, np.linalg.eigvalsh(m), atol=1e-12)


def test_eigen_pairs_and_orthonormality():
    rng = np.random.default_rng(5)
    m = random_hermitian(rng, 7)
    w, v = hermitian_eigen(m)
    assert np.all(np.diff(w) >= 0)
    for k in range(7):
        assert np.linalg.norm(m @ v[:, k] - w[k] * v[:, k]) <= 1e-10 * (1 + abs(w[k]))
    assert np.max(np.abs(_dagger(v) @ v - np.eye(7))) <= 1e-10


def test_eigen_reconstruction_1000_random():
    rng = np.random.default_rng(2024)
    worst = 0.0
    for n in range(2, 9):
        count = 1000 // 7 + (1 if n <= 1000 % 7 + 1 else 0)
        a = rng.normal(size=(count, n, n)) + 1j * rng.normal(size=(count, n, n))
        m = (a + _dagger(a)) / 2
        w, v = hermitian_eigen(m)
        rec = (v * w[:, None, :]) @ _dagger(v)
        err = np.max(np.abs(rec - m), axis=(1, 2))
        scale = np.maximum(1.0, np.max(np.abs(m), axis=(1, 2)))
        worst = max(worst, float(np.max(err / scale)))
    assert worst <= 1e-10


def test_eigen_batch_matches_single():
    rng = np.random.default_rng(9)
    stack = np.array([random_hermitian(rng, 4) for _ in range(5)])
    w_batch, _ = hermitian_eigen(stack)
    for i in range(5):
        np.testing.assert_array_equal(w_batch[i], hermitian_eigen(stack[i]).eigenvalues)


def test_eigen_degenerate_and_zero():
    w, v = hermitian_eigen(SWAP)
    np.testing.assert_allclose(w, [-1, 1, 1, 1], atol=1e-14)
    w, v = hermitian_eigen(np.zeros((3, 3)))
    np.testing.assert_array_equal(w, np.zeros(3))
    np.testing.assert_array_equal(v, np.eye(3))


def test_not_hermitian():
    with pytest.raises(NotHermitian):
        hermitian_eigen(np.array([[0, 1], [0, 0]]))


def test_dimension_too_large():
    with pytest.raises(DimensionTooLarge):
        hermitian_eigen(np.eye(65))


def test_expm_diagonal_generator():
    theta = 0.37
    u = expm_unitary(PAULI["Z"], theta)
    np.testing.assert_allclose(u, np.diag([np.exp(-1j * theta), np.exp(1j * theta)]), atol=1e-15)


def test_expm_zero_angle_is_identity():
    h = random_hermitian(np.random.default_rng(1), 4)
    np.testing.assert_allclose(expm_unitary(h, 0.0), np.eye(4), atol=1e-14)


def test_expm_swap_quarter_turn():
    np.testing.assert_allclose(expm_unitary(SWAP, np.pi / 2), -1j * SWAP, atol=1e-14)


def test_expm_action_on_vector():
    rng = np.random.default_rng(11)
    h = random_hermitian(rng, 4)
    x = rng.normal(size=4) + 1j * rng.normal(size=4)
    w, v = hermitian_eigen(h)
    expected = sum(np.exp(-0.8j * w[k]) * np.vdot(v[:, k], x) * v[:, k] for k in range(4))
    np.testing.assert_allclose(expm_unitary(h, 0.8) @ x, expected, atol=1e-13)


def test_expm_unitarity_and_spectrum_1000_random():
    rng = np.random.default_rng(77)
    dims = rng.integers(2, 9, size=1000)
    thetas = rng.uniform(-10, 10, size=1000)
    worst_unitarity = worst_circle = 0.0
    for n in range(2, 9):
        idx = np.flatnonzero(dims == n)
        a = rng.normal(size=(len(idx), n, n)) + 1j * rng.normal(size=(len(idx), n, n))
        for j, i in enumerate(idx):
            h = (a[j] + a[j].conj().T) / 2
            u = expm_unitary(h, thetas[i])
            worst_unitarity = max(worst_unitarity, np.max(np.abs(u.conj().T @ u - np.eye(n))))
            worst_circle = max(worst_circle, np.max(np.abs(np.abs(np.linalg.eigvals(u)) - 1)))
    assert worst_unitarity <= 1e-10
    assert worst_circle <= 1e-10


def test_inner_examples():
    v = np.array([0.6, 0.8j])
    assert inner(v, v) == pytest.approx(1.0)
    assert inner(basis_state(2, 0), basis_state(2, 1)) == 0
    plus = np.array([1, 1]) / np.sqrt(2)
    assert inner(basis_state(2, 0), plus) == pytest.approx(1 / np.sqrt(2))


def test_inner_conjugate_linear_first_argument():
    a = np.array([1.0, 2.0j])
    b = np.array([0.5, 1.0])
    assert inner(1j * a, b) == pytest.approx(-1j * inner(a, b))
    assert inner(a, 1j * b) == pytest.approx(1j * inner(a, b))


def test_inner_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        inner(np.ones(2), np.ones(4))


complex_vectors = st.integers(2, 8).flatmap(
    lambda n: st.tuples(
        *[
            st.lists(st.floats(-1e3, 1e3, allow_nan=False), min_size=2 * n, max_size=2 * n)
            for _ in range(2)
        ]
    )
)


@settings(max_examples=200, deadline=None)
@given(complex_vectors)
def test_cauchy_schwarz(pair):
    a, b = (np.array(x[0::2]) + 1j * np.array(x[1::2]) for x in pair)
    assert abs(inner(a, b)) <= norm(a) * norm(b) * (1 + 1e-12) + 1e-12
