"""Dense complex linear algebra for small Hermitian problems.

Matrices and states are plain numpy arrays (``complex128``). Every matrix
routine also accepts a stack of matrices with shape ``(..., n, n)`` and works
on the whole stack at once; the propagator relies on this to diagonalise
thousands of step generators in one pass.
"""

from __future__ import annotations

from typing import NamedTuple

import numba
import numpy as np

from controlbound.errors import DimensionMismatch, DimensionTooLarge, NotConverged, NotHermitian

MAX_DIM = 64
HERMITIAN_RTOL = 1e-12
JACOBI_TOL = 1e-14
JACOBI_MAX_SWEEPS = 100
NORMALIZED_TOL = 1e-9


class EigenDecomposition(NamedTuple):
    eigenvalues: np.ndarray  # (..., n) real, ascending
    eigenvectors: np.ndarray  # (..., n, n) columns orthonormal


def as_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim < 2 or a.shape[-1] != a.shape[-2]:
        raise DimensionMismatch(f"expected square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix contains non-finite entries")
    return a


def as_state(v) -> np.ndarray:
    a = np.asarray(v, dtype=np.complex128)
    if a.ndim != 1 or a.shape[0] < 2:
        raise DimensionMismatch(f"expected state vector with dim >= 2, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("state contains non-finite amplitudes")
    return a


def basis_state(dim: int, index: int) -> np.ndarray:
    v = np.zeros(dim, dtype=np.complex128)
    v[index] = 1.0
    return v


def is_hermitian(m: np.ndarray) -> bool:
    a = np.asarray(m)
    dev = np.max(np.abs(a - np.conj(np.swapaxes(a, -1, -2))), initial=0.0)
    return bool(dev <= HERMITIAN_RTOL * np.max(np.abs(a), initial=0.0))


def is_normalized(v: np.ndarray, tol: float = NORMALIZED_TOL) -> bool:
    return abs(norm(v) - 1.0) <= tol


def hermitian_eigen(m) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix (or stack) by cyclic Jacobi sweeps.

    Each rotation zeroes one off-diagonal pair ``(p, q)``. The complex entry
    ``a_pq = r e^{i phi}`` is handled by the unitary
    ``[[c, s e^{i phi}], [-s e^{-i phi}, c]]``, which reduces to the classical
    real rotation on the phase-aligned pair. Sweeps stop once the off-diagonal
    Frobenius mass of every matrix in the stack is at most
    ``1e-14 * ||M||_F``, checked per matrix.
    """
    a = as_matrix(m)
    n = a.shape[-1]
    if n > MAX_DIM:
        raise DimensionTooLarge(f"dimension {n} exceeds the cap of {MAX_DIM}")
    if not is_hermitian(a):
        raise NotHermitian("matrix is not Hermitian within tolerance")

    batch_shape = a.shape[:-2]
    a = a.reshape((-1, n, n))
    a = np.ascontiguousarray(0.5 * (a + np.conj(np.swapaxes(a, -1, -2))))
    v = np.empty_like(a)
    ok = _jacobi_batch(a, v, JACOBI_TOL, JACOBI_MAX_SWEEPS)
    if not ok.all():
        raise NotConverged(f"Jacobi iteration did not converge in {JACOBI_MAX_SWEEPS} sweeps")

    w = np.real(np.diagonal(a, axis1=-2, axis2=-1))
    order = np.argsort(w, axis=-1, kind="stable")
    w = np.take_along_axis(w, order, axis=-1)
    v = np.take_along_axis(v, order[:, None, :], axis=-1)
    return EigenDecomposition(w.reshape(batch_shape + (n,)), v.reshape(batch_shape + (n, n)))


@numba.njit(cache=True)
def _jacobi_batch(a, v, tol, max_sweeps):
    # a is overwritten with the diagonalised matrices, v receives the eigenvectors
    nb, n, _ = a.shape
    ok = np.zeros(nb, dtype=np.bool_)
    for b in range(nb):
        m = a[b]
        u = v[b]
        for i in range(n):
            for j in range(n):
                u[i, j] = 1.0 if i == j else 0.0
        total = 0.0
        for i in range(n):
            for j in range(n):
                total += m[i, j].real ** 2 + m[i, j].imag ** 2
        threshold = tol * np.sqrt(total)
        for _ in range(max_sweeps + 1):
            off = 0.0
            for i in range(n):
                for j in range(n):
                    if i != j:
                        off += m[i, j].real ** 2 + m[i, j].imag ** 2
            if np.sqrt(off) <= threshold:
                ok[b] = True
                break
            if _ == max_sweeps:
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    r = abs(m[p, q])
                    if r == 0.0:
                        continue
                    phase = m[p, q] / r
                    tau = (m[q, q].real - m[p, p].real) / (2.0 * r)
                    sign = 1.0 if tau >= 0.0 else -1.0
                    t = sign / (abs(tau) + np.hypot(1.0, tau))
                    c = 1.0 / np.sqrt(1.0 + t * t)
                    s = t * c
                    sp = s * phase
                    sm = s * np.conj(phase)
                    # M <- M G with G = [[c, sp], [-sm, c]] on (p, q)
                    for k in range(n):
                        xp = m[k, p]
                        xq = m[k, q]
                        m[k, p] = c * xp - sm * xq
                        m[k, q] = sp * xp + c * xq
                    # M <- G^dagger M
                    for k in range(n):
                        xp = m[p, k]
                        xq = m[q, k]
                        m[p, k] = c * xp - sp * xq
                        m[q, k] = sm * xp + c * xq
                    m[p, q] = 0.0
                    m[q, p] = 0.0
                    m[p, p] = m[p, p].real
                    m[q, q] = m[q, q].real
                    for k in range(n):
                        xp = u[k, p]
                        xq = u[k, q]
                        u[k, p] = c * xp - sm * xq
                        u[k, q] = sp * xp + c * xq
    return ok


def expm_unitary(h, theta: float) -> np.ndarray:
    """Return ``exp(-i * theta * h)`` for Hermitian ``h`` (or a stack of them)."""
    w, v = hermitian_eigen(h)
    phases = np.exp(-1j * theta * w)
    return (v * phases[..., None, :]) @ np.conj(np.swapaxes(v, -1, -2))


def inner(a, b) -> complex:
    """``<a|b>``, conjugate-linear in ``a``."""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    if a.shape != b.shape:
        raise DimensionMismatch(f"cannot take inner product of shapes {a.shape} and {b.shape}")
    return complex(np.vdot(a, b))


def norm(v) -> float:
    return float(np.linalg.norm(np.asarray(v, dtype=np.complex128)))
