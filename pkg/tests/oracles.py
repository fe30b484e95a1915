"""Reference computations that share no code with the package under test."""

import numpy as np
from scipy.integrate import solve_ivp
from scipy.linalg import expm

PAULI = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

SWAP = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex)


def pauli(label):
    out = np.array([[1.0 + 0j]])
    for c in label:
        out = np.kron(out, PAULI[c])
    return out


def random_hermitian(rng, n):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (a + a.conj().T) / 2


def charpoly_eigenvalues(m):
    """Eigenvalues as roots of det(M - lambda I).

    Coefficients by Faddeev-LeVerrier, roots from the companion matrix, then a
    few Newton steps on the polynomial itself.
    """
    n = m.shape[0]
    coeffs = [1.0 + 0j]
    mk = np.zeros_like(m)
    eye = np.eye(n)
    for k in range(1, n + 1):
        mk = m @ mk + coeffs[-1] * eye
        coeffs.append(-np.trace(m @ mk) / k)
    poly = np.real(np.array(coeffs))
    roots = np.real(np.roots(poly))
    deriv = np.polyder(poly)
    for _ in range(5):
        roots = roots - np.polyval(poly, roots) / np.polyval(deriv, roots)
    return np.sort(roots)


def one_qubit_const_overlap(u, gamma, hbar=1.0):
    """P(T) by exponentiating the constant generators with scipy."""
    T = np.pi * hbar / (2 * u)
    psi0 = np.array([0, 1], dtype=complex)
    psi = expm(-1j * T / hbar * u * PAULI["Y"]) @ psi0
    phi = expm(-1j * T / hbar * (u * PAULI["Y"] + gamma * PAULI["Z"])) @ psi0
    return abs(np.vdot(psi, phi))


def ode_overlap(h_of_t, k_of_t, psi0, T, hbar=1.0):
    """P(T) from a high-accuracy adaptive Runge-Kutta solve of both equations."""
    d = len(psi0)

    def rhs(t, y):
        h = h_of_t(t)
        return np.concatenate([-1j / hbar * h @ y[:d], -1j / hbar * (h + k_of_t(t)) @ y[d:]])

    y0 = np.concatenate([psi0, psi0]).astype(complex)
    sol = solve_ivp(rhs, (0, T), y0, method="DOP853", rtol=1e-12, atol=1e-13)
    y = sol.y[:, -1]
    return abs(np.vdot(y[:d], y[d:]))
