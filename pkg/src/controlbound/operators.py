"""Time-dependent Hermitian operators built from Pauli strings.

An :class:`OperatorSchedule` is a sum of terms ``envelope(t) * P`` where ``P``
is a tensor product of single-qubit Paulis and the envelope is a real
constant, cosine or sine. Qubit 1 is the leftmost factor, so the string
``"XI"`` acts on the first qubit of ``|a> (x) |b>``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce

import numpy as np
from scipy.integrate import simpson

from controlbound.errors import DimensionMismatch, InvalidHorizon
from controlbound.numerics import hermitian_eigen

DEFAULT_QUAD_POINTS = 1001

PAULI_MATRICES = {
    "I": np.array([[1, 0], [0, 1]], dtype=np.complex128),
    "X": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    "Z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
}

ENVELOPE_KINDS = ("constant", "cosine", "sine")


@dataclass(frozen=True)
class PauliString:
    label: str

    def __post_init__(self):
        if not self.label:
            raise ValueError("Pauli string must be nonempty")
        bad = set(self.label) - set(PAULI_MATRICES)
        if bad:
            raise ValueError(f"invalid Pauli letters {sorted(bad)} in {self.label!r}")

    @property
    def qubits(self) -> int:
        return len(self.label)

    def matrix(self) -> np.ndarray:
        return reduce(np.kron, (PAULI_MATRICES[c] for c in self.label))


@dataclass(frozen=True)
class Envelope:
    kind: str = "constant"
    amplitude: float = 1.0
    frequency: float = 0.0
    phase: float = 0.0

    def __post_init__(self):
        if self.kind not in ENVELOPE_KINDS:
            raise ValueError(f"envelope kind must be one of {ENVELOPE_KINDS}, got {self.kind!r}")
        for name in ("amplitude", "frequency", "phase"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
                raise ValueError(f"envelope {name} must be a finite real number, got {value!r}")

    @classmethod
    def constant(cls, amplitude: float) -> "Envelope":
        return cls("constant", amplitude)

    @classmethod
    def cosine(cls, amplitude: float, frequency: float, phase: float = 0.0) -> "Envelope":
        return cls("cosine", amplitude, frequency, phase)

    @classmethod
    def sine(cls, amplitude: float, frequency: float, phase: float = 0.0) -> "Envelope":
        return cls("sine", amplitude, frequency, phase)

    @property
    def is_constant(self) -> bool:
        return self.kind == "constant"

    def value(self, t):
        """Envelope value at time(s) ``t``; vectorised over numpy arrays."""
        t = np.asarray(t, dtype=float)
        if self.kind == "constant":
            return np.full_like(t, float(self.amplitude))
        arg = self.frequency * t + self.phase
        f = np.cos(arg) if self.kind == "cosine" else np.sin(arg)
        return self.amplitude * f

    def scaled(self, c: float) -> "Envelope":
        return Envelope(self.kind, self.amplitude * c, self.frequency, self.phase)


@dataclass(frozen=True)
class OperatorSchedule:
    qubits: int
    terms: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if isinstance(self.qubits, bool) or not isinstance(self.qubits, int) or self.qubits < 1:
            raise ValueError(f"qubit count must be a positive integer, got {self.qubits!r}")
        terms = []
        for envelope, pauli in self.terms:
            if isinstance(pauli, str):
                pauli = PauliString(pauli)
            if pauli.qubits != self.qubits:
                raise DimensionMismatch(
                    f"Pauli string {pauli.label!r} acts on {pauli.qubits} qubits, "
                    f"schedule has {self.qubits}"
                )
            terms.append((envelope, pauli))
        object.__setattr__(self, "terms", tuple(terms))
        object.__setattr__(self, "_matrices", tuple(p.matrix() for _, p in terms))

    @classmethod
    def from_terms(cls, *terms) -> "OperatorSchedule":
        """Build from ``(envelope_or_amplitude, label)`` pairs; qubit count from the labels."""
        if not terms:
            raise ValueError("use OperatorSchedule(qubits) for an empty schedule")
        norm_terms = [
            (e if isinstance(e, Envelope) else Envelope.constant(float(e)), p) for e, p in terms
        ]
        label = norm_terms[0][1]
        qubits = len(label.label if isinstance(label, PauliString) else label)
        return cls(qubits, tuple(norm_terms))

    @property
    def dim(self) -> int:
        return 2**self.qubits

    @property
    def is_static(self) -> bool:
        return all(env.is_constant for env, _ in self.terms)

    def scaled(self, c: float) -> "OperatorSchedule":
        return OperatorSchedule(self.qubits, tuple((e.scaled(c), p) for e, p in self.terms))

    def __add__(self, other: "OperatorSchedule") -> "OperatorSchedule":
        if not isinstance(other, OperatorSchedule):
            return NotImplemented
        if other.qubits != self.qubits:
            raise DimensionMismatch("cannot add schedules on different qubit counts")
        return OperatorSchedule(self.qubits, self.terms + other.terms)


def evaluate(s: OperatorSchedule, t) -> np.ndarray:
    """Matrix of ``s`` at time ``t``.

    A scalar ``t`` gives one ``(d, d)`` matrix; an array of times gives a stack
    of shape ``t.shape + (d, d)``.
    """
    t = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(t)):
        raise ValueError("evaluation time must be finite")
    out = np.zeros(t.shape + (s.dim, s.dim), dtype=np.complex128)
    for (envelope, _), mat in zip(s.terms, s._matrices):
        out += envelope.value(t)[..., None, None] * mat
    return out


def lambda_max_abs(s: OperatorSchedule, t):
    """Largest eigenvalue magnitude (spectral norm) of ``s`` at time(s) ``t``."""
    w = hermitian_eigen(evaluate(s, t)).eigenvalues
    result = np.max(np.abs(w), axis=-1)
    return float(result) if np.ndim(result) == 0 else result


def alpha(s: OperatorSchedule, T: float, quad_points: int = DEFAULT_QUAD_POINTS) -> float:
    """Time average of ``|lambda_max|`` over ``[0, T]`` by composite Simpson."""
    if not T > 0 or not math.isfinite(T):
        raise InvalidHorizon(f"final time must be positive and finite, got {T!r}")
    if quad_points < 2:
        raise ValueError(f"quad_points must be at least 2, got {quad_points}")
    if not s.terms:
        return 0.0
    if s.is_static:
        return lambda_max_abs(s, 0.0)
    ts = np.linspace(0.0, T, quad_points)
    return float(simpson(lambda_max_abs(s, ts), x=ts) / T)
