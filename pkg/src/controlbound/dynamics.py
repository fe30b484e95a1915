"""Ideal and error-perturbed Schrödinger propagation.

Both trajectories start from the same state. The ideal one is generated by
``H(t)``; the perturbed one by ``H(t) + sum_j K_j(t)``. Each step applies the
exact exponential of the generator at the step midpoint, so the propagator is
unitary up to eigensolver roundoff. States are never renormalised; the
``norm_drift`` field reports how far they wandered.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from controlbound.errors import DimensionMismatch, InvalidHorizon
from controlbound.numerics import as_state, expm_unitary, is_normalized
from controlbound.operators import OperatorSchedule, evaluate

DEFAULT_STEPS = 4000
DEFAULT_SAMPLES = 201


@dataclass(frozen=True)
class EvolutionSpec:
    hamiltonian: OperatorSchedule
    initial: np.ndarray
    final_time: float
    errors: tuple = field(default_factory=tuple)
    hbar: float = 1.0
    steps: int = DEFAULT_STEPS
    samples: int = DEFAULT_SAMPLES

    def __post_init__(self):
        initial = as_state(self.initial)
        initial.flags.writeable = False
        object.__setattr__(self, "initial", initial)
        object.__setattr__(self, "errors", tuple(self.errors))
        if not math.isfinite(self.final_time) or self.final_time <= 0:
            raise InvalidHorizon(f"final time must be positive, got {self.final_time!r}")
        if not math.isfinite(self.hbar) or self.hbar <= 0:
            raise ValueError(f"hbar must be positive, got {self.hbar!r}")
        for op in (self.hamiltonian, *self.errors):
            if op.dim != initial.shape[0]:
                raise DimensionMismatch(
                    f"operator dimension {op.dim} does not match state dimension {initial.shape[0]}"
                )
        if not is_normalized(initial):
            raise ValueError("initial state must be normalized")
        if not (self.steps >= self.samples >= 2):
            raise ValueError(f"need steps >= samples >= 2, got steps={self.steps}, samples={self.samples}")

    @property
    def dim(self) -> int:
        return self.initial.shape[0]


@dataclass(frozen=True)
class EvolutionResult:
    times: np.ndarray
    ideal_states: np.ndarray  # (samples, dim)
    perturbed_states: np.ndarray
    overlap: np.ndarray
    distance: np.ndarray
    norm_drift: float

    @property
    def final_distance(self) -> float:
        return float(self.distance[-1])

    def inner_products(self) -> np.ndarray:
        return np.einsum("ki,ki->k", np.conj(self.ideal_states), self.perturbed_states)


def _step_unitaries(generators: list[OperatorSchedule], mids: np.ndarray, dt_over_hbar: float):
    """One propagator per step, or a single shared one for time-independent generators."""
    if all(g.is_static for g in generators):
        g = sum(evaluate(op, 0.0) for op in generators)
        return expm_unitary(g, dt_over_hbar)[None]
    g = sum(evaluate(op, mids) for op in generators)
    return expm_unitary(g, dt_over_hbar)


def _run(unitaries: np.ndarray, psi0: np.ndarray, steps: int, sample_idx: np.ndarray) -> np.ndarray:
    out = np.empty((len(sample_idx), psi0.shape[0]), dtype=np.complex128)
    psi = psi0.copy()
    shared = unitaries.shape[0] == 1
    j = 0
    for k in range(steps + 1):
        if k == sample_idx[j]:
            out[j] = psi
            j += 1
            if j == len(sample_idx):
                break
        psi = (unitaries[0] if shared else unitaries[k]) @ psi
    return out


def propagate(spec: EvolutionSpec) -> EvolutionResult:
    dt = spec.final_time / spec.steps
    mids = (np.arange(spec.steps) + 0.5) * dt
    sample_idx = np.rint(np.linspace(0, spec.steps, spec.samples)).astype(int)

    u_ideal = _step_unitaries([spec.hamiltonian], mids, dt / spec.hbar)
    u_pert = _step_unitaries([spec.hamiltonian, *spec.errors], mids, dt / spec.hbar)
    psi = _run(u_ideal, spec.initial, spec.steps, sample_idx)
    phi = _run(u_pert, spec.initial, spec.steps, sample_idx)

    ip = np.einsum("ki,ki->k", np.conj(psi), phi)
    drift = max(
        np.max(np.abs(np.linalg.norm(psi, axis=1) - 1.0)),
        np.max(np.abs(np.linalg.norm(phi, axis=1) - 1.0)),
    )
    return EvolutionResult(
        times=sample_idx * spec.final_time / spec.steps,
        ideal_states=psi,
        perturbed_states=phi,
        overlap=np.abs(ip),
        distance=np.linalg.norm(psi - phi, axis=1),
        norm_drift=float(drift),
    )


def overlap_at_T(result: EvolutionResult) -> float:
    """``|<psi(T)|phi(T)>|``."""
    return float(result.overlap[-1])
