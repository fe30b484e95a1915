"""Randomized stress test of the overlap and distance bounds.

Instance distribution (fixed so reports are reproducible from the seed):

* qubit count uniform over ``1 .. log2(max_dim)``;
* ``H`` and ``K`` each get 1 to 4 terms with uniform Pauli strings,
  amplitudes uniform in ``[-1, 1]`` and a constant or cosine envelope
  (cosine frequency uniform in ``[0, 3]``, phase uniform in ``[0, 2 pi)``);
* final time uniform in ``[0.5, 2]``, initial state a normalised complex
  Gaussian vector;
* ``K`` is then rescaled so the bound argument ``x`` is uniform in ``[0, 1.4]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from controlbound.bounds import theorem1_bound
from controlbound.dynamics import DEFAULT_STEPS, EvolutionSpec, overlap_at_T, propagate
from controlbound.operators import DEFAULT_QUAD_POINTS, Envelope, OperatorSchedule, alpha

TOLERANCE = 1e-8
X_MAX = 1.4
ALLOWED_DIMS = (2, 4, 8)


@dataclass(frozen=True)
class RandomInstance:
    hamiltonian: OperatorSchedule
    error: OperatorSchedule
    initial: np.ndarray
    final_time: float
    x_target: float

    @property
    def dim(self) -> int:
        return self.hamiltonian.dim


def _random_schedule(rng: np.random.Generator, qubits: int) -> OperatorSchedule:
    terms = []
    for _ in range(rng.integers(1, 5)):
        label = "".join(rng.choice(list("IXYZ"), size=qubits))
        amplitude = float(rng.uniform(-1.0, 1.0))
        if rng.random() < 0.5:
            env = Envelope.constant(amplitude)
        else:
            env = Envelope.cosine(amplitude, float(rng.uniform(0.0, 3.0)), float(rng.uniform(0.0, 2 * math.pi)))
        terms.append((env, label))
    return OperatorSchedule(qubits, tuple(terms))


def draw_instance(rng: np.random.Generator, max_dim: int) -> RandomInstance:
    qubits = int(rng.integers(1, int(math.log2(max_dim)) + 1))
    h = _random_schedule(rng, qubits)
    k = _random_schedule(rng, qubits)
    final_time = float(rng.uniform(0.5, 2.0))
    x_target = float(rng.uniform(0.0, X_MAX))
    psi = rng.normal(size=2**qubits) + 1j * rng.normal(size=2**qubits)
    return RandomInstance(h, k, psi / np.linalg.norm(psi), final_time, x_target)


def check_instance(inst: RandomInstance, steps: int = DEFAULT_STEPS, quad_points: int = DEFAULT_QUAD_POINTS) -> dict:
    """Rescale the error to hit ``x_target``, propagate, and measure both margins."""
    raw = alpha(inst.error, inst.final_time, quad_points)
    scale = inst.x_target / (raw * inst.final_time) if raw > 0 else 0.0
    error = inst.error.scaled(scale)
    spec = EvolutionSpec(
        hamiltonian=inst.hamiltonian,
        initial=inst.initial,
        final_time=inst.final_time,
        errors=(error,),
        steps=steps,
        samples=2,
    )
    result = propagate(spec)
    report = theorem1_bound([error], inst.final_time, 1.0, quad_points)
    p_T = overlap_at_T(result)
    overlap_margin = p_T - report.p_star
    distance_margin = report.x - result.final_distance
    return {
        "dim": inst.dim,
        "final_time": inst.final_time,
        "x": report.x,
        "valid": report.valid,
        "p_T": p_T,
        "p_star": report.p_star,
        "distance": result.final_distance,
        "overlap_margin": overlap_margin,
        "distance_margin": distance_margin,
        "norm_drift": result.norm_drift,
        "ok": (not report.valid or overlap_margin >= -TOLERANCE) and distance_margin >= -TOLERANCE,
    }


def verify_random(instances: int, max_dim: int, seed: int, steps: int = DEFAULT_STEPS) -> dict:
    if instances < 1:
        raise ValueError(f"instances must be at least 1, got {instances}")
    if max_dim not in ALLOWED_DIMS:
        raise ValueError(f"max_dim must be one of {ALLOWED_DIMS}, got {max_dim}")
    rng = np.random.default_rng(seed)
    records = []
    for i in range(instances):
        row = check_instance(draw_instance(rng, max_dim), steps)
        row["index"] = i
        records.append(row)

    worst_overlap = min(records, key=lambda r: r["overlap_margin"])
    worst_distance = min(records, key=lambda r: r["distance_margin"])
    return {
        "seed": seed,
        "instances": instances,
        "max_dim": max_dim,
        "steps": steps,
        "tolerance": TOLERANCE,
        "violations": [r for r in records if not r["ok"]],
        "worst_overlap_margin": {k: worst_overlap[k] for k in ("index", "overlap_margin", "x", "dim")},
        "worst_distance_margin": {k: worst_distance[k] for k in ("index", "distance_margin", "x", "dim")},
        "records": records,
    }
