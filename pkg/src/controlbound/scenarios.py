"""Built-in worked examples with their closed-form cross-checks.

All four scenarios use the drive time ``T = pi * hbar / (2u)``:

* ``one_qubit_const``: ``H = u Y``, ``K = gamma Z``, ``|1> -> |0>``.
* ``one_qubit_rotating``: same drive, ``K(t) = gamma (cos(wt) X + sin(wt) Y)``.
* ``swap_global``: ``H = u/2 (XX + YY + ZZ)``, ``K = gamma XX``, ``|01> -> |10>``.
* ``swap_collective``: same drive, ``K1 = gamma/2 XI`` and ``K2 = gamma/2 IX``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from controlbound.dynamics import DEFAULT_SAMPLES, DEFAULT_STEPS, EvolutionSpec
from controlbound.errors import UnknownScenario
from controlbound.numerics import basis_state
from controlbound.operators import Envelope, OperatorSchedule

SCENARIOS = ("one_qubit_const", "one_qubit_rotating", "swap_global", "swap_collective")


@dataclass(frozen=True)
class ScenarioSpec:
    name: str
    u: float = 1.0
    gamma: float = 0.0
    omega: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        if self.name not in SCENARIOS:
            raise UnknownScenario(f"unknown scenario {self.name!r}; expected one of {SCENARIOS}")
        if not self.u > 0:
            raise ValueError(f"drive strength u must be positive, got {self.u!r}")
        if not self.gamma >= 0:
            raise ValueError(f"error strength gamma must be nonnegative, got {self.gamma!r}")
        if not self.hbar > 0:
            raise ValueError(f"hbar must be positive, got {self.hbar!r}")

    @property
    def final_time(self) -> float:
        return math.pi * self.hbar / (2.0 * self.u)

    @property
    def is_swap(self) -> bool:
        return self.name.startswith("swap")

    def with_gamma(self, gamma: float) -> "ScenarioSpec":
        return replace(self, gamma=gamma)


def initial_state(spec: ScenarioSpec) -> np.ndarray:
    # |1> for one qubit, |0>(x)|1> for SWAP
    return basis_state(4, 1) if spec.is_swap else basis_state(2, 1)


def target_state(spec: ScenarioSpec) -> np.ndarray:
    # |0> for one qubit, |1>(x)|0> for SWAP
    return basis_state(4, 2) if spec.is_swap else basis_state(2, 0)


def hamiltonian(spec: ScenarioSpec) -> OperatorSchedule:
    if spec.is_swap:
        half = spec.u / 2.0
        return OperatorSchedule.from_terms((half, "XX"), (half, "YY"), (half, "ZZ"))
    return OperatorSchedule.from_terms((spec.u, "Y"))


def error_terms(spec: ScenarioSpec) -> list[OperatorSchedule]:
    g = spec.gamma
    if spec.name == "one_qubit_const":
        return [OperatorSchedule.from_terms((g, "Z"))]
    if spec.name == "one_qubit_rotating":
        return [
            OperatorSchedule.from_terms(
                (Envelope.cosine(g, spec.omega), "X"),
                (Envelope.sine(g, spec.omega), "Y"),
            )
        ]
    if spec.name == "swap_global":
        return [OperatorSchedule.from_terms((g, "XX"))]
    return [OperatorSchedule.from_terms((g / 2.0, "XI")), OperatorSchedule.from_terms((g / 2.0, "IX"))]


def build(spec: ScenarioSpec, steps: int = DEFAULT_STEPS, samples: int = DEFAULT_SAMPLES) -> EvolutionSpec:
    return EvolutionSpec(
        hamiltonian=hamiltonian(spec),
        initial=initial_state(spec),
        final_time=spec.final_time,
        errors=tuple(error_terms(spec)),
        hbar=spec.hbar,
        steps=steps,
        samples=samples,
    )


def oracle_overlap(spec: ScenarioSpec) -> float | None:
    """Closed-form ``P(T)`` where one is known, else ``None``."""
    if spec.name == "one_qubit_const":
        omega = math.hypot(spec.u, spec.gamma)
        return spec.u / omega * abs(math.sin(math.pi * omega / (2.0 * spec.u)))
    if spec.name == "swap_global":
        # K commutes with H, so P(T) = |<10| exp(-i gamma T XX / hbar) |10>|
        return abs(math.cos(math.pi * spec.gamma / (2.0 * spec.u)))
    return None
