import math

import numpy as np
import pytest

from controlbound.bounds import theorem1_bound
from controlbound.dynamics import overlap_at_T, propagate
from controlbound.errors import UnknownScenario
from controlbound.operators import alpha
from controlbound.scenarios import (
    SCENARIOS,
    ScenarioSpec,
    build,
    error_terms,
    oracle_overlap,
    target_state,
)
from oracles import SWAP, one_qubit_const_overlap

GAMMAS = [0.05 * k for k in range(19)]


@pytest.fixture(scope="module")
def overlaps():
    return {
        name: [overlap_at_T(propagate(build(ScenarioSpec(name, gamma=g)))) for g in GAMMAS]
        for name in SCENARIOS
    }


def test_final_time():
    for name in SCENARIOS:
        assert ScenarioSpec(name, u=2.0, hbar=3.0).final_time == pytest.approx(3 * math.pi / 4)


def test_unknown_scenario():
    with pytest.raises(UnknownScenario):
        ScenarioSpec("three_qubit")


def test_spec_validation():
    with pytest.raises(ValueError):
        ScenarioSpec("swap_global", u=0.0)
    with pytest.raises(ValueError):
        ScenarioSpec("swap_global", gamma=-0.1)


def test_one_qubit_ideal_flip():
    spec = ScenarioSpec("one_qubit_const", gamma=0.0)
    result = propagate(build(spec))
    assert overlap_at_T(result) == pytest.approx(1.0, abs=1e-10)
    assert abs(np.vdot(target_state(spec), result.ideal_states[-1])) == pytest.approx(1.0, abs=1e-9)


def test_swap_ideal_unitary():
    spec = ScenarioSpec("swap_global", gamma=0.0)
    evo = build(spec)
    columns = []
    for j in range(4):
        e = np.zeros(4, dtype=complex)
        e[j] = 1
        evo_j = type(evo)(evo.hamiltonian, e, evo.final_time, (), steps=evo.steps, samples=evo.samples)
        columns.append(propagate(evo_j).ideal_states[-1])
    u = np.array(columns).T
    phase = u[0, 0]
    assert abs(phase) == pytest.approx(1.0, abs=1e-10)
    np.testing.assert_allclose(u / phase, SWAP, atol=1e-10)
    assert abs(u[2, 1]) == pytest.approx(1.0, abs=1e-10)


def test_collective_alphas():
    spec = ScenarioSpec("swap_collective", gamma=0.2)
    assert [alpha(k, spec.final_time) for k in error_terms(spec)] == [pytest.approx(0.1), pytest.approx(0.1)]
    assert len(build(spec).errors) == 2
    assert len(build(ScenarioSpec("swap_global", gamma=0.2)).errors) == 1


def test_oracle_values():
    assert oracle_overlap(ScenarioSpec("one_qubit_const", gamma=0.2)) == pytest.approx(0.980106, abs=1e-6)
    assert oracle_overlap(ScenarioSpec("swap_global", gamma=0.2)) == pytest.approx(0.951057, abs=1e-6)
    assert oracle_overlap(ScenarioSpec("one_qubit_const", gamma=0.0)) == 1.0
    assert oracle_overlap(ScenarioSpec("one_qubit_rotating", gamma=0.2)) is None
    assert oracle_overlap(ScenarioSpec("swap_collective", gamma=0.2)) is None


@pytest.mark.parametrize("u,gamma", [(1.0, 0.3), (2.0, 0.5), (0.5, 0.1)])
def test_one_qubit_oracle_against_matrix_exponential(u, gamma):
    assert oracle_overlap(ScenarioSpec("one_qubit_const", u=u, gamma=gamma)) == pytest.approx(
        one_qubit_const_overlap(u, gamma), abs=1e-12
    )


def test_oracles_match_propagation(overlaps):
    for name in ("one_qubit_const", "swap_global"):
        for g, p in zip(GAMMAS, overlaps[name]):
            assert abs(p - oracle_overlap(ScenarioSpec(name, gamma=g))) <= 1e-6


def test_global_error_tightness(overlaps):
    for g, p in zip(GAMMAS, overlaps["swap_global"]):
        x = math.pi * g / 2
        if x >= math.sqrt(2):
            continue
        gap = p - theorem1_bound(error_terms(ScenarioSpec("swap_global", gamma=g)), math.pi / 2).p_star
        assert -1e-12 <= gap <= x**4 / 24 + 1e-9


def test_bound_ordering_all_scenarios(overlaps):
    for name in SCENARIOS:
        for g, p in zip(GAMMAS, overlaps[name]):
            spec = ScenarioSpec(name, gamma=g)
            report = theorem1_bound(error_terms(spec), spec.final_time)
            if report.valid:
                assert p >= report.p_star - 1e-8


def test_ideal_targets():
    for name in SCENARIOS:
        spec = ScenarioSpec(name, gamma=0.0)
        psi_T = propagate(build(spec)).ideal_states[-1]
        assert abs(np.vdot(target_state(spec), psi_T)) == pytest.approx(1.0, abs=1e-9)
