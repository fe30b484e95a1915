"""JSON config documents describing a single evolution.

Schema::

    {
      "hbar": 1.0,                         # optional, default 1
      "qubits": 1,
      "hamiltonian": [term, ...],
      "errors": [[term, ...], ...],        # optional, one list per error K_j
      "initial_state": [[re, im], ...],    # 2**qubits amplitudes
      "final_time": 1.5707963267948966,
      "steps": 4000,                       # optional
      "samples": 201,                      # optional
      "quad_points": 1001                  # optional
    }

    term = {"pauli": "XY", "envelope": {"kind": "constant" | "cosine" | "sine",
            "amplitude": a, "frequency": w, "phase": p}}

Envelope ``frequency`` and ``phase`` default to 0.
"""

from __future__ import annotations

import json
import math

import numpy as np

from controlbound.bounds import theorem1_bound
from controlbound.dynamics import DEFAULT_SAMPLES, DEFAULT_STEPS, EvolutionSpec, overlap_at_T, propagate
from controlbound.errors import ConfigParseError, ValidationError
from controlbound.numerics import MAX_DIM, NORMALIZED_TOL
from controlbound.operators import DEFAULT_QUAD_POINTS, ENVELOPE_KINDS, PAULI_MATRICES, Envelope, OperatorSchedule

TOLERANCE = 1e-8

_TOP_KEYS = {"hbar", "qubits", "hamiltonian", "errors", "initial_state", "final_time", "steps", "samples", "quad_points"}
_REQUIRED = ("qubits", "hamiltonian", "initial_state", "final_time")


def _is_number(v) -> bool:
    return isinstance(v, (int, float)) and not isinstance(v, bool)


def _number(doc, key, where, default=None):
    if key not in doc:
        if default is None:
            raise ConfigParseError("missing required field", f"{where}{key}")
        return default
    v = doc[key]
    if not _is_number(v) or not math.isfinite(v):
        raise ConfigParseError(f"expected a finite number, got {v!r}", f"{where}{key}")
    return float(v)


def _integer(doc, key, default=None):
    if key not in doc:
        if default is None:
            raise ConfigParseError("missing required field", key)
        return default
    v = doc[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise ConfigParseError(f"expected an integer, got {v!r}", key)
    return v


def _term(doc, qubits: int, where: str):
    if not isinstance(doc, dict):
        raise ConfigParseError("term must be an object", where)
    extra = set(doc) - {"pauli", "envelope"}
    if extra:
        raise ConfigParseError(f"unknown fields {sorted(extra)}", where)
    label = doc.get("pauli")
    if not isinstance(label, str) or not label:
        raise ConfigParseError("expected a nonempty Pauli string", f"{where}.pauli")
    if set(label) - set(PAULI_MATRICES):
        raise ConfigParseError(f"Pauli string {label!r} may only use I, X, Y, Z", f"{where}.pauli")
    if len(label) != qubits:
        raise ValidationError(
            f"{where}.pauli: string {label!r} acts on {len(label)} qubits but the system has {qubits}"
        )

    env = doc.get("envelope")
    ewhere = f"{where}.envelope"
    if not isinstance(env, dict):
        raise ConfigParseError("expected an envelope object", ewhere)
    extra = set(env) - {"kind", "amplitude", "frequency", "phase"}
    if extra:
        raise ConfigParseError(f"unknown fields {sorted(extra)}", ewhere)
    kind = env.get("kind")
    if kind not in ENVELOPE_KINDS:
        raise ConfigParseError(f"kind must be one of {list(ENVELOPE_KINDS)}, got {kind!r}", f"{ewhere}.kind")
    amp = env.get("amplitude")
    if isinstance(amp, (list, dict, complex)):
        raise ValidationError(f"{ewhere}.amplitude: complex coefficients make the term non-Hermitian")
    amplitude = _number(env, "amplitude", f"{ewhere}.")
    frequency = _number(env, "frequency", f"{ewhere}.", 0.0)
    phase = _number(env, "phase", f"{ewhere}.", 0.0)
    return Envelope(kind, amplitude, frequency, phase), label


def _schedule(terms, qubits: int, where: str) -> OperatorSchedule:
    if not isinstance(terms, list):
        raise ConfigParseError("expected a list of terms", where)
    return OperatorSchedule(qubits, tuple(_term(t, qubits, f"{where}[{i}]") for i, t in enumerate(terms)))


def parse_config(doc) -> tuple[EvolutionSpec, int]:
    """Turn a decoded config document into an evolution spec and a quadrature size."""
    if not isinstance(doc, dict):
        raise ConfigParseError("config must be a JSON object")
    extra = set(doc) - _TOP_KEYS
    if extra:
        raise ConfigParseError(f"unknown top-level fields {sorted(extra)}")
    for key in _REQUIRED:
        if key not in doc:
            raise ConfigParseError("missing required field", key)

    qubits = _integer(doc, "qubits")
    if qubits < 1:
        raise ValidationError(f"qubits: must be at least 1, got {qubits}")
    if 2**qubits > MAX_DIM:
        raise ValidationError(f"qubits: dimension 2**{qubits} exceeds the cap of {MAX_DIM}")
    dim = 2**qubits

    hamiltonian = _schedule(doc["hamiltonian"], qubits, "hamiltonian")
    errors_doc = doc.get("errors", [])
    if not isinstance(errors_doc, list):
        raise ConfigParseError("expected a list of term lists", "errors")
    errors = tuple(_schedule(e, qubits, f"errors[{j}]") for j, e in enumerate(errors_doc))

    amps = doc["initial_state"]
    if not isinstance(amps, list):
        raise ConfigParseError("expected a list of [re, im] pairs", "initial_state")
    state = np.empty(len(amps), dtype=np.complex128)
    for i, pair in enumerate(amps):
        if not (isinstance(pair, list) and len(pair) == 2 and all(_is_number(c) for c in pair)):
            raise ConfigParseError(f"expected [re, im], got {pair!r}", f"initial_state[{i}]")
        state[i] = complex(pair[0], pair[1])
    if len(state) != dim:
        raise ValidationError(f"initial_state: has {len(state)} amplitudes, system dimension is {dim}")
    if abs(np.linalg.norm(state) - 1.0) > NORMALIZED_TOL:
        raise ValidationError(f"initial_state: norm is {np.linalg.norm(state):.12g}, expected 1")

    hbar = _number(doc, "hbar", "", 1.0)
    final_time = _number(doc, "final_time", "")
    steps = _integer(doc, "steps", DEFAULT_STEPS)
    samples = _integer(doc, "samples", DEFAULT_SAMPLES)
    quad_points = _integer(doc, "quad_points", DEFAULT_QUAD_POINTS)
    if hbar <= 0:
        raise ValidationError(f"hbar: must be positive, got {hbar}")
    if final_time <= 0:
        raise ValidationError(f"final_time: must be positive, got {final_time}")
    if not steps >= samples >= 2:
        raise ValidationError(f"steps/samples: need steps >= samples >= 2, got {steps}/{samples}")
    if quad_points < 2:
        raise ValidationError(f"quad_points: must be at least 2, got {quad_points}")

    spec = EvolutionSpec(
        hamiltonian=hamiltonian,
        initial=state,
        final_time=final_time,
        errors=errors,
        hbar=hbar,
        steps=steps,
        samples=samples,
    )
    return spec, quad_points


def load_config(path) -> tuple[EvolutionSpec, int]:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigParseError(exc.msg, f"{path}: line {exc.lineno}, column {exc.colno}") from None
    return parse_config(doc)


def evaluate_run(spec: EvolutionSpec, quad_points: int = DEFAULT_QUAD_POINTS) -> dict:
    """Propagate, bound, and check the bound on one evolution."""
    result = propagate(spec)
    report = theorem1_bound(list(spec.errors), spec.final_time, spec.hbar, quad_points)
    p_T = overlap_at_T(result)
    a7 = result.distance**2 + 2.0 * np.real(result.inner_products())
    checks = {
        "overlap_bound": (not report.valid) or p_T >= report.p_star - TOLERANCE,
        "distance_bound": result.final_distance <= report.x + TOLERANCE,
        "distance_identity": bool(np.max(np.abs(a7 - 2.0)) <= 1e-9),
    }
    return {
        "p_T": p_T,
        "p_star": report.p_star,
        "x": report.x,
        "valid": report.valid,
        "distance": result.final_distance,
        "distance_bound": report.distance_bound,
        "bound": report.to_dict(),
        "evolution": {
            "hbar": spec.hbar,
            "final_time": spec.final_time,
            "steps": spec.steps,
            "samples": spec.samples,
            "norm_drift": result.norm_drift,
            "times": result.times.tolist(),
            "overlap": result.overlap.tolist(),
            "distance": result.distance.tolist(),
        },
        "checks": checks,
    }


def run_config(path, out=None) -> dict:
    """Evaluate the config at ``path``; write the result document to ``out`` if given."""
    spec, quad_points = load_config(path)
    doc = evaluate_run(spec, quad_points)
    if out is not None:
        with open(out, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return doc
