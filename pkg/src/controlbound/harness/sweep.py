"""Parameter sweeps over the built-in scenarios and figure reproduction."""

from __future__ import annotations

import csv
import json
from dataclasses import asdict, dataclass

import numpy as np

from controlbound.bounds import theorem1_bound
from controlbound.dynamics import DEFAULT_STEPS, overlap_at_T, propagate
from controlbound.scenarios import ScenarioSpec, build, error_terms, oracle_overlap

CSV_COLUMNS = ("parameter", "p_T", "p_star", "x", "valid", "oracle", "distance", "distance_bound")
TOLERANCE = 1e-8

FIGURES = {
    "fig1a": (ScenarioSpec("one_qubit_const"), 0.0, 0.9),
    "fig1b": (ScenarioSpec("one_qubit_rotating", omega=1.0), 0.0, 0.9),
    "fig2a": (ScenarioSpec("swap_global"), 0.0, 0.8),
    "fig2b": (ScenarioSpec("swap_collective"), 0.0, 0.8),
}
FIGURE_POINTS = 50


@dataclass(frozen=True)
class SweepSpec:
    scenario: ScenarioSpec
    start: float
    stop: float
    points: int
    parameter: str = "gamma"
    steps: int | None = None

    def __post_init__(self):
        if self.parameter != "gamma":
            raise ValueError(f"only the 'gamma' parameter can be swept, got {self.parameter!r}")
        if not self.start <= self.stop:
            raise ValueError(f"sweep range must satisfy from <= to, got {self.start} > {self.stop}")
        if self.points < 2:
            raise ValueError(f"a sweep needs at least 2 points, got {self.points}")
        if self.start < 0:
            raise ValueError("gamma must be nonnegative")

    def grid(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.points)


@dataclass(frozen=True)
class RunRecord:
    parameter_value: float
    p_T: float
    p_star: float
    x: float
    valid: bool
    oracle: float | None
    distance: float
    distance_bound: float

    @property
    def margin(self) -> float:
        return self.p_T - self.p_star

    @property
    def violates(self) -> bool:
        return self.valid and self.p_T < self.p_star - TOLERANCE

    def csv_row(self) -> list[str]:
        return [
            _fmt(self.parameter_value),
            _fmt(self.p_T),
            _fmt(self.p_star),
            _fmt(self.x),
            "true" if self.valid else "false",
            "" if self.oracle is None else _fmt(self.oracle),
            _fmt(self.distance),
            _fmt(self.distance_bound),
        ]


def _fmt(v: float) -> str:
    return format(v, ".17g")


def scenario_record(scenario: ScenarioSpec, steps: int | None = None) -> RunRecord:
    result = propagate(build(scenario, steps=steps or DEFAULT_STEPS))
    report = theorem1_bound(error_terms(scenario), scenario.final_time, scenario.hbar)
    return RunRecord(
        parameter_value=scenario.gamma,
        p_T=overlap_at_T(result),
        p_star=report.p_star,
        x=report.x,
        valid=report.valid,
        oracle=oracle_overlap(scenario),
        distance=result.final_distance,
        distance_bound=report.distance_bound,
    )


def sweep_records(spec: SweepSpec) -> list[RunRecord]:
    return [scenario_record(spec.scenario.with_gamma(float(g)), spec.steps) for g in spec.grid()]


def summarize(records: list[RunRecord]) -> dict:
    valid = [r for r in records if r.valid]
    summary = {
        "points": len(records),
        "valid_points": len(valid),
        "violations": sum(r.violates for r in records),
        "min_margin": None,
        "min_margin_at": None,
        "max_margin": None,
    }
    if valid:
        worst = min(valid, key=lambda r: r.margin)
        summary["min_margin"] = worst.margin
        summary["min_margin_at"] = worst.parameter_value
        summary["max_margin"] = max(r.margin for r in valid)
    return summary


def write_csv(records: list[RunRecord], out) -> None:
    with open(out, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in records:
            writer.writerow(r.csv_row())


def read_csv(path) -> list[RunRecord]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if tuple(reader.fieldnames or ()) != CSV_COLUMNS:
            raise ValueError(f"{path}: unexpected CSV header {reader.fieldnames}")
        return [
            RunRecord(
                parameter_value=float(row["parameter"]),
                p_T=float(row["p_T"]),
                p_star=float(row["p_star"]),
                x=float(row["x"]),
                valid=row["valid"] == "true",
                oracle=float(row["oracle"]) if row["oracle"] else None,
                distance=float(row["distance"]),
                distance_bound=float(row["distance_bound"]),
            )
            for row in reader
        ]


def write_json(records: list[RunRecord], spec: SweepSpec, summary: dict, out) -> None:
    doc = {
        "scenario": asdict(spec.scenario),
        "parameter": spec.parameter,
        "from": spec.start,
        "to": spec.stop,
        "points": spec.points,
        "steps": spec.steps or DEFAULT_STEPS,
        "records": [asdict(r) for r in records],
        "summary": summary,
    }
    with open(out, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")


def run_sweep(spec: SweepSpec, out, format: str = "csv") -> dict:
    """Run every grid point, write the records, and return a summary."""
    if format not in ("csv", "json"):
        raise ValueError(f"format must be 'csv' or 'json', got {format!r}")
    records = sweep_records(spec)
    summary = summarize(records)
    if format == "csv":
        write_csv(records, out)
    else:
        write_json(records, spec, summary, out)
    return summary


def figure_sweep(figure: str) -> SweepSpec:
    if figure not in FIGURES:
        raise ValueError(f"unknown figure {figure!r}; expected one of {sorted(FIGURES)}")
    scenario, start, stop = FIGURES[figure]
    return SweepSpec(scenario, start, stop, FIGURE_POINTS)


def reproduce(figure: str, out) -> dict:
    """Regenerate the data behind one of the P(T)-versus-gamma plots as CSV."""
    summary = run_sweep(figure_sweep(figure), out, "csv")
    summary["figure"] = figure
    return summary
