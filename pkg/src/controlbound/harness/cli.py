"""Command line entry point.

Exit codes: 0 success, 1 bound violation, 2 config or usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

from controlbound.errors import ConfigParseError, InvalidBudget, UnknownScenario, ValidationError
from controlbound.harness.config import run_config
from controlbound.harness.sweep import FIGURES, SweepSpec, reproduce, run_sweep
from controlbound.harness.verify import verify_random
from controlbound.scenarios import SCENARIOS, ScenarioSpec
from controlbound.search import SearchBudget, qm_exponential_estimate, qm_lower_bound

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def cmd_simulate(args) -> int:
    doc = run_config(args.config, args.out)
    print(f"p_T={doc['p_T']:.6f} p_star={doc['p_star']:.6f} x={doc['x']:.6f} valid={doc['valid']}")
    return EXIT_OK if all(doc["checks"].values()) else EXIT_VIOLATION


def cmd_sweep(args) -> int:
    scenario = ScenarioSpec(args.scenario, u=args.u, omega=args.omega, hbar=args.hbar)
    spec = SweepSpec(scenario, args.start, args.stop, args.points, args.param, args.steps)
    summary = run_sweep(spec, args.out, args.format)
    print(_dump(summary))
    return EXIT_VIOLATION if summary["violations"] else EXIT_OK


def cmd_reproduce(args) -> int:
    summary = reproduce(args.figure, args.out)
    print(_dump(summary))
    return EXIT_VIOLATION if summary["violations"] else EXIT_OK


def cmd_verify(args) -> int:
    report = verify_random(args.instances, args.max_dim, args.seed)
    text = _dump(report) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    n_bad = len(report["violations"])
    print(f"{report['instances']} instances, {n_bad} violations", file=sys.stderr)
    return EXIT_VIOLATION if n_bad else EXIT_OK


def cmd_search_bound(args) -> int:
    budget = SearchBudget(args.n, args.epsilon, args.x)
    lb = qm_lower_bound(budget)
    print(f"qm_lower_bound: {lb:.6f}")
    print(f"qm_lower_bound_squared: {lb * lb:.6f}")
    print(f"qm_exponential_estimate: {qm_exponential_estimate(budget):.6f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="controlbound",
        description="Simulate ideal vs error-perturbed dynamics and check the overlap lower bound.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="run one evolution from a JSON config")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("sweep", help="sweep gamma for a built-in scenario")
    p.add_argument("--scenario", required=True, choices=SCENARIOS)
    p.add_argument("--param", default="gamma", choices=["gamma"])
    p.add_argument("--from", dest="start", type=float, required=True)
    p.add_argument("--to", dest="stop", type=float, required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--format", default="csv", choices=["csv", "json"])
    p.add_argument("--out", required=True)
    p.add_argument("--steps", type=int, default=None, help="integrator steps (default 4000)")
    p.add_argument("--u", type=float, default=1.0, help="drive strength")
    p.add_argument("--omega", type=float, default=1.0, help="rotating-error frequency")
    p.add_argument("--hbar", type=float, default=1.0)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("reproduce", help="regenerate the data for one figure")
    p.add_argument("figure", choices=sorted(FIGURES))
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("verify", help="randomized bound verification")
    p.add_argument("--instances", type=int, required=True)
    p.add_argument("--max-dim", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", default=None, help="write the report here instead of stdout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search-bound", help="target-amplitude budget for a search protocol")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--x", type=float, required=True)
    p.set_defaults(func=cmd_search_bound)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigParseError, ValidationError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InvalidBudget, UnknownScenario, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
