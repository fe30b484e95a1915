"""Config ingestion, sweeps, randomized verification and the command line."""

from controlbound.harness.config import load_config, parse_config, run_config
from controlbound.harness.sweep import RunRecord, SweepSpec, reproduce, run_sweep
from controlbound.harness.verify import verify_random

__all__ = [
    "RunRecord",
    "SweepSpec",
    "load_config",
    "parse_config",
    "reproduce",
    "run_config",
    "run_sweep",
    "verify_random",
]
