"""Error budget for a search protocol prepared under control errors.

Given a database of ``n`` items, an ideal final state with target weight
``1 - eps**2``, and the bound argument ``x = alpha T / hbar``, these give a
floor on the amplitude ``|q_m|`` the perturbed state keeps on the target.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from controlbound.bounds import SQRT2, p_star
from controlbound.errors import InvalidBudget


@dataclass(frozen=True)
class SearchBudget:
    n: int
    epsilon: float
    x: float

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 2:
            raise InvalidBudget(f"database size n must be an integer >= 2, got {self.n!r}")
        if not 0.0 < self.epsilon < 1.0:
            raise InvalidBudget(f"epsilon must lie in (0, 1), got {self.epsilon!r}")
        if not self.x >= 0.0 or not math.isfinite(self.x):
            raise InvalidBudget(f"x must be finite and nonnegative, got {self.x!r}")


def epsilon_upper_bound(x: float) -> float:
    """Largest ``eps`` compatible with ``1 - eps**2 >= 1 - x**2/2``."""
    if x < 0:
        raise ValueError(f"x must be nonnegative, got {x!r}")
    return x / SQRT2


def qm_lower_bound(b: SearchBudget) -> float:
    """``P*/sqrt(1-eps^2) - eps/sqrt(1-eps^2) / sqrt(n-1)``; may be negative, left unclamped."""
    c = math.sqrt(1.0 - b.epsilon**2)
    return p_star(b.x) / c - (b.epsilon / c) / math.sqrt(b.n - 1)


def qm_exponential_estimate(b: SearchBudget) -> float:
    """``exp(-x^2) / (1 - eps^2)``, the large-``n``, small-``x`` estimate of ``|q_m|^2``."""
    return math.exp(-b.x**2) / (1.0 - b.epsilon**2)
