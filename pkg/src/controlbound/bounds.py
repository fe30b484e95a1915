"""Lower bound on the ideal/perturbed overlap and its corollaries.

With ``alpha_j`` the time-averaged spectral norm of error ``K_j`` over
``[0, T]`` and ``x = sum_j alpha_j * T / hbar``::

    || psi(T) - phi(T) || <= x
    |<psi(T)|phi(T)>|     >= 1 - x**2 / 2      (informative for 0 <= x < sqrt(2))
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from controlbound.errors import InvalidHorizon
from controlbound.operators import DEFAULT_QUAD_POINTS, OperatorSchedule, alpha

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class BoundReport:
    alphas: tuple
    alpha_total: float
    x: float
    p_star: float
    valid: bool
    cosine_approx: float
    distance_bound: float

    def to_dict(self) -> dict:
        d = asdict(self)
        d["alphas"] = list(self.alphas)
        return d


def p_star(x: float) -> float:
    """``1 - x**2 / 2``, factored so the value at ``x = sqrt(2)`` is exactly zero."""
    r = x / SQRT2
    return (1.0 - r) * (1.0 + r)


def is_valid(x: float) -> bool:
    return 0.0 <= x < SQRT2


def cosine_approximation(x: float) -> float:
    """Small-``x`` companion of the bound; ``cos(x) >= 1 - x**2/2`` for all real ``x``."""
    if x < 0:
        raise ValueError(f"x must be nonnegative, got {x!r}")
    return math.cos(x)


def report_from_alphas(alphas, T: float, hbar: float = 1.0) -> BoundReport:
    if not T > 0 or not math.isfinite(T):
        raise InvalidHorizon(f"final time must be positive, got {T!r}")
    if not hbar > 0:
        raise ValueError(f"hbar must be positive, got {hbar!r}")
    alphas = tuple(float(a) for a in alphas)
    total = math.fsum(alphas)
    x = total * T / hbar
    return BoundReport(
        alphas=alphas,
        alpha_total=total,
        x=x,
        p_star=p_star(x),
        valid=is_valid(x),
        cosine_approx=math.cos(x),
        distance_bound=x,
    )


def theorem1_bound(
    errors: list[OperatorSchedule],
    T: float,
    hbar: float = 1.0,
    quad_points: int = DEFAULT_QUAD_POINTS,
) -> BoundReport:
    """Bound report for the summed errors ``errors`` over ``[0, T]``.

    An empty error list gives ``x = 0`` and ``p_star = 1``. Outside the
    validity window the report is still returned, flagged ``valid=False``,
    with ``p_star`` unclamped.
    """
    if not T > 0 or not math.isfinite(T):
        raise InvalidHorizon(f"final time must be positive, got {T!r}")
    return report_from_alphas([alpha(k, T, quad_points) for k in errors], T, hbar)


def distance_bound(report: BoundReport) -> float:
    return report.x
