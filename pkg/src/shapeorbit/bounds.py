"""Closed-form upper bounds on the shape pseudometric, plus a verification suite.

All bound formulas consume normalized functionals (circumradius 1), so the
normalization can be suppressed.  ``check_all`` computes the certified metric
interval for a pair of bodies and compares it against every applicable bound;
an applicable bound must dominate the certified lower endpoint.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

from .bodies import Body
from .errors import DimensionMismatch
from .metric import OrbitMetricResult, pseudometric
from .radii import circumball, diameter, inradius, normalize, width_2d

FUNC_TOL = 1e-9
_DIAM_GATE_SLACK = 1e-12
_PROFILE_SLOPE = 2.0  # worst |d bound / d r| over the bound formulas


@dataclass(frozen=True)
class FunctionalProfile:
    """Radii of the normalized body: circumradius is 1 by construction."""

    r: float
    circumradius: float
    D: float
    w: float
    approx_error: float = 0.0

    @property
    def diagram_point(self) -> tuple[float, float]:
        return (self.r, self.D)


def functional_profile(body: Body) -> FunctionalProfile:
    """Normalize a body and measure (r, R=1, D, w)."""
    nb, _ = normalize(body)
    b = nb.body
    r = inradius(b).radius
    w = width_2d(b) if b.dim == 2 else float("nan")
    return FunctionalProfile(float(r), 1.0, float(diameter(b)), w, b.approx_error)


def bound_trivial() -> float:
    return 1.0


def bound_inradius_simple(pk: FunctionalProfile, pl: FunctionalProfile) -> float:
    return 2.0 * max(1.0 - pk.r, 1.0 - pl.r)


def _diam_expr(d: float, n: int) -> float:
    return 1.0 - math.sqrt(max(0.0, 1.0 - (n - 1) / (2.0 * n) * d * d))


def bound_diameter(pk: FunctionalProfile, pl: FunctionalProfile, n: int):
    """Diameter-based bound; None when the hypothesis D < sqrt(2n/(n-1)) fails."""
    gate = math.sqrt(2.0 * n / (n - 1.0)) - _DIAM_GATE_SLACK
    if pk.D >= gate or pl.D >= gate:
        return None
    return max(_diam_expr(pk.D, n), _diam_expr(pl.D, n))


def jung_ratio(n: int) -> float:
    """Minimal D/R over n-dimensional bodies: sqrt(2(n+1)/n)."""
    return math.sqrt(2.0 * (n + 1.0) / n)


def is_jung_extremal(p: FunctionalProfile, n: int, tol: float = 1e-6) -> bool:
    return abs(p.D - jung_ratio(n)) <= tol


def bound_jung_extremal(n: int) -> float:
    return jung_ratio(n) - 1.0 / n - 1.0


def _refined_expr(rk: float, rl: float) -> float:
    return math.sqrt((1.0 - rl + rk) ** 2 + 1.0 - rk * rk) - rl


def bound_inradius_refined(pk: FunctionalProfile, pl: FunctionalProfile) -> float:
    return max(_refined_expr(pk.r, pl.r), _refined_expr(pl.r, pk.r))


def bound_diagram(p: tuple[float, float], q: tuple[float, float], n: int) -> float:
    """Bound from diagram points p = (r, D) of the two normalized bodies."""
    p1, p2 = p
    q1, q2 = q
    val = max(_refined_expr(p1, q1), _refined_expr(q1, p1))
    if p2 <= math.sqrt(n / (2.0 * (n - 1.0))) and q2 <= math.sqrt(n / (2.0 * (n - 1.0))):
        val = min(val, max(_diam_expr(p2, n), _diam_expr(q2, n)))
    return val


def bound_ball_stability(eps: float) -> float:
    if eps < 0:
        raise ValueError("eps must be nonnegative")
    return math.sqrt(1.0 + 4.0 * eps) + eps - 1.0


def sim_sandwich(metric_interval: tuple[float, float], pk: FunctionalProfile, pl: FunctionalProfile):
    """Enclosure for the similarity containment distance from the metric interval.

    Ratios R/r are similarity invariant, so the normalized profiles supply
    them.  Returns (lower, upper) with lower = metric_lower + 1.
    """
    lo, hi = metric_interval
    upper = (1.0 + hi / pk.r) * (1.0 + hi / pl.r)
    return (lo + 1.0, upper)


def jung_check(body: Body) -> bool:
    """sqrt(2(n+1)/n) * R <= D * (1 + 1e-9) for any body."""
    cb = circumball(body)
    return jung_ratio(body.dim) * cb.radius <= diameter(body) * (1.0 + FUNC_TOL)


@dataclass(frozen=True)
class BoundEntry:
    name: str
    applicable: bool
    value: float | None
    slack: float | None
    passed: bool | None


@dataclass(frozen=True)
class BoundReport:
    entries: tuple[BoundEntry, ...]
    metric_lower: float
    metric_upper: float
    jung_ok: tuple[bool, bool]
    combined_tol: float

    @property
    def all_pass(self) -> bool:
        return all(e.passed for e in self.entries if e.applicable) and all(self.jung_ok)

    def to_json_dict(self) -> dict:
        return {
            "metric_lower": self.metric_lower,
            "metric_upper": self.metric_upper,
            "combined_tol": self.combined_tol,
            "jung_ok": list(self.jung_ok),
            "all_pass": self.all_pass,
            "bounds": [
                {
                    "bound_name": e.name,
                    "applicable": e.applicable,
                    "bound": e.value,
                    "slack": e.slack,
                    "pass": e.passed,
                }
                for e in self.entries
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=1)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(
            ["bound_name", "applicable", "bound", "metric_lower", "metric_upper", "slack", "pass"]
        )
        for e in self.entries:
            w.writerow(
                [
                    e.name,
                    int(e.applicable),
                    "" if e.value is None else f"{e.value:.12g}",
                    f"{self.metric_lower:.12g}",
                    f"{self.metric_upper:.12g}",
                    "" if e.slack is None else f"{e.slack:.12g}",
                    "" if e.passed is None else int(e.passed),
                ]
            )
        return buf.getvalue()


def check_all(K: Body, L: Body, tol: float = 1e-4, metric: OrbitMetricResult | None = None) -> BoundReport:
    """Evaluate every applicable bound against the certified metric interval."""
    if K.dim != L.dim:
        raise DimensionMismatch("bodies live in different dimensions")
    n = K.dim
    pk = functional_profile(K)
    pl = functional_profile(L)
    res = metric if metric is not None else pseudometric(K, L, tol)
    lower, upper = res.lower, res.value
    combined = tol + FUNC_TOL + _PROFILE_SLOPE * (pk.approx_error + pl.approx_error)

    full = K.is_full_dim and L.is_full_dim
    jung_extremal = is_jung_extremal(pk, n) and is_jung_extremal(pl, n)
    eps = max(1.0 - pk.r, 1.0 - pl.r) if full else None

    candidates: list[tuple[str, bool, float | None]] = [
        ("trivial", True, bound_trivial()),
        ("inradius_simple", full, bound_inradius_simple(pk, pl) if full else None),
    ]
    dia = bound_diameter(pk, pl, n)
    candidates.append(("diameter", dia is not None, dia))
    candidates.append(("jung_extremal", jung_extremal, bound_jung_extremal(n) if jung_extremal else None))
    candidates.append(("inradius_refined", full, bound_inradius_refined(pk, pl) if full else None))
    candidates.append(("diagram", full, bound_diagram(pk.diagram_point, pl.diagram_point, n) if full else None))
    candidates.append(("ball_stability", full, bound_ball_stability(eps) if full else None))

    entries = []
    for name, applicable, value in candidates:
        if not applicable:
            entries.append(BoundEntry(name, False, value, None, None))
            continue
        slack = value - upper
        passed = lower <= value + combined
        entries.append(BoundEntry(name, True, value, slack, passed))

    return BoundReport(
        tuple(entries),
        lower,
        upper,
        (jung_check(K), jung_check(L)),
        combined,
    )
