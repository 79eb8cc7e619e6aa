"""Seeded property suite behind the ``verify`` command.

Each check draws deterministic random instances, exercises one contract of
the library against an independent brute-force computation or a proved
inequality, and reports the worst violation seen.  The brute-force helpers
here are deliberately written from scratch (different formulations than the
production kernels) so they can serve as cross-checks at runtime.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .bodies import Body, Similarity, apply_similarity, convex_hull_2d, support
from .bounds import check_all, jung_check
from .generators import make_random_body, make_random_points_3d
from .hausdorff import hausdorff_2d_exact
from .metric import pseudometric
from .minball import smallest_enclosing_ball
from .rng import SplitMix64, stream_seed
from .simdist import d_dil, d_sim

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def random_similarity(rng: SplitMix64, reflect_allowed: bool = True) -> Similarity:
    theta = rng.uniform(0.0, TWO_PI)
    scale = math.exp(rng.uniform(math.log(0.1), math.log(10.0)))
    trans = np.array([rng.uniform(-5, 5), rng.uniform(-5, 5)])
    c, s = math.cos(theta), math.sin(theta)
    sigma = np.array([[c, -s], [s, c]])
    if reflect_allowed and rng.next_float() < 0.5:
        sigma = sigma @ np.diag([1.0, -1.0])
    return Similarity(scale, sigma, trans)


# --- independent brute-force oracles ---------------------------------------


def brute_extreme_points(pts: np.ndarray) -> np.ndarray:
    """2D extreme points by exhaustive triangle membership tests (O(N^4))."""
    n = len(pts)
    keep = []
    for i in range(n):
        p = pts[i]
        inside = False
        for a, b, c in itertools.combinations((j for j in range(n) if j != i), 3):
            d1 = _cross(pts[a], pts[b], p)
            d2 = _cross(pts[b], pts[c], p)
            d3 = _cross(pts[c], pts[a], p)
            if (d1 >= -1e-12 and d2 >= -1e-12 and d3 >= -1e-12) or (
                d1 <= 1e-12 and d2 <= 1e-12 and d3 <= 1e-12
            ):
                inside = True
                break
        if not inside:
            keep.append(i)
    return pts[keep]


def _cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _sphere_through(sub: np.ndarray):
    """Center equidistant from all points of ``sub`` (affine hull solve)."""
    p0 = sub[0]
    D = sub[1:] - p0
    rhs = 0.5 * (np.einsum("ij,ij->i", sub[1:], sub[1:]) - p0 @ p0)
    A = D
    sol, *_ = np.linalg.lstsq(A, rhs - A @ p0, rcond=None)
    center = p0 + sol
    d = np.linalg.norm(sub - center, axis=1)
    if np.max(d) - np.min(d) > 1e-9:
        return None
    return center, float(np.max(d))


def brute_min_enclosing_ball(pts: np.ndarray):
    """Exhaustive support-set enumeration over subsets of size 1..dim+1."""
    n = pts.shape[1]
    best = None
    for k in range(1, n + 2):
        for sub in itertools.combinations(range(len(pts)), k):
            got = _sphere_through(pts[list(sub)])
            if got is None:
                continue
            c, r = got
            if np.max(np.linalg.norm(pts - c, axis=1)) <= r + 1e-12:
                if best is None or r < best[1]:
                    best = (c, r)
    return best


# --- individual checks ------------------------------------------------------


def check_hull_oracle(seed: int, trials: int) -> CheckResult:
    for t in range(trials):
        rng = SplitMix64(stream_seed(seed, t))
        pts = rng.disk_points(12 + rng.randint(20))
        hull = convex_hull_2d(pts)
        brute = brute_extreme_points(pts)
        ok = len(hull) == len(brute) and all(
            np.min(np.linalg.norm(brute - h, axis=1)) < 1e-12 for h in hull
        )
        if not ok:
            return CheckResult("hull_vs_brute_extremality", False, f"trial {t}")
    return CheckResult("hull_vs_brute_extremality", True, f"{trials} trials")


def check_meb_oracle(seed: int, trials: int) -> CheckResult:
    worst = 0.0
    for t in range(trials):
        rng = SplitMix64(stream_seed(seed, t))
        count = 2 + rng.randint(9)
        pts = rng.disk_points(count) if t % 2 == 0 else rng.ball_points(count)
        c, r = smallest_enclosing_ball(pts)
        brute = brute_min_enclosing_ball(pts)
        if brute is None:
            return CheckResult("meb_vs_enumeration", False, f"trial {t}: no brute ball")
        worst = max(worst, abs(r - brute[1]))
        if abs(r - brute[1]) > 1e-12:
            return CheckResult("meb_vs_enumeration", False, f"trial {t}: dr={r - brute[1]:g}")
    return CheckResult("meb_vs_enumeration", True, f"{trials} trials, worst dr {worst:g}")


def check_support_oracle(seed: int, trials: int) -> CheckResult:
    for t in range(trials):
        rng = SplitMix64(stream_seed(seed, t))
        body = make_random_body(stream_seed(seed, t), 10)
        for _ in range(16):
            a = rng.uniform(0, TWO_PI)
            u = np.array([math.cos(a), math.sin(a)])
            v, w = support(body, u)
            direct = max(float(np.dot(u, p)) for p in body.points)
            if abs(v - direct) > 1e-12 or abs(float(np.dot(u, w)) - v) > 1e-12:
                return CheckResult("support_vs_vertex_scan", False, f"trial {t}")
    return CheckResult("support_vs_vertex_scan", True, f"{trials} trials")


def check_hausdorff_axioms(seed: int, trials: int) -> CheckResult:
    worst = 0.0
    for t in range(trials):
        a = make_random_body(stream_seed(seed, 3 * t), 9)
        b = make_random_body(stream_seed(seed, 3 * t + 1), 9)
        c = make_random_body(stream_seed(seed, 3 * t + 2), 9)
        dab = hausdorff_2d_exact(a, b).value
        dba = hausdorff_2d_exact(b, a).value
        dac = hausdorff_2d_exact(a, c).value
        dcb = hausdorff_2d_exact(c, b).value
        worst = max(worst, abs(dab - dba), dab - (dac + dcb))
        if abs(dab - dba) > 1e-12 or dab > dac + dcb + 1e-9:
            return CheckResult("hausdorff_axioms", False, f"trial {t}")
    return CheckResult("hausdorff_axioms", True, f"{trials} trials, worst {worst:g}")


def check_metric_invariance(seed: int, pairs: int, tol: float = 1e-3) -> CheckResult:
    worst = 0.0
    for t in range(pairs):
        rng = SplitMix64(stream_seed(seed, 7000 + t))
        K = make_random_body(stream_seed(seed, 2 * t), 8 + rng.randint(6))
        L = make_random_body(stream_seed(seed, 2 * t + 1), 8 + rng.randint(6))
        g = random_similarity(rng)
        h = random_similarity(rng)
        base = pseudometric(K, L, tol)
        moved = pseudometric(apply_similarity(g, K), apply_similarity(h, L), tol)
        diff = abs(base.value - moved.value)
        worst = max(worst, diff)
        if diff > 2 * tol + 1e-9:
            return CheckResult("metric_similarity_invariance", False, f"pair {t}: {diff:g}")
    return CheckResult("metric_similarity_invariance", True, f"{pairs} pairs, worst {worst:g}")


def check_metric_triangle(seed: int, triples: int, tol: float = 1e-3) -> CheckResult:
    worst = -math.inf
    for t in range(triples):
        K = make_random_body(stream_seed(seed, 3 * t + 100), 9)
        M = make_random_body(stream_seed(seed, 3 * t + 101), 9)
        L = make_random_body(stream_seed(seed, 3 * t + 102), 9)
        dkl = pseudometric(K, L, tol).value
        dkm = pseudometric(K, M, tol).value
        dml = pseudometric(M, L, tol).value
        slack = dkl - (dkm + dml)
        worst = max(worst, slack)
        if slack > 3 * tol:
            return CheckResult("metric_triangle", False, f"triple {t}: excess {slack:g}")
    return CheckResult("metric_triangle", True, f"{triples} triples, worst excess {worst:g}")


def check_bound_dominance(seed: int, pairs: int, tol: float = 1e-3) -> CheckResult:
    for t in range(pairs):
        K = make_random_body(stream_seed(seed, 2 * t + 500), 10)
        L = make_random_body(stream_seed(seed, 2 * t + 501), 10)
        report = check_all(K, L, tol)
        if not report.all_pass:
            return CheckResult("bound_dominance", False, f"pair {t}")
    return CheckResult("bound_dominance", True, f"{pairs} pairs, all bounds dominate")


def check_jung(seed: int, trials: int) -> CheckResult:
    for t in range(trials):
        body = make_random_body(stream_seed(seed, t + 900), 4 + t % 9)
        if not jung_check(body):
            return CheckResult("jung_inequality", False, f"2D trial {t}")
        cloud = make_random_points_3d(stream_seed(seed, t + 950), 4 + t % 30)
        if not jung_check(Body("polytope", 3, cloud)):
            return CheckResult("jung_inequality", False, f"3D trial {t}")
    return CheckResult("jung_inequality", True, f"{trials} 2D + {trials} 3D bodies")


def check_sim_distance(seed: int, pairs: int) -> CheckResult:
    log = []
    for t in range(pairs):
        K = make_random_body(stream_seed(seed, 2 * t + 1300), 8)
        L = make_random_body(stream_seed(seed, 2 * t + 1301), 8)
        ds = d_sim(K, L, angle_tol=TWO_PI / 180)
        dd = d_dil(K, L)
        if ds.value > dd.value + 1e-8:
            return CheckResult("sim_vs_dil_ordering", False, f"pair {t}")
        lo, hi = ds.sandwich
        if ds.value > hi + 1e-6 or ds.value < lo - 1e-6:
            return CheckResult("sim_vs_dil_ordering", False, f"pair {t}: sandwich violated")
        sym = d_sim(L, K, angle_tol=TWO_PI / 180)
        log.append(abs(math.log(ds.value) - math.log(sym.value)))
    detail = f"{pairs} pairs, log-symmetry gap max {max(log):g}" if log else "0 pairs"
    return CheckResult("sim_vs_dil_ordering", True, detail)


def run_suite(seed: int = 0, trials: int = 20) -> list[CheckResult]:
    """Run every property check; empty trials means a vacuous pass."""
    if trials <= 0:
        return []
    small = max(1, trials // 4)
    pair_budget = max(1, trials // 10)
    return [
        check_hull_oracle(seed, small),
        check_meb_oracle(seed, trials),
        check_support_oracle(seed, small),
        check_hausdorff_axioms(seed, small),
        check_metric_invariance(seed, pair_budget),
        check_metric_triangle(seed, pair_budget),
        check_bound_dominance(seed, pair_budget),
        check_jung(seed, small),
        check_sim_distance(seed, max(1, trials // 20)),
    ]
