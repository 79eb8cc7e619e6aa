"""Command-line frontend.

    shapeorbit functionals BODY.json
    shapeorbit metric K.json L.json [--tol T]
    shapeorbit sim K.json L.json [--angle-tol A] [--tol T]
    shapeorbit bounds K.json L.json [--tol T] [--format json|csv] [--out F]
    shapeorbit diagram --samples N [--seed S] [--tol T] [--out F]
    shapeorbit gen KIND [params] [--out F]
    shapeorbit verify [--seed S] [--trials N]

Numbers print with 12 significant digits; identical commands with identical
inputs produce byte-identical output.  Exit codes: 0 success / all-pass,
1 bound or property failure, 2 input error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import bounds as bounds_mod
from . import verify as verify_mod
from .bodies import body_to_dict, dump_body, load_body
from .errors import (
    BadParameter,
    DegenerateInput,
    DimensionMismatch,
    MissingHRep,
    NotNormalized,
    NumericalFailure,
    ParseError,
    ShapeOrbitError,
    UnsupportedDimension,
)
from .generators import (
    make_ball_polygon,
    make_cap,
    make_random_body,
    make_regular_simplex,
    make_reuleaux_triangle,
    make_segment,
)
from .metric import pseudometric
from .radii import chebyshev_point, circumball, diameter, inradius, width_2d
from .rng import stream_seed
from .simdist import d_dil, d_sim, rho_g

_INPUT_ERRORS = (
    ParseError,
    BadParameter,
    DegenerateInput,
    DimensionMismatch,
    MissingHRep,
    UnsupportedDimension,
    NotNormalized,
    FileNotFoundError,
)


def _r12(x: float) -> float:
    return float(f"{float(x):.12g}")


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, (float, np.floating)):
        if math.isnan(obj):
            return None
        return _r12(obj)
    if isinstance(obj, (int, np.integer, bool)) or obj is None or isinstance(obj, str):
        return obj
    return obj


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(doc: dict, out: str | None) -> None:
    _emit(json.dumps(_jsonable(doc), indent=1) + "\n", out)


def _profile_doc(body) -> dict:
    p = bounds_mod.functional_profile(body)
    return {"r": p.r, "R": p.circumradius, "D": p.D, "w": p.w,
            "diagram": list(p.diagram_point)}


def cmd_functionals(args) -> int:
    body = load_body(args.body)
    cb = circumball(body)
    r = inradius(body).radius
    w = width_2d(body) if body.dim == 2 else float("nan")
    p = bounds_mod.functional_profile(body)
    _emit_json(
        {
            "R": cb.radius,
            "chebyshev": cb.center,
            "r": r,
            "D": diameter(body),
            "w": w,
            "normalized": {"r": p.r, "D": p.D, "w": p.w},
        },
        args.out,
    )
    return 0


def cmd_metric(args) -> int:
    K = load_body(args.K)
    L = load_body(args.L)
    res = pseudometric(K, L, args.tol)
    doc = {
        "value": res.value,
        "gap": res.gap,
        "lower": res.lower,
        "optimal_g": {
            "matrix": res.optimal_g,
            "angle": res.angle,
            "reflected": res.reflected,
            "det": float(np.linalg.det(res.optimal_g)),
        },
        "profiles": {"K": _profile_doc(K), "L": _profile_doc(L)},
    }
    _emit_json(doc, args.out)
    return 0


def cmd_sim(args) -> int:
    K = load_body(args.K)
    L = load_body(args.L)
    ds = d_sim(K, L, angle_tol=args.angle_tol, metric_tol=args.tol)
    dd = d_dil(K, L)
    doc = {
        "d_sim": {
            "value": ds.value,
            "mode": ds.mode,
            "grid_step": ds.gap,
            "angle": ds.angle,
            "reflected": ds.reflected,
        },
        "d_dil": {"value": dd.value, "mode": dd.mode},
        "rho": {"sim": rho_g(ds), "dil": rho_g(dd)},
        "sandwich": list(ds.sandwich),
    }
    _emit_json(doc, args.out)
    return 0


def cmd_bounds(args) -> int:
    K = load_body(args.K)
    L = load_body(args.L)
    report = bounds_mod.check_all(K, L, args.tol)
    if args.format == "csv":
        _emit(report.to_csv(), args.out)
    else:
        _emit_json(report.to_json_dict(), args.out)
    return 0 if report.all_pass else 1


def _diagram_row(seed: int, index: int, samples: int, tol: float) -> str:
    si = stream_seed(seed, index)
    body = make_random_body(si, 12)
    p = bounds_mod.functional_profile(body)
    pair = (index + 1) % samples if samples > 1 else index
    partner = make_random_body(stream_seed(seed, pair), 12)
    q = bounds_mod.functional_profile(partner)
    met = pseudometric(body, partner, tol)
    bnd = bounds_mod.bound_diagram(p.diagram_point, q.diagram_point, 2)
    cells = [
        str(index),
        str(si),
        f"{p.r:.12g}",
        f"{p.D:.12g}",
        str(pair),
        f"{bnd:.12g}",
        f"{met.lower:.12g}",
        f"{met.value:.12g}",
    ]
    return ",".join(cells)


def cmd_diagram(args) -> int:
    if args.samples < 1:
        raise BadParameter("--samples must be at least 1")
    threads = int(os.environ.get("SHAPEORBIT_THREADS", "4") or 4)
    threads = max(1, min(threads, 64))
    rows: list[str]
    if threads == 1:
        rows = [_diagram_row(args.seed, i, args.samples, args.tol) for i in range(args.samples)]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(
                pool.map(lambda i: _diagram_row(args.seed, i, args.samples, args.tol),
                         range(args.samples))
            )
    header = "index,seed,r,D,pair,bound,metric_lower,metric_upper"
    _emit("\n".join([header] + rows) + "\n", args.out)
    return 0


def cmd_gen(args) -> int:
    kind = args.kind
    if kind == "simplex":
        body = make_regular_simplex(args.n, args.circumradius)
    elif kind == "cap":
        body = make_cap(np.array([args.ux, args.uy]), args.m)
    elif kind == "reuleaux":
        body = make_reuleaux_triangle(args.m)
    elif kind == "segment":
        body = make_segment(args.length)
    elif kind == "ballpoly":
        body = make_ball_polygon(args.m)
    elif kind == "random":
        body = make_random_body(args.seed, args.vertices)
    else:  # argparse choices should prevent this
        raise BadParameter(f"unknown generator kind {kind!r}")
    if args.out:
        dump_body(body, args.out)
    else:
        _emit_json(body_to_dict(body), None)
    return 0


def cmd_verify(args) -> int:
    results = verify_mod.run_suite(args.seed, args.trials)
    lines = [f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}" for r in results]
    summary = "all checks passed" if all(r.passed for r in results) else "FAILURES present"
    _emit("\n".join(lines + [f"verify ({len(results)} checks, seed {args.seed}): {summary}"]) + "\n",
          args.out)
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="shapeorbit", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--out", default=None, help="write output to this path instead of stdout")

    p = sub.add_parser("functionals", help="radii functionals of one body")
    p.add_argument("body")
    add_common(p)
    p.set_defaults(fn=cmd_functionals)

    p = sub.add_parser("metric", help="similarity-invariant shape distance")
    p.add_argument("K")
    p.add_argument("L")
    p.add_argument("--tol", type=float, default=1e-4)
    add_common(p)
    p.set_defaults(fn=cmd_metric)

    p = sub.add_parser("sim", help="similarity/dilation containment distances")
    p.add_argument("K")
    p.add_argument("L")
    p.add_argument("--angle-tol", type=float, default=2 * math.pi / 720)
    p.add_argument("--tol", type=float, default=1e-4)
    add_common(p)
    p.set_defaults(fn=cmd_sim)

    p = sub.add_parser("bounds", help="verify every applicable metric upper bound")
    p.add_argument("K")
    p.add_argument("L")
    p.add_argument("--tol", type=float, default=1e-4)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    add_common(p)
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("diagram", help="sample normalized random bodies into CSV")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-2)
    add_common(p)
    p.set_defaults(fn=cmd_diagram)

    p = sub.add_parser("gen", help="write a deterministic test body")
    p.add_argument("kind", choices=("simplex", "cap", "reuleaux", "segment", "ballpoly", "random"))
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--circumradius", type=float, default=1.0)
    p.add_argument("--ux", type=float, default=0.5)
    p.add_argument("--uy", type=float, default=0.0)
    p.add_argument("--m", type=int, default=256)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--vertices", type=int, default=12)
    p.add_argument("--length", type=float, default=2.0)
    add_common(p)
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("verify", help="run the seeded property suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20)
    add_common(p)
    p.set_defaults(fn=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if getattr(args, "tol", 1.0) <= 0:
            raise BadParameter("--tol must be positive")
        return args.fn(args)
    except _INPUT_ERRORS as exc:
        print(f"shapeorbit: input error: {exc}", file=sys.stderr)
        return 2
    except NumericalFailure as exc:
        print(f"shapeorbit: numerical failure: {exc}", file=sys.stderr)
        return 3
    except ShapeOrbitError as exc:
        print(f"shapeorbit: error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
