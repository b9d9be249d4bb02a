"""Command-line front end: certify, render, sweep, curve-info, map-info.

Exit codes for certify: 0 certified-diffeomorphism, 2 not-certified,
3 inconclusive, 1 on errors (spec parse failures name the offending field).
All emitted JSON/CSV/SVG artifacts are byte-deterministic for fixed inputs
and toolkit version; sweep rows additionally carry wall-clock runtimes,
which are excluded from that guarantee.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .boundary import BoundaryMap, build_param, lipschitz_estimate
from .certifier import TOOLKIT_VERSION, certify
from .curves import (build_curve, dini_integral, is_convex,
                     modulus_of_continuity, turning_angle,
                     unit_speed_deviation)
from .errors import HarmcertError, SpecError
from .harmonic import auto_fourier, fourier_coefficients
from .render import render_svg
from .serialize import to_csv, to_json
from .toperator import boundary_jacobian

_EXIT_BY_VERDICT = {"certified-diffeomorphism": 0, "not-certified": 2,
                    "inconclusive": 3}


def _load_json(path: str, what: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise SpecError(f"{what} spec file not found: {path}")
    except json.JSONDecodeError as exc:
        raise SpecError(f"{what} spec {path} is not valid JSON: {exc}")


def _power_of_two(value: int, lo: int, hi: int, name: str) -> int:
    value = int(value)
    if value < lo or value > hi or (value & (value - 1)) != 0:
        raise SpecError(f"flag {name} must be a power of two in [{lo}, {hi}]")
    return value


def _check_tol(tol: float) -> float:
    tol = float(tol)
    if not (1e-10 <= tol <= 1e-3):
        raise SpecError("flag --tol must lie in [1e-10, 1e-3]")
    return tol


def _ensure_out(path: str) -> Path:
    out = Path(path)
    out.mkdir(parents=True, exist_ok=True)
    return out


def cmd_certify(args) -> int:
    grid_n = _power_of_two(args.grid_n, 64, 65536, "--grid-n")
    tol = _check_tol(args.tol)
    fourier_n = (None if args.fourier_n is None
                 else _power_of_two(args.fourier_n, 64, 65536, "--fourier-n"))
    curve = build_curve(_load_json(args.curve, "curve"))
    param = build_param(_load_json(args.map, "map"), curve.length)
    cert = certify(curve, param, grid_n, tol, with_oracle=True,
                   fourier_order=fourier_n)
    out = _ensure_out(args.out)
    (out / "certificate.json").write_text(to_json(cert.to_dict()),
                                          encoding="utf-8")
    (out / "oracle.json").write_text(to_json(cert.oracle.to_dict()),
                                     encoding="utf-8")
    bmap = BoundaryMap(curve, param)
    jb = boundary_jacobian(bmap, cert.profile)
    rows = [
        (tau, v, e, fp, j)
        for tau, v, e, fp, j in zip(cert.profile.taus, cert.profile.values,
                                    cert.profile.errors_est,
                                    cert.profile.f_prime, jb)
    ]
    (out / "tprofile.csv").write_text(
        to_csv(["tau", "T", "err_est", "f_prime", "J_boundary"], rows),
        encoding="utf-8")
    print(f"verdict: {cert.verdict} (min_T = {cert.min_T:.12g}, "
          f"margin = {cert.margin:.3g})")
    return _EXIT_BY_VERDICT[cert.verdict]


def cmd_render(args) -> int:
    fourier_n = (None if args.fourier_n is None
                 else _power_of_two(args.fourier_n, 64, 65536, "--fourier-n"))
    curve = build_curve(_load_json(args.curve, "curve"))
    param = build_param(_load_json(args.map, "map"), curve.length)
    bmap = BoundaryMap(curve, param)
    hm = (auto_fourier(bmap) if fourier_n is None
          else fourier_coefficients(bmap, fourier_n))
    svg = render_svg(hm, curve, rings=args.rings, spokes=args.spokes)
    out = _ensure_out(args.out)
    target = out / "render.svg"
    target.write_text(svg, encoding="utf-8")
    print(f"wrote {target}")
    return 0


def _sweep_row(entry):
    eps, k, map_spec, grid_n, tol, fourier_n = entry
    started = time.perf_counter()
    try:
        curve = build_curve({"type": "polar", "formula_id": "cosine",
                             "params": {"eps": eps, "k": k}})
        param = build_param(map_spec, curve.length)
        cert = certify(curve, param, grid_n, tol, with_oracle=True,
                       fourier_order=fourier_n)
        runtime = time.perf_counter() - started
        return (eps, k, param.map_id, cert.min_T, cert.verdict,
                cert.oracle.verdict, f"{runtime:.3f}", "")
    except (HarmcertError, ValueError) as exc:
        runtime = time.perf_counter() - started
        return (eps, k, map_spec.get("type", "?"), "", "", "",
                f"{runtime:.3f}", f"{type(exc).__name__}: {exc}")


def cmd_sweep(args) -> int:
    spec = _load_json(args.spec, "sweep")
    for key in ("eps_list", "k_list", "maps"):
        if key not in spec:
            raise SpecError(f"sweep spec missing required field '{key}'")
    grid_n = _power_of_two(spec.get("grid_n", 64), 64, 65536, "grid_n")
    tol = _check_tol(spec.get("tol", 1e-6))
    fourier_n = spec.get("fourier_n", 1024)
    entries = [
        (float(eps), int(k), dict(mp), grid_n, tol, fourier_n)
        for eps in spec["eps_list"] for k in spec["k_list"]
        for mp in spec["maps"]
    ]
    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_sweep_row, entries))
    else:
        rows = [_sweep_row(e) for e in entries]
    out = _ensure_out(args.out)
    target = out / "sweep.csv"
    target.write_text(
        to_csv(["eps", "k", "map_id", "min_T", "verdict", "oracle_verdict",
                "runtime_s", "error"], rows), encoding="utf-8")
    print(f"wrote {target} ({len(rows)} rows)")
    return 0


def cmd_curve_info(args) -> int:
    curve = build_curve(_load_json(args.curve, "curve"))
    omega = modulus_of_continuity(curve)
    info = {
        "curve_id": curve.curve_id,
        "length": curve.length,
        "diameter": curve.diameter,
        "convex": is_convex(curve),
        "dini_convergent": dini_integral(omega, curve.length / 2.0).convergent,
        "turning_total": turning_angle(curve).total,
        "unit_speed_deviation": unit_speed_deviation(curve),
        "toolkit_version": TOOLKIT_VERSION,
    }
    sys.stdout.write(to_json(info))
    return 0


def cmd_map_info(args) -> int:
    curve = build_curve(_load_json(args.curve, "curve"))
    param = build_param(_load_json(args.map, "map"), curve.length)
    bounds = lipschitz_estimate(param, 1024)
    info = {
        "map_id": param.map_id,
        "lipschitz_L": param.lipschitz_L,
        "strict": param.strict,
        "length": param.length,
        "L_lower": bounds.L_lower,
        "ell_lower": bounds.ell_lower,
        "toolkit_version": TOOLKIT_VERSION,
    }
    sys.stdout.write(to_json(info))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="harmcert",
        description="Certify harmonic extensions of boundary parametrizations "
                    "as disk diffeomorphisms.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_map=True):
        p.add_argument("--curve", required=True, help="curve spec JSON path")
        if with_map:
            p.add_argument("--map", required=True, help="map spec JSON path")

    p = sub.add_parser("certify", help="run the certification pipeline")
    add_common(p)
    p.add_argument("--grid-n", type=int, default=256)
    p.add_argument("--tol", type=float, default=1e-7)
    p.add_argument("--fourier-n", type=int, default=None)
    p.add_argument("--out", default="out")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("render", help="render the mapped disk as SVG")
    add_common(p)
    p.add_argument("--rings", type=int, default=8)
    p.add_argument("--spokes", type=int, default=16)
    p.add_argument("--fourier-n", type=int, default=None)
    p.add_argument("--out", default="out")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("sweep", help="sweep polar families against the oracle")
    p.add_argument("--spec", required=True, help="sweep spec JSON path")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default="out")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("curve-info", help="validate and summarize a curve spec")
    add_common(p, with_map=False)
    p.set_defaults(func=cmd_curve_info)

    p = sub.add_parser("map-info", help="validate and summarize a map spec")
    add_common(p)
    p.set_defaults(func=cmd_map_info)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HarmcertError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
