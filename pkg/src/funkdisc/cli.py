"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 bad input or domain error,
3 I/O error.  Numbers print with 15 significant digits; random draws come
from numpy.random.default_rng (PCG64) seeded by --seed.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import List, Optional, Sequence

from . import busemann as bus
from . import figures
from . import geodesics as geo
from . import isometries as iso
from . import laplace as lap
from . import verify as ver
from .errors import GeometryError
from .metrics import (
    DiscPoint,
    ModelId,
    ModelPoint,
    TangentVector,
    eval_halfspace,
    eval_lorentz,
    eval_model,
)

_AMBIENT_FORMS = ("fl", "fplus")


def _f(v: float) -> str:
    return format(v + 0.0, ".15g")  # +0.0 normalizes -0.0


def _coords(text: str, dim: Optional[int] = None) -> tuple:
    try:
        parts = tuple(float(t) for t in text.split(","))
    except ValueError:
        raise GeometryError(f"cannot parse coordinates from {text!r}")
    if dim is not None and len(parts) != dim:
        raise GeometryError(f"expected {dim} comma-separated numbers, got {text!r}")
    return parts


def _disc_point(text: str) -> DiscPoint:
    c = _coords(text, 2)
    return DiscPoint(c[0], c[1])


def _boundary(text: str) -> geo.BoundaryPoint:
    c = _coords(text, 2)
    return geo.BoundaryPoint(c[0], c[1])


def _print_result(payload: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload))
    else:
        for key, val in payload.items():
            print(f"{key}: {val}")


def _cmd_eval(args: argparse.Namespace) -> int:
    name = args.model.lower()
    if name in _AMBIENT_FORMS:
        x = _coords(args.x, 3)
        v = _coords(args.v, 3)
        val = eval_lorentz(x, v) if name == "fl" else eval_halfspace(x, v)
    else:
        model = ModelId(name)
        x = _coords(args.x, model.dim)
        v = _coords(args.v, model.dim)
        val = eval_model(ModelPoint(model, x), v)
    _print_result(
        {"alpha": _f(val.alpha), "beta": _f(val.beta), "total": _f(val.total)},
        args.json,
    )
    return 0


def _cmd_map(args: argparse.Namespace) -> int:
    iso_id = iso.IsometryId(args.iso.lower())
    if args.inverse:
        x = ModelPoint(iso_id.target, _coords(args.x, iso_id.target.dim))
        image = iso.apply_inverse(iso_id, x)
        payload = {"image": ",".join(_f(c) for c in image.coords)}
    else:
        x = ModelPoint(iso_id.source, _coords(args.x, 2))
        image = iso.apply(iso_id, x)
        payload = {"image": ",".join(_f(c) for c in image.coords)}
        if args.v is not None:
            vc = _coords(args.v, 2)
            pushed = iso.differential(iso_id, x).push(TangentVector(vc[0], vc[1]))
            payload["pushed"] = ",".join(_f(c) for c in pushed)
    _print_result(payload, args.json)
    return 0


def _cmd_distance(args: argparse.Namespace) -> int:
    a = _disc_point(getattr(args, "from"))
    b = _disc_point(args.to)
    if args.type == "funk":
        d = geo.funk_distance(a, b)
    else:
        d = geo.hilbert_distance(a, b)
    _print_result({"distance": _f(d)}, args.json)
    return 0


_MAP_CHAINS = {
    ModelId.FF: (),
    ModelId.FP: (iso.IsometryId.F_MAP,),
    ModelId.FU: (iso.IsometryId.G_MAP,),
    ModelId.FB: (iso.IsometryId.XI,),
    ModelId.FUH1: (iso.IsometryId.ETA,),
    ModelId.FUS1: (iso.IsometryId.PSI,),
    ModelId.FUH2: (iso.IsometryId.F_MAP, iso.IsometryId.PI),
    ModelId.FUS2: (iso.IsometryId.F_MAP, iso.IsometryId.SIGMA),
}


def _push_chain(chain, x: DiscPoint, v: TangentVector):
    pt: object = ModelPoint(ModelId.FF, (x.x1, x.x2))
    vec = v.array
    for iso_id in chain:
        src = ModelPoint(iso_id.source, tuple(pt.coords))
        vec = iso.differential(iso_id, src).array @ vec
        pt = iso.apply(iso_id, src)
    return pt, vec


def _cmd_geodesic(args: argparse.Namespace) -> int:
    if args.n < 2:
        raise GeometryError("need at least 2 samples")
    p = _disc_point(args.p)
    if args.y is not None:
        y = _boundary(args.y)
    elif args.v is not None:
        vc = _coords(args.v, 2)
        y = geo.forward_hit(p, TangentVector(vc[0], vc[1]))
    else:
        raise GeometryError("provide --y or --v")
    model = ModelId(args.model.lower())
    if args.metric == "hilbert" and model is not ModelId.FF:
        raise GeometryError("hilbert geodesics are reported in the disc chart only")
    if args.metric == "funk" and model not in _MAP_CHAINS:
        raise GeometryError(f"no geodesic image is defined for {model.name}")
    rows: List[List[str]] = []
    for j in range(args.n):
        t = args.t0 + (args.t1 - args.t0) * j / (args.n - 1)
        if args.metric == "funk":
            g = geo.funk_geodesic(geo.FunkRay(p, y), t)
            vel = geo.funk_velocity(geo.FunkRay(p, y), t)
            pt, vec = _push_chain(_MAP_CHAINS[model], g, vel)
            val = eval_model(pt, vec)
            coords = pt.coords
        else:
            line = geo.HilbertLine(p, y)
            g = geo.hilbert_geodesic(line, t)
            vel = geo.hilbert_velocity(line, t)
            val = eval_model(ModelPoint(ModelId.HILBERT, (g.x1, g.x2)), vel)
            coords = (g.x1, g.x2)
        rows.append([_f(t)] + [_f(c) for c in coords] + [_f(abs(val.total - 1.0))])
    header = ["t"] + [f"c{i + 1}" for i in range(len(rows[0]) - 2)] + ["residual"]
    _write_csv(args.out, header, rows)
    return 0


def _write_csv(out: Optional[str], header: List[str], rows: List[List[str]]) -> None:
    if out is None or out == "-":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return
    with open(out, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def _field(args: argparse.Namespace) -> bus.BusemannField:
    return bus.BusemannField(
        bus.MetricType(args.type), _disc_point(args.p), _boundary(args.y)
    )


def _cmd_busemann(args: argparse.Namespace) -> int:
    field = _field(args)
    x = _disc_point(args.x)
    payload = {"value": _f(bus.busemann_value(field, x))}
    if args.truncate is not None:
        payload["truncated"] = _f(bus.busemann_truncated(field, x, args.truncate))
    _print_result(payload, args.json)
    return 0


def _cmd_horocycle(args: argparse.Namespace) -> int:
    field = _field(args)
    level = bus.HorocycleLevel(field, args.a)
    pts = bus.horocycle_points(level, args.n)
    rows = [
        [_f(z.x1), _f(z.x2), _f(abs(bus.busemann_value(field, z) - args.a))]
        for z in pts
    ]
    _write_csv(args.out, ["x1", "x2", "residual"], rows)
    return 0


def _cmd_laplacian(args: argparse.Namespace) -> int:
    kind = lap.MeasureKind(args.measure)
    field = bus.BusemannField(
        bus.MetricType.FUNK, _disc_point(args.p), _boundary(args.y)
    )
    x = _disc_point(args.x)
    closed = lap.laplacian_busemann(kind, field, x)
    payload = {"laplacian": _f(closed)}
    if args.fd_check:
        fd = lap.laplacian_fd_oracle(kind, field, x)
        payload["fd_oracle"] = _f(fd)
        payload["difference"] = _f(abs(closed - fd))
    _print_result(payload, args.json)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    reports = ver.run_suite(args.suite, args.samples, args.seed)
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], indent=2))
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            print(
                f"{status} {r.suite}: samples={r.samples} seed={r.seed} "
                f"max_residual={_f(r.max_residual)} tolerance={_f(r.tolerance)}"
            )
            if args.verbose:
                for name, res, tol in r.checks:
                    print(f"    {name}: residual={_f(res)} tolerance={_f(tol)}")
    return 0 if all(r.passed for r in reports) else 1


def _cmd_figure_band(args: argparse.Namespace) -> int:
    text = figures.render_band_svg(args.out, args.n)
    worst = max(c["max_residual"] for c in figures.band_figure_curves(args.n))
    target = args.out if args.out else "(stdout)"
    if args.out is None:
        sys.stdout.write(text)
    else:
        print(f"wrote {target}: max vertex residual {_f(worst)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="funkdisc",
        description="Funk and Hilbert geometry of the unit disc",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a model metric at (x, v)")
    p.add_argument("--model", required=True,
                   help="ff, fp, fu, fb, fuh1, fuh2, fus1, fus2, fl, fplus, hilbert")
    p.add_argument("--x", required=True, help="point, comma separated")
    p.add_argument("--v", required=True, help="vector, comma separated")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_eval)

    p = sub.add_parser("map", help="apply an isometry to a point")
    p.add_argument("--iso", required=True, help="eta, pi, psi, sigma, xi, phi, f, g")
    p.add_argument("--x", required=True)
    p.add_argument("--v", help="also push this tangent vector (forward maps)")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_map)

    p = sub.add_parser("distance", help="funk or hilbert distance between disc points")
    p.add_argument("--type", choices=("funk", "hilbert"), required=True)
    p.add_argument("--from", required=True)
    p.add_argument("--to", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_distance)

    p = sub.add_parser("geodesic", help="sample a geodesic as CSV (t, coords, residual)")
    p.add_argument("--metric", choices=("funk", "hilbert"), default="funk")
    p.add_argument("--p", required=True, help="base point")
    p.add_argument("--y", help="forward ideal endpoint on the unit circle")
    p.add_argument("--v", help="initial direction (alternative to --y)")
    p.add_argument("--model", default="ff",
                   help="chart to report funk geodesics in (ff, fp, fu, fb, fuh1, fuh2, fus1, fus2)")
    p.add_argument("--t0", type=float, default=0.0)
    p.add_argument("--t1", type=float, default=5.0)
    p.add_argument("--n", type=int, default=256)
    p.add_argument("--out", help="CSV path (default stdout)")
    p.set_defaults(fn=_cmd_geodesic)

    p = sub.add_parser("busemann", help="busemann function value")
    p.add_argument("--type", choices=("funk", "hilbert"), required=True)
    p.add_argument("--p", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--truncate", type=float, help="also print t - d(x, gamma(t))")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_busemann)

    p = sub.add_parser("horocycle", help="sample a horocycle level set as CSV")
    p.add_argument("--type", choices=("funk", "hilbert"), required=True)
    p.add_argument("--p", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--a", type=float, required=True, help="level value")
    p.add_argument("--n", type=int, default=64)
    p.add_argument("--out", help="CSV path (default stdout)")
    p.set_defaults(fn=_cmd_horocycle)

    p = sub.add_parser("laplacian", help="weighted laplacian of the funk busemann function")
    p.add_argument("--measure", choices=tuple(k.value for k in lap.MeasureKind), required=True)
    p.add_argument("--p", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--fd-check", action="store_true",
                   help="also run the finite-difference divergence oracle")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_laplacian)

    p = sub.add_parser("verify", help="run seeded verification suites")
    p.add_argument("--suite", default="all",
                   choices=("isometries", "geodesics", "busemann", "laplacian", "all"))
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--verbose", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("figure-band", help="write the band-model geodesic figure (SVG)")
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--n", type=int, default=121, help="vertices per curve")
    p.set_defaults(fn=_cmd_figure_band)

    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
