"""Command line interface: ``bercalc {range,radius,norm,verify,reproduce}``.

Every run first prints its resolved configuration as ``# key = value``
lines so that a transcript is enough to rerun it.  Exit codes are 0 on
success, 1 when a verification or reproduction check fails and 2 for usage
errors (bad flags, descriptors or input files).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import __version__
from .berezin import (
    DiscGrid,
    InterpolationPath,
    MatrixOperator,
    MeanKind,
    RadialGrid,
    berezin_norm,
    berezin_radius,
    c_tilde,
    min_t_ber_mix,
    parse_sampler,
    sigma_t_norm,
)
from .convexity import (
    SampledRange,
    blaschke_range,
    blaschke_transform,
    convex_hull,
    convexity_diagnostic,
    dilation_convexity,
    dilation_range,
    finite_rank_range,
    fock_diag_convexity,
    fock_diag_range,
    fock_example_distance,
    fock_scalar_convexity,
    fock_scalar_range,
    rank_one_offdiag_disc,
    write_points_csv,
)
from .errors import BercalcError, InputError
from .inequalities import SUITES, run_suite
from .linalg import gram, matrix_power, read_matrix
from .spaces import FiniteSpace, Fock, WeightedHardy, parse_space

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
SVG_SIZE = 800
SVG_MARGIN = 40
ITEMS = ("remark-3.5", "figure-1", "figure-2", "figure-3", "fock-example")


class CheckFailed(Exception):
    """A reproduction check did not match its expected value."""


# ----------------------------------------------------------------------
# descriptors


def _complex_pair(text: str) -> complex:
    parts = text.split(",")
    if len(parts) != 2:
        raise InputError(f"expected '<re>,<im>', got {text!r}")
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError as exc:
        raise InputError(f"expected '<re>,<im>', got {text!r}") from exc


def _int_list(text: str, count: int) -> list[int]:
    parts = text.split(",")
    try:
        vals = [int(v) for v in parts]
    except ValueError as exc:
        raise InputError(f"expected {count} integer(s), got {text!r}") from exc
    if len(vals) != count:
        raise InputError(f"expected {count} integer(s), got {text!r}")
    return vals


def parse_grid(text: str | None, space):
    """Grid for ``space`` from ``NrxNtheta[:eps[:rounds]]``, ``Ns:Smax`` or a sampler descriptor."""
    want = DiscGrid if isinstance(space, WeightedHardy) else RadialGrid
    if text is None:
        return want()
    desc = text if text.lower().startswith("grid:") else f"grid:{text}"
    grid = parse_sampler(desc)
    if not isinstance(grid, want):
        raise InputError(f"grid {text!r} does not fit space {type(space).__name__}")
    return grid


def build_range(space, symbol: str, grid) -> SampledRange:
    """Sample the Berezin range named by ``symbol`` on ``space``."""
    kind, _, arg = symbol.partition(":")
    kind = kind.lower()
    hardy = {"dilation", "blaschke", "rankone-diag", "rankone-offdiag"}
    fock = {"fock-scalar", "fock-diag"}
    if kind not in hardy | fock:
        raise InputError(f"unknown symbol {symbol!r}")
    if kind in hardy and not isinstance(space, WeightedHardy):
        raise InputError(f"symbol {kind} needs a hardy:<beta> space")
    if kind in fock and not isinstance(space, Fock):
        raise InputError(f"symbol {kind} needs a fock:<alpha> space")
    if kind == "dilation":
        return dilation_range(_complex_pair(arg), space.beta, grid)
    if kind == "blaschke":
        return blaschke_range(_complex_pair(arg), space.beta, grid)
    if kind == "rankone-diag":
        (n,) = _int_list(arg, 1)
        if n < 1:
            raise InputError("rankone-diag needs n >= 1")
        coeffs = np.zeros(n + 1)
        coeffs[n] = 1.0
        return finite_rank_range([coeffs], space.beta, grid)
    if kind == "rankone-offdiag":
        m, n = _int_list(arg, 2)
        return rank_one_offdiag_disc(m, n, space.beta, grid)[1]
    if kind == "fock-scalar":
        return fock_scalar_range(_complex_pair(arg), space.alpha, grid)
    z = _complex_pair(arg)
    return fock_diag_range(z.real, z.imag, space.alpha, grid)


# ----------------------------------------------------------------------
# output helpers


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def render_svg(points, title: str = "") -> str:
    """Scatter plot on a fixed 800 x 800 canvas with equal axis scaling."""
    pts = np.asarray(points, dtype=np.complex128).ravel()
    x, y = pts.real, pts.imag
    x0, x1, y0, y1 = x.min(), x.max(), y.min(), y.max()
    span = max(x1 - x0, y1 - y0) or 1.0
    inner = SVG_SIZE - 2 * SVG_MARGIN
    scale = inner / span
    cx, cy = 0.5 * (x0 + x1), 0.5 * (y0 + y1)

    def px(v):
        return SVG_SIZE / 2 + (v - cx) * scale

    def py(v):
        return SVG_SIZE / 2 - (v - cy) * scale

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_SIZE}" height="{SVG_SIZE}" '
        f'viewBox="0 0 {SVG_SIZE} {SVG_SIZE}">',
        f'<rect x="0" y="0" width="{SVG_SIZE}" height="{SVG_SIZE}" fill="white"/>',
    ]
    lo_x, hi_x = cx - 0.5 * span * SVG_SIZE / inner, cx + 0.5 * span * SVG_SIZE / inner
    lo_y, hi_y = cy - 0.5 * span * SVG_SIZE / inner, cy + 0.5 * span * SVG_SIZE / inner
    if lo_x <= 0.0 <= hi_x:
        out.append(f'<line x1="{px(0.0):.2f}" y1="0" x2="{px(0.0):.2f}" y2="{SVG_SIZE}" stroke="#bbbbbb"/>')
    if lo_y <= 0.0 <= hi_y:
        out.append(f'<line x1="0" y1="{py(0.0):.2f}" x2="{SVG_SIZE}" y2="{py(0.0):.2f}" stroke="#bbbbbb"/>')
    out.append(
        f'<text x="{SVG_MARGIN}" y="{SVG_SIZE - 10}" font-size="12">re [{_fmt(x0)}, {_fmt(x1)}]  '
        f"im [{_fmt(y0)}, {_fmt(y1)}]</text>"
    )
    if title:
        out.append(f'<text x="{SVG_MARGIN}" y="20" font-size="14">{title}</text>')
    seen = set()
    for a, b in zip(px(x), py(y)):
        key = (f"{a:.2f}", f"{b:.2f}")
        if key in seen:
            continue
        seen.add(key)
        out.append(f'<circle cx="{key[0]}" cy="{key[1]}" r="1.5" fill="#1f4e9a"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _write_svg(path, points, title=""):
    Path(path).write_text(render_svg(points, title), encoding="ascii")


def _header(command: str, config: dict) -> None:
    print(f"# bercalc {__version__} {command}")
    for key in sorted(config):
        print(f"# {key} = {config[key]}")


def _report_lines(rep) -> list[str]:
    verdict = "convex" if rep.verdict else "not convex"
    return [
        f"hullDeviation = {rep.hull_deviation:.15g}",
        f"diameter = {rep.diameter:.15g}",
        f"verdict = {verdict} (relTol {rep.rel_tol:g})",
        f"witnessMidpoint = {rep.witness_midpoint.real:.15g},{rep.witness_midpoint.imag:.15g}",
    ]


# ----------------------------------------------------------------------
# subcommands


def cmd_range(args) -> int:
    space = parse_space(args.space)
    grid = parse_grid(args.grid, space)
    _header("range", {
        "space": args.space, "symbol": args.symbol, "grid": grid.describe(), "out": args.out,
        "svg": args.svg, "hull": args.hull, "diagnose": args.diagnose, "relTol": args.rel_tol,
    })
    rng = build_range(space, args.symbol, grid)
    write_points_csv(args.out, rng.points)
    print(f"points = {len(rng)}")
    if args.svg:
        _write_svg(args.svg, rng.points, args.symbol)
    if args.hull:
        write_points_csv(args.hull, convex_hull(rng.points))
    if args.diagnose:
        for line in _report_lines(convexity_diagnostic(rng, args.rel_tol)):
            print(line)
    return EXIT_OK


def _matrix_operator(args):
    m = read_matrix(args.matrix)
    if m.shape[0] != m.shape[1]:
        raise InputError(f"matrix must be square, got {m.shape}")
    space = parse_space(args.space) if args.space else FiniteSpace(m.shape[0])
    if isinstance(space, FiniteSpace) and space.n != m.shape[0]:
        raise InputError(f"space dimension {space.n} does not match matrix size {m.shape[0]}")
    sampler = parse_sampler(args.sampler) if args.sampler else None
    return MatrixOperator(space, m), sampler


def cmd_radius(args) -> int:
    op, sampler = _matrix_operator(args)
    _header("radius", {"matrix": args.matrix, "space": args.space or f"finite:{op.matrix.shape[0]}",
                       "sampler": args.sampler or "default"})
    print(f"{berezin_radius(op, sampler):.15g}")
    return EXIT_OK


def cmd_norm(args) -> int:
    op, sampler = _matrix_operator(args)
    config = {"matrix": args.matrix, "space": args.space or f"finite:{op.matrix.shape[0]}",
              "sampler": args.sampler or "default", "quantity": args.quantity}
    if args.quantity == "sigma":
        path = InterpolationPath(MeanKind.parse(args.path), args.t)
        config.update(path=path.kind.value, t=args.t, p=args.p)
        _header("norm", config)
        value = sigma_t_norm(op, path, args.p, sampler)
    else:
        _header("norm", config)
        value = (berezin_norm if args.quantity == "berezin" else c_tilde)(op, sampler)
    print(f"{value:.15g}")
    return EXIT_OK


def _parse_dims(text: str) -> tuple[int, int]:
    sep = "-" if "-" in text else ","
    try:
        lo, hi = (int(v) for v in text.split(sep))
    except ValueError as exc:
        raise InputError(f"dims must look like '2-6', got {text!r}") from exc
    return lo, hi


def cmd_verify(args) -> int:
    dims = _parse_dims(args.dims)
    suites = sorted(SUITES, key=lambda s: SUITES[s][0]) if args.suite == "all" else [args.suite]
    _header("verify", {"suite": args.suite, "seed": args.seed, "trials": args.trials,
                       "dims": f"{dims[0]}-{dims[1]}", "tol": args.tol, "out": args.out})
    reports = [run_suite(s, args.seed, args.trials, dims, args.tol) for s in suites]
    for rep in reports:
        status = "PASS" if rep.ok else "FAIL"
        print(f"{status} {rep.suite}: cases={rep.cases} minSlack={rep.min_slack:.3e} failures={len(rep.failures)}")
    if args.out:
        text = reports[0].to_json() if len(reports) == 1 else _json_list(reports)
        Path(args.out).write_text(text + "\n", encoding="ascii")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def _json_list(reports) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True)


# ----------------------------------------------------------------------
# reproduction items


def _check(label: str, ok: bool, detail: str) -> None:
    print(f"{'match' if ok else 'MISMATCH'} {label}: {detail}")
    if not ok:
        raise CheckFailed(f"{label}: {detail}")


def _nilpotent_values(outdir: Path) -> None:
    a = np.array([[0, 2, 2], [0, 0, 3], [0, 0, 0]], dtype=np.complex128)
    t_star, value = min_t_ber_mix(a, 4.0)
    target = 481 / 6
    _check("min_t ber(t|A|^4 + (1-t)|A*|^4)", abs(value - target) <= 1e-10,
           f"{value:.15g} vs {Fraction(481, 6)} = {target:.15g} at t = {t_star:.15g}")
    both = matrix_power(gram(a), 2.0) + matrix_power(gram(a.conj().T), 2.0)
    half = 0.5 * berezin_radius(MatrixOperator(FiniteSpace(3), both))
    _check("ber(|A|^4 + |A*|^4) / 2", abs(half - 92.5) <= 1e-10,
           f"{half:.15g} vs {Fraction(185, 2)} = 92.5")


def _fock_scalar_item(outdir: Path) -> None:
    res = fock_scalar_convexity(0.5j, 1.0)
    write_points_csv(outdir / "figure-1.csv", res.sampled.points)
    _write_svg(outdir / "figure-1.svg", res.sampled.points, "fock-scalar lambda=0.5i alpha=1")
    for line in _report_lines(res.report):
        print(f"  {line}")
    _check("figure-1 characterization", not res.characterization, "lambda = 0.5i is not real")
    _check("figure-1 sampled verdict", not res.report.verdict, f"ratio {res.report.ratio:.4g}")


def _blaschke_item(outdir: Path) -> None:
    alpha, beta = 0.5, 0.7
    rng = blaschke_range(alpha, beta)
    write_points_csv(outdir / "figure-2.csv", rng.points)
    _write_svg(outdir / "figure-2.svg", rng.points, "blaschke alpha=0.5 beta=0.7")
    w = DiscGrid().to_points(DiscGrid().params())
    theta = math.atan2(0.0, alpha)
    mirror = np.abs(w) * np.exp(1j * (2.0 * theta - np.angle(w)))
    gap = float(np.max(np.abs(blaschke_transform(alpha, beta, w) - np.conj(blaschke_transform(alpha, beta, mirror)))))
    _check("figure-2 conjugate symmetry", gap <= 1e-12, f"max gap {gap:.3e}")
    rep = convexity_diagnostic(rng)
    for line in _report_lines(rep):
        print(f"  {line}")
    _check("figure-2 sampled verdict", not rep.verdict, f"ratio {rep.ratio:.4g}")


def _dilation_item(outdir: Path) -> None:
    left = dilation_convexity(-0.75, 0.25)
    right = dilation_convexity(0.6j, 0.5)
    for name, res, title in (("figure-3-left", left, "dilation eta=-0.75 beta=0.25"),
                             ("figure-3-right", right, "dilation eta=0.6i beta=0.5")):
        write_points_csv(outdir / f"{name}.csv", res.sampled.points)
        _write_svg(outdir / f"{name}.svg", res.sampled.points, title)
    target = 0.75 / 1.1875
    iv = left.interval
    _check("figure-3 left infimum", abs(iv.inf - target) <= 1e-5, f"{iv.inf:.15g} vs {target:.15g}")
    _check("figure-3 left supremum", abs(iv.sup - 1.0) <= 1e-12, f"{iv.sup:.15g} vs 1")
    _check("figure-3 left verdict", left.characterization and left.report.verdict, f"interval {iv}")
    rep = right.report
    _check("figure-3 right verdict", not right.characterization and rep.hull_deviation > 1e-2 * rep.diameter,
           f"hullDeviation/diameter = {rep.ratio:.4g}")


def _fock_example(outdir: Path) -> None:
    dist, mid = fock_example_distance()
    t = np.linspace(0.0, 40.0, 4001)
    write_points_csv(outdir / "fock-example.csv", np.exp(-t) * np.exp(1j * t))
    _check("fock-example midpoint distance", dist > 0.01, f"{dist:.15g} from m = {mid.real:.15g}")
    res = fock_diag_convexity(0.0, 1.0)
    _check("fock-example characterization", not res.characterization and not res.report.verdict,
           f"sampled ratio {res.report.ratio:.4g}")


_REPRO = {
    "remark-3.5": _nilpotent_values,
    "figure-1": _fock_scalar_item,
    "figure-2": _blaschke_item,
    "figure-3": _dilation_item,
    "fock-example": _fock_example,
}


def cmd_reproduce(args) -> int:
    items = list(ITEMS) if args.item == "all" else [args.item]
    outdir = Path(args.outdir)
    _header("reproduce", {"item": args.item, "outdir": str(outdir)})
    outdir.mkdir(parents=True, exist_ok=True)
    failed = []
    for item in items:
        print(f"[{item}]")
        try:
            _REPRO[item](outdir)
        except CheckFailed as exc:
            failed.append(str(exc))
    for msg in failed:
        print(f"error: {msg}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


# ----------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bercalc", description="Berezin calculus toolkit.")
    parser.add_argument("--version", action="version", version=f"bercalc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("range", help="sample a Berezin range and write it as CSV")
    p.add_argument("--space", required=True, help="hardy:<beta> or fock:<alpha>[:<dim>]")
    p.add_argument("--symbol", required=True,
                   help="dilation:<re>,<im> | blaschke:<re>,<im> | rankone-diag:<n> | "
                        "rankone-offdiag:<m>,<n> | fock-scalar:<re>,<im> | fock-diag:<a>,<b>")
    p.add_argument("--grid", help="<Nr>x<Ntheta>[:<eps>[:<rounds>]] (hardy) or <Ns>:<Smax> (fock)")
    p.add_argument("--out", required=True, help="range CSV path")
    p.add_argument("--svg", help="optional scatter plot path")
    p.add_argument("--hull", help="optional convex hull CSV path")
    p.add_argument("--diagnose", action="store_true", help="print the convexity diagnostic")
    p.add_argument("--rel-tol", type=float, default=1e-3)
    p.set_defaults(func=cmd_range)

    for name, func in (("radius", cmd_radius), ("norm", cmd_norm)):
        p = sub.add_parser(name, help=f"Berezin {name} of a matrix operator")
        p.add_argument("--matrix", required=True, help='JSON file {"rows", "cols", "data": [[re, im], ...]}')
        p.add_argument("--space", help="finite:<n> (default) or hardy:<beta>")
        p.add_argument("--sampler", help="exact | grid:<Nr>x<Ntheta>[:<eps>[:<rounds>]]")
        if name == "norm":
            p.add_argument("--quantity", choices=("sigma", "berezin", "ctilde"), default="sigma")
            p.add_argument("--path", choices=("arith", "geom", "harm"), default="arith")
            p.add_argument("--t", type=float, default=0.5)
            p.add_argument("--p", type=float, default=1.0)
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="run randomized inequality suites")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--dims", default="2-6")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--out", help="JSON report path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reproduce", help="recompute published figures and numbers")
    p.add_argument("--item", choices=ITEMS + ("all",), required=True)
    p.add_argument("--outdir", default=".")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (BercalcError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
