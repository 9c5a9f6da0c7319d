"""Command-line front end.

    mcshane verify      --boundary cusp|cone:<theta>|hole:<l> [--cutoff 25]
    mcshane weierstrass --boundary ... --class A|B|C [--cutoff 30]
    mcshane combined    --boundary ... [--cutoff 30]
    mcshane pants       --delta0 ... --end-a KIND[:VALUE] --end-b KIND[:VALUE]
    mcshane gap         --delta0 ... --end-a ... --end-b ...
    mcshane gs          --func G|S --x X --y Y --z Z

Verification commands write the per-geodesic table (csv) or the summary report
(json) and exit 0 when |residual| is within the tolerance (default: the tail
estimate), 1 otherwise.  Input errors exit 2.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import gapcat, kernel, markoff, pants, verify
from .errors import InvalidStructureError, McShaneError, SeedMismatchError
from .gapcat import BoundarySpec, EndDescriptor

VERIFY_COMMANDS = ("verify", "weierstrass", "combined")
PROBE_COMMANDS = ("pants", "gap", "gs")
DEFAULT_CUTOFF = {"verify": 25.0, "weierstrass": 30.0, "combined": 30.0}
CSV_HEADER = ["slope_p", "slope_q", "trace", "length", "term", "cumulative_sum"]

_BOUNDARY_KINDS = {"cusp": gapcat.CUSP, "cone": gapcat.CONE, "hole": gapcat.BOUNDARY}
_END_KINDS = {"cusp": gapcat.CUSP, "cone": gapcat.CONE,
              "boundary": gapcat.BOUNDARY, "interior": gapcat.INTERIOR}


class UsageError(Exception):
    """Bad command-line input; carries the flag it concerns."""

    def __init__(self, flag, message):
        super().__init__(f"argument {flag}: {message}" if flag else message)
        self.flag = flag


@dataclass
class RunConfig:
    command: str
    boundary: BoundarySpec | None = None
    cutoff: float | None = None
    class_filter: str | None = None
    seed_override: tuple | None = None
    format: str = "csv"
    output_path: str | None = None
    tolerance: float | None = None
    end_a: EndDescriptor | None = None
    end_b: EndDescriptor | None = None
    func: str | None = None
    gs_args: tuple | None = None


def _spec_token(text: str, kinds: dict):
    kind, sep, value = text.partition(":")
    if kind not in kinds:
        raise argparse.ArgumentTypeError(
            f"unknown kind {kind!r} (expected one of {', '.join(kinds)})")
    if kind == "cusp":
        if sep:
            raise argparse.ArgumentTypeError("cusp takes no value")
        return kind, 0.0
    if not sep:
        raise argparse.ArgumentTypeError(f"{kind} needs a value, as in {kind}:1.5")
    try:
        x = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{value!r} is not a number")
    if not (math.isfinite(x) and x > 0):
        raise argparse.ArgumentTypeError(f"{kind} value must be positive and finite, got {value}")
    return kind, x


def _boundary_token(text):
    return _spec_token(text, _BOUNDARY_KINDS)


def _end_token(text):
    return _spec_token(text, _END_KINDS)


def _positive(text):
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a number")
    if not (math.isfinite(x) and x > 0):
        raise argparse.ArgumentTypeError(f"must be positive and finite, got {text}")
    return x


def _triple(text):
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected three comma-separated traces x,y,z")
    try:
        vals = tuple(float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} contains a non-number")
    if not all(math.isfinite(v) for v in vals):
        raise argparse.ArgumentTypeError("traces must be finite")
    return vals


def _complex(text):
    try:
        z = complex(text.replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a complex number (try 1+0.5j)")
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise argparse.ArgumentTypeError("must be finite")
    return z


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError("", message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mcshane", description="Numerical checks of McShane-type identities.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--output", dest="output_path", help="write here instead of stdout")
        p.add_argument("--degrees", action="store_true", help="cone angles are given in degrees")

    for name in VERIFY_COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--boundary", type=_boundary_token, required=True,
                       help="cusp, cone:<angle> or hole:<length>")
        p.add_argument("--cutoff", type=_positive, default=None)
        p.add_argument("--seed", type=_triple, default=None, help="root traces x,y,z")
        p.add_argument("--tolerance", type=_positive, default=None)
        if name == "weierstrass":
            p.add_argument("--class", dest="class_filter", choices=verify.CLASSES, required=True)
        common(p)

    for name in ("pants", "gap"):
        p = sub.add_parser(name)
        p.add_argument("--delta0", type=_boundary_token, required=True)
        p.add_argument("--end-a", type=_end_token, required=True,
                       help="cusp, cone:<angle>, boundary:<length> or interior:<length>")
        p.add_argument("--end-b", type=_end_token, required=True)
        common(p)

    p = sub.add_parser("gs")
    p.add_argument("--func", choices=("G", "S", "D", "R"), required=True)
    for flag in ("--x", "--y", "--z"):
        p.add_argument(flag, type=_complex, required=True)
    common(p)
    return parser


def _angle(value, degrees):
    return math.radians(value) if degrees else value


def _make_boundary(token, degrees, flag):
    kind, value = token
    if kind == "cone":
        value = _angle(value, degrees)
    try:
        return BoundarySpec(_BOUNDARY_KINDS[kind], value)
    except McShaneError as exc:
        raise UsageError(flag, str(exc))


def _make_end(token, degrees, flag):
    kind, value = token
    if kind == "cone":
        value = _angle(value, degrees)
    try:
        return EndDescriptor(_END_KINDS[kind], value)
    except McShaneError as exc:
        raise UsageError(flag, str(exc))


def parse_args(argv) -> RunConfig:
    """Turn argv into a RunConfig; raises UsageError on bad input."""
    ns = build_parser().parse_args(list(argv))
    cfg = RunConfig(command=ns.command, format=ns.format, output_path=ns.output_path)
    if ns.command in VERIFY_COMMANDS:
        cfg.boundary = _make_boundary(ns.boundary, ns.degrees, "--boundary")
        cfg.cutoff = ns.cutoff if ns.cutoff is not None else DEFAULT_CUTOFF[ns.command]
        cfg.class_filter = getattr(ns, "class_filter", None)
        cfg.seed_override = ns.seed
        cfg.tolerance = ns.tolerance
    elif ns.command in ("pants", "gap"):
        cfg.boundary = _make_boundary(ns.delta0, ns.degrees, "--delta0")
        cfg.end_a = _make_end(ns.end_a, ns.degrees, "--end-a")
        cfg.end_b = _make_end(ns.end_b, ns.degrees, "--end-b")
    else:
        cfg.func = ns.func
        cfg.gs_args = (ns.x, ns.y, ns.z)
    return cfg


def _fmt(x) -> str:
    return repr(float(x))


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _verification(cfg: RunConfig):
    seed = None
    if cfg.seed_override is not None:
        try:
            seed = markoff.TraceTriple(cfg.seed_override)
        except ValueError as exc:
            raise UsageError("--seed", str(exc))
    try:
        records = markoff.enumerate_geodesics(cfg.boundary, cfg.cutoff, seed)
    except SeedMismatchError as exc:
        raise UsageError("--seed", str(exc))
    except InvalidStructureError as exc:
        flag = "--seed" if seed is not None else "--boundary"
        raise UsageError(flag, str(exc))
    if cfg.command == "verify":
        return verify.verify_full_identity(cfg.boundary, cfg.cutoff, records=records)
    if cfg.command == "weierstrass":
        return verify.verify_weierstrass(cfg.boundary, cfg.class_filter, cfg.cutoff,
                                         records=records)
    return verify.verify_combined(cfg.boundary, cfg.cutoff, records=records)


def _report_text(report, fmt) -> str:
    if fmt == "json":
        return json.dumps(report.as_dict(), indent=2) + "\n"
    rows = []
    running = np.cumsum(report.terms) if len(report.records) else []
    for rec, term, cum in zip(report.records, report.terms, running):
        rows.append([rec.slope.p, rec.slope.q, _fmt(rec.trace), _fmt(rec.length),
                     _fmt(term), _fmt(cum)])
    return _csv_text(CSV_HEADER, rows)


def _probe_values(cfg: RunConfig) -> dict:
    if cfg.command == "gs":
        fn = {"G": kernel.g_func, "S": kernel.s_func,
              "D": kernel.mirzakhani_d, "R": kernel.mirzakhani_r}[cfg.func]
        value = fn(*cfg.gs_args)
        return {"func": cfg.func, "real": value.real, "imag": value.imag}
    b, a, e = cfg.boundary, cfg.end_a, cfg.end_b
    if cfg.command == "gap":
        if b.kind == gapcat.CUSP:
            return {"gap": gapcat.gap_prime(a, e)}
        g = gapcat.gap(b, a, e)
        gs = gapcat.gap_via_gs(b, a, e)
        return {"gap": g, "gs_real": gs.real, "gs_imag": gs.imag}
    lay = pants.foot_widths(pants.PantsSpec(b, a, e))
    return {"perp_a": lay.perp_a, "perp_b": lay.perp_b, "width_a": lay.width_a,
            "width_b": lay.width_b, "main_gap": lay.main_gap,
            "full_measure": lay.full_measure}


def _probe_text(values: dict, fmt) -> str:
    if fmt == "json":
        return json.dumps(values, indent=2) + "\n"
    row = [v if isinstance(v, str) else _fmt(v) for v in values.values()]
    return _csv_text(list(values), [row])


def _emit(text, path):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def run(cfg: RunConfig) -> int:
    """Execute a parsed configuration and return the exit code."""
    try:
        markoff.thread_cap()
    except ValueError as exc:
        print(f"mcshane: {exc}", file=sys.stderr)
        return 2
    try:
        if cfg.command in VERIFY_COMMANDS:
            report = _verification(cfg)
            _emit(_report_text(report, cfg.format), cfg.output_path)
            tol = cfg.tolerance if cfg.tolerance is not None else report.tail_estimate
            if cfg.format == "csv":
                print(f"{report.identity}: partial_sum={_fmt(report.partial_sum)} "
                      f"target={_fmt(report.target)} residual={_fmt(report.residual)} "
                      f"tail_estimate={_fmt(report.tail_estimate)}", file=sys.stderr)
            return 0 if abs(report.residual) <= tol else 1
        _emit(_probe_text(_probe_values(cfg), cfg.format), cfg.output_path)
        return 0
    except UsageError as exc:
        print(f"mcshane: error: {exc}", file=sys.stderr)
        return 2
    except (McShaneError, ValueError) as exc:
        print(f"mcshane: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"mcshane: error: --output: {exc}", file=sys.stderr)
        return 2


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_args(argv)
    except UsageError as exc:
        print(f"mcshane: error: {exc}", file=sys.stderr)
        return 2
    return run(cfg)
