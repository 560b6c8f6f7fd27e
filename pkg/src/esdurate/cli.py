"""Command-line interface: bound tables, broadcast-channel regions, and the
self-verification report, emitted as deterministic CSV or JSON.

Numeric fields are printed with 15 significant digits, rows end with LF, and
reruns with an identical manifest (use --timestamp to pin the only
non-deterministic field) produce byte-identical output.

Exit codes: 0 success, 1 usage error, 2 numerical failure, 3 verification
failure.
"""

import argparse
import json
import math
import sys
from datetime import datetime, timezone

from . import __version__
from .esdu import EsduInput, f1, f2, f3, f_lower, g_upper, owb, xi
from .oracle import (
    MC_GENERATOR,
    ConvergenceError,
    DiscreteInput,
    QuadratureSpec,
    mi_discrete,
    mi_monte_carlo,
)
from .region import BcChannel, RateRegion, SweepConfig, outer_region, sweep_inner
from .special import db_to_amplitude_ratio
from .uniform import P2pChannel, c_lower, c_upper, e_cap
from .verify import run_verification

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERICAL = 2
EXIT_VERIFICATION = 3

SCHEMA_VERSION = 1


class _CliParser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors with exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


class UsageError(Exception):
    pass


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.15g}"
    return str(value)


def _compact_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def canonical_json(obj) -> str:
    """The one JSON serialization used everywhere, so emitted documents
    round-trip to identical bytes."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def build_manifest(command: str, parameters: dict, *, quadrature: QuadratureSpec | None = None,
                   seed: int | None = None, timestamp: str | None = None) -> dict:
    manifest = {
        "schema_version": SCHEMA_VERSION,
        "tool": "esdurate",
        "version": __version__,
        "command": command,
        "parameters": parameters,
        "timestamp": timestamp or datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ"),
    }
    if quadrature is not None:
        manifest["quadrature"] = {
            "absolute_tolerance": quadrature.absolute_tolerance,
            "support_padding": quadrature.support_padding,
            "max_refinements": quadrature.max_refinements,
        }
    if seed is not None:
        manifest["seed"] = seed
        manifest["rng"] = MC_GENERATOR
    return manifest


def emit_csv(manifest: dict, columns: list[str], rows: list[list], stream) -> None:
    stream.write(f"# manifest: {_compact_json(manifest)}\n")
    stream.write(",".join(columns) + "\n")
    for row in rows:
        stream.write(",".join(_fmt(v) for v in row) + "\n")


def emit_table(manifest: dict, columns: list[str], rows: list[list], fmt: str, stream) -> None:
    if fmt == "csv":
        emit_csv(manifest, columns, rows, stream)
    else:
        stream.write(canonical_json({"manifest": manifest, "data": {"columns": columns, "rows": rows}}))


def region_document(manifest: dict, reg: RateRegion) -> dict:
    vertices = []
    origins = reg.origins or (None,) * len(reg.vertices)
    for v, origin in zip(reg.vertices, origins):
        entry = {"r1": v.r1, "r2": v.r2}
        entry["origin"] = (
            None if origin is None else {"delta0": origin.delta0, "k1": origin.k1, "k2": origin.k2}
        )
        vertices.append(entry)
    return {"manifest": manifest, "data": {"vertices": vertices}}


def emit_region(manifest: dict, reg: RateRegion, fmt: str, stream) -> None:
    if fmt == "csv":
        rows = [[v.r1, v.r2] for v in reg.vertices]
        emit_csv(manifest, ["r1", "r2"], rows, stream)
    else:
        stream.write(canonical_json(region_document(manifest, reg)))


def _parse_grid(text: str) -> list[float]:
    """Comma list ("0,5,10") or colon range ("0:20" or "0:20:2"), inclusive."""
    text = text.strip()
    if not text:
        return []
    if ":" in text:
        parts = [float(p) for p in text.split(":")]
        if len(parts) == 2:
            start, stop, step = parts[0], parts[1], 1.0
        elif len(parts) == 3:
            start, stop, step = parts
        else:
            raise UsageError(f"bad range {text!r}; expected start:stop[:step]")
        if step <= 0:
            raise UsageError("range step must be > 0")
        count = int(math.floor((stop - start) / step + 1e-9)) + 1
        return [start + i * step for i in range(max(count, 0))]
    return [float(p) for p in text.split(",")]


def _resolve_peak(args, sigma_ref: float) -> float:
    given_linear = args.peak is not None
    given_db = args.peak_db is not None
    if given_linear == given_db:
        raise UsageError("exactly one of --peak and --peak-db is required")
    if given_linear:
        return args.peak
    return db_to_amplitude_ratio(args.peak_db) * sigma_ref


def _resolve_sigma2(args) -> float:
    given_abs = args.sigma2 is not None
    given_ratio = args.sigma2_ratio is not None
    if given_abs == given_ratio:
        raise UsageError("exactly one of --sigma2 and --sigma2-ratio is required")
    return args.sigma2 if given_abs else args.sigma2_ratio * args.sigma1


def _open_out(args):
    if args.out:
        return open(args.out, "w", encoding="utf-8", newline="\n")
    return None


def _write(args, writer) -> None:
    handle = _open_out(args)
    if handle is None:
        writer(sys.stdout)
    else:
        with handle:
            writer(handle)


def _alphabet_size(peak: float, spacing: float) -> int:
    return max(2, math.ceil(peak / spacing) + 1)


# ---------------------------------------------------------------- commands

def cmd_p2p_bounds(args) -> int:
    quad = QuadratureSpec(absolute_tolerance=args.quad_tol)
    sigma = args.sigma
    if args.peak is not None and args.peak_db is not None:
        raise UsageError("exactly one of --peak and --peak-db is required")
    if args.peak is not None:
        peaks = [(10.0 * math.log10(args.peak / sigma) if args.peak > 0 else -math.inf, args.peak)]
    elif args.peak_db is not None:
        peaks = [(db, db_to_amplitude_ratio(db) * sigma) for db in _parse_grid(args.peak_db)]
    else:
        raise UsageError("exactly one of --peak and --peak-db is required")

    columns = [
        "A_over_sigma_db", "K", "c_lower", "c_upper", "e_cap",
        "f1", "f2", "f3", "f_lower", "g_upper", "owb", "mi_exact", "h_input",
    ]
    rows = []
    for db, peak in peaks:
        levels = _alphabet_size(peak, args.delta0 * sigma)
        if peak == 0.0:
            # a zero-peak channel carries nothing; every rate column collapses
            rows.append([db, levels, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, None, 0.0,
                         math.log2(levels)])
            continue
        ch = P2pChannel(peak, sigma)
        inp = EsduInput(peak, levels)
        mi = mi_discrete(DiscreteInput.from_esdu(inp), sigma, quad)
        rows.append([
            db, levels, c_lower(ch), c_upper(ch), e_cap(ch),
            f1(inp, sigma), f2(inp, sigma), f3(inp, sigma), f_lower(inp, sigma),
            g_upper(inp, sigma), owb(inp, sigma), mi, math.log2(levels),
        ])

    manifest = build_manifest(
        "p2p-bounds",
        {
            "peak": args.peak, "peak_db": args.peak_db, "sigma": sigma,
            "delta0": args.delta0, "quad_tol": args.quad_tol, "format": args.format,
        },
        quadrature=quad,
        timestamp=args.timestamp,
    )
    _write(args, lambda s: emit_table(manifest, columns, rows, args.format, s))
    return EXIT_OK


def cmd_esdu_rate(args) -> int:
    quad = QuadratureSpec(absolute_tolerance=args.quad_tol)
    sigma = args.sigma
    inp = EsduInput(args.span, args.levels)
    degenerate = inp.levels < 2 or inp.span == 0.0
    mi = mi_discrete(DiscreteInput.from_esdu(inp), sigma, quad)
    columns = ["span", "levels", "sigma", "xi", "f1", "f2", "f3", "f_lower", "owb",
               "g_upper", "mi_exact"]
    row = [
        inp.span, inp.levels, sigma,
        None if degenerate else xi(inp, sigma),
        None if degenerate else f1(inp, sigma),
        None if degenerate else f2(inp, sigma),
        None if degenerate else f3(inp, sigma),
        f_lower(inp, sigma),
        None if degenerate else owb(inp, sigma),
        g_upper(inp, sigma),
        mi,
    ]
    seed = None
    if args.mc_samples is not None:
        seed = args.seed
        est = mi_monte_carlo(DiscreteInput.from_esdu(inp), sigma, args.mc_samples, seed)
        columns += ["mi_mc", "mi_mc_stderr"]
        row += [est.value, est.standard_error]
    manifest = build_manifest(
        "esdu-rate",
        {
            "span": inp.span, "levels": inp.levels, "sigma": sigma,
            "quad_tol": args.quad_tol, "mc_samples": args.mc_samples,
            "format": args.format,
        },
        quadrature=quad,
        seed=seed,
        timestamp=args.timestamp,
    )
    _write(args, lambda s: emit_table(manifest, columns, [row], args.format, s))
    return EXIT_OK


def _bc_common(args) -> tuple[BcChannel, SweepConfig]:
    sigma2 = _resolve_sigma2(args)
    peak = _resolve_peak(args, args.sigma1)
    ch = BcChannel(peak, args.sigma1, sigma2)
    quad = QuadratureSpec(absolute_tolerance=args.quad_tol)
    grid = tuple(_parse_grid(args.delta0_grid))
    cfg = SweepConfig(delta0_grid=grid, rho_steps=args.rho_steps, quadrature=quad)
    return ch, cfg


def cmd_bc_region(args, mode: str) -> int:
    ch, cfg = _bc_common(args)
    if mode in ("analytic", "exact"):
        if not cfg.delta0_grid:
            print("warning: empty delta0 grid; region degenerates to {(0,0)}", file=sys.stderr)
        reg = sweep_inner(ch, cfg, mode)
    else:
        reg = outer_region(ch, cfg)
    manifest = build_manifest(
        "bc-inner" if mode in ("analytic", "exact") else "bc-outer",
        {
            "peak": ch.peak, "sigma1": ch.sigma1, "sigma2": ch.sigma2, "mode": mode,
            "delta0_grid": list(cfg.delta0_grid), "rho_steps": cfg.rho_steps,
            "quad_tol": cfg.quadrature.absolute_tolerance, "format": args.format,
        },
        quadrature=cfg.quadrature,
        timestamp=args.timestamp,
    )
    _write(args, lambda s: emit_region(manifest, reg, args.format, s))
    return EXIT_OK


def cmd_verify(args) -> int:
    quad = QuadratureSpec(absolute_tolerance=args.quad_tol)
    report = run_verification(
        _parse_grid(args.peak_db_grid),
        _parse_grid(args.sigma_ratios),
        _parse_grid(args.delta0_grid),
        sandwich_tol=args.sandwich_tol,
        dominance_tol=args.dominance_tol,
        containment_tol=args.containment_tol,
        quad=quad,
        rho_steps=args.rho_steps,
    )
    manifest = build_manifest(
        "verify",
        {
            "peak_db_grid": args.peak_db_grid, "sigma_ratios": args.sigma_ratios,
            "delta0_grid": args.delta0_grid, "sandwich_tol": args.sandwich_tol,
            "dominance_tol": args.dominance_tol, "containment_tol": args.containment_tol,
            "quad_tol": args.quad_tol,
        },
        quadrature=quad,
        timestamp=args.timestamp,
    )
    if "warning" in report:
        print(f"warning: {report['warning']}", file=sys.stderr)
    _write(args, lambda s: s.write(canonical_json({"manifest": manifest, "data": report})))
    return EXIT_OK if report["summary"]["passed"] else EXIT_VERIFICATION


# ---------------------------------------------------------------- parser

def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--out", help="write to this file instead of stdout")
    parser.add_argument("--timestamp", help="pin the manifest timestamp (ISO 8601)")
    parser.add_argument("--quad-tol", type=float, default=1e-10,
                        help="absolute tolerance of the exact-rate quadrature")


def build_parser() -> argparse.ArgumentParser:
    parser = _CliParser(
        prog="esdurate",
        description="Rate bounds and rate regions for peak-constrained Gaussian channels "
                    "with evenly spaced discrete uniform inputs.",
    )
    parser.add_argument("--version", action="version", version=f"esdurate {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p2p = sub.add_parser("p2p-bounds", help="bound table for the point-to-point channel")
    p2p.add_argument("--peak", type=float, help="peak amplitude A (linear)")
    p2p.add_argument("--peak-db", help="A/sigma in dB; comma list or start:stop[:step]")
    p2p.add_argument("--sigma", type=float, default=1.0)
    p2p.add_argument("--delta0", type=float, default=0.5,
                     help="target level spacing in sigma units (picks K)")
    _add_common(p2p)
    p2p.set_defaults(func=cmd_p2p_bounds)

    esdu_p = sub.add_parser("esdu-rate", help="bounds and exact rate of one ESDU input")
    esdu_p.add_argument("--span", type=float, required=True)
    esdu_p.add_argument("--levels", type=int, required=True)
    esdu_p.add_argument("--sigma", type=float, default=1.0)
    esdu_p.add_argument("--mc-samples", type=int, help="add a Monte-Carlo cross-check column")
    esdu_p.add_argument("--seed", type=int, default=0)
    _add_common(esdu_p)
    esdu_p.set_defaults(func=cmd_esdu_rate)

    def add_bc_flags(p, inner: bool):
        p.add_argument("--peak", type=float, help="peak amplitude A (linear)")
        p.add_argument("--peak-db", type=float, help="A/sigma1 in dB")
        p.add_argument("--sigma1", type=float, default=1.0)
        p.add_argument("--sigma2", type=float)
        p.add_argument("--sigma2-ratio", type=float, help="sigma2 as a multiple of sigma1")
        p.add_argument("--delta0-grid", default="0.5:10:0.5",
                       help="spacing targets in sigma1 units; comma list or range")
        p.add_argument("--rho-steps", type=int, default=201)
        if inner:
            p.add_argument("--mode", choices=("analytic", "exact"), default="analytic")
        _add_common(p)

    bci = sub.add_parser("bc-inner", help="broadcast-channel inner-bound region")
    add_bc_flags(bci, inner=True)
    bci.set_defaults(func=lambda a: cmd_bc_region(a, a.mode))

    bco = sub.add_parser("bc-outer", help="broadcast-channel outer-bound region")
    add_bc_flags(bco, inner=False)
    bco.set_defaults(func=lambda a: cmd_bc_region(a, "outer"))

    ver = sub.add_parser("verify", help="run the sandwich/dominance/containment suites")
    ver.add_argument("--peak-db-grid", default="0,5,10,15,20")
    ver.add_argument("--sigma-ratios", default="2,10")
    ver.add_argument("--delta0-grid", default="0.5,1,3,6")
    ver.add_argument("--rho-steps", type=int, default=201)
    ver.add_argument("--sandwich-tol", type=float, default=1e-6)
    ver.add_argument("--dominance-tol", type=float, default=1e-9)
    ver.add_argument("--containment-tol", type=float, default=1e-6)
    ver.add_argument("--out", help="write to this file instead of stdout")
    ver.add_argument("--timestamp", help="pin the manifest timestamp (ISO 8601)")
    ver.add_argument("--quad-tol", type=float, default=1e-10)
    ver.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"esdurate: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"esdurate: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConvergenceError, ArithmeticError) as exc:
        print(f"esdurate: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
