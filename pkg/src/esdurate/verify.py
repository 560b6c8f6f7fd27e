"""Self-validation suites: the bound sandwich against the exact-rate oracle,
dominance over the classical comparison bound, and inner-within-outer region
containment.

Bound functions are called through their module namespaces on purpose: a test
harness can substitute a deliberately broken bound and watch the right suite
fail.
"""

import math
from dataclasses import asdict, dataclass

from . import esdu, oracle, region, uniform
from .special import db_to_amplitude_ratio


@dataclass(frozen=True)
class CheckResult:
    suite: str
    label: str
    margin: float
    tolerance: float
    passed: bool


def _alphabet_size(peak: float, spacing: float) -> int:
    return max(2, math.ceil(peak / spacing) + 1)


def sandwich_checks(
    db_grid,
    delta0_grid,
    tolerance: float = 1e-6,
    quad: oracle.QuadratureSpec | None = None,
) -> list[CheckResult]:
    """f_lower <= exact rate <= g_upper for the swept ESDU inputs, plus the
    continuous-uniform sandwich c_lower <= exact rate <= e_cap."""
    quad = quad if quad is not None else oracle.QuadratureSpec()
    results = []
    for db in db_grid:
        peak = db_to_amplitude_ratio(db)
        ch = uniform.P2pChannel(peak, 1.0)
        rate_u = oracle.mi_uniform(ch, quad)
        for name, margin in (
            ("uniform lower", rate_u - uniform.c_lower(ch)),
            ("uniform upper", uniform.e_cap(ch) - rate_u),
        ):
            results.append(
                CheckResult("sandwich", f"{name} @ {db:g} dB", margin, tolerance, margin >= -tolerance)
            )
        for delta0 in delta0_grid:
            levels = _alphabet_size(peak, delta0)
            inp = esdu.EsduInput(peak, levels)
            rate = oracle.mi_discrete(oracle.DiscreteInput.from_esdu(inp), 1.0, quad)
            low = esdu.f_lower(inp, 1.0)
            high = esdu.g_upper(inp, 1.0)
            where = f"@ {db:g} dB, delta0={delta0:g}, K={levels}"
            results.append(
                CheckResult("sandwich", f"esdu lower {where}", rate - low, tolerance, rate - low >= -tolerance)
            )
            results.append(
                CheckResult("sandwich", f"esdu upper {where}", high - rate, tolerance, high - rate >= -tolerance)
            )
    return results


def dominance_checks(db_grid, delta0_grid, tolerance: float = 1e-9) -> list[CheckResult]:
    """f_lower >= owb wherever owb is defined."""
    results = []
    for db in db_grid:
        peak = db_to_amplitude_ratio(db)
        for delta0 in delta0_grid:
            levels = _alphabet_size(peak, delta0)
            inp = esdu.EsduInput(peak, levels)
            margin = esdu.f_lower(inp, 1.0) - esdu.owb(inp, 1.0)
            results.append(
                CheckResult(
                    "dominance",
                    f"f_lower vs owb @ {db:g} dB, delta0={delta0:g}, K={levels}",
                    margin,
                    tolerance,
                    margin >= -tolerance,
                )
            )
    return results


def containment_checks(
    db_grid,
    sigma_ratios,
    delta0_grid,
    tolerance: float = 1e-6,
    rho_steps: int = 201,
) -> list[CheckResult]:
    """Every analytic inner-bound vertex lies inside the outer bound."""
    results = []
    for db in db_grid:
        peak = db_to_amplitude_ratio(db)
        for ratio in sigma_ratios:
            ch = region.BcChannel(peak, 1.0, float(ratio))
            cfg = region.SweepConfig(delta0_grid=tuple(delta0_grid), rho_steps=rho_steps)
            inner = region.sweep_inner(ch, cfg, "analytic")
            outer = region.outer_region(ch, cfg)
            worst = min(_containment_margin(outer, v) for v in inner.vertices)
            results.append(
                CheckResult(
                    "containment",
                    f"inner in outer @ {db:g} dB, sigma2/sigma1={ratio:g}",
                    worst,
                    tolerance,
                    worst >= -tolerance,
                )
            )
    return results


def _containment_margin(outer: region.RateRegion, p: region.RatePair) -> float:
    """Smallest signed edge distance of p to the outer polygon (>=0 inside)."""
    verts = [(v.r1, v.r2) for v in outer.vertices]
    if len(verts) < 3:
        return -math.hypot(p.r1, p.r2)
    worst = math.inf
    for (x1, y1), (x2, y2) in zip(verts, verts[1:] + verts[:1]):
        ex, ey = x2 - x1, y2 - y1
        norm = math.hypot(ex, ey)
        if norm == 0.0:
            continue
        worst = min(worst, (ex * (p.r2 - y1) - ey * (p.r1 - x1)) / norm)
    return worst


def run_verification(
    db_grid,
    sigma_ratios,
    delta0_grid,
    *,
    sandwich_tol: float = 1e-6,
    dominance_tol: float = 1e-9,
    containment_tol: float = 1e-6,
    quad: oracle.QuadratureSpec | None = None,
    rho_steps: int = 201,
) -> dict:
    """Run all three suites and fold the results into a report dictionary."""
    db_grid = list(db_grid)
    sigma_ratios = list(sigma_ratios)
    delta0_grid = list(delta0_grid)
    checks: list[CheckResult] = []
    warning = None
    if not db_grid:
        warning = "empty peak grid: no checks were run"
    else:
        checks.extend(sandwich_checks(db_grid, delta0_grid, sandwich_tol, quad))
        checks.extend(dominance_checks(db_grid, delta0_grid, dominance_tol))
        checks.extend(containment_checks(db_grid, sigma_ratios, delta0_grid, containment_tol, rho_steps))
    failures = sum(1 for c in checks if not c.passed)
    report = {
        "checks": [asdict(c) for c in checks],
        "summary": {
            "total": len(checks),
            "failures": failures,
            "passed": failures == 0,
        },
    }
    if warning is not None:
        report["warning"] = warning
    return report
