"""Numerical ground truth for the analytical bounds: exact mutual information
I(X; X+Z) of a finite-support or continuous-uniform input X through Gaussian
noise Z.

The computation uses the decomposition I = h(Y) - h(Z).  The output entropy
h(Y) is an integral of -p(y)*log2 p(y), evaluated with adaptive composite
Gauss-Legendre quadrature (15-point panels, bisection refinement); h(Z) is
0.5*log2(2*pi*e*sigma^2) in closed form.  Nothing in this module depends on
the closed-form bounds it is used to validate.

A seeded Monte-Carlo estimator provides an independent cross-check of the
quadrature path.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .esdu import EsduInput
from .special import SQRT2, TWO_PI_E

_LOG2_E = math.log2(math.e)
_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(15)

#: Bit generator behind numpy's default_rng; period 2^128, seeded explicitly.
MC_GENERATOR = "numpy-pcg64"


class ConvergenceError(RuntimeError):
    """Quadrature refinement did not settle within the allowed rounds.

    Carries the last two global estimates so callers can judge how far apart
    the refinement loop still was.
    """

    def __init__(self, message: str, previous_estimate: float, last_estimate: float):
        super().__init__(message)
        self.previous_estimate = previous_estimate
        self.last_estimate = last_estimate


@dataclass(frozen=True)
class QuadratureSpec:
    """Controls for the output-entropy integral.

    support_padding is in multiples of sigma beyond the extreme input atoms;
    the default 10 sigma truncates a tail contribution below 1e-20 bits, so
    the default 1e-10 absolute tolerance stays meaningful.
    """

    absolute_tolerance: float = 1e-10
    support_padding: float = 10.0
    max_refinements: int = 30

    def __post_init__(self) -> None:
        if not (math.isfinite(self.absolute_tolerance) and self.absolute_tolerance > 0.0):
            raise ValueError("absolute_tolerance must be finite and > 0")
        if not (math.isfinite(self.support_padding) and self.support_padding > 0.0):
            raise ValueError("support_padding must be finite and > 0")
        if self.max_refinements < 0:
            raise ValueError("max_refinements must be >= 0")


@dataclass(eq=False)
class DiscreteInput:
    """Finite-support input: sorted atom locations and their probabilities."""

    atoms: np.ndarray
    masses: np.ndarray
    _log_masses: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        atoms = np.asarray(self.atoms, dtype=float)
        masses = np.asarray(self.masses, dtype=float)
        if atoms.ndim != 1 or atoms.size < 1:
            raise ValueError("atoms must be a nonempty 1-D sequence")
        if masses.shape != atoms.shape:
            raise ValueError("atoms and masses must have the same length")
        if not np.all(np.isfinite(atoms)) or not np.all(np.isfinite(masses)):
            raise ValueError("atoms and masses must be finite")
        if np.any(np.diff(atoms) <= 0.0):
            raise ValueError("atoms must be strictly increasing")
        if np.any(masses < 0.0):
            raise ValueError("masses must be nonnegative")
        if abs(masses.sum() - 1.0) > 1e-12:
            raise ValueError(f"masses must sum to 1, got {masses.sum()!r}")
        self.atoms = atoms
        self.masses = masses
        with np.errstate(divide="ignore"):
            self._log_masses = np.where(masses > 0.0, np.log(masses, where=masses > 0.0), -np.inf)

    @classmethod
    def from_esdu(cls, inp: EsduInput) -> "DiscreteInput":
        """Convert an ESDU input; a zero span collapses to one atom at 0."""
        if inp.span == 0.0:
            return cls(np.array([0.0]), np.array([1.0]))
        atoms = np.asarray(inp.atoms(), dtype=float)
        masses = np.full(inp.levels, 1.0 / inp.levels)
        return cls(atoms, masses)

    def shifted(self, offset: float) -> "DiscreteInput":
        return DiscreteInput(self.atoms + offset, self.masses.copy())

    def scaled(self, factor: float) -> "DiscreteInput":
        if factor <= 0.0:
            raise ValueError("scale factor must be positive")
        return DiscreteInput(self.atoms * factor, self.masses.copy())


def mixture_log_pdf(inp: DiscreteInput, sigma: float, y):
    """Natural log of the output density sum_i mass_i * phi(y - atom_i; sigma).

    Uses log-sum-exp over the per-atom terms, so the result stays finite for
    |y - atom| up to hundreds of noise widths.  Accepts a scalar or an array;
    the shape of y is preserved.
    """
    if sigma <= 0.0:
        raise ValueError("sigma must be > 0")
    y_arr = np.asarray(y, dtype=float)
    z = (y_arr[..., None] - inp.atoms) / sigma
    exponents = -0.5 * z * z + inp._log_masses
    peak = np.max(exponents, axis=-1)
    out = (
        peak
        + np.log(np.sum(np.exp(exponents - peak[..., None]), axis=-1))
        - math.log(sigma)
        - _LOG_SQRT_2PI
    )
    if np.isscalar(y) or np.ndim(y) == 0:
        return float(out)
    return out


def _gauss_panels(f, lower: np.ndarray, upper: np.ndarray) -> np.ndarray:
    """15-point Gauss-Legendre estimate of int f on each [lower_i, upper_i]."""
    half = 0.5 * (upper - lower)
    nodes = half[:, None] * _GL_NODES + 0.5 * (lower + upper)[:, None]
    return half * (f(nodes) * _GL_WEIGHTS).sum(axis=1)


def _adaptive_integral(f, lo: float, hi: float, resolution: float, spec: QuadratureSpec) -> float:
    """Integrate f over [lo, hi] by adaptive panel bisection.

    Starts from uniform panels no wider than `resolution` (the smoothing scale
    of the integrand), then repeatedly bisects every panel whose whole-vs-half
    discrepancy exceeds its proportional share of the absolute tolerance.
    Panel bookkeeping is kept in a fixed order so repeated runs reduce in the
    same sequence and return bit-identical results.
    """
    width = hi - lo
    if width <= 0.0:
        return 0.0
    edges = np.linspace(lo, hi, max(4, math.ceil(width / resolution)) + 1)
    panels = np.column_stack([edges[:-1], edges[1:]])
    settled = 0.0
    estimates: list[float] = []
    for _ in range(spec.max_refinements + 1):
        lower, upper = panels[:, 0], panels[:, 1]
        mid = 0.5 * (lower + upper)
        coarse = _gauss_panels(f, lower, upper)
        refined = _gauss_panels(f, lower, mid) + _gauss_panels(f, mid, upper)
        converged = np.abs(coarse - refined) <= spec.absolute_tolerance * (upper - lower) / width
        settled += refined[converged].sum()
        estimates.append(settled + refined[~converged].sum())
        if converged.all():
            return settled
        bad = panels[~converged]
        bad_mid = mid[~converged]
        panels = np.empty((2 * bad.shape[0], 2))
        panels[0::2, 0] = bad[:, 0]
        panels[0::2, 1] = bad_mid
        panels[1::2, 0] = bad_mid
        panels[1::2, 1] = bad[:, 1]
        if panels.shape[0] > 2_000_000:
            # a tolerance below the roundoff floor would otherwise double the
            # panel count every round until memory runs out
            break
    previous = estimates[-2] if len(estimates) >= 2 else math.nan
    raise ConvergenceError(
        f"entropy integral did not converge within {spec.max_refinements} refinement "
        f"rounds (last estimates {previous!r} -> {estimates[-1]!r})",
        previous,
        estimates[-1],
    )


def _entropy_bits(log_pdf, lo: float, hi: float, resolution: float, spec: QuadratureSpec) -> float:
    """Differential entropy in bits of a density given by its natural-log pdf."""

    def integrand(y: np.ndarray) -> np.ndarray:
        lp = log_pdf(y)
        p = np.exp(lp)
        with np.errstate(invalid="ignore"):
            return np.where(p > 0.0, -p * lp * _LOG2_E, 0.0)

    return _adaptive_integral(integrand, lo, hi, resolution, spec)


def noise_entropy(sigma: float) -> float:
    """Differential entropy of N(0, sigma^2) in bits."""
    return 0.5 * math.log2(TWO_PI_E * sigma * sigma)


def mi_discrete(inp: DiscreteInput, sigma: float, quad: QuadratureSpec | None = None) -> float:
    """Mutual information I(X; X+Z) in bits for finite-support X, Z ~ N(0, sigma^2).

    The value is not clamped; a deterministic input comes back as a residual
    of quadrature size (|I| <= tolerance) rather than an exact 0.
    """
    if sigma <= 0.0:
        raise ValueError("sigma must be > 0")
    quad = quad if quad is not None else QuadratureSpec()
    lo = float(inp.atoms[0]) - quad.support_padding * sigma
    hi = float(inp.atoms[-1]) + quad.support_padding * sigma
    h_out = _entropy_bits(lambda y: mixture_log_pdf(inp, sigma, y), lo, hi, sigma, quad)
    return float(h_out - noise_entropy(sigma))


def uniform_output_pdf(ch, y):
    """Output density of X + Z for X ~ Unif([0, A]), Z ~ N(0, sigma^2).

    Equals (Phi(y/sigma) - Phi((y-A)/sigma))/A.  Both tails are evaluated as
    differences of small upper-tail probabilities, avoiding the cancellation a
    direct CDF difference would suffer far outside [0, A].
    """
    a, s = ch.peak, ch.sigma
    y_arr = np.asarray(y, dtype=float)
    u = y_arr / s
    v = (y_arr - a) / s

    def tail(x: np.ndarray) -> np.ndarray:
        flat = np.asarray(x, dtype=float).ravel()
        out = np.array([0.5 * math.erfc(t / SQRT2) for t in flat])
        return out.reshape(np.shape(x))

    left = y_arr < 0.5 * a
    # below the midpoint: Q(-u) - Q(-v); above: Q(v) - Q(u); both subtract the
    # far (negligible) tail from the near one.
    near = np.where(left, -u, v)
    far = np.where(left, -v, u)
    p = (tail(near) - tail(far)) / a
    out = np.maximum(p, 0.0)
    if np.isscalar(y) or np.ndim(y) == 0:
        return float(out)
    return out


def mi_uniform(ch, quad: QuadratureSpec | None = None) -> float:
    """Mutual information in bits of a continuous-uniform input over [0, peak]."""
    if ch.peak == 0.0:
        return 0.0
    quad = quad if quad is not None else QuadratureSpec()
    s = ch.sigma
    lo = -quad.support_padding * s
    hi = ch.peak + quad.support_padding * s

    def integrand(y: np.ndarray) -> np.ndarray:
        p = uniform_output_pdf(ch, y)
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.where(p > 0.0, -p * np.log2(p), 0.0)

    h_out = _adaptive_integral(integrand, lo, hi, s, quad)
    return float(h_out - noise_entropy(s))


@dataclass(frozen=True)
class McEstimate:
    """Monte-Carlo mutual-information estimate with its standard error."""

    value: float
    standard_error: float
    samples: int
    seed: int
    generator: str = MC_GENERATOR


def mi_monte_carlo(inp: DiscreteInput, sigma: float, samples: int, seed: int) -> McEstimate:
    """Sample-average estimate of I(X; X+Z), deterministic for a fixed seed.

    Averages -log2 p(X_i + Z_i) over seeded draws and subtracts the noise
    entropy.  The per-sample values also yield the standard error of the
    estimator.  Requires at least 1e4 samples.
    """
    if samples < 10_000:
        raise ValueError("mi_monte_carlo needs at least 10000 samples")
    if sigma <= 0.0:
        raise ValueError("sigma must be > 0")
    rng = np.random.default_rng(seed)
    idx = rng.choice(inp.atoms.size, size=samples, p=inp.masses)
    ys = inp.atoms[idx] + rng.normal(0.0, sigma, size=samples)

    chunk = 100_000  # bounds the (chunk x atoms) work matrix
    total = 0.0
    total_sq = 0.0
    for start in range(0, samples, chunk):
        lp = mixture_log_pdf(inp, sigma, ys[start : start + chunk])
        vals = -lp * _LOG2_E
        total += vals.sum()
        total_sq += (vals * vals).sum()
    mean = total / samples
    variance = max(0.0, (total_sq - samples * mean * mean) / (samples - 1))
    return McEstimate(
        value=float(mean - noise_entropy(sigma)),
        standard_error=float(math.sqrt(variance / samples)),
        samples=samples,
        seed=seed,
    )
