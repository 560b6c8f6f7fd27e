"""Closed-form rate bounds for a continuous uniform input on a peak-constrained
Gaussian channel.

The three bounds sandwich the uniform-input mutual information and double as
building blocks for the discrete-input bounds in :mod:`esdurate.esdu`.  They
depend on the channel only through the ratio peak/sigma.
"""

import math
from dataclasses import dataclass

from .special import SQRT_TWO_PI_E, TWO_PI_E


@dataclass(frozen=True)
class P2pChannel:
    """Point-to-point Gaussian channel with nonnegative peak-limited input.

    peak: largest admissible input amplitude A (>= 0).
    sigma: noise standard deviation (> 0).
    """

    peak: float
    sigma: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.peak) and self.peak >= 0.0):
            raise ValueError(f"peak must be finite and >= 0, got {self.peak!r}")
        if not (math.isfinite(self.sigma) and self.sigma > 0.0):
            raise ValueError(f"sigma must be finite and > 0, got {self.sigma!r}")


def c_lower(ch: P2pChannel) -> float:
    """Uniform-input rate lower bound 0.5*log2(1 + A^2/(2*pi*e*sigma^2))."""
    if ch.peak == 0.0:
        return 0.0
    ratio = ch.peak / ch.sigma
    return 0.5 * math.log2(1.0 + ratio * ratio / TWO_PI_E)


def c_upper(ch: P2pChannel) -> float:
    """Capacity upper bound of the peak-constrained channel.

    Minimum of 0.5*log2(1 + A^2/(4*sigma^2)) and log2(1 + A/(sqrt(2*pi*e)*sigma)),
    whichever is tighter at the given peak-to-noise ratio.
    """
    if ch.peak == 0.0:
        return 0.0
    ratio = ch.peak / ch.sigma
    quarter_power = 0.5 * math.log2(1.0 + 0.25 * ratio * ratio)
    amplitude_form = math.log2(1.0 + ratio / SQRT_TWO_PI_E)
    return min(quarter_power, amplitude_form)


def e_cap(ch: P2pChannel) -> float:
    """Upper bound on the uniform-input rate itself.

    Combines c_upper with the variance bound 0.5*log2(1 + A^2/(12*sigma^2)),
    the latter coming from the Gaussian maximum-entropy argument applied to an
    input of variance A^2/12.
    """
    if ch.peak == 0.0:
        return 0.0
    ratio = ch.peak / ch.sigma
    variance_bound = 0.5 * math.log2(1.0 + ratio * ratio / 12.0)
    return min(c_upper(ch), variance_bound)
