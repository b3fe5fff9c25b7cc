"""Log-domain survival probabilities and repeated-measurement products.

The N-measurement survival probability p(t/N)^N collapses to zero long
before p(t/N) itself is representable as "different from 1" in double
precision, so every product here is accumulated as N * log p in the log
domain.  log p is obtained from the cancellation-free amplitude deficit
(see measures.amplitude_deficit), which keeps it accurate to ~1e-14
relative near p = 1; gaussian and lorentzian measures get closed-form
logs so that even p far below the floating underflow threshold keeps a
finite, exact log.

The scaled product evaluates p(tau * N**(alpha-1))**N.  Exponents may be
exact rationals (fractions.Fraction) or approximate floats; exact rationals
with perfect n2-th-power N are evaluated through integer root extraction so
that recurrence subsequences hit lattice times exactly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import QuadratureFailure, UndefinedZenoTime, ZeroProbability
from .measures import (
    GaussianMeasure,
    LorentzianMeasure,
    SpectralMeasure,
    amplitude_deficit,
    zeno_time,
)

# exp(log_p) underflows to 0 below this; the log is still meaningful.
UNDERFLOW_LOG = -745.0
# raw |A|^2 may exceed 1 by at most this before it is an error, not a clamp
SURVIVAL_CLAMP_TOL = 1e-10

Exponent = Union[Fraction, float]


@dataclass(frozen=True)
class LogProbability:
    """A probability carried in the log domain; log_p <= 0, -inf allowed."""

    log_p: float

    def __post_init__(self):
        if math.isnan(self.log_p) or self.log_p > 0.0:
            raise ValueError(f"log_p must be <= 0 or -inf, got {self.log_p!r}")

    @property
    def p(self) -> float:
        """Linear-domain probability; underflows to exactly 0 below exp(-745)."""
        if self.log_p <= UNDERFLOW_LOG:
            return 0.0
        return math.exp(self.log_p)


@dataclass(frozen=True)
class ZenoParams:
    """Parameters of one scaled product evaluation: p(tau * N^(alpha-1))^N.

    ``alpha`` is either a fractions.Fraction (exact) or a float (approximate);
    exactness gates the recurrence machinery downstream.
    """

    N: int
    alpha: Exponent
    tau: float
    hbar: float = 1.0

    def __post_init__(self):
        if not isinstance(self.N, int) or isinstance(self.N, bool) or self.N < 1:
            raise ValueError(f"N must be an integer >= 1, got {self.N!r}")
        if isinstance(self.alpha, Fraction):
            if self.alpha < 0:
                raise ValueError(f"alpha must be >= 0, got {self.alpha!r}")
        elif isinstance(self.alpha, float):
            if not math.isfinite(self.alpha) or self.alpha < 0.0:
                raise ValueError(f"alpha must be a finite real >= 0, got {self.alpha!r}")
        else:
            raise ValueError(f"alpha must be a Fraction or float, got {type(self.alpha).__name__}")
        if not math.isfinite(self.tau):
            raise ValueError(f"tau must be finite, got {self.tau!r}")
        if not (math.isfinite(self.hbar) and self.hbar > 0.0):
            raise ValueError(f"hbar must be positive, got {self.hbar!r}")


def _integer_nth_root(n: int, k: int):
    """Exact integer k-th root of n, or None when n is not a perfect power."""
    if n < 1:
        return None
    if k == 1:
        return n
    r = round(n ** (1.0 / k))
    for cand in (r - 1, r, r + 1):
        if cand >= 1 and cand ** k == n:
            return cand
    return None


def scaling_power(N: int, alpha: Exponent) -> float:
    """N**(alpha - 1), exact when alpha is rational and N a perfect power.

    For alpha = 1 + n1/n2 (in lowest terms) and N = m**n2 the result is the
    integer m**n1 computed exactly, so recurrence subsequences land on
    lattice times without rounding drift.
    """
    if isinstance(alpha, Fraction):
        d = alpha - 1
        if d == 0:
            return 1.0
        root = _integer_nth_root(N, d.denominator)
        if root is not None:
            if d.numerator >= 0:
                return float(root ** d.numerator)
            return 1.0 / float(root ** (-d.numerator))
        return float(N) ** (float(d.numerator) / float(d.denominator))
    if alpha == 1.0:
        return 1.0
    return float(N) ** (alpha - 1.0)


def one_minus_survival(measure: SpectralMeasure, t: float, hbar: float = 1.0) -> float:
    """q(t) = 1 - |A(t)|^2 without cancellation; accurate for q near 0.

    Raises QuadratureFailure when the raw |A|^2 exceeds 1 + 1e-10 (that is a
    numerical failure, never something to clamp away).
    """
    d = amplitude_deficit(measure, t, hbar)
    q = -(2.0 * d.real + (d.real * d.real + d.imag * d.imag))
    if q < -SURVIVAL_CLAMP_TOL:
        raise QuadratureFailure(f"raw |A({t})|^2 = {1.0 - q!r} exceeds 1 + {SURVIVAL_CLAMP_TOL}")
    return max(q, 0.0)


def survival_probability(measure: SpectralMeasure, t: float, hbar: float = 1.0) -> float:
    """p(t) = |A(t)|^2, clamped to [0, 1] after the raw value is verified."""
    d = amplitude_deficit(measure, t, hbar)
    q = -(2.0 * d.real + (d.real * d.real + d.imag * d.imag))
    if q < -SURVIVAL_CLAMP_TOL:
        raise QuadratureFailure(f"raw |A({t})|^2 = {1.0 - q!r} exceeds 1 + {SURVIVAL_CLAMP_TOL}")
    if q < 0.5:
        return 1.0 - max(q, 0.0)
    p = abs(1.0 + d) ** 2
    return min(max(p, 0.0), 1.0)


def _closed_form_log_survival(measure, t, hbar):
    # Exact logs keep huge decays finite where the amplitude itself underflows.
    if isinstance(measure, GaussianMeasure):
        return -((measure.sigma * t / hbar) ** 2)
    if isinstance(measure, LorentzianMeasure):
        return -2.0 * measure.gamma * abs(t) / hbar
    return None


def log_survival(measure: SpectralMeasure, t: float, hbar: float = 1.0) -> float:
    """log p(t), accurate to ~1e-14 relative near p = 1.

    Uses log1p on the cancellation-free 1 - |A|^2 when p > 1/2 and the
    direct amplitude when p <= 1/2.  Raises ZeroProbability when |A|^2 is
    zero to floating underflow (callers report log p = -inf).
    """
    closed = _closed_form_log_survival(measure, t, hbar)
    if closed is not None:
        return closed
    d = amplitude_deficit(measure, t, hbar)
    q = -(2.0 * d.real + (d.real * d.real + d.imag * d.imag))
    if q < -SURVIVAL_CLAMP_TOL:
        raise QuadratureFailure(f"raw |A({t})|^2 = {1.0 - q!r} exceeds 1 + {SURVIVAL_CLAMP_TOL}")
    if q < 0.5:
        return math.log1p(-max(q, 0.0))
    p = abs(1.0 + d) ** 2
    if p <= 0.0:
        raise ZeroProbability(f"|A({t})|^2 underflowed to zero")
    return math.log(min(p, 1.0))


def zeno_product(measure: SpectralMeasure, N: int, t: float, hbar: float = 1.0) -> LogProbability:
    """Survival after N ideal measurements during evolution to time t: p(t/N)^N."""
    if not isinstance(N, int) or isinstance(N, bool) or N < 1:
        raise ValueError(f"N must be an integer >= 1, got {N!r}")
    try:
        log_p = N * log_survival(measure, t / N, hbar)
    except ZeroProbability:
        log_p = -math.inf
    return LogProbability(min(log_p, 0.0))


def scaled_zeno_product(measure: SpectralMeasure, params: ZenoParams) -> LogProbability:
    """p(tau * N^(alpha-1))^N in the log domain."""
    s = params.tau * scaling_power(params.N, params.alpha)
    try:
        log_p = params.N * log_survival(measure, s, params.hbar)
    except ZeroProbability:
        log_p = -math.inf
    return LogProbability(min(log_p, 0.0))


def taylor_check(measure: SpectralMeasure, t_small: float, hbar: float = 1.0) -> float:
    """Residual |p(t) - (1 - t^2/tz^2)| of the short-time quadratic law.

    Precondition |t_small| <= 0.1 * zeno_time.  The residual is computed as
    |t^2/tz^2 - (1 - p)| so it stays meaningful at 1e-12 scales.  Raises
    UndefinedZenoTime when the variance is infinite.
    """
    tz = zeno_time(measure, hbar)
    if tz is None:
        raise UndefinedZenoTime("infinite variance: no quadratic short-time law")
    if math.isfinite(tz) and abs(t_small) > 0.1 * tz:
        raise ValueError(f"|t_small| = {abs(t_small)!r} exceeds 0.1 * zeno_time = {0.1 * tz!r}")
    expected_q = 0.0 if math.isinf(tz) else (t_small / tz) ** 2
    q = one_minus_survival(measure, t_small, hbar)
    return abs(expected_q - q)
