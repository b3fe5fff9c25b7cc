"""Limit-regime prediction for scaled repeated-measurement products.

Given a spectral measure and a scaling exponent alpha, the large-N limit of
p(tau * N**(alpha-1))**N falls into one of a handful of regimes:

  zeno        alpha < 1/2, finite variance: the product freezes at 1.
  gaussian    alpha = 1/2 exactly: the threshold value exp(-tau^2/tz^2).
  classical   the product dies: 1/2 < alpha < 1, or alpha = 1 with no
              common period, or alpha > 1 with purely continuous spectrum.
  lattice     alpha = 1 with commensurable point spectrum: limit is 1
              exactly on integer multiples of the first return time, 0 off.
  recurrent   alpha > 1 rational with commensurable point spectrum and a
              lattice tau: limsup 1 along the subsequence N = m**n2.
  almost_everywhere_zero
              alpha > 1, spectrum bounded below: zero for Lebesgue-a.e. tau
              (checked statistically, never pointwise).
  inapplicable
              no limit law covers the case (e.g. infinite variance at
              alpha <= 1/2, or alpha > 1 with spectrum unbounded below).

Commensurability of a finite point spectrum is decided in gap-ratio space:
each gap ratio is replaced by its best rational with denominator below
``max_denominator`` (continued fractions via fractions.Fraction), and the
candidate fundamental gap is accepted only if every multiplier g_j/delta
sits within ``tol`` of an integer.  That residue test cleanly separates
float-noise rationals (residue ~ q * 1e-16) from genuine irrationals, whose
convergents leave residues >= ~1/(a_max * q) >> tol for all denominators in
range.  The analyzer sees only the atom list it is given: truncating an
infinite point spectrum may change delta and the first return time, and no
compensation for that is attempted.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .engine import Exponent, LogProbability, ZenoParams, one_minus_survival, scaled_zeno_product
from .errors import ApproximateAlpha, Incommensurable, SingleAtomSpectrum
from .measures import (
    PurePointMeasure,
    SpectralMeasure,
    SpectralType,
    bounded_below,
    flatten_pure_point,
    spectral_type,
    validate,
    variance,
    zeno_time,
)

MAX_DENOMINATOR = 10 ** 6
COMMENSURABILITY_TOL = 1e-9   # |g_j/delta - k_j| must not exceed this
FIRST_RETURN_TOL = 1e-9       # 1 - p(first return time) must not exceed this
LATTICE_TOL = 1e-9            # membership tolerance for tau / tau_R


class Regime(str, Enum):
    ZENO = "zeno"
    GAUSSIAN = "gaussian"
    CLASSICAL = "classical"
    LATTICE = "lattice"
    RECURRENT = "recurrent"
    AE_ZERO = "almost_everywhere_zero"
    INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class CommensurabilityResult:
    """Lattice structure of a finite point spectrum: energies = a + k_j * delta.

    ``fundamental_gap`` is the largest delta dividing every gap, so the
    multipliers are coprime and ``first_return_time`` = 2 pi hbar / delta is
    the smallest time with p = 1.  ``gcd`` records gcd of the nonzero
    multipliers (1 by construction for the canonical delta); it bridges to
    conventions where a non-fundamental period tau0 = gcd * first_return_time
    is supplied externally.
    """

    reference_level: float
    multipliers: tuple[int, ...]
    gcd: int
    fundamental_gap: float
    first_return_time: float


@dataclass(frozen=True)
class RegimePrediction:
    """Predicted large-N behavior; ``limit`` is None when only a limsup or
    an almost-everywhere statement is claimed (recurrent / inapplicable)."""

    regime: Regime
    limit: Optional[float]
    zeno_time: Optional[float] = None
    first_return_time: Optional[float] = None
    lattice_gcd: Optional[int] = None
    subsequence_power: Optional[int] = None
    notes: str = ""

    def to_dict(self) -> dict:
        return {
            "regime": self.regime.value,
            "limit": self.limit,
            "zeno_time": self.zeno_time,
            "first_return_time": self.first_return_time,
            "lattice_gcd": self.lattice_gcd,
            "subsequence_power": self.subsequence_power,
            "notes": self.notes,
        }


def analyze_commensurability(
    measure: PurePointMeasure,
    hbar: float = 1.0,
    max_denominator: int = MAX_DENOMINATOR,
    tol: float = COMMENSURABILITY_TOL,
) -> CommensurabilityResult:
    """Find the largest gap delta with every level at reference + integer * delta.

    Raises SingleAtomSpectrum for eigenstates and Incommensurable when no
    such delta exists within the denominator bound and residue tolerance.
    """
    measure = validate(measure)
    if len(measure.atoms) == 1:
        raise SingleAtomSpectrum("a single atom has trivial dynamics: p(t) = 1 for all t")
    energies = [a.energy for a in measure.atoms]
    a0 = energies[0]
    gaps = [e - a0 for e in energies[1:]]
    g_ref = gaps[0]  # smallest gap: energies are sorted

    approx = [Fraction(g / g_ref).limit_denominator(max_denominator) for g in gaps]
    lcm = math.lcm(*(f.denominator for f in approx))
    if lcm > max_denominator:
        raise Incommensurable(
            f"combined gap-ratio denominator {lcm} exceeds max_denominator {max_denominator}"
        )
    scaled = [f.numerator * (lcm // f.denominator) for f in approx]
    g = math.gcd(*scaled)
    delta = g_ref * g / lcm

    multipliers = [0]
    for gap in gaps:
        ratio = gap / delta
        k = round(ratio)
        if abs(ratio - k) > tol:
            raise Incommensurable(
                f"gap {gap!r} is {abs(ratio - k):.3e} away from the multiplier lattice"
                f" (tolerance {tol})"
            )
        multipliers.append(k)

    m = math.gcd(*(k for k in multipliers if k != 0))
    first_return = 2.0 * math.pi * hbar / delta
    if one_minus_survival(measure, first_return, hbar) > FIRST_RETURN_TOL:
        raise Incommensurable(
            f"candidate first return time {first_return!r} fails p = 1 within {FIRST_RETURN_TOL}"
        )
    return CommensurabilityResult(
        reference_level=a0,
        multipliers=tuple(multipliers),
        gcd=m,
        fundamental_gap=delta,
        first_return_time=first_return,
    )


def lattice_membership(tau: float, tau0: float, m: int = 1, tol: float = LATTICE_TOL) -> bool:
    """Whether tau lies on the period lattice (tau0 / m) * integers, within tol."""
    if tau0 == 0.0:
        raise ValueError("tau0 must be nonzero")
    x = m * tau / tau0
    return abs(x - round(x)) <= tol


def recurrence_subsequence(alpha: Exponent, m_max: int) -> list[int]:
    """The measurement counts N = m**n2 along which lattice returns recur.

    Requires an exactly rational alpha > 1 (alpha - 1 = n1/n2 in lowest
    terms); approximate exponents cannot define the subsequence.
    """
    if not isinstance(alpha, Fraction):
        raise ApproximateAlpha(
            f"recurrence subsequences need an exact rational alpha, got {alpha!r}"
        )
    if alpha <= 1:
        raise ValueError(f"recurrence requires alpha > 1, got {alpha}")
    if m_max < 1:
        raise ValueError(f"m_max must be >= 1, got {m_max}")
    n2 = (alpha - 1).denominator
    return [m ** n2 for m in range(1, m_max + 1)]


def predict_limit(
    measure: SpectralMeasure,
    alpha: Exponent,
    tau: float,
    hbar: float = 1.0,
    max_denominator: int = MAX_DENOMINATOR,
    tol: float = COMMENSURABILITY_TOL,
) -> RegimePrediction:
    """Dispatch the measure and exponent to their large-N regime."""
    measure = validate(measure)
    a = float(alpha)
    if a < 0.0:
        raise ValueError(f"alpha must be >= 0, got {alpha!r}")
    var = variance(measure)
    tz = zeno_time(measure, hbar)

    if var == 0.0:
        return RegimePrediction(Regime.ZENO, 1.0, zeno_time=math.inf,
                                notes="eigenstate: p(t) = 1 for every t")
    if math.isinf(var) and a <= 0.5:
        return RegimePrediction(
            Regime.INAPPLICABLE, None, zeno_time=None,
            notes="infinite energy variance: no Zeno time, the freezing/threshold laws do not apply")

    if a < 0.5:
        return RegimePrediction(Regime.ZENO, 1.0, zeno_time=tz,
                                notes="sub-threshold scaling freezes the state")
    if a == 0.5:
        limit = math.exp(-((tau / tz) ** 2)) if math.isfinite(tz) else 1.0
        return RegimePrediction(Regime.GAUSSIAN, limit, zeno_time=tz,
                                notes="threshold scaling: gaussian law exp(-tau^2/tz^2)")

    if tau == 0.0:
        return RegimePrediction(Regime.ZENO, 1.0, zeno_time=tz,
                                notes="tau = 0: no evolution between measurements")

    if a < 1.0:
        note = "super-threshold scaling: survival decays to 0"
        if tz is None:
            note += " (infinite variance: quadratic decay envelope unavailable)"
        return RegimePrediction(Regime.CLASSICAL, 0.0, zeno_time=tz, notes=note)

    pp = flatten_pure_point(measure)

    if a == 1.0:
        if pp is not None:
            try:
                comm = analyze_commensurability(pp, hbar, max_denominator, tol)
            except Incommensurable:
                return RegimePrediction(
                    Regime.CLASSICAL, 0.0, zeno_time=tz,
                    notes="point spectrum with no common period: sup p(tau) < 1 off tau = 0")
            member = lattice_membership(tau, comm.first_return_time, 1, tol)
            return RegimePrediction(
                Regime.LATTICE, 1.0 if member else 0.0, zeno_time=tz,
                first_return_time=comm.first_return_time, lattice_gcd=comm.gcd,
                notes="limit is 1 exactly on integer multiples of the first return time")
        stype = spectral_type(measure)
        if stype is SpectralType.ABSOLUTELY_CONTINUOUS:
            note = "correlations decay at large time: p(tau) < 1 for every nonzero tau"
        else:
            note = "survival stays strictly below 1 for every nonzero tau"
        return RegimePrediction(Regime.CLASSICAL, 0.0, zeno_time=tz, notes=note)

    # alpha > 1
    if spectral_type(measure) is SpectralType.ABSOLUTELY_CONTINUOUS:
        return RegimePrediction(
            Regime.CLASSICAL, 0.0, zeno_time=tz,
            notes="absolutely continuous spectrum: decay is uniform on compact tau ranges away from 0")
    if pp is not None:
        comm = None
        try:
            comm = analyze_commensurability(pp, hbar, max_denominator, tol)
        except Incommensurable:
            pass
        if (comm is not None and isinstance(alpha, Fraction)
                and lattice_membership(tau, comm.first_return_time, 1, tol)):
            n2 = (alpha - 1).denominator
            return RegimePrediction(
                Regime.RECURRENT, None, zeno_time=tz,
                first_return_time=comm.first_return_time, lattice_gcd=comm.gcd,
                subsequence_power=n2,
                notes=f"limsup 1 along N = m**{n2}; no full-sequence limit claimed")
        return RegimePrediction(
            Regime.AE_ZERO, 0.0, zeno_time=tz,
            first_return_time=None if comm is None else comm.first_return_time,
            notes="limit 0 for Lebesgue-almost-every tau; exceptional recurrence times possible")
    if bounded_below(measure):
        return RegimePrediction(
            Regime.AE_ZERO, 0.0, zeno_time=tz,
            notes="limit 0 for Lebesgue-almost-every tau; exceptional recurrence times possible")
    return RegimePrediction(
        Regime.INAPPLICABLE, None, zeno_time=tz,
        notes="spectrum unbounded below with a singular/mixed part: no covered regime")


@dataclass(frozen=True)
class ScheduleRow:
    N: int
    p: float
    log_p: float


@dataclass(frozen=True)
class VerificationReport:
    prediction: RegimePrediction
    rows: tuple[ScheduleRow, ...]
    final_gap: Optional[float]
    agree: bool
    notes: str

    def to_dict(self) -> dict:
        return {
            "prediction": self.prediction.to_dict(),
            "rows": [{"N": r.N, "p": r.p, "log_p": r.log_p} for r in self.rows],
            "final_gap": self.final_gap,
            "agree": self.agree,
            "notes": self.notes,
        }


GAUSSIAN_VERIFY_TOL = 5e-3
DECAY_VERIFY_LOG = math.log(1e-6)
AE_ZERO_VERIFY_LOG = math.log(1e-3)


def _evaluate_schedule(measure, alpha, tau, hbar, schedule):
    rows = []
    for n in schedule:
        lp = scaled_zeno_product(measure, ZenoParams(N=int(n), alpha=alpha, tau=tau, hbar=hbar))
        rows.append(ScheduleRow(int(n), lp.p, lp.log_p))
    return tuple(rows)


def verify_prediction(
    measure: SpectralMeasure,
    alpha: Exponent,
    tau: float,
    hbar: float = 1.0,
    n_schedule=(100, 1000, 10_000, 100_000, 1_000_000),
    max_denominator: int = MAX_DENOMINATOR,
    tol: float = COMMENSURABILITY_TOL,
) -> VerificationReport:
    """Evaluate the scaled product along a schedule and test it against the
    predicted regime, reporting the final gap |p(N_max) - predicted limit|."""
    schedule = sorted(set(int(n) for n in n_schedule))
    if not schedule or schedule[0] < 1:
        raise ValueError("n_schedule must contain integers >= 1")
    pred = predict_limit(measure, alpha, tau, hbar, max_denominator, tol)
    rows = _evaluate_schedule(measure, alpha, tau, hbar, schedule)
    last = rows[-1]
    a = float(alpha)

    if pred.regime is Regime.ZENO:
        gap = abs(1.0 - last.p)
        monotone = all(rows[i + 1].p >= rows[i].p - 1e-12 for i in range(len(rows) - 1))
        if pred.zeno_time is not None and math.isfinite(pred.zeno_time) and a < 0.5:
            bound = 2.0 * tau * tau / (pred.zeno_time ** 2 * last.N ** (1.0 - 2.0 * a))
        else:
            bound = 0.0
        agree = monotone and gap <= max(bound, 1e-12)
        notes = "survival freezes: gap tracked against 2 tau^2 / (tz^2 N^(1-2 alpha))"
        return VerificationReport(pred, rows, gap, agree, notes)

    if pred.regime is Regime.GAUSSIAN:
        gap = abs(last.p - pred.limit)
        return VerificationReport(pred, rows, gap, gap <= GAUSSIAN_VERIFY_TOL,
                                  f"threshold law within {GAUSSIAN_VERIFY_TOL}")

    if pred.regime is Regime.CLASSICAL:
        gap = last.p
        threshold = DECAY_VERIFY_LOG
        if (pred.zeno_time is not None and math.isfinite(pred.zeno_time)
                and 0.5 < a < 1.0):
            # decay-law envelope with a 10x safety factor, in log domain
            log_bound = math.log(10.0) - tau * tau * last.N ** (2.0 * a - 1.0) / (
                2.0 * pred.zeno_time ** 2)
            threshold = max(threshold, log_bound)
        agree = last.log_p <= threshold
        return VerificationReport(pred, rows, gap, agree,
                                  "decay checked in the log domain against the quadratic envelope")

    if pred.regime is Regime.LATTICE:
        if pred.limit == 1.0:
            gap = max(abs(1.0 - r.p) for r in rows)
            return VerificationReport(pred, rows, gap, gap <= LATTICE_TOL,
                                      "on-lattice tau: p must equal 1 at every N")
        gap = last.p
        return VerificationReport(pred, rows, gap, last.log_p <= DECAY_VERIFY_LOG,
                                  "off-lattice tau: product must die")

    if pred.regime is Regime.RECURRENT:
        n2 = pred.subsequence_power
        m_max = max(1, int(round(schedule[-1] ** (1.0 / n2))))
        while (m_max + 1) ** n2 <= schedule[-1]:
            m_max += 1
        while m_max ** n2 > schedule[-1]:
            m_max -= 1
        sub = _evaluate_schedule(measure, alpha, tau, hbar,
                                 [m ** n2 for m in range(1, m_max + 1)])
        gap = max(abs(1.0 - r.p) for r in sub)
        agree = gap <= LATTICE_TOL
        return VerificationReport(pred, rows + sub, gap, agree,
                                  f"recurrence along N = m**{n2} up to m = {m_max}")

    if pred.regime is Regime.AE_ZERO:
        agree = last.log_p <= AE_ZERO_VERIFY_LOG
        return VerificationReport(
            pred, rows, last.p, agree,
            "pointwise spot check of an almost-everywhere statement: "
            "failures at exceptional tau are expected")

    return VerificationReport(pred, rows, None, True,
                              "no covered regime: evaluations reported without a verdict")
