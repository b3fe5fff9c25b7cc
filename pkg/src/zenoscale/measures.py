"""Spectral measures on the energy axis and their characteristic functions.

Every computation in this package sees the quantum state only through its
spectral measure: a Borel probability measure mu on the real energy axis.
The survival amplitude after an evolution time t is the characteristic
function of that measure,

    A(t) = integral of exp(-i t lam / hbar) dmu(lam),

and the survival probability is |A(t)|^2.  Because repeated-measurement
products raise probabilities to enormous powers, the quantity that actually
matters downstream is not A(t) but its deficit A(t) - 1, which this module
computes without cancellation for every supported family.  Near p = 1 that
is the difference between 1e-14 relative accuracy and garbage.

Supported families: finite pure-point measures, four absolutely continuous
families (gaussian, lorentzian, uniform, tabulated-density), the
middle-thirds Cantor measure (singular continuous), and finite mixtures.
Measures are immutable after validation; all functions here are pure.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Union

import numpy as np

from .errors import (
    EmptyMeasure,
    InvalidMeasure,
    NegativeDensity,
    NonNormalized,
    QuadratureFailure,
)

# Validation tolerances.
ATOM_MERGE_TOL = 1e-12       # atoms closer than this merge into one
WEIGHT_SUM_TOL = 1e-12       # |sum of weights - 1| beyond this is an error
RENORM_SKIP_TOL = 1e-13      # below this the mass defect is left untouched
DENSITY_NORM_TOL = 1e-9      # tabulated densities must integrate to 1 this well

# Evaluation tolerances.
AMPLITUDE_TOL = 1e-12        # |A(t)| may exceed 1 by at most this
QUAD_TARGET = 1e-10          # successive quadrature refinements must agree this well
QUAD_NODE_BUDGET = 2 ** 22   # hard cap on quadrature nodes per evaluation
GL_NODES_PER_PANEL = 8       # >= 8 nodes per oscillation period
CANTOR_DEFAULT_DEPTH = 40
CANTOR_TRUNCATION_TOL = 1e-9


@dataclass(frozen=True)
class EnergyAtom:
    """A single eigenvalue with its spectral weight, weight in (0, 1]."""

    energy: float
    weight: float


@dataclass(frozen=True)
class PurePointMeasure:
    """Finite sum of weighted Dirac atoms, energies strictly increasing."""

    atoms: tuple[EnergyAtom, ...]


@dataclass(frozen=True)
class GaussianMeasure:
    mean: float
    sigma: float


@dataclass(frozen=True)
class LorentzianMeasure:
    """Cauchy line shape gamma/pi / ((lam - center)^2 + gamma^2).

    Has no finite moments: ``mean`` reports the principal value (the center)
    and ``variance`` reports +inf.
    """

    center: float
    gamma: float


@dataclass(frozen=True)
class UniformMeasure:
    a: float
    b: float


@dataclass(frozen=True)
class TabulatedMeasure:
    """Piecewise-linear density on a strictly increasing grid.

    The density between nodes is the linear interpolant, so the normalization
    integral is exactly the trapezoid rule on the grid.
    """

    grid: tuple[float, ...]
    density: tuple[float, ...]


@dataclass(frozen=True)
class CantorMeasure:
    """Middle-thirds Cantor measure pushed onto [offset, offset + scale].

    The characteristic function is the phase exp(-i t (offset + scale/2)/hbar)
    times the cosine product over cos(scale * t / (3^k hbar)); ``depth``
    truncates that product, with truncation error at most
    |t| * scale * 3^(-depth) / hbar (checked at evaluation time).
    """

    offset: float = 0.0
    scale: float = 1.0
    depth: int = CANTOR_DEFAULT_DEPTH


@dataclass(frozen=True)
class Mixture:
    """Convex combination of component measures; weights sum to 1."""

    components: tuple[tuple[float, "SpectralMeasure"], ...]


SpectralMeasure = Union[
    PurePointMeasure,
    GaussianMeasure,
    LorentzianMeasure,
    UniformMeasure,
    TabulatedMeasure,
    CantorMeasure,
    Mixture,
]

_AC_FAMILIES = (GaussianMeasure, LorentzianMeasure, UniformMeasure, TabulatedMeasure)


class SpectralType(str, Enum):
    PURE_POINT = "pp"
    ABSOLUTELY_CONTINUOUS = "ac"
    SINGULAR_CONTINUOUS = "sc"
    MIXED = "mixed"


def _require_finite(name, value):
    if not isinstance(value, (int, float)) or isinstance(value, bool) or not math.isfinite(value):
        raise InvalidMeasure(f"{name} must be a finite real number, got {value!r}")
    return float(value)


def _merge_sorted_atoms(energies, weights, tol=ATOM_MERGE_TOL):
    """Merge consecutive atoms closer than ``tol``; energies must be sorted.

    Merged atoms take the weight-averaged energy and the summed weight.
    """
    energies = np.asarray(energies, dtype=float)
    weights = np.asarray(weights, dtype=float)
    if len(energies) == 1:
        return energies, weights
    new_group = np.empty(len(energies), dtype=bool)
    new_group[0] = True
    new_group[1:] = np.diff(energies) > tol
    idx = np.flatnonzero(new_group)
    w = np.add.reduceat(weights, idx)
    e = np.add.reduceat(energies * weights, idx) / w
    return e, w


def validate(measure: SpectralMeasure) -> SpectralMeasure:
    """Check invariants and return the canonical form of ``measure``.

    Canonicalization sorts and merges pure-point atoms, renormalizes total
    mass when it is off by more than 1e-13 (off by more than 1e-12 is an
    error, not a fix), and rescales tabulated densities to unit integral.
    Idempotent: validating a canonical measure returns it bit-for-bit.
    """
    if isinstance(measure, PurePointMeasure):
        if not measure.atoms:
            raise EmptyMeasure("pure-point measure has no atoms")
        energies, weights = [], []
        for atom in measure.atoms:
            e = _require_finite("atom energy", atom.energy)
            w = _require_finite("atom weight", atom.weight)
            if w <= 0.0:
                raise NegativeDensity(f"atom weight must be positive, got {w}")
            energies.append(e)
            weights.append(w)
        order = np.argsort(energies, kind="stable")
        e, w = _merge_sorted_atoms(np.asarray(energies)[order], np.asarray(weights)[order])
        total = float(w.sum())
        if abs(total - 1.0) > WEIGHT_SUM_TOL:
            raise NonNormalized(f"atom weights sum to {total!r}, expected 1")
        if abs(total - 1.0) > RENORM_SKIP_TOL:
            w = w / total
        if np.any(w > 1.0 + WEIGHT_SUM_TOL):
            raise NonNormalized("an atom carries weight above 1")
        atoms = tuple(EnergyAtom(float(ei), float(wi)) for ei, wi in zip(e, w))
        return PurePointMeasure(atoms)

    if isinstance(measure, GaussianMeasure):
        mean = _require_finite("mean", measure.mean)
        sigma = _require_finite("sigma", measure.sigma)
        if sigma <= 0.0:
            raise NegativeDensity(f"sigma must be positive, got {sigma}")
        return GaussianMeasure(mean, sigma)

    if isinstance(measure, LorentzianMeasure):
        center = _require_finite("center", measure.center)
        gamma = _require_finite("gamma", measure.gamma)
        if gamma <= 0.0:
            raise NegativeDensity(f"gamma must be positive, got {gamma}")
        return LorentzianMeasure(center, gamma)

    if isinstance(measure, UniformMeasure):
        a = _require_finite("a", measure.a)
        b = _require_finite("b", measure.b)
        if not a < b:
            raise EmptyMeasure(f"uniform support [{a}, {b}] is empty")
        return UniformMeasure(a, b)

    if isinstance(measure, TabulatedMeasure):
        grid = np.asarray([_require_finite("grid node", g) for g in measure.grid], dtype=float)
        dens = np.asarray([_require_finite("density value", d) for d in measure.density], dtype=float)
        if grid.size < 2:
            raise EmptyMeasure("tabulated measure needs at least two grid nodes")
        if grid.size != dens.size:
            raise InvalidMeasure("grid and density lengths differ")
        if np.any(np.diff(grid) <= 0.0):
            raise InvalidMeasure("grid must be strictly increasing")
        if np.any(dens < 0.0):
            raise NegativeDensity("tabulated density has negative values")
        integral = float(np.trapezoid(dens, grid))
        if abs(integral - 1.0) > DENSITY_NORM_TOL:
            raise NonNormalized(f"tabulated density integrates to {integral!r}, expected 1")
        if abs(integral - 1.0) > RENORM_SKIP_TOL:
            dens = dens / integral
        return TabulatedMeasure(tuple(float(g) for g in grid), tuple(float(d) for d in dens))

    if isinstance(measure, CantorMeasure):
        offset = _require_finite("offset", measure.offset)
        scale = _require_finite("scale", measure.scale)
        if scale <= 0.0:
            raise NegativeDensity(f"scale must be positive, got {scale}")
        if not isinstance(measure.depth, int) or isinstance(measure.depth, bool) or measure.depth < 1:
            raise InvalidMeasure(f"depth must be an integer >= 1, got {measure.depth!r}")
        return CantorMeasure(offset, scale, measure.depth)

    if isinstance(measure, Mixture):
        if not measure.components:
            raise EmptyMeasure("mixture has no components")
        weights, comps = [], []
        for entry in measure.components:
            weight, comp = entry
            w = _require_finite("mixture weight", weight)
            if w <= 0.0:
                raise NegativeDensity(f"mixture weight must be positive, got {w}")
            weights.append(w)
            comps.append(validate(comp))
        total = sum(weights)
        if abs(total - 1.0) > WEIGHT_SUM_TOL:
            raise NonNormalized(f"mixture weights sum to {total!r}, expected 1")
        if abs(total - 1.0) > RENORM_SKIP_TOL:
            weights = [w / total for w in weights]
        return Mixture(tuple(zip(map(float, weights), comps)))

    raise InvalidMeasure(f"not a spectral measure: {measure!r}")


# -- convenience constructors (validated) ------------------------------------

def pure_point(atoms) -> PurePointMeasure:
    """Build a validated pure-point measure from (energy, weight) pairs."""
    return validate(PurePointMeasure(tuple(EnergyAtom(e, w) for e, w in atoms)))


def gaussian(mean: float, sigma: float) -> GaussianMeasure:
    return validate(GaussianMeasure(mean, sigma))


def lorentzian(center: float, gamma: float) -> LorentzianMeasure:
    return validate(LorentzianMeasure(center, gamma))


def uniform(a: float, b: float) -> UniformMeasure:
    return validate(UniformMeasure(a, b))


def tabulated(grid, density) -> TabulatedMeasure:
    return validate(TabulatedMeasure(tuple(grid), tuple(density)))


def cantor(offset: float = 0.0, scale: float = 1.0, depth: int = CANTOR_DEFAULT_DEPTH) -> CantorMeasure:
    return validate(CantorMeasure(offset, scale, depth))


def mixture(components) -> Mixture:
    return validate(Mixture(tuple((w, m) for w, m in components)))


# -- characteristic function --------------------------------------------------

def _damped_phase_deficit(x: float, y: float) -> complex:
    """exp(x + i y) - 1 without cancellation, for x <= 0."""
    re = math.expm1(x) * math.cos(y) - 2.0 * math.sin(0.5 * y) ** 2
    im = math.exp(x) * math.sin(y)
    return complex(re, im)


def _sincm1(x: float) -> float:
    """sin(x)/x - 1, accurate through x = 0."""
    if abs(x) < 0.5:
        # Taylor series of sinc; the last kept term is ~4e-17 at |x| = 0.5.
        x2 = x * x
        return x2 * (-1.0 / 6.0 + x2 * (1.0 / 120.0 + x2 * (-1.0 / 5040.0 + x2 * (
            1.0 / 362880.0 + x2 * (-1.0 / 39916800.0 + x2 * (
                1.0 / 6227020800.0 - x2 / 1307674368000.0))))))
    return math.sin(x) / x - 1.0


def _pp_deficit(measure: PurePointMeasure, t: float, hbar: float) -> complex:
    energies = np.fromiter((a.energy for a in measure.atoms), dtype=float, count=len(measure.atoms))
    weights = np.fromiter((a.weight for a in measure.atoms), dtype=float, count=len(measure.atoms))
    theta = (t / hbar) * energies
    re = -2.0 * np.sin(0.5 * theta) ** 2
    im = -np.sin(theta)
    return complex(float(np.dot(weights, re)), float(np.dot(weights, im)))


def _uniform_deficit(measure: UniformMeasure, t: float, hbar: float) -> complex:
    x = t * (measure.b - measure.a) / (2.0 * hbar)
    phi = -t * (measure.a + measure.b) / (2.0 * hbar)
    sm1 = _sincm1(x)
    s = 1.0 + sm1
    re = sm1 - 2.0 * s * math.sin(0.5 * phi) ** 2
    im = s * math.sin(phi)
    return complex(re, im)


def cantor_truncation_bound(measure: CantorMeasure, t: float, hbar: float = 1.0) -> float:
    """Upper bound on the truncation error of the depth-limited cosine product."""
    return abs(t) * measure.scale * 3.0 ** (-measure.depth) / hbar


def _cantor_deficit(measure: CantorMeasure, t: float, hbar: float) -> complex:
    bound = cantor_truncation_bound(measure, t, hbar)
    if bound > CANTOR_TRUNCATION_TOL:
        raise QuadratureFailure(
            f"Cantor truncation error bound {bound:.3e} exceeds {CANTOR_TRUNCATION_TOL};"
            f" increase depth (currently {measure.depth})"
        )
    r = measure.scale * t / hbar
    theta = r / np.power(3.0, np.arange(1, measure.depth + 1))
    if abs(r) < 1.5:
        # all |theta_k| < 0.5: every cosine is positive, use the log1p route
        log_terms = np.log1p(-2.0 * np.sin(0.5 * theta) ** 2)
        pm1 = math.expm1(float(log_terms.sum()))
        prod = 1.0 + pm1
    else:
        prod = float(np.prod(np.cos(theta)))
        pm1 = prod - 1.0
    phi = -t * (measure.offset + 0.5 * measure.scale) / hbar
    re = pm1 - 2.0 * prod * math.sin(0.5 * phi) ** 2
    im = prod * math.sin(phi)
    return complex(re, im)


_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(GL_NODES_PER_PANEL)


def _tabulated_deficit(measure: TabulatedMeasure, t: float, hbar: float) -> complex:
    """Oscillation-resolving composite Gauss-Legendre quadrature of (e^{-it lam/hbar}-1) rho.

    Panels are aligned with the density's grid segments and sized so each
    oscillation period of the integrand receives at least GL_NODES_PER_PANEL
    nodes; panel counts double until two successive refinements agree within
    QUAD_TARGET, subject to the global node budget.
    """
    if t == 0.0:
        return 0j
    grid = np.asarray(measure.grid, dtype=float)
    dens = np.asarray(measure.density, dtype=float)
    seg_len = np.diff(grid)
    period = 2.0 * math.pi * hbar / abs(t)
    base = np.maximum(1, np.ceil(seg_len / period)).astype(np.int64)

    prev = None
    refine = 1
    while True:
        counts = base * refine
        total_nodes = GL_NODES_PER_PANEL * int(counts.sum())
        if total_nodes > QUAD_NODE_BUDGET:
            raise QuadratureFailure(
                f"quadrature needs {total_nodes} nodes, budget is {QUAD_NODE_BUDGET}"
                f" (|t|/hbar = {abs(t) / hbar:.3e}, support length"
                f" {float(grid[-1] - grid[0]):.3e})"
            )
        widths = np.repeat(seg_len / counts, counts)
        offsets = np.arange(int(counts.sum())) - np.repeat(np.cumsum(counts) - counts, counts)
        lo = np.repeat(grid[:-1], counts) + widths * offsets
        lam = (lo[:, None] + widths[:, None] * 0.5 * (_GL_NODES[None, :] + 1.0)).ravel()
        quad_w = (0.5 * widths[:, None] * _GL_WEIGHTS[None, :]).ravel()
        rho = np.interp(lam, grid, dens)
        theta = (t / hbar) * lam
        re = float(np.sum(quad_w * rho * (-2.0 * np.sin(0.5 * theta) ** 2)))
        im = float(np.sum(quad_w * rho * (-np.sin(theta))))
        value = complex(re, im)
        if prev is not None and abs(value - prev) <= QUAD_TARGET * max(1.0, abs(value)):
            return value
        prev = value
        refine *= 2


def amplitude_deficit(measure: SpectralMeasure, t: float, hbar: float = 1.0) -> complex:
    """Return A(t) - 1 computed without cancellation; exactly 0 at t = 0."""
    if hbar <= 0.0:
        raise ValueError(f"hbar must be positive, got {hbar}")
    if isinstance(measure, PurePointMeasure):
        return _pp_deficit(measure, t, hbar)
    if isinstance(measure, GaussianMeasure):
        x = -0.5 * (measure.sigma * t / hbar) ** 2
        y = -measure.mean * t / hbar
        return _damped_phase_deficit(x, y)
    if isinstance(measure, LorentzianMeasure):
        x = -measure.gamma * abs(t) / hbar
        y = -measure.center * t / hbar
        return _damped_phase_deficit(x, y)
    if isinstance(measure, UniformMeasure):
        return _uniform_deficit(measure, t, hbar)
    if isinstance(measure, CantorMeasure):
        return _cantor_deficit(measure, t, hbar)
    if isinstance(measure, TabulatedMeasure):
        return _tabulated_deficit(measure, t, hbar)
    if isinstance(measure, Mixture):
        return sum((w * amplitude_deficit(comp, t, hbar) for w, comp in measure.components),
                   start=0j)
    raise TypeError(f"not a spectral measure: {measure!r}")


def char_fn(measure: SpectralMeasure, t: float, hbar: float = 1.0) -> complex:
    """Survival amplitude A(t); |A| <= 1 + 1e-12 is enforced, A(0) = 1 exactly."""
    value = 1.0 + amplitude_deficit(measure, t, hbar)
    if abs(value) > 1.0 + AMPLITUDE_TOL:
        raise QuadratureFailure(f"|A({t})| = {abs(value)!r} exceeds 1 + {AMPLITUDE_TOL}")
    return value


# -- moments ------------------------------------------------------------------

_GL3_NODES, _GL3_WEIGHTS = np.polynomial.legendre.leggauss(3)


def _tabulated_raw_moments(measure: TabulatedMeasure):
    # 3-point Gauss-Legendre per segment is exact: integrands are cubics.
    grid = np.asarray(measure.grid, dtype=float)
    dens = np.asarray(measure.density, dtype=float)
    lo, hi = grid[:-1], grid[1:]
    lam = 0.5 * (hi - lo)[:, None] * (_GL3_NODES[None, :] + 1.0) + lo[:, None]
    w = 0.5 * (hi - lo)[:, None] * _GL3_WEIGHTS[None, :]
    rho = np.interp(lam.ravel(), grid, dens).reshape(lam.shape)
    m1 = float(np.sum(w * rho * lam))
    m2 = float(np.sum(w * rho * lam * lam))
    return m1, m2


def mean(measure: SpectralMeasure) -> float:
    """First moment; for the lorentzian family this is the principal value."""
    if isinstance(measure, PurePointMeasure):
        return float(sum(a.weight * a.energy for a in measure.atoms))
    if isinstance(measure, GaussianMeasure):
        return measure.mean
    if isinstance(measure, LorentzianMeasure):
        return measure.center
    if isinstance(measure, UniformMeasure):
        return 0.5 * (measure.a + measure.b)
    if isinstance(measure, CantorMeasure):
        return measure.offset + 0.5 * measure.scale
    if isinstance(measure, TabulatedMeasure):
        return _tabulated_raw_moments(measure)[0]
    if isinstance(measure, Mixture):
        return float(sum(w * mean(comp) for w, comp in measure.components))
    raise TypeError(f"not a spectral measure: {measure!r}")


def variance(measure: SpectralMeasure) -> float:
    """Second central moment; +inf for families without one (lorentzian)."""
    if isinstance(measure, PurePointMeasure):
        mu = mean(measure)
        return float(sum(a.weight * (a.energy - mu) ** 2 for a in measure.atoms))
    if isinstance(measure, GaussianMeasure):
        return measure.sigma ** 2
    if isinstance(measure, LorentzianMeasure):
        return math.inf
    if isinstance(measure, UniformMeasure):
        return (measure.b - measure.a) ** 2 / 12.0
    if isinstance(measure, CantorMeasure):
        # variance of the middle-thirds Cantor distribution on [0, 1] is 1/8
        return measure.scale ** 2 / 8.0
    if isinstance(measure, TabulatedMeasure):
        m1, m2 = _tabulated_raw_moments(measure)
        return max(m2 - m1 * m1, 0.0)
    if isinstance(measure, Mixture):
        # law of total variance
        parts = [(w, mean(comp), variance(comp)) for w, comp in measure.components]
        if any(math.isinf(v) for _, _, v in parts):
            return math.inf
        mu = sum(w * m for w, m, _ in parts)
        return float(sum(w * (v + (m - mu) ** 2) for w, m, v in parts))
    raise TypeError(f"not a spectral measure: {measure!r}")


def zeno_time(measure: SpectralMeasure, hbar: float = 1.0):
    """hbar / sqrt(variance): +inf for eigenstates, None when variance is infinite.

    None marks the "no Zeno time exists" case (infinite energy spread); the
    state can still be evolved, but quadratic-decay predictions do not apply.
    """
    if hbar <= 0.0:
        raise ValueError(f"hbar must be positive, got {hbar}")
    var = variance(measure)
    if math.isinf(var):
        return None
    if var == 0.0:
        return math.inf
    return hbar / math.sqrt(var)


# -- transformations ----------------------------------------------------------

def scale_measure(measure: SpectralMeasure, c: float) -> SpectralMeasure:
    """Pushforward under lam -> c * lam for c > 0: char_fn(scaled, t) = char_fn(mu, c t)."""
    if not (isinstance(c, (int, float)) and math.isfinite(c) and c > 0):
        raise ValueError(f"scale factor must be a positive finite real, got {c!r}")
    c = float(c)
    if isinstance(measure, PurePointMeasure):
        return PurePointMeasure(tuple(EnergyAtom(c * a.energy, a.weight) for a in measure.atoms))
    if isinstance(measure, GaussianMeasure):
        return GaussianMeasure(c * measure.mean, c * measure.sigma)
    if isinstance(measure, LorentzianMeasure):
        return LorentzianMeasure(c * measure.center, c * measure.gamma)
    if isinstance(measure, UniformMeasure):
        return UniformMeasure(c * measure.a, c * measure.b)
    if isinstance(measure, CantorMeasure):
        return CantorMeasure(c * measure.offset, c * measure.scale, measure.depth)
    if isinstance(measure, TabulatedMeasure):
        grid = tuple(c * g for g in measure.grid)
        dens = tuple(d / c for d in measure.density)
        return TabulatedMeasure(grid, dens)
    if isinstance(measure, Mixture):
        return Mixture(tuple((w, scale_measure(comp, c)) for w, comp in measure.components))
    raise TypeError(f"not a spectral measure: {measure!r}")


def shift_measure(measure: SpectralMeasure, a: float) -> SpectralMeasure:
    """Pushforward under lam -> lam + a; |char_fn| is invariant."""
    a = _require_finite("shift", a)
    if isinstance(measure, PurePointMeasure):
        return PurePointMeasure(tuple(EnergyAtom(atom.energy + a, atom.weight) for atom in measure.atoms))
    if isinstance(measure, GaussianMeasure):
        return GaussianMeasure(measure.mean + a, measure.sigma)
    if isinstance(measure, LorentzianMeasure):
        return LorentzianMeasure(measure.center + a, measure.gamma)
    if isinstance(measure, UniformMeasure):
        return UniformMeasure(measure.a + a, measure.b + a)
    if isinstance(measure, CantorMeasure):
        return CantorMeasure(measure.offset + a, measure.scale, measure.depth)
    if isinstance(measure, TabulatedMeasure):
        return TabulatedMeasure(tuple(g + a for g in measure.grid), measure.density)
    if isinstance(measure, Mixture):
        return Mixture(tuple((w, shift_measure(comp, a)) for w, comp in measure.components))
    raise TypeError(f"not a spectral measure: {measure!r}")


# -- classification -----------------------------------------------------------

def spectral_type(measure: SpectralMeasure) -> SpectralType:
    if isinstance(measure, PurePointMeasure):
        return SpectralType.PURE_POINT
    if isinstance(measure, _AC_FAMILIES):
        return SpectralType.ABSOLUTELY_CONTINUOUS
    if isinstance(measure, CantorMeasure):
        return SpectralType.SINGULAR_CONTINUOUS
    if isinstance(measure, Mixture):
        tags = {spectral_type(comp) for _, comp in measure.components}
        return tags.pop() if len(tags) == 1 else SpectralType.MIXED
    raise TypeError(f"not a spectral measure: {measure!r}")


def bounded_below(measure: SpectralMeasure) -> bool:
    """Whether the spectral support has a finite lower bound."""
    if isinstance(measure, (PurePointMeasure, UniformMeasure, TabulatedMeasure, CantorMeasure)):
        return True
    if isinstance(measure, (GaussianMeasure, LorentzianMeasure)):
        return False
    if isinstance(measure, Mixture):
        return all(bounded_below(comp) for _, comp in measure.components)
    raise TypeError(f"not a spectral measure: {measure!r}")


def flatten_pure_point(measure: SpectralMeasure):
    """Collapse a pure-point measure (possibly a mixture of them) to one atom list.

    Returns None when the measure has any continuous part.
    """
    if isinstance(measure, PurePointMeasure):
        return measure
    if isinstance(measure, Mixture) and spectral_type(measure) is SpectralType.PURE_POINT:
        collected = []

        def _gather(m, factor):
            if isinstance(m, PurePointMeasure):
                collected.extend((a.energy, factor * a.weight) for a in m.atoms)
            else:
                for w, comp in m.components:
                    _gather(comp, factor * w)

        _gather(measure, 1.0)
        return pure_point(collected)
    return None
