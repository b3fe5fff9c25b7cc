"""Convolution of pure point spectral measures.

The N-fold self-convolution of a point measure is the spectral measure of a
sum of N independent copies, and its characteristic function is the N-th
power of the original one.  That identity is what makes repeated-measurement
products computable one amplitude at a time, and checking it numerically is
a strong end-to-end test of the amplitude code.
"""
from __future__ import annotations

import numpy as np

from .engine import scaling_power, Exponent
from .errors import AtomBudgetExceeded
from .measures import (
    EnergyAtom,
    PurePointMeasure,
    _merge_sorted_atoms,
    ATOM_MERGE_TOL,
    char_fn,
    scale_measure,
    validate,
)

ATOM_BUDGET = 10 ** 7


def convolve_pp(mu: PurePointMeasure, nu: PurePointMeasure) -> PurePointMeasure:
    """Convolution of two point measures: atoms at all pairwise energy sums,
    weights multiplied, coincident sums merged."""
    mu = validate(mu)
    nu = validate(nu)
    if len(mu.atoms) * len(nu.atoms) > ATOM_BUDGET:
        raise AtomBudgetExceeded(
            f"convolution would create {len(mu.atoms) * len(nu.atoms)} atoms "
            f"before merging (budget {ATOM_BUDGET})")
    e1 = np.array([a.energy for a in mu.atoms])
    w1 = np.array([a.weight for a in mu.atoms])
    e2 = np.array([a.energy for a in nu.atoms])
    w2 = np.array([a.weight for a in nu.atoms])
    energies = (e1[:, None] + e2[None, :]).ravel()
    weights = (w1[:, None] * w2[None, :]).ravel()
    order = np.argsort(energies, kind="stable")
    energies, weights = _merge_sorted_atoms(energies[order], weights[order], ATOM_MERGE_TOL)
    # weights already sum to 1 within N * 1e-12 by construction: do not renormalize
    return PurePointMeasure(tuple(EnergyAtom(float(e), float(w))
                                  for e, w in zip(energies, weights)))


def self_convolve(mu: PurePointMeasure, N: int) -> PurePointMeasure:
    """N-fold self-convolution by binary powering, merging after every step."""
    if not isinstance(N, int) or isinstance(N, bool) or N < 1:
        raise ValueError(f"N must be an integer >= 1, got {N!r}")
    mu = validate(mu)
    result = None
    base = mu
    n = N
    while n > 0:
        if n & 1:
            result = base if result is None else convolve_pp(result, base)
        n >>= 1
        if n > 0:
            base = convolve_pp(base, base)
    return result


def verify_powers_equal_convolution(
    mu: PurePointMeasure,
    N: int,
    tau_grid,
    alpha: Exponent,
    hbar: float = 1.0,
) -> float:
    """Max over the tau grid of |A_scaled(tau)^N - A_conv(tau)| where the
    scaled measure has energies multiplied by N**(alpha-1) and A_conv is the
    characteristic function of its N-fold self-convolution."""
    scaled = scale_measure(validate(mu), scaling_power(N, alpha))
    conv = self_convolve(scaled, N)
    worst = 0.0
    for tau in tau_grid:
        t = float(tau)
        lhs = char_fn(scaled, t, hbar) ** N
        rhs = char_fn(conv, t, hbar)
        worst = max(worst, abs(lhs - rhs))
    return worst
