"""Point-measure convolution against enumeration oracles and the
characteristic-function power identity."""
import itertools
import math
from fractions import Fraction

import numpy as np
import pytest

import zenoscale as z


def test_identity_element(qubit):
    delta = z.pure_point([(0.0, 1.0)])
    out = z.convolve_pp(qubit, delta)
    assert out == qubit
    assert z.convolve_pp(delta, qubit) == qubit


def test_binomial_square():
    coin = z.pure_point([(0.0, 0.5), (1.0, 0.5)])
    out = z.self_convolve(coin, 2)
    assert [a.energy for a in out.atoms] == [0.0, 1.0, 2.0]
    assert [a.weight for a in out.atoms] == [0.25, 0.5, 0.25]


def test_binomial_cube():
    coin = z.pure_point([(0.0, 0.5), (1.0, 0.5)])
    out = z.self_convolve(coin, 3)
    assert [a.energy for a in out.atoms] == [0.0, 1.0, 2.0, 3.0]
    assert [a.weight for a in out.atoms] == pytest.approx(
        [0.125, 0.375, 0.375, 0.125], abs=1e-15)


def test_multinomial_enumeration_oracle():
    energies = [0.0, 1.0, 3.5]
    weights = [0.2, 0.5, 0.3]
    m = z.pure_point(list(zip(energies, weights)))
    out = z.self_convolve(m, 3)

    table = {}
    for combo in itertools.product(range(3), repeat=3):
        e = sum(energies[i] for i in combo)
        w = math.prod(weights[i] for i in combo)
        table[round(e, 9)] = table.get(round(e, 9), 0.0) + w

    assert len(out.atoms) == len(table)
    for atom in out.atoms:
        assert atom.weight == pytest.approx(table[round(atom.energy, 9)], abs=1e-14)


def test_mass_mean_variance_additivity():
    rng = np.random.default_rng(11)
    for _ in range(5):
        e1 = np.sort(rng.uniform(-2.0, 2.0, 3))
        e2 = np.sort(rng.uniform(-2.0, 2.0, 4))
        w1 = rng.uniform(0.1, 1.0, 3)
        w2 = rng.uniform(0.1, 1.0, 4)
        mu = z.pure_point(list(zip(map(float, e1), map(float, w1 / w1.sum()))))
        nu = z.pure_point(list(zip(map(float, e2), map(float, w2 / w2.sum()))))
        out = z.convolve_pp(mu, nu)
        assert sum(a.weight for a in out.atoms) == pytest.approx(1.0, abs=1e-12)
        assert z.mean(out) == pytest.approx(z.mean(mu) + z.mean(nu), abs=1e-10)
        assert z.variance(out) == pytest.approx(z.variance(mu) + z.variance(nu), abs=1e-10)


def test_self_convolve_scales_moments(three_atom):
    out = z.self_convolve(three_atom, 5)
    assert z.mean(out) == pytest.approx(5.0 * z.mean(three_atom), rel=1e-12)
    assert z.variance(out) == pytest.approx(5.0 * z.variance(three_atom), rel=1e-12)


def test_self_convolve_one_is_identity(qubit):
    assert z.self_convolve(qubit, 1) == qubit


@pytest.mark.parametrize("n", [0, -1, 2.0, True])
def test_self_convolve_rejects_bad_counts(n, qubit):
    with pytest.raises(ValueError):
        z.self_convolve(qubit, n)


def test_power_identity_seeded_random():
    rng = np.random.default_rng(8)
    for i in range(12):
        r = int(rng.integers(2, 5))
        energies = np.sort(rng.uniform(-3.0, 3.0, r))
        weights = rng.uniform(0.1, 1.0, r)
        weights = weights / weights.sum()
        mu = z.pure_point(list(zip(map(float, energies), map(float, weights))))
        n = int(rng.integers(1, 9))
        alpha = Fraction(1) if i % 2 == 0 else Fraction(3, 2)
        worst = z.verify_powers_equal_convolution(mu, n, np.linspace(-8.0, 8.0, 32), alpha)
        assert worst <= 1e-10


def test_power_identity_with_hbar(qubit):
    worst = z.verify_powers_equal_convolution(qubit, 4, [0.5, 1.5, 4.0],
                                              Fraction(3, 2), hbar=2.0)
    assert worst <= 1e-12


def test_atom_budget_guard():
    energies = np.arange(4000) * math.pi / 1000.0
    weights = np.full(4000, 1.0 / 4000.0)
    big = z.pure_point(list(zip(map(float, energies), map(float, weights))))
    with pytest.raises(z.AtomBudgetExceeded):
        z.convolve_pp(big, big)


def test_atom_budget_guard_in_powers():
    # the 32nd power holds ~6.5e3 atoms, so squaring it asks for ~4.3e7
    # cross pairs and must hit the budget before allocating them
    m = z.pure_point([(0.0, 0.25), (1.0, 0.25), (math.e, 0.25), (math.pi, 0.25)])
    with pytest.raises(z.AtomBudgetExceeded):
        z.self_convolve(m, 64)
