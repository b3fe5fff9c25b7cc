import pytest
from hypothesis import settings

import zenoscale as z

settings.register_profile("suite", max_examples=40, deadline=None)
settings.load_profile("suite")


@pytest.fixture
def qubit():
    """Two equal atoms one unit apart: p(t) = cos(t/2)^2, zeno time 2."""
    return z.pure_point([(0.0, 0.5), (1.0, 0.5)])


@pytest.fixture
def three_atom():
    """Equal atoms at 0, 2, 6: fundamental gap 2, first return time pi."""
    w = 1.0 / 3.0
    return z.pure_point([(0.0, w), (2.0, w), (6.0, w)])


@pytest.fixture
def unit_gaussian():
    return z.gaussian(0.0, 1.0)


@pytest.fixture
def unit_lorentzian():
    return z.lorentzian(0.0, 1.0)


@pytest.fixture
def uniform01():
    return z.uniform(0.0, 1.0)


@pytest.fixture
def cantor_unit():
    return z.cantor()
