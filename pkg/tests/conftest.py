import pytest

from valpoincare import AmbientSpace, Instance, MonomialPoly, ValuationSet


@pytest.fixture
def c2():
    return AmbientSpace.affine(2)


@pytest.fixture
def coords(c2):
    """Coordinate valuations on C^2: neither is centered at the maximal ideal."""
    return Instance(c2, ValuationSet([(1, 0), (0, 1)]))


@pytest.fixture
def centered(c2):
    return Instance(c2, ValuationSet([(1, 1), (1, 2)]))


def poly(*terms):
    return MonomialPoly.from_terms(terms)
