from fractions import Fraction
from itertools import product

import pytest

from polyscribe.corpus import named_coordinates, named_polytope
from polyscribe.points import PointConfiguration, SphereRef


@pytest.fixture(scope="session")
def cube_map():
    return named_polytope("cube")


@pytest.fixture(scope="session")
def triakis_map():
    return named_polytope("triakis-tetrahedron")


@pytest.fixture(scope="session")
def tetra_points():
    pts, r2 = named_coordinates("tetrahedron")
    return PointConfiguration(3, tuple(pts),
                              SphereRef((Fraction(0),) * 3, r2))


@pytest.fixture(scope="session")
def cube_points():
    pts = tuple(tuple(Fraction(c) for c in p) for p in product((-1, 1), repeat=3))
    return PointConfiguration(3, pts, SphereRef((Fraction(0),) * 3, Fraction(3)))
