import pytest

from h4geom.embed import certify_e8, decompose_norm4_shell, golden_basis, lattice_L
from h4geom.mod2 import f4_geometry
from h4geom.polytopes import the_600cell
from h4geom.symmetry import generate_group


@pytest.fixture(scope="session")
def cell():
    return the_600cell()


@pytest.fixture(scope="session")
def group():
    return generate_group()


@pytest.fixture(scope="session")
def e8():
    return certify_e8(-1)


@pytest.fixture(scope="session")
def e8_plus():
    return certify_e8(1)


@pytest.fixture(scope="session")
def geo():
    return f4_geometry()


@pytest.fixture(scope="session")
def gb():
    return golden_basis()


@pytest.fixture(scope="session")
def lat_l():
    return lattice_L()


@pytest.fixture(scope="session")
def shell_classes():
    return decompose_norm4_shell()
