import pytest
from numpy import array

from pygpa.algebra.groups import cyclic_group, direct_product, symmetric_group, dihedral_group, quaternion_group


@pytest.fixture(scope='package')
def klein():
    c2 = cyclic_group(2)
    return direct_product(c2, c2)


@pytest.fixture(scope='package')
def s3():
    return symmetric_group(3)


@pytest.fixture(scope='package')
def d4():
    return dihedral_group(4)


@pytest.fixture(scope='package')
def q8():
    return quaternion_group()


@pytest.fixture
def odd_loop():
    # latin square with identity 0 and x * x = 0, but (1 * 2) * 4 != 1 * (2 * 4)
    return array([[0, 1, 2, 3, 4],
                  [1, 0, 3, 4, 2],
                  [2, 4, 0, 1, 3],
                  [3, 2, 4, 0, 1],
                  [4, 3, 1, 2, 0]])
