import pytest

from pygpa.algebra.groups import cyclic_group
from pygpa.semigroup.semigroups import brandt_semigroup, chain_semilattice, group_semigroup, \
    validate_inverse_semigroup


@pytest.fixture(scope='package')
def b2():
    # 0 is the zero, 1..4 are E11, E12, E21, E22
    return brandt_semigroup()


@pytest.fixture(scope='package')
def chain2():
    return chain_semilattice(2)


@pytest.fixture(scope='package')
def c2_semigroup():
    return group_semigroup(cyclic_group(2))


@pytest.fixture(scope='package')
def boolean8():
    # subsets of a 3-element set under intersection
    return validate_inverse_semigroup([[a & b for b in range(8)] for a in range(8)])
