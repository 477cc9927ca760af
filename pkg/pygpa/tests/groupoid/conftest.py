import pytest

from pygpa.algebra.groups import cyclic_group
from pygpa.groupoid.groupoids import pair_groupoid, group_groupoid, disjoint_union, action_groupoid


@pytest.fixture(scope='package')
def pair2():
    # arrows: 0 = id_0, 1: 1 -> 0, 2: 0 -> 1, 3 = id_1
    return pair_groupoid(2)


@pytest.fixture(scope='package')
def c2_object():
    # arrows: 0 = e, 1 = a
    return group_groupoid(cyclic_group(2))


@pytest.fixture(scope='package')
def two_points():
    return disjoint_union(pair_groupoid(1), pair_groupoid(1))


@pytest.fixture(scope='package')
def two_groups():
    return disjoint_union(group_groupoid(cyclic_group(2)), group_groupoid(cyclic_group(3)))


@pytest.fixture(scope='package')
def pair_and_c2():
    return disjoint_union(pair_groupoid(2), group_groupoid(cyclic_group(2)))


@pytest.fixture(scope='package')
def swap():
    return action_groupoid(cyclic_group(2), ['p', 'q'], [[0, 1], [1, 0]])


@pytest.fixture
def pair2_data():
    return {'objects': 2,
            'arrows': [{'src': 0, 'dst': 0}, {'src': 1, 'dst': 0}, {'src': 0, 'dst': 1}, {'src': 1, 'dst': 1}],
            'compose': [[0, 1, None, None],
                        [None, None, 0, 1],
                        [2, 3, None, None],
                        [None, None, 2, 3]]}
