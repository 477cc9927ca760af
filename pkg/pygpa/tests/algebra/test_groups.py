"""
Testing of finite groups, normal subgroups and primeness of group algebras
"""
import pytest
from numpy import array

from pygpa.algebra.groups import *
from pygpa.algebra.rings import parse_ring
from pygpa.common import NoIdentity, NoInverse, NotAssociative


class TestValidateGroup:
    def test_cyclic(self):
        g = cyclic_group(5)
        assert g.order == 5
        assert g.identity == 0
        assert g.inverse.tolist() == [0, 4, 3, 2, 1]

    def test_identity_not_first(self):
        g = validate_group([[1, 0], [0, 1]])
        assert g.identity == 1

    def test_no_identity(self):
        with pytest.raises(NoIdentity):
            validate_group([[0, 0], [0, 0]])

    def test_no_inverse(self):
        with pytest.raises(NoInverse) as e_info:
            validate_group([[0, 1], [1, 1]])
        assert e_info.value.witness == (1,)

    def test_not_associative(self, odd_loop):
        with pytest.raises(NotAssociative) as e_info:
            validate_group(odd_loop)
        i, j, k = e_info.value.witness
        assert odd_loop[odd_loop[i, j], k] != odd_loop[i, odd_loop[j, k]]

    @pytest.mark.parametrize('table', ([], [[0, 1]], [[0, 2], [2, 0]], [[0, -1], [-1, 0]]))
    def test_malformed(self, table):
        with pytest.raises(ValueError):
            validate_group(table)

    def test_cyclic_error(self):
        with pytest.raises(ValueError):
            cyclic_group(0)


class TestGroupConstructions:
    def test_direct_product(self, klein):
        assert klein.order == 4
        assert all(klein.mul(a, a) == klein.identity for a in range(4))
        assert klein.labels[3] == (1, 1)

    def test_symmetric(self, s3):
        assert s3.order == 6
        assert s3.identity == 0
        # not abelian
        assert any(s3.mul(a, b) != s3.mul(b, a) for a in range(6) for b in range(6))

    def test_dihedral(self, d4):
        assert d4.order == 8
        assert d4.labels[d4.identity] == (0, 0)

    def test_quaternion(self, q8):
        assert q8.order == 8
        squares = {q8.mul(a, a) for a in range(8)}
        # squares are 1 and -1 only
        assert len(squares) == 2

    def test_trivial(self):
        g = trivial_group()
        assert g.is_trivial
        assert normal_subgroups(g) == [(0,)]


class TestSubgroups:
    @pytest.mark.parametrize(('name', 'n_subgroups', 'n_normal'), (
            ('klein', 5, 5),
            ('s3', 6, 3),
            ('d4', 10, 6),
            ('q8', 6, 6)))
    def test_counts(self, request, name, n_subgroups, n_normal):
        group = request.getfixturevalue(name)
        assert len(subgroups(group)) == n_subgroups
        assert len(normal_subgroups(group)) == n_normal

    @pytest.mark.parametrize('n', (1, 2, 6, 7, 12))
    def test_cyclic_subgroups(self, n):
        # one subgroup per divisor
        subs = subgroups(cyclic_group(n))
        assert sorted(len(s) for s in subs) == [d for d in range(1, n + 1) if n % d == 0]
        assert normal_subgroups(cyclic_group(n)) == subs

    def test_ends(self, s3):
        normals = normal_subgroups(s3)
        assert normals[0] == (s3.identity,)
        assert normals[-1] == tuple(range(6))

    def test_infinite_cyclic(self):
        assert finite_normal_subgroups(INFINITE_CYCLIC) == [(0,)]
        assert INFINITE_CYCLIC.order is None
        assert INFINITE_CYCLIC.to_json() == 'InfiniteCyclic'


class TestGroupAlgebras:
    @pytest.mark.parametrize(('group', 'ring', 'prime', 'semiprime'), (
            (trivial_group(), 'Q', True, True),
            (trivial_group(), 'Z/4', False, False),
            (trivial_group(), 'Z/6', False, True),
            (cyclic_group(2), 'Q', False, True),
            (cyclic_group(2), 'Z', False, True),
            (cyclic_group(2), 'Z/2', False, False),
            (cyclic_group(2), 'Z/3', False, True),
            (cyclic_group(3), 'Z/6', False, False),
            (symmetric_group(3), 'Z/5', False, True),
            (symmetric_group(3), 'Z/2', False, False),
            (INFINITE_CYCLIC, 'Z', True, True),
            (INFINITE_CYCLIC, 'Z/2', True, True),
            (INFINITE_CYCLIC, 'Z/6', False, True),
            (INFINITE_CYCLIC, 'Z/4', False, False)))
    def test_verdicts(self, group, ring, prime, semiprime):
        ring = parse_ring(ring)
        assert group_algebra_is_prime(group, ring) is prime
        assert group_algebra_is_semiprime(group, ring) is semiprime

    def test_connell_ring(self, z6):
        assert connell_obstruction(trivial_group(), z6) == {'ring': 'Z/6', 'condition': 'integral domain'}

    def test_connell_subgroup(self, rationals, s3):
        obstruction = connell_obstruction(s3, rationals)
        assert obstruction['order'] == 3
        assert (0, 1, 2) in obstruction['normal_subgroup']

    def test_passman_subgroup(self, z3, s3):
        obstruction = passman_obstruction(s3, z3)
        assert obstruction['order'] == 3

    def test_passman_labels(self, z2):
        g = group_from_elements(['e', 'x'], lambda a, b: 'e' if a == b else 'x')
        assert passman_obstruction(g, z2) == {'normal_subgroup': ['e', 'x'], 'order': 2}

    def test_passman_none(self, rationals, q8):
        assert passman_obstruction(q8, rationals) is None
