"""
Testing of finite groupoids, orbits, invariant sets, transitivity, bisections and the action and germ constructions
"""
import pytest
from numpy import array

from pygpa.algebra.groups import cyclic_group, trivial_group, symmetric_group
from pygpa.common import BadComposability, NotAssociative, MissingIdentity, MissingInverse, NotAnAction, \
    ValidationError, InternalDisagreement
from pygpa.groupoid.groupoids import *


class TestValidateGroupoid:
    def test_pair(self, pair2_data, pair2):
        g = validate_groupoid(pair2_data)
        assert g.n_objects == 2
        assert g.n_arrows == 4
        assert g.same_carrier(pair2)
        assert g.identities.tolist() == [0, 3]
        assert g.inverse.tolist() == [0, 2, 1, 3]

    def test_group_as_groupoid(self):
        g = validate_groupoid({'objects': 1, 'arrows': [{'src': 0, 'dst': 0}] * 2, 'compose': [[0, 1], [1, 0]]})
        assert g.identities.tolist() == [0]
        assert isotropy_group(g, 0).order == 2

    def test_to_json_roundtrip(self, pair_and_c2):
        assert validate_groupoid(pair_and_c2.to_json()).same_carrier(pair_and_c2)

    def test_mismatched_endpoints(self):
        data = {'objects': 2, 'arrows': [{'src': 0, 'dst': 0}, {'src': 1, 'dst': 1}], 'compose': [[0, 0], [None, 1]]}
        with pytest.raises(BadComposability) as e_info:
            validate_groupoid(data)
        assert e_info.value.witness == (0, 1)

    def test_missing_composite(self, pair2_data):
        pair2_data['compose'][1][2] = None
        with pytest.raises(BadComposability):
            validate_groupoid(pair2_data)

    def test_wrong_endpoints(self, pair2_data):
        # arrow 2 after arrow 1 goes 1 -> 1
        pair2_data['compose'][2][1] = 0
        with pytest.raises(BadComposability):
            validate_groupoid(pair2_data)

    def test_not_associative(self):
        loop = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
        with pytest.raises(NotAssociative):
            validate_groupoid({'objects': 1, 'arrows': [{'src': 0, 'dst': 0}] * 5, 'compose': loop})

    def test_missing_identity(self):
        with pytest.raises(MissingIdentity) as e_info:
            validate_groupoid({'objects': 1, 'arrows': [{'src': 0, 'dst': 0}] * 2, 'compose': [[0, 0], [0, 0]]})
        assert e_info.value.witness == (0,)

    def test_no_arrows(self):
        with pytest.raises(MissingIdentity):
            validate_groupoid({'objects': 1, 'arrows': [], 'compose': []})

    def test_missing_inverse(self):
        with pytest.raises(MissingInverse) as e_info:
            validate_groupoid({'objects': 1, 'arrows': [{'src': 0, 'dst': 0}] * 2, 'compose': [[0, 1], [1, 1]]})
        assert e_info.value.witness == (1,)

    def test_supplied_identity_checked(self):
        data = {'objects': 1, 'arrows': [{'src': 0, 'dst': 0}] * 2, 'compose': [[0, 1], [1, 0]], 'identities': [1]}
        with pytest.raises(MissingIdentity):
            validate_groupoid(data)

    def test_supplied_inverse_checked(self, pair2_data):
        pair2_data['inverses'] = [0, 1, 2, 3]
        with pytest.raises(MissingInverse) as e_info:
            validate_groupoid(pair2_data)
        assert e_info.value.witness == (1,)

    @pytest.mark.parametrize('data', (
            {'objects': 1, 'arrows': []},
            {'objects': 0, 'arrows': [], 'compose': []},
            {'objects': 1, 'arrows': [{'src': 0, 'dst': 1}], 'compose': [[0]]},
            {'objects': 1, 'arrows': [{'src': 0, 'dst': 0}], 'compose': [[0, 0]]},
            {'objects': 1, 'arrows': [{'src': 0, 'dst': 0}], 'compose': [[3]]}))
    def test_malformed(self, data):
        with pytest.raises(ValueError):
            validate_groupoid(data)


class TestBuilders:
    def test_transitive(self):
        g = transitive_groupoid(2, cyclic_group(3))
        assert g.n_arrows == 12
        assert all(g.is_identity(int(i)) for i in g.identities)
        assert len(g.arrows_between(0, 1)) == 3

    def test_from_composition_duplicate_labels(self):
        with pytest.raises(ValueError):
            groupoid_from_composition(1, [('e', 0, 0), ('e', 0, 0)], lambda a, b: 'e')

    def test_disjoint_union(self, two_groups):
        assert two_groups.n_objects == 2
        assert two_groups.n_arrows == 5
        assert two_groups.identities.tolist() == [0, 2]

    def test_disjoint_union_empty(self):
        with pytest.raises(ValueError):
            disjoint_union()

    def test_relabel(self, pair_and_c2):
        g = relabel_groupoid(pair_and_c2, [2, 0, 1], [5, 4, 3, 2, 1, 0])
        assert g.n_arrows == pair_and_c2.n_arrows
        assert orbits(g).blocks == ((0, 2), (1,))
        assert isotropy_group(g, 1).order == 2


class TestOrbits:
    def test_pair(self, pair2):
        partition = orbits(pair2)
        assert partition.blocks == ((0, 1),)
        assert partition.representatives == (0,)

    def test_two_groups(self, two_groups):
        assert orbits(two_groups).blocks == ((0,), (1,))

    def test_partial(self):
        g = disjoint_union(pair_groupoid(2), pair_groupoid(1))
        partition = orbits(g)
        assert partition.blocks == ((0, 1), (2,))
        assert partition.block_of == (0, 0, 1)
        assert partition.to_json() == [[0, 1], [2]]
        assert len(partition) == 2

    def test_isotropy(self, pair2, c2_object, swap):
        assert isotropy_group(pair2, 1).is_trivial
        assert isotropy_group(c2_object, 0).order == 2
        assert isotropy_group(c2_object, 0).labels == [0, 1]
        assert isotropy_group(swap, 0).is_trivial
        with pytest.raises(ValueError):
            isotropy_group(pair2, 2)


class TestInvariantSets:
    def test_saturation_pair(self, pair2):
        assert invariant_saturation(pair2, {0}) == frozenset({0, 1})

    def test_saturation_empty(self, pair2):
        assert invariant_saturation(pair2, set()) == frozenset()

    def test_saturation_block(self, pair_and_c2):
        assert invariant_saturation(pair_and_c2, {2}) == frozenset({2})
        assert invariant_saturation(pair_and_c2, {1}) == frozenset({0, 1})

    def test_saturation_invalid(self, pair2):
        with pytest.raises(ValueError):
            invariant_saturation(pair2, {5})

    def test_saturation_orbits_only_checked(self, two_points, monkeypatch):
        merged = orbits(pair_groupoid(2))
        monkeypatch.setattr('pygpa.groupoid.groupoids.orbits', lambda g: merged)
        with pytest.raises(InternalDisagreement):
            invariant_saturation(two_points, {0})
        with pytest.raises(InternalDisagreement):
            transitivity_conditions(two_points)

    def test_is_invariant(self, pair_and_c2):
        assert is_invariant(pair_and_c2, {0, 1})
        assert not is_invariant(pair_and_c2, {0})

    def test_invariant_sets(self, pair_and_c2, pair2):
        sets = invariant_sets(pair_and_c2)
        assert len(sets) == 4
        assert frozenset({0, 1}) in sets
        assert all(is_invariant(pair_and_c2, s) for s in sets)
        assert invariant_sets(pair2) == [frozenset(), frozenset({0, 1})]


class TestEffectiveness:
    @pytest.mark.parametrize(('name', 'effective'), (
            ('pair2', True),
            ('c2_object', False),
            ('swap', True),
            ('two_points', True),
            ('two_groups', False)))
    def test_effective(self, request, name, effective):
        g = request.getfixturevalue(name)
        assert is_effective(g) is effective
        assert is_effective_by_action(g) is effective


class TestTransitivity:
    @pytest.mark.parametrize(('name', 'transitive'), (
            ('pair2', True),
            ('c2_object', True),
            ('swap', True),
            ('two_points', False),
            ('two_groups', False),
            ('pair_and_c2', False)))
    def test_transitive(self, request, name, transitive):
        g = request.getfixturevalue(name)
        assert is_topologically_transitive(g) is transitive
        assert set(transitivity_conditions(g).values()) == {transitive}
        assert has_dense_orbit(g) is transitive

    def test_dense_orbits(self, pair2, two_points):
        assert dense_orbits(pair2) == [(0, 1)]
        assert dense_orbits(two_points) == []


class TestBisections:
    def test_not_a_bisection(self, pair2):
        with pytest.raises(ValidationError) as e_info:
            Bisection(pair2, [0, 2])
        assert e_info.value.axiom == 'bisection'

    def test_invalid_arrow(self, pair2):
        with pytest.raises(ValueError):
            Bisection(pair2, [7])

    def test_inverse_pair(self, pair2):
        u, v = Bisection(pair2, [2]), Bisection(pair2, [1])
        assert compose_bisections(u, v, pair2) == Bisection(pair2, [3])
        assert bisection_inverse(u) == v

    def test_identity_unit(self, pair2):
        v = Bisection(pair2, [1, 2])
        ident = identity_bisection(pair2)
        assert compose_bisections(ident, v, pair2) == v
        assert compose_bisections(v, ident, pair2) == v

    def test_disjoint(self, pair2):
        assert len(compose_bisections(Bisection(pair2, [0]), Bisection(pair2, [3]), pair2)) == 0

    def test_action(self, pair2):
        u = Bisection(pair2, [2])
        assert u.domain == frozenset({0})
        assert u.range == frozenset({1})
        assert bisection_action(u, 0) == 1
        assert bisection_action(u, 1) is None


class TestActionGroupoid:
    def test_swap(self, swap):
        assert swap.n_objects == 2
        assert swap.n_arrows == 4
        assert len(orbits(swap)) == 1
        assert swap.object_labels == ['p', 'q']
        assert is_topologically_free(cyclic_group(2), 2, [[0, 1], [1, 0]])

    def test_trivial_action(self):
        g = action_groupoid(cyclic_group(2), ['p'], [[0], [0]])
        assert g.n_objects == 1
        assert isotropy_group(g, 0).order == 2
        assert not is_topologically_free(cyclic_group(2), 1, [[0], [0]])

    def test_trivial_group(self):
        g = action_groupoid(trivial_group(), 3, lambda h, x: x)
        assert g.n_arrows == 3
        assert all(g.is_identity(a) for a in range(3))
        assert len(orbits(g)) == 3

    def test_callable(self):
        s3 = symmetric_group(3)
        g = action_groupoid(s3, 3, lambda p, x: s3.labels[p][x])
        assert g.n_arrows == 18
        assert len(orbits(g)) == 1
        assert isotropy_group(g, 0).order == 2

    def test_identity_moves(self):
        with pytest.raises(NotAnAction):
            action_groupoid(cyclic_group(2), 2, [[1, 0], [1, 0]])

    def test_not_homomorphism(self):
        # generator of C3 swapping two points and fixing the third
        with pytest.raises(NotAnAction):
            action_groupoid(cyclic_group(3), 3, [[0, 1, 2], [1, 0, 2], [1, 0, 2]])

    def test_bad_shape(self):
        with pytest.raises(ValueError):
            action_groupoid(cyclic_group(2), 2, array([[0, 1]]))
