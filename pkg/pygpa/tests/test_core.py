"""
Testing of the analysis classes
"""
import pytest
from numpy import array, int64

from pygpa.algebra.groups import cyclic_group
from pygpa.groupoid.groupoids import pair_groupoid, group_groupoid, disjoint_union
from pygpa.semigroup.semigroups import brandt_semigroup, group_semigroup
from pygpa.graph.graphs import DirectedGraph
from pygpa.core import *


@pytest.fixture(scope='module')
def loop_graph():
    return DirectedGraph(1, array([0], dtype=int64), array([0], dtype=int64))


@pytest.fixture(scope='module')
def two_sinks_graph():
    return DirectedGraph(3, array([0, 0], dtype=int64), array([1, 2], dtype=int64))


class TestOracleReport:
    def test_infinite_ring(self, rationals):
        with pytest.warns(UserWarning):
            section = oracle_report(pair_groupoid(2), rationals, None, None)
        assert section == {'status': 'skipped', 'reason': 'Q is not finite'}

    def test_capped(self, z2):
        with pytest.warns(UserWarning):
            section = oracle_report(pair_groupoid(2), z2, None, None,
                                    caps={'pair_candidates': 1, 'single_candidates': 1})
        assert section['prime'] == {'agreement': 'capped', 'required': 15 ** 2, 'cap': 1}
        assert section['semiprime'] == {'agreement': 'capped', 'required': 15, 'cap': 1}


class TestGroupoidAnalysis:
    def test_keys(self):
        report = GroupoidAnalysis(verbose=False).analyze(pair_groupoid(2))
        assert set(report) == {'objects', 'arrows', 'orbits', 'isotropy', 'effective', 'transitivity',
                               'topologically_transitive', 'dense_orbits', 'corner_iso', 'decomposition', 'prime',
                               'semiprime'}

    def test_pair(self):
        report = GroupoidAnalysis(verbose=False).analyze(pair_groupoid(2))
        assert report['orbits'] == [[0, 1]]
        assert report['isotropy'] == [{'object': 0, 'order': 1}]
        assert report['effective']
        assert report['topologically_transitive']
        assert report['corner_iso']
        assert report['prime']['prime'] and report['semiprime']['semiprime']

    def test_two_points(self):
        g = disjoint_union(pair_groupoid(1), pair_groupoid(1))
        report = GroupoidAnalysis(verbose=False).analyze(g)
        assert report['orbits'] == [[0], [1]]
        assert not report['topologically_transitive']
        assert not any(report['transitivity'].values())
        assert not report['prime']['prime']
        assert report['semiprime']['semiprime']

    def test_oracle(self):
        report = GroupoidAnalysis('Z/2', oracle=True, verbose=False).analyze(group_groupoid(cyclic_group(2)))
        assert not report['prime']['prime']
        assert not report['semiprime']['semiprime']
        assert report['oracle']['prime']['agreement'] == 'ok'
        assert report['oracle']['semiprime']['agreement'] == 'ok'

    def test_banner(self, capsys):
        GroupoidAnalysis(verbose=True).analyze(pair_groupoid(1))
        out, err = capsys.readouterr()
        assert out == ''
        assert 'Analyzing' in err

    def test_bad_caps(self):
        with pytest.raises(ValueError):
            GroupoidAnalysis(caps={'arrows': 3})


class TestGraphAnalysis:
    def test_loop(self, loop_graph):
        report = GraphAnalysis(oracle=True, depth=2, verbose=False).analyze(loop_graph)
        assert not report['acyclic']
        assert not report['effective']
        assert report['prime']['prime']
        assert not report['primitive']['primitive']
        assert report['transitivity_crosscheck'] == {'holds': True, 'witness': None}
        assert [m['isotropy'] for m in report['boundary_paths']['members']] == ['infinite cyclic']
        assert report['oracle']['status'] == 'skipped'
        assert 'groupoid' not in report

    def test_two_sinks(self, two_sinks_graph):
        report = GraphAnalysis('Z/2', oracle=True, verbose=False).analyze(two_sinks_graph)
        assert report['sinks'] == [1, 2]
        assert report['downward_directed'] == {'holds': False, 'witness': [1, 2]}
        assert report['csp'] == {'holds': True, 'witness': [1, 2]}
        assert report['groupoid'] == {'objects': 4, 'arrows': 8, 'relations': True}
        assert report['semiprime']['clauses']['groupoid_agrees']
        assert report['oracle']['prime']['agreement'] == 'ok'
        assert 'boundary_paths' not in report

    def test_not_field(self, loop_graph):
        report = GraphAnalysis('Z', verbose=False).analyze(loop_graph)
        assert report['primitive']['status'] == 'skipped'


class TestSemigroupAnalysis:
    def test_brandt(self):
        report = SemigroupAnalysis(verbose=False).analyze(brandt_semigroup())
        assert report['order'] == 5
        assert report['zero'] == 0
        assert report['idempotents'] == [0, 1, 4]
        assert report['d_classes'] == [[0], [1, 4]]
        assert not report['bisimple']
        assert report['0_bisimple']
        assert not report['prime']['prime']
        assert report['universal_groupoid'] == {'objects': 3, 'arrows': 5, 'orbits': [[0], [1, 2]]}

    def test_brandt_contracted(self):
        report = SemigroupAnalysis('Z/2', contracted=True, iso=True, oracle=True, verbose=False) \
            .analyze(brandt_semigroup())
        assert report['prime']['prime']
        assert report['iso']['verified']
        assert report['iso']['decomposition'] == 'M2(Z/2)'
        assert report['oracle']['prime']['agreement'] == 'ok'

    def test_group(self):
        report = SemigroupAnalysis(verbose=False).analyze(group_semigroup(cyclic_group(3)))
        assert report['zero'] is None
        assert '0_bisimple' not in report
        assert report['bisimple']
        assert report['maximal_subgroups'] == [{'idempotent': 0, 'order': 3}]
        assert not report['prime']['prime']
