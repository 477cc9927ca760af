"""
Testing of the gpa command line
"""
import argparse
import json

import pytest

from pygpa.common import InternalDisagreement
from pygpa.algebra.groups import cyclic_group
from pygpa.groupoid.groupoids import pair_groupoid, group_groupoid
from pygpa.semigroup.semigroups import brandt_semigroup
from pygpa.core import GroupoidAnalysis
from pygpa.cli import *


@pytest.fixture
def write(tmp_path):
    def _write(data, name='input.json'):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return str(path)
    return _write


@pytest.fixture
def run(capsys):
    def _run(*argv):
        code = main(list(argv))
        out, err = capsys.readouterr()
        return code, out, err
    return _run


class TestParseExpectation:
    @pytest.mark.parametrize(('text', 'expected'), (('prime', ('prime', True)),
                                                    ('semiprime=false', ('semiprime', False)),
                                                    ('primitive = TRUE', ('primitive', True))))
    def test_valid(self, text, expected):
        assert parse_expectation(text) == expected

    @pytest.mark.parametrize('text', ('simple', 'prime=maybe', '=true'))
    def test_invalid(self, text):
        with pytest.raises(argparse.ArgumentTypeError):
            parse_expectation(text)


class TestCheckGroupoid:
    def test_pair_prime(self, write, run):
        code, out, _ = run('check-groupoid', write(pair_groupoid(2).to_json()), '--expect', 'prime', '-q')
        assert code == EXIT_OK
        report = json.loads(out)
        assert report['operation'] == 'check-groupoid'
        assert report['ring'] == 'Q'
        assert report['result']['prime']['prime']
        assert report['result']['decomposition']['description'] == 'M2(Q)'

    def test_group_over_z2(self, write, run):
        path = write(group_groupoid(cyclic_group(2)).to_json())
        code, out, _ = run('check-groupoid', path, '--ring', 'Z/2', '--oracle', '--expect', 'semiprime=false',
                           '--expect', 'prime=false', '-q')
        assert code == EXIT_OK
        oracle = json.loads(out)['result']['oracle']
        assert oracle['prime']['agreement'] == 'ok'
        assert oracle['semiprime']['agreement'] == 'ok'
        assert oracle['semiprime']['method'] == 'bruteforce'

    def test_expectation_fails(self, write, run):
        code, _, err = run('check-groupoid', write(pair_groupoid(2).to_json()), '--expect', 'prime=false', '-q')
        assert code == EXIT_EXPECTATION
        assert 'expected prime=false, got true' in err

    def test_digest_stable(self, write, run):
        path = write(pair_groupoid(2).to_json())
        first = json.loads(run('check-groupoid', path, '-q')[1])
        second = json.loads(run('check-groupoid', path, '-q')[1])
        assert first['input_digest'] == second['input_digest']
        assert first['result'] == second['result']

    def test_dump_canonical(self, write, run):
        code, out, _ = run('check-groupoid', write(pair_groupoid(1).to_json()), '--dump-canonical')
        assert code == EXIT_OK
        data = json.loads(out)
        assert data['identities'] == [0]
        assert data['inverses'] == [0]

    def test_banners(self, write, run):
        _, _, err = run('check-groupoid', write(pair_groupoid(1).to_json()))
        assert 'Analyzing' in err

    def test_invalid_groupoid(self, write, run):
        data = pair_groupoid(2).to_json()
        data['compose'][0][0] = 1
        code, out, err = run('check-groupoid', write(data), '-q')
        assert code == EXIT_INVALID
        assert out == ''
        assert err.startswith('invalid input: ')

    def test_missing_file(self, tmp_path, run):
        code, _, err = run('check-groupoid', str(tmp_path / 'absent.json'), '-q')
        assert code == EXIT_INVALID
        assert 'Cannot read' in err

    def test_bad_ring(self, write, run):
        code, _, _ = run('check-groupoid', write(pair_groupoid(1).to_json()), '--ring', 'R', '-q')
        assert code == EXIT_INVALID

    def test_oracle_disagreement(self, write, run, monkeypatch):
        monkeypatch.setattr(GroupoidAnalysis, 'analyze',
                            lambda self, g: {'oracle': {'prime': {'prime': True, 'agreement': 'disagree'}}})
        code, _, err = run('check-groupoid', write(pair_groupoid(1).to_json()), '-q')
        assert code == EXIT_DISAGREEMENT
        assert 'disagree' in err

    def test_internal_disagreement(self, write, run, monkeypatch):
        def analyze(self, groupoid):
            raise InternalDisagreement('witness does not replay')
        monkeypatch.setattr(GroupoidAnalysis, 'analyze', analyze)
        code, _, err = run('check-groupoid', write(pair_groupoid(1).to_json()), '-q')
        assert code == EXIT_DISAGREEMENT
        assert 'internal disagreement' in err


class TestCheckGraph:
    def test_loop(self, write, run):
        path = write({'vertices': 1, 'edges': [{'src': 0, 'dst': 0}]})
        code, out, _ = run('check-graph', path, '--expect', 'prime', '--expect', 'primitive=false', '-q')
        assert code == EXIT_OK
        result = json.loads(out)['result']
        assert not result['acyclic']
        assert result['condition_L'] == {'holds': False, 'witness': [0]}
        assert 'groupoid' not in result

    def test_two_sinks(self, write, run):
        path = write({'vertices': 3, 'edges': [{'src': 0, 'dst': 1}, {'src': 0, 'dst': 2}]})
        code, out, _ = run('check-graph', path, '--ring', 'Z/2', '--oracle', '--depth', '1', '--expect',
                           'prime=false', '-q')
        assert code == EXIT_OK
        result = json.loads(out)['result']
        assert result['downward_directed'] == {'holds': False, 'witness': [1, 2]}
        assert result['transitivity_crosscheck'] == {'holds': False, 'witness': ['eps_1', 'eps_2']}
        assert result['groupoid'] == {'objects': 4, 'arrows': 8, 'relations': True}
        assert result['oracle']['prime']['agreement'] == 'ok'
        assert all(m['isotropy'] == 'trivial' for m in result['boundary_paths']['members'])

    def test_primitive_needs_field(self, write, run):
        path = write({'vertices': 1, 'edges': []})
        code, out, err = run('check-graph', path, '--ring', 'Z', '--expect', 'primitive', '-q')
        assert code == EXIT_EXPECTATION
        assert json.loads(out)['result']['primitive']['status'] == 'skipped'
        assert 'no primitive verdict' in err

    def test_invalid_graph(self, write, run):
        code, _, _ = run('check-graph', write({'vertices': 1, 'edges': [{'src': 0, 'dst': 3}]}), '-q')
        assert code == EXIT_INVALID


class TestCheckSemigroup:
    def test_brandt(self, write, run):
        path = write({'table': brandt_semigroup().table.tolist()})
        assert run('check-semigroup', path, '--expect', 'prime=false', '-q')[0] == EXIT_OK
        code, out, _ = run('check-semigroup', path, '--contracted', '--iso', '--expect', 'prime', '-q')
        assert code == EXIT_OK
        result = json.loads(out)['result']
        assert result['universal_groupoid']['objects'] == 2
        assert result['iso']['decomposition'] == 'M2(Q)'

    def test_not_inverse(self, write, run):
        code, _, err = run('check-semigroup', write({'table': [[0, 0], [1, 1]]}), '-q')
        assert code == EXIT_INVALID
        assert 'invalid input' in err


class TestCorpus:
    def test_fixtures(self, run):
        code, out, _ = run('corpus', '--suite', 'fixtures', '--suite', 'determinism', '-q')
        assert code == EXIT_OK
        report = json.loads(out)
        assert report['operation'] == 'corpus'
        assert list(report['result']['suites']) == ['determinism', 'fixtures']
        assert report['result']['ok']

    def test_seeded_runs_identical(self, run):
        argv = ('corpus', '--seed', '42', '--max-objects', '2', '--max-arrows', '4', '--suite', 'condition_L',
                '--suite', 'determinism', '-q')
        first_code, first_out, _ = run(*argv)
        second_code, second_out, _ = run(*argv)
        assert first_code == second_code == EXIT_OK
        first, second = json.loads(first_out), json.loads(second_out)
        assert first['input_digest'] == second['input_digest']
        assert first['result'] == second['result']
        assert first['result']['seed'] == 42
        assert first['result']['suites']['condition_L']['pass'] > 0

    def test_unknown_suite(self, run):
        with pytest.raises(SystemExit):
            run('corpus', '--suite', 'everything')


def test_version(run):
    with pytest.raises(SystemExit) as e_info:
        run('--version')
    assert e_info.value.code == 0
