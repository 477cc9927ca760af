"""
Testing of acyclic graph groupoids, the Leavitt relations and the Leavitt path algebra verdicts
"""
import pytest
from numpy.random import default_rng

from pygpa.algebra.groups import INFINITE_CYCLIC
from pygpa.algebra.rings import parse_ring
from pygpa.common import NotAcyclic, NotAField, CapExceeded
from pygpa.corpus import exhaustive_acyclic_graphs, random_acyclic_graph
from pygpa.groupoid.groupoids import orbits, is_effective
from pygpa.groupoid.convolution import convolve, matrix_decomposition, structural_is_prime
from pygpa.graph.graphs import Path, is_downward_directed
from pygpa.graph.leavitt import *


class TestAcyclicGraphGroupoid:
    def test_single_edge(self, single_edge, rationals):
        g = acyclic_graph_groupoid(single_edge)
        assert [str(p) for p in g.object_labels] == ['eps_1', 'e0']
        assert g.n_arrows == 4
        assert matrix_decomposition(g, rationals).describe() == 'M2(Q)'

    def test_sink(self, sink):
        g = acyclic_graph_groupoid(sink)
        assert (g.n_objects, g.n_arrows) == (1, 1)

    def test_two_sinks(self, two_sinks, rationals):
        g = acyclic_graph_groupoid(two_sinks)
        assert g.n_objects == 4
        assert orbits(g).blocks == ((0, 1), (2, 3))
        assert matrix_decomposition(g, rationals).describe() == 'M2(Q) + M2(Q)'
        assert not structural_is_prime(g, rationals)

    def test_diamond(self, diamond):
        g = acyclic_graph_groupoid(diamond)
        # one sink reached by eps_3, e2, e3, e0.e2, e1.e3
        assert g.n_objects == 5
        assert g.n_arrows == 25
        assert is_effective(g)

    def test_cyclic(self, loop):
        with pytest.raises(NotAcyclic) as e_info:
            acyclic_graph_groupoid(loop)
        assert e_info.value.witness == (0,)

    def test_cap(self, diamond):
        with pytest.raises(CapExceeded):
            acyclic_graph_groupoid(diamond, caps={'boundary_paths': 4})


class TestLeavittRelations:
    @pytest.mark.parametrize('name', ('sink', 'single_edge', 'two_sinks', 'line', 'diamond', 'parallel'))
    def test_relations(self, request, name, rationals):
        assert leavitt_relations_check(request.getfixturevalue(name), rationals)

    def test_single_edge_elements(self, single_edge, z3):
        emb = leavitt_embedding(single_edge, z3)
        e, ghost = emb.edge(0), emb.ghost(0)
        assert convolve(ghost, e) == emb.vertex(1)
        assert convolve(e, ghost) == emb.vertex(0)

    def test_parallel_orthogonal(self, parallel, integers):
        emb = leavitt_embedding(parallel, integers)
        assert convolve(emb.ghost(0), emb.edge(1)).is_zero()
        assert convolve(emb.edge(0), emb.ghost(0)) + convolve(emb.edge(1), emb.ghost(1)) == emb.vertex(0)

    def test_sink_vertex_nonzero(self, single_edge, integers):
        emb = leavitt_embedding(single_edge, integers)
        assert not emb.vertex(1).is_zero()

    def test_exhaustive(self, z2):
        for graph in exhaustive_acyclic_graphs(3):
            assert leavitt_relations_check(graph, z2)

    def test_cyclic(self, loop, rationals):
        with pytest.raises(NotAcyclic):
            leavitt_relations_check(loop, rationals)


class TestLeavittVerdicts:
    def test_loop_prime(self, loop, rationals):
        verdict = leavitt_prime_verdict(loop, rationals)
        assert verdict.decision
        assert verdict.clauses['cyclic_isotropy_prime']
        assert 'groupoid_agrees' not in verdict.clauses

    def test_two_sinks(self, two_sinks, rationals):
        verdict = leavitt_prime_verdict(two_sinks, rationals)
        assert not verdict
        assert verdict.witness == {'vertices': [1, 2]}
        assert verdict.clauses['groupoid_agrees']

    def test_not_domain(self, single_edge, z6):
        verdict = leavitt_prime_verdict(single_edge, z6)
        assert not verdict
        assert verdict.witness == {'ring': 'Z/6', 'condition': 'integral domain'}

    @pytest.mark.parametrize(('ring', 'semiprime'), (('Z/4', False), ('Z/6', True), ('Q', True),
                                                     ('Laurent(Z/9)', False)))
    def test_semiprime(self, ring, semiprime):
        assert leavitt_semiprime_verdict(parse_ring(ring)).decision is semiprime

    def test_semiprime_crosscheck(self, two_sinks, z6):
        verdict = leavitt_semiprime_verdict(z6, two_sinks)
        assert verdict.clauses['groupoid_agrees']

    def test_primitive_loop(self, loop, rationals):
        verdict = leavitt_primitive_verdict(loop, rationals)
        assert not verdict
        assert verdict.witness == {'cycle': [0]}
        assert verdict.prop == 'primitive'

    def test_primitive_sink(self, sink, rationals):
        verdict = leavitt_primitive_verdict(sink, rationals)
        assert verdict.decision
        assert verdict.clauses['csp_witness'] == [0]

    def test_primitive_two_sinks(self, two_sinks, rationals):
        verdict = leavitt_primitive_verdict(two_sinks, rationals)
        assert not verdict
        assert verdict.witness == {'vertices': [1, 2]}

    def test_primitive_loop_exit(self, loop_exit, z2):
        assert leavitt_primitive_verdict(loop_exit, z2)

    @pytest.mark.parametrize('ring', ('Z', 'Z/4', 'Laurent(Q)'))
    def test_primitive_not_field(self, sink, ring):
        with pytest.raises(NotAField):
            leavitt_primitive_verdict(sink, parse_ring(ring))

    @pytest.mark.parametrize('ring', ('Q', 'Z/2', 'Z/6'))
    def test_acyclic_agreement(self, ring):
        ring = parse_ring(ring)
        rng = default_rng(5)
        for _ in range(50):
            graph = random_acyclic_graph(rng, 5, 5)
            verdict = leavitt_prime_verdict(graph, ring)
            assert verdict.clauses['groupoid_agrees']
            assert verdict.decision == structural_is_prime(acyclic_graph_groupoid(graph), ring).decision


class TestTransitivityCrosscheck:
    def test_loop(self, loop):
        assert transitivity_crosscheck(loop, 2) == (True, None)

    def test_two_sinks(self, two_sinks):
        assert transitivity_crosscheck(two_sinks, 1) == (False, ('eps_1', 'eps_2'))

    def test_witness_is_shortest_per_end(self, two_sinks):
        # e0 and e1 end at the two sinks, their cylinders are represented by eps_1 and eps_2
        assert transitivity_crosscheck(two_sinks, 2) == (False, ('eps_1', 'eps_2'))

    def test_line(self, line):
        assert transitivity_crosscheck(line, 2)[0]

    def test_depth(self, loop):
        with pytest.raises(ValueError):
            transitivity_crosscheck(loop, 0)

    def test_exhaustive(self):
        for graph in exhaustive_acyclic_graphs(4):
            assert transitivity_crosscheck(graph, 2)[0] == is_downward_directed(graph)[0]


class TestEffectiveAndIsotropy:
    def test_effective(self, loop, loop_exit, diamond):
        assert not is_effective_graph(loop)
        assert is_effective_graph(loop_exit)
        assert is_effective_graph(diamond)

    def test_isotropy(self, single_edge, loop, loop_exit):
        assert eventually_periodic_isotropy(single_edge, Path(0, (0,), 1)).is_trivial
        assert eventually_periodic_isotropy(loop, Path(0, (0,), 0)) == INFINITE_CYCLIC
        assert eventually_periodic_isotropy(loop_exit, Path(0, (), 0)) is None
