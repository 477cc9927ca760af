"""
Core analysis classes that run every structural decider, cross-check and oracle on one input, and the corpus run
behind the agreement suites

GNU GPL v3.0
V0.1 - October 2026
"""
import sys
from warnings import warn

from numpy import array, int64
from numpy.random import default_rng

from pygpa.common import CapExceeded, InternalDisagreement, DEFAULT_CAPS, resolve_caps, digest
from pygpa.algebra.rings import parse_ring, is_field
from pygpa.algebra.groups import cyclic_group, group_algebra_is_prime, group_algebra_is_semiprime
from pygpa.groupoid.groupoids import orbits, isotropy_group, is_effective, is_effective_by_action, \
    transitivity_conditions, is_topologically_transitive, dense_orbits, has_dense_orbit, group_groupoid, \
    compose_bisections
from pygpa.groupoid.convolution import convolve, indicator, matrix_decomposition, structural_is_prime, \
    structural_is_semiprime, corner_iso_check
from pygpa.groupoid.oracle import bruteforce_is_prime, bruteforce_is_semiprime, replay_verdict
from pygpa.semigroup.semigroups import orbit_of_idempotents, is_bisimple, is_0_bisimple, maximal_subgroup, \
    brandt_semigroup, enumerate_inverse_semigroups
from pygpa.semigroup.universal import universal_groupoid, semigroup_algebra_iso, munn_prime_verdict, \
    munn_semiprime_verdict
from pygpa.graph.graphs import DirectedGraph, is_downward_directed, condition_L, condition_L_by_cycles, has_csp, \
    boundary_paths, find_cycle
from pygpa.graph.leavitt import acyclic_graph_groupoid, leavitt_relations_check, leavitt_prime_verdict, \
    leavitt_semiprime_verdict, leavitt_primitive_verdict, transitivity_crosscheck, is_effective_graph, \
    eventually_periodic_isotropy
from pygpa.serialize import dump_structure
from pygpa import corpus


__all__ = ['DEFAULT_CAPS', 'oracle_report', 'GroupoidAnalysis', 'GraphAnalysis', 'SemigroupAnalysis',
           'CorpusAnalysis']


def _banner(verbose, msg):
    if verbose:
        print(msg, file=sys.stderr)


def oracle_report(groupoid, ring, prime, semiprime, caps=None):
    """
    Run the brute-force oracles and compare them with structural verdicts.

    Parameters
    ----------
    groupoid : FiniteGroupoid
    ring : RingSpec
    prime, semiprime : PrimenessVerdict
        Structural verdicts to compare against.
    caps : {None, dict}, optional

    Returns
    -------
    section : dict
        Per property the oracle verdict and 'agreement' ('ok', 'disagree' or 'capped'), or a 'status' of 'skipped'
        when the ring is infinite.
    """
    if not ring.is_finite:
        warn(f'Brute-force oracles need a finite ring, {ring} given. Skipping.')
        return {'status': 'skipped', 'reason': f'{ring} is not finite'}
    section = {}
    for prop, structural, decide in (('prime', prime, bruteforce_is_prime),
                                     ('semiprime', semiprime, bruteforce_is_semiprime)):
        try:
            brute = decide(groupoid, ring, caps)
        except CapExceeded as e:
            warn(f'Brute-force {prop} test skipped: {e}')
            section[prop] = {'agreement': 'capped', 'required': e.required, 'cap': e.cap}
            continue
        if not replay_verdict(brute, groupoid, ring):
            raise InternalDisagreement(f'brute-force {prop} witness does not replay')
        entry = brute.to_json()
        entry['agreement'] = 'ok' if brute.decision == structural.decision else 'disagree'
        section[prop] = entry
    return section


class GroupoidAnalysis:
    def __init__(self, ring='Q', oracle=False, caps=None, verbose=True):
        """
        Structural analysis of a finite groupoid algebra.

        Parameters
        ----------
        ring : {str, RingSpec}, optional
            Coefficient ring. Default is 'Q'.
        oracle : bool, optional
            Also run the brute-force oracles (finite rings only). Default is False.
        caps : {None, dict}, optional
            Search caps. Provided keys override the defaults in :data:`DEFAULT_CAPS` one by one.
        verbose : bool, optional
            Print progress to stderr. Default is True.
        """
        self.ring = parse_ring(ring)
        self.oracle = oracle
        self.caps = resolve_caps(caps)
        self.verbose = verbose

    def analyze(self, groupoid):
        """
        Orbits, isotropy, effectiveness, transitivity, the matrix decomposition and the prime and semiprime verdicts.

        Parameters
        ----------
        groupoid : FiniteGroupoid

        Returns
        -------
        report : dict
        """
        _banner(self.verbose, f'-------------------------------------------------\nAnalyzing {groupoid} over {self.ring}')
        partition = orbits(groupoid)
        effective = is_effective(groupoid)
        if effective != is_effective_by_action(groupoid):
            raise InternalDisagreement('effectiveness by isotropy and by bisection action disagree')
        report = {
            'objects': groupoid.n_objects,
            'arrows': groupoid.n_arrows,
            'orbits': partition.to_json(),
            'isotropy': [{'object': x, 'order': isotropy_group(groupoid, x).order} for x in partition.representatives],
            'effective': effective,
            'transitivity': transitivity_conditions(groupoid),
            'topologically_transitive': is_topologically_transitive(groupoid),
            'dense_orbits': [list(b) for b in dense_orbits(groupoid)],
            'corner_iso': all(corner_iso_check(groupoid, x, self.ring) for x in partition.representatives),
        }
        _banner(self.verbose, 'Decomposing into matrix algebras...')
        report['decomposition'] = matrix_decomposition(groupoid, self.ring).to_json()

        _banner(self.verbose, 'Deciding primeness and semiprimeness...')
        prime = structural_is_prime(groupoid, self.ring)
        semiprime = structural_is_semiprime(groupoid, self.ring)
        for verdict in (prime, semiprime):
            if not replay_verdict(verdict, groupoid, self.ring):
                raise InternalDisagreement(f'structural {verdict.prop} witness does not replay')
        report['prime'] = prime.to_json()
        report['semiprime'] = semiprime.to_json()

        if self.oracle:
            _banner(self.verbose, 'Running brute-force oracles...')
            report['oracle'] = oracle_report(groupoid, self.ring, prime, semiprime, self.caps)
        return report


class GraphAnalysis:
    def __init__(self, ring='Q', oracle=False, depth=None, caps=None, verbose=True):
        """
        Graph criteria and Leavitt path algebra verdicts.

        Parameters
        ----------
        ring : {str, RingSpec}, optional
            Coefficient ring. Default is 'Q'.
        oracle : bool, optional
            For acyclic graphs, also run the brute-force oracles on the graph groupoid. Default is False.
        depth : {None, int}, optional
            Sample the boundary path space and run the cylinder transitivity cross-check to this depth. Default is
            None, which skips both.
        caps : {None, dict}, optional
            Search caps, see :data:`DEFAULT_CAPS`.
        verbose : bool, optional
            Print progress to stderr. Default is True.
        """
        self.ring = parse_ring(ring)
        self.oracle = oracle
        self.depth = depth
        self.caps = resolve_caps(caps)
        self.verbose = verbose

    def analyze(self, graph):
        """
        Downward directedness, condition (L), countable separation, prime, semiprime and primitive verdicts.

        Parameters
        ----------
        graph : DirectedGraph

        Returns
        -------
        report : dict
        """
        _banner(self.verbose, f'-------------------------------------------------\nAnalyzing {graph} over {self.ring}')
        directed, pair = is_downward_directed(graph)
        cond_l, cycle = condition_L(graph)
        csp, separating = has_csp(graph)
        acyclic = find_cycle(graph) is None
        report = {
            'vertices': graph.n_vertices,
            'edges': graph.n_edges,
            'sinks': graph.sinks(),
            'acyclic': acyclic,
            'downward_directed': {'holds': directed, 'witness': None if pair is None else list(pair)},
            'condition_L': {'holds': cond_l, 'witness': cycle},
            'csp': {'holds': csp, 'witness': separating},
            'effective': is_effective_graph(graph),
        }

        _banner(self.verbose, 'Deciding primeness, semiprimeness and primitivity...')
        prime = leavitt_prime_verdict(graph, self.ring, self.caps)
        semiprime = leavitt_semiprime_verdict(self.ring, graph, self.caps)
        report['prime'] = prime.to_json()
        report['semiprime'] = semiprime.to_json()
        if is_field(self.ring):
            report['primitive'] = leavitt_primitive_verdict(graph, self.ring).to_json()
        else:
            report['primitive'] = {'status': 'skipped', 'reason': f'{self.ring} is not a field'}

        if self.depth is not None:
            _banner(self.verbose, f'Sampling boundary paths to depth {self.depth}...')
            joined, witness = transitivity_crosscheck(graph, self.depth, self.caps)
            report['transitivity_crosscheck'] = {'holds': joined, 'witness': None if witness is None else
                                                 list(witness)}
            sample = boundary_paths(graph, self.depth, self.caps)
            sample_json = sample.to_json()
            for member, (path, _, _) in zip(sample_json['members'], sample.members):
                isotropy = eventually_periodic_isotropy(graph, path)
                member['isotropy'] = 'unknown' if isotropy is None else \
                    ('trivial' if getattr(isotropy, 'is_trivial', False) else 'infinite cyclic')
            report['boundary_paths'] = sample_json

        if acyclic:
            groupoid = acyclic_graph_groupoid(graph, self.caps)
            report['groupoid'] = {'objects': groupoid.n_objects, 'arrows': groupoid.n_arrows,
                                  'relations': leavitt_relations_check(graph, self.ring, self.caps)}
        if self.oracle:
            if acyclic:
                _banner(self.verbose, 'Running brute-force oracles on the graph groupoid...')
                report['oracle'] = oracle_report(groupoid, self.ring, structural_is_prime(groupoid, self.ring),
                                                 structural_is_semiprime(groupoid, self.ring), self.caps)
            else:
                report['oracle'] = {'status': 'skipped', 'reason': 'graph groupoid is infinite'}
        return report


class SemigroupAnalysis:
    def __init__(self, ring='Q', contracted=False, iso=False, oracle=False, caps=None, verbose=True):
        """
        Inverse semigroup algebra analysis through the universal groupoid.

        Parameters
        ----------
        ring : {str, RingSpec}, optional
            Coefficient ring. Default is 'Q'.
        contracted : bool, optional
            Work with the contracted algebra R_0 S. Default is False.
        iso : bool, optional
            Materialize and verify the isomorphism with the groupoid algebra. Default is False.
        oracle : bool, optional
            Run the brute-force oracles on the universal groupoid. Default is False.
        caps : {None, dict}, optional
            Search caps, see :data:`DEFAULT_CAPS`.
        verbose : bool, optional
            Print progress to stderr. Default is True.
        """
        self.ring = parse_ring(ring)
        self.contracted = contracted
        self.iso = iso
        self.oracle = oracle
        self.caps = resolve_caps(caps)
        self.verbose = verbose

    def analyze(self, semigroup):
        """
        Idempotents, D-classes, bisimplicity, maximal subgroups and the prime and semiprime verdicts.

        Parameters
        ----------
        semigroup : InverseSemigroup

        Returns
        -------
        report : dict
        """
        _banner(self.verbose, f'-------------------------------------------------\nAnalyzing {semigroup} over {self.ring}')
        idem = semigroup.idempotents()
        report = {
            'order': semigroup.order,
            'zero': semigroup.zero,
            'contracted': self.contracted,
            'idempotents': idem,
            'd_classes': [list(b) for b in orbit_of_idempotents(semigroup)],
            'bisimple': is_bisimple(semigroup),
            'maximal_subgroups': [{'idempotent': e, 'order': maximal_subgroup(semigroup, e).order} for e in idem],
        }
        if semigroup.zero is not None:
            report['0_bisimple'] = is_0_bisimple(semigroup)

        _banner(self.verbose, 'Deciding primeness and semiprimeness...')
        prime = munn_prime_verdict(semigroup, self.ring, self.contracted)
        semiprime = munn_semiprime_verdict(semigroup, self.ring, self.contracted)
        report['prime'] = prime.to_json()
        report['semiprime'] = semiprime.to_json()

        groupoid = universal_groupoid(semigroup, self.contracted)
        report['universal_groupoid'] = {'objects': groupoid.n_objects, 'arrows': groupoid.n_arrows,
                                        'orbits': orbits(groupoid).to_json()}
        if self.iso:
            _banner(self.verbose, 'Verifying the semigroup algebra isomorphism...')
            iso = semigroup_algebra_iso(semigroup, self.ring, self.contracted, self.caps)
            report['iso'] = iso.to_json()
            report['iso']['decomposition'] = matrix_decomposition(iso.groupoid, self.ring).describe()
        if self.oracle:
            _banner(self.verbose, 'Running brute-force oracles on the universal groupoid...')
            report['oracle'] = oracle_report(groupoid, self.ring, prime, semiprime, self.caps)
        return report


class _Suite:
    """
    Pass, fail and capped counts of one agreement suite, keeping the smallest failing instance and every capped one.
    """
    def __init__(self, name):
        self.name = name
        self.passed = 0
        self.failed = 0
        self.capped = 0
        self.capped_instances = []
        self.disagreements = []
        self.counterexample = None
        self._size = None

    def record(self, instance, ok, structure=None, size=0, detail=None):
        if ok:
            self.passed += 1
            return
        self.failed += 1
        self.disagreements.append(instance if detail is None else f'{instance}: {detail}')
        if self._size is None or size < self._size:
            self._size = size
            self.counterexample = {'instance': instance,
                                   'structure': None if structure is None else dump_structure(structure)}

    def cap(self, instance, error):
        self.capped += 1
        self.capped_instances.append({'instance': instance, 'what': error.what, 'required': error.required,
                                      'cap': error.cap})

    def to_json(self):
        return {'pass': self.passed, 'fail': self.failed, 'capped': self.capped,
                'capped_instances': self.capped_instances,
                'disagreements': self.disagreements, 'counterexample': self.counterexample}


class CorpusAnalysis:
    def __init__(self, seed=42, max_objects=3, max_arrows=8, settings=None, caps=None, verbose=True):
        """
        Run the agreement suites over exhaustive and random corpora.

        Parameters
        ----------
        seed : int, optional
            Seed of every random corpus. Default is 42.
        max_objects : int, optional
            Object bound of the exhaustive groupoid corpus. Default is 3.
        max_arrows : int, optional
            Arrow bound of the exhaustive groupoid corpus. Default is 8.
        settings : {None, dict}, optional
            Suite settings. Providing a dictionary with any of the values modified changes just those settings.
            Default settings and keys:
                - 'prime_rings': ('Z/2', 'Z/3')
                - 'semiprime_rings': ('Z/2', 'Z/3', 'Z/4')
                - 'law_rings': ('Z/2', 'Z/6', 'Q', 'Laurent(Z)')
                - 'law_samples': 500
                - 'semigroup_order': 4
                - 'iso_rings': ('Z/2', 'Q')
                - 'acyclic_random': 500
                - 'acyclic_exhaustive_vertices': 4
                - 'acyclic_max_vertices': 6
                - 'cycle_graphs': 200
                - 'graph_max_vertices': 8
                - 'graph_max_edges': 16
                - 'suites': all ten suite names, in run order
        caps : {None, dict}, optional
            Search caps, see :data:`DEFAULT_CAPS`. An instance over a cap is counted as capped and listed in
            'capped_instances'.
        verbose : bool, optional
            Print progress to stderr. Default is True.
        """
        self.seed = int(seed)
        self.max_objects = int(max_objects)
        self.max_arrows = int(max_arrows)

        self.set_default_settings()
        if settings is not None:
            for key in settings.keys():
                if key not in self.settings:
                    raise ValueError(f'Unknown corpus setting "{key}".')
                self.settings[key] = settings[key]
        for name in self.settings['suites']:
            if name not in self.SUITES:
                raise ValueError(f'Unknown suite "{name}". Valid suites are {list(self.SUITES)}.')

        self.caps = resolve_caps(caps)
        self.verbose = verbose

    SUITES = ('prime_oracle', 'semiprime_oracle', 'transitivity', 'convolution_laws', 'brandt', 'semigroup_iso',
              'leavitt_acyclic', 'condition_L', 'fixtures', 'determinism')

    def set_default_settings(self):
        self.settings = {
            'prime_rings': ('Z/2', 'Z/3'),
            'semiprime_rings': ('Z/2', 'Z/3', 'Z/4'),
            'law_rings': ('Z/2', 'Z/6', 'Q', 'Laurent(Z)'),
            'law_samples': 500,
            'semigroup_order': 4,
            'iso_rings': ('Z/2', 'Q'),
            'acyclic_random': 500,
            'acyclic_exhaustive_vertices': 4,
            'acyclic_max_vertices': 6,
            'cycle_graphs': 200,
            'graph_max_vertices': 8,
            'graph_max_edges': 16,
            'suites': self.SUITES,
        }

    def _rng(self, name):
        # one stream per suite, independent of which suites run
        return default_rng([self.seed, self.SUITES.index(name)])

    def run(self):
        """
        Run the selected suites.

        Returns
        -------
        report : dict
            Per suite counts, disagreements and the smallest counterexample, the totals, and 'ok' when nothing failed.
        """
        suites = {}
        for name in self.settings['suites']:
            _banner(self.verbose, f'-------------------------------------------------\nSuite {name}...')
            suite = _Suite(name)
            getattr(self, f'_suite_{name}')(suite)
            suites[name] = suite.to_json()
            _banner(self.verbose, f'  pass {suite.passed}, fail {suite.failed}, capped {suite.capped}')
        total = {key: sum(s[key] for s in suites.values()) for key in ('pass', 'fail', 'capped')}
        return {'seed': self.seed, 'max_objects': self.max_objects, 'max_arrows': self.max_arrows,
                'suites': suites, 'total': total, 'ok': total['fail'] == 0}

    def _groupoids(self):
        return corpus.exhaustive_groupoids(self.max_objects, self.max_arrows)

    def _oracle_suite(self, suite, rings, structural, brute):
        for ring_text in rings:
            ring = parse_ring(ring_text)
            for name, groupoid in self._groupoids():
                instance = f'{name} over {ring}'
                try:
                    expected = structural(groupoid, ring)
                    found = brute(groupoid, ring, self.caps)
                except CapExceeded as e:
                    suite.cap(instance, e)
                    continue
                ok = expected.decision == found.decision and replay_verdict(found, groupoid, ring) and \
                    replay_verdict(expected, groupoid, ring)
                suite.record(instance, ok, groupoid, groupoid.n_arrows)

    def _suite_prime_oracle(self, suite):
        self._oracle_suite(suite, self.settings['prime_rings'], structural_is_prime, bruteforce_is_prime)

    def _suite_semiprime_oracle(self, suite):
        self._oracle_suite(suite, self.settings['semiprime_rings'], structural_is_semiprime, bruteforce_is_semiprime)

    def _suite_transitivity(self, suite):
        for name, groupoid in self._groupoids():
            try:
                conditions = transitivity_conditions(groupoid)
                transitive = is_topologically_transitive(groupoid)
                dense = has_dense_orbit(groupoid)
                effective = is_effective(groupoid) == is_effective_by_action(groupoid)
            except InternalDisagreement as e:
                suite.record(name, False, groupoid, groupoid.n_arrows, str(e))
                continue
            ok = len(set(conditions.values())) == 1 and dense == transitive and effective
            suite.record(name, ok, groupoid, groupoid.n_arrows)

    def _suite_convolution_laws(self, suite):
        rng = self._rng('convolution_laws')
        for ring_text in self.settings['law_rings']:
            ring = parse_ring(ring_text)
            for k in range(self.settings['law_samples']):
                groupoid = corpus.random_groupoid(rng, self.max_objects, self.max_arrows)
                f, g, h = (corpus.random_element(groupoid, ring, rng) for _ in range(3))
                u, v = corpus.random_bisection(groupoid, rng), corpus.random_bisection(groupoid, rng)
                r = ring.canon(corpus.random_scalar(ring, rng))
                laws = [convolve(convolve(f, g), h) == convolve(f, convolve(g, h)),
                        convolve(f, g + h) == convolve(f, g) + convolve(f, h),
                        convolve(f + g, h) == convolve(f, h) + convolve(g, h),
                        convolve(f * r, g) == convolve(f, g) * r,
                        convolve(indicator(u, ring), indicator(v, ring)) ==
                        indicator(compose_bisections(u, v, groupoid), ring)]
                suite.record(f'sample {k} over {ring}', all(laws), groupoid, groupoid.n_arrows,
                             None if all(laws) else f'laws {[i for i, ok in enumerate(laws) if not ok]} fail')

    def _suite_brandt(self, suite):
        brandt = brandt_semigroup()
        rationals, z2 = parse_ring('Q'), parse_ring('Z/2')
        groupoid = universal_groupoid(brandt, contracted=True)
        checks = {
            'pair groupoid': groupoid.n_objects == 2 and groupoid.n_arrows == 4 and len(orbits(groupoid)) == 1
            and is_effective(groupoid),
            'iso': semigroup_algebra_iso(brandt, rationals, contracted=True, caps=self.caps) is not None,
            'decomposition': matrix_decomposition(groupoid, rationals).describe() == 'M2(Q)',
            'munn prime': munn_prime_verdict(brandt, rationals, contracted=True).decision,
            'brute force Z/2': bruteforce_is_prime(groupoid, z2, self.caps).decision,
        }
        for name, ok in checks.items():
            suite.record(f'B2 {name}', bool(ok), brandt, brandt.order)

    def _suite_semigroup_iso(self, suite):
        for order in range(1, self.settings['semigroup_order'] + 1):
            for i, semigroup in enumerate(enumerate_inverse_semigroups(order)):
                for ring_text in self.settings['iso_rings']:
                    ring = parse_ring(ring_text)
                    modes = [False] + ([True] if semigroup.zero is not None and order > 1 else [])
                    for contracted in modes:
                        instance = f'order {order} #{i} over {ring}{" contracted" if contracted else ""}'
                        try:
                            semigroup_algebra_iso(semigroup, ring, contracted, self.caps)
                        except CapExceeded as e:
                            suite.cap(instance, e)
                            continue
                        except InternalDisagreement as e:
                            suite.record(instance, False, semigroup, order, str(e))
                            continue
                        suite.record(instance, True)

    def _suite_leavitt_acyclic(self, suite):
        rng = self._rng('leavitt_acyclic')
        z2, rationals = parse_ring('Z/2'), parse_ring('Q')
        graphs = list(corpus.exhaustive_acyclic_graphs(self.settings['acyclic_exhaustive_vertices']))
        graphs += [corpus.random_acyclic_graph(rng, self.settings['acyclic_max_vertices'])
                   for _ in range(self.settings['acyclic_random'])]
        for k, graph in enumerate(graphs):
            instance = f'acyclic graph {k}'
            try:
                leavitt = leavitt_prime_verdict(graph, z2, self.caps)
                groupoid = acyclic_graph_groupoid(graph, self.caps)
                structural = structural_is_prime(groupoid, z2)
                shape = len(orbits(groupoid)) == len(graph.sinks()) and is_effective(groupoid)
                relations = leavitt_relations_check(graph, z2, self.caps) and \
                    leavitt_relations_check(graph, rationals, self.caps)
            except CapExceeded as e:
                suite.cap(instance, e)
                continue
            except InternalDisagreement as e:
                suite.record(instance, False, graph, graph.n_edges, str(e))
                continue
            if not (leavitt.decision == structural.decision and shape and relations):
                suite.record(instance, False, graph, graph.n_edges)
                continue
            try:
                brute = bruteforce_is_prime(groupoid, z2, self.caps)
            except CapExceeded as e:
                suite.cap(instance, e)
                continue
            suite.record(instance, brute.decision == leavitt.decision, graph, graph.n_edges)

    def _suite_condition_L(self, suite):
        rng = self._rng('condition_L')
        for k in range(self.settings['cycle_graphs']):
            graph = corpus.random_graph(rng, self.settings['graph_max_vertices'], self.settings['graph_max_edges'])
            instance = f'graph {k}'
            try:
                ok = condition_L(graph)[0] == condition_L_by_cycles(graph)
                transitivity_crosscheck(graph, 2, self.caps)
            except CapExceeded as e:
                suite.cap(instance, e)
                continue
            except InternalDisagreement as e:
                suite.record(instance, False, graph, graph.n_edges, str(e))
                continue
            suite.record(instance, ok, graph, graph.n_edges)

    def _suite_fixtures(self, suite):
        rationals, z2, z4 = parse_ring('Q'), parse_ring('Z/2'), parse_ring('Z/4')
        loop = DirectedGraph(1, *[array([0], dtype=int64)] * 2)
        two_sinks = DirectedGraph(3, array([0, 0], dtype=int64), array([1, 2], dtype=int64))
        c2 = cyclic_group(2)
        c2_groupoid = group_groupoid(c2)
        structural = structural_is_semiprime(c2_groupoid, z2)
        brute = bruteforce_is_semiprime(c2_groupoid, z2, self.caps)
        checks = {
            'bare loop prime over Q': leavitt_prime_verdict(loop, rationals).decision,
            'bare loop not primitive over Q': not leavitt_primitive_verdict(loop, rationals).decision,
            'two sinks not prime': not leavitt_prime_verdict(two_sinks, rationals).decision,
            'bare loop not semiprime over Z/4': not leavitt_semiprime_verdict(z4, loop).decision,
            'two sinks not semiprime over Z/4': not leavitt_semiprime_verdict(z4, two_sinks).decision,
            'C2 over Q not prime': not group_algebra_is_prime(c2, rationals),
            'C2 over Q semiprime': group_algebra_is_semiprime(c2, rationals),
            'C2 over Z/2 not semiprime': not structural.decision and not brute.decision,
            'C2 over Z/2 witnesses replay': replay_verdict(structural, c2_groupoid, z2) and
            replay_verdict(brute, c2_groupoid, z2),
        }
        for name, ok in checks.items():
            suite.record(name, bool(ok))

    def _corpus_digest(self):
        rng = self._rng('determinism')
        groupoids = [dump_structure(corpus.random_groupoid(rng, self.max_objects, self.max_arrows)) for _ in range(20)]
        graphs = [dump_structure(corpus.random_graph(rng)) for _ in range(20)]
        return digest({'groupoids': groupoids, 'graphs': graphs,
                       'exhaustive': [name for name, _ in self._groupoids()]})

    def _suite_determinism(self, suite):
        suite.record('seeded corpus digest', self._corpus_digest() == self._corpus_digest())
