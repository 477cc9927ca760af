"""
Example code for deciding primeness of groupoid, inverse semigroup and Leavitt path algebras.

GNU GPL v3.0
V0.1 - October 2026
"""
from numpy import array, int64

import pygpa as pg
from pygpa.algebra import cyclic_group, symmetric_group
from pygpa.groupoid import pair_groupoid, group_groupoid, disjoint_union, transitive_groupoid
from pygpa.semigroup import brandt_semigroup, chain_semilattice
from pygpa.graph import DirectedGraph


def summarize(name, report, props=('prime', 'semiprime')):
    verdicts = []
    for prop in props:
        verdict = report[prop]
        if prop in verdict:
            verdicts.append(f'{prop}={verdict[prop]} ({verdict["reason"]})')
        else:
            verdicts.append(f'{prop} {verdict["status"]}: {verdict["reason"]}')
    print(f'{name}:\n  ' + '\n  '.join(verdicts))


# groupoid algebras, cross-checked by brute force over Z/2
groupoid_analysis = pg.GroupoidAnalysis(ring='Z/2', oracle=True, verbose=False)
groupoids = {
    'pair groupoid on 2 objects': pair_groupoid(2),
    'C2 as a groupoid': group_groupoid(cyclic_group(2)),
    'two points': disjoint_union(pair_groupoid(1), pair_groupoid(1)),
    '2 x 2 x S3': transitive_groupoid(2, symmetric_group(3)),
}
for name, g in groupoids.items():
    report = groupoid_analysis.analyze(g)
    summarize(name, report)
    print(f'  decomposition: {report["decomposition"]["description"]}')
    print(f'  oracle agreement: {report["oracle"]["prime"]["agreement"]}')

# inverse semigroup algebras through their universal groupoids
for contracted in (False, True):
    report = pg.SemigroupAnalysis(ring='Q', contracted=contracted, iso=True, verbose=False).analyze(brandt_semigroup())
    summarize(f'Brandt B2{" (contracted)" if contracted else ""}', report)
    print(f'  universal groupoid algebra: {report["iso"]["decomposition"]}')

report = pg.SemigroupAnalysis(ring='Q', verbose=False).analyze(chain_semilattice(3))
summarize('3-chain semilattice', report)

# Leavitt path algebras over Q
graphs = {
    'bare loop': DirectedGraph(1, array([0], dtype=int64), array([0], dtype=int64)),
    'loop with an exit': DirectedGraph(2, array([0, 0], dtype=int64), array([0, 1], dtype=int64)),
    'two sinks': DirectedGraph(3, array([0, 0], dtype=int64), array([1, 2], dtype=int64)),
}
graph_analysis = pg.GraphAnalysis(ring='Q', depth=3, verbose=False)
for name, graph in graphs.items():
    report = graph_analysis.analyze(graph)
    summarize(name, report, ('prime', 'semiprime', 'primitive'))
    print(f'  boundary paths to depth 3: {[m["path"] for m in report["boundary_paths"]["members"]]}')

# the agreement suites that run in a few seconds
corpus = pg.CorpusAnalysis(seed=42, max_objects=2, max_arrows=4, verbose=False,
                           settings={'suites': ('prime_oracle', 'semiprime_oracle', 'transitivity', 'fixtures')})
result = corpus.run()
print(f'corpus: {result["total"]}, ok={result["ok"]}')
