"""
Graph groupoids and Leavitt path algebras: the exact groupoid of an acyclic graph, the Leavitt relations inside its
convolution algebra, and the prime, semiprime and primitive verdicts

GNU GPL v3.0
V0.1 - October 2026
"""
from warnings import warn

import networkx as nx

from pygpa.common import NotAcyclic, NotAField, InternalDisagreement, PrimenessVerdict, resolve_caps, CapExceeded
from pygpa.algebra.rings import is_integral_domain, is_reduced, is_field
from pygpa.algebra.groups import INFINITE_CYCLIC, trivial_group, group_algebra_is_prime
from pygpa.groupoid.groupoids import groupoid_from_composition, Bisection, bisection_inverse, is_effective
from pygpa.groupoid.convolution import AlgebraElem, convolve, indicator, structural_is_prime, structural_is_semiprime
from pygpa.graph.graphs import Path, Cylinder, find_cycle, paths_from, is_downward_directed, condition_L, has_csp, \
    boundary_paths, exit_free_cycle_vertices


__all__ = ['acyclic_graph_groupoid', 'LeavittEmbedding', 'leavitt_embedding', 'leavitt_relations_check',
           'leavitt_prime_verdict', 'leavitt_semiprime_verdict', 'leavitt_primitive_verdict',
           'transitivity_crosscheck', 'is_effective_graph', 'eventually_periodic_isotropy']


def acyclic_graph_groupoid(graph, caps=None):
    """
    The graph groupoid of an acyclic graph, which is finite and discrete.

    Objects are the boundary paths, here the finite paths ending at sinks, empty paths at sinks included. Two of them
    are joined by an arrow (eta, |eta| - |gamma|, gamma) iff they end at the same sink, so the orbits are the sinks
    and all isotropy is trivial.

    Parameters
    ----------
    graph : DirectedGraph
    caps : {None, dict}, optional
        Overrides of the default caps. Uses 'boundary_paths' for the number of objects.

    Returns
    -------
    groupoid : FiniteGroupoid
        Object labels are Paths ordered by (sink, length, start, edges). Arrow labels are (eta, lag, gamma) with eta,
        gamma object indices.

    Raises
    ------
    NotAcyclic
        Witness is the edge ids of a cycle.
    """
    cycle = find_cycle(graph)
    if cycle is not None:
        raise NotAcyclic(*cycle)
    caps = resolve_caps(caps)
    objects = [p for v in range(graph.n_vertices) for p in paths_from(graph, v, graph.n_vertices)
               if graph.is_sink(p.end)]
    if len(objects) > caps['boundary_paths']:
        raise CapExceeded(len(objects), caps['boundary_paths'], 'boundary_paths')
    objects.sort(key=lambda p: (p.end, len(p), p.start, p.edges))

    arrows = []
    for eta_i, eta in enumerate(objects):
        for gamma_i, gamma in enumerate(objects):
            if eta.end == gamma.end:
                arrows.append(((eta_i, len(eta) - len(gamma), gamma_i), gamma_i, eta_i))
    return groupoid_from_composition(len(objects), arrows, lambda a, b: (a[0], a[1] + b[1], b[2]),
                                     object_labels=objects)


class LeavittEmbedding:
    def __init__(self, graph, groupoid, ring):
        """
        Images of the Leavitt generators in the convolution algebra of an acyclic graph groupoid.

        A vertex v goes to the characteristic function of the unit space over the cylinder Z(eps_v), an edge e to that
        of the bisection {(e gamma, 1, gamma) : gamma in Z(eps_r(e))}, and e* to the inverse bisection.

        Parameters
        ----------
        graph : DirectedGraph
        groupoid : FiniteGroupoid
            acyclic_graph_groupoid(graph).
        ring : RingSpec
        """
        self.graph = graph
        self.groupoid = groupoid
        self.ring = ring
        self._index = {(p.start, p.edges): i for i, p in enumerate(groupoid.object_labels)}
        self._arrow = {lab: a for a, lab in enumerate(groupoid.labels)}

    def vertex(self, v):
        cyl = Cylinder(Path(v, (), v))
        objs = [i for i, p in enumerate(self.groupoid.object_labels) if cyl.contains(p)]
        return indicator(Bisection(self.groupoid, [self.groupoid.identities[i] for i in objs]), self.ring)

    def edge_bisection(self, e):
        r = int(self.graph.dst[e])
        s = int(self.graph.src[e])
        arrows = []
        for i, gamma in enumerate(self.groupoid.object_labels):
            if gamma.start == r:
                j = self._index[(s, (int(e),) + gamma.edges)]
                arrows.append(self._arrow[(j, 1, i)])
        return Bisection(self.groupoid, arrows)

    def edge(self, e):
        return indicator(self.edge_bisection(e), self.ring)

    def ghost(self, e):
        return indicator(bisection_inverse(self.edge_bisection(e)), self.ring)

    def zero(self):
        return AlgebraElem(self.groupoid, self.ring)


def leavitt_embedding(graph, ring, caps=None):
    return LeavittEmbedding(graph, acyclic_graph_groupoid(graph, caps), ring)


def leavitt_relations_check(graph, ring, caps=None):
    """
    Verify the Leavitt relations for the images of vertices and edges in the groupoid algebra of an acyclic graph.

    Checks that the vertices are pairwise orthogonal idempotents, that s(e) e = e = e r(e) and
    r(e) e* = e* = e* s(e), that e* f is r(e) when e = f and 0 otherwise, and that v is the sum of e e* over the
    edges leaving v whenever v is not a sink.

    Returns
    -------
    ok : bool
        A failure is reported with a warning.
    """
    emb = leavitt_embedding(graph, ring, caps)
    n, m = graph.n_vertices, graph.n_edges
    verts = [emb.vertex(v) for v in range(n)]
    edges = [emb.edge(e) for e in range(m)]
    ghosts = [emb.ghost(e) for e in range(m)]
    zero = emb.zero()

    def fail(msg):
        warn(f'Leavitt relation fails: {msg}')
        return False

    for v in range(n):
        for w in range(n):
            if convolve(verts[v], verts[w]) != (verts[v] if v == w else zero):
                return fail(f'vertices {v}, {w}')
    for e in range(m):
        s, r = int(graph.src[e]), int(graph.dst[e])
        if not (convolve(verts[s], edges[e]) == edges[e] == convolve(edges[e], verts[r])):
            return fail(f'edge {e} against its endpoints')
        if not (convolve(verts[r], ghosts[e]) == ghosts[e] == convolve(ghosts[e], verts[s])):
            return fail(f'ghost edge {e} against its endpoints')
        for f in range(m):
            if convolve(ghosts[e], edges[f]) != (verts[r] if e == f else zero):
                return fail(f'ghost {e} times edge {f}')
    for v in range(n):
        out = graph.out_edges(v)
        if not out:
            continue
        total = zero
        for e in out:
            total = total + convolve(edges[e], ghosts[e])
        if total != verts[v]:
            return fail(f'vertex {v} against its outgoing edges')
    return True


def leavitt_prime_verdict(graph, ring, caps=None):
    """
    Primeness of the Leavitt path algebra: prime iff R is an integral domain and the graph is downward directed.

    For acyclic graphs the verdict is cross-checked with the structural verdict on the graph groupoid.

    Parameters
    ----------
    graph : DirectedGraph
    ring : RingSpec
    caps : {None, dict}, optional

    Returns
    -------
    verdict : PrimenessVerdict
    """
    domain = is_integral_domain(ring)
    directed, pair = is_downward_directed(graph)
    clauses = {'integral_domain': domain, 'downward_directed': directed}
    if exit_free_cycle_vertices(graph):
        clauses['cyclic_isotropy_prime'] = group_algebra_is_prime(INFINITE_CYCLIC, ring)

    if not domain:
        verdict = PrimenessVerdict(False, 'structural', 'prime', 'coefficient ring is not an integral domain',
                                   {'ring': str(ring), 'condition': 'integral domain'}, clauses)
    elif not directed:
        verdict = PrimenessVerdict(False, 'structural', 'prime', 'graph is not downward directed',
                                   {'vertices': list(pair)}, clauses)
    else:
        verdict = PrimenessVerdict(True, 'structural', 'prime', 'integral domain and downward directed graph', None,
                                   clauses)

    if find_cycle(graph) is None:
        structural = structural_is_prime(acyclic_graph_groupoid(graph, caps), ring)
        if structural.decision != verdict.decision:
            raise InternalDisagreement('Leavitt and graph groupoid prime verdicts disagree')
        verdict.clauses['groupoid_agrees'] = True
    return verdict


def leavitt_semiprime_verdict(ring, graph=None, caps=None):
    """
    Semiprimeness of the Leavitt path algebra: semiprime iff R is reduced, whatever the graph, since Laurent
    polynomials over a reduced ring are reduced.

    Parameters
    ----------
    ring : RingSpec
    graph : {None, DirectedGraph}, optional
        When given and acyclic, the verdict is cross-checked on the graph groupoid.
    caps : {None, dict}, optional

    Returns
    -------
    verdict : PrimenessVerdict
    """
    reduced = is_reduced(ring)
    if reduced:
        verdict = PrimenessVerdict(True, 'structural', 'semiprime', 'coefficient ring is reduced', None,
                                   {'reduced': True})
    else:
        verdict = PrimenessVerdict(False, 'structural', 'semiprime', 'coefficient ring is not reduced',
                                   {'ring': str(ring), 'condition': 'reduced'}, {'reduced': False})
    if graph is not None and find_cycle(graph) is None:
        structural = structural_is_semiprime(acyclic_graph_groupoid(graph, caps), ring)
        if structural.decision != verdict.decision:
            raise InternalDisagreement('Leavitt and graph groupoid semiprime verdicts disagree')
        verdict.clauses['groupoid_agrees'] = True
    return verdict


def leavitt_primitive_verdict(graph, ring):
    """
    Primitivity of the Leavitt path algebra over a field: primitive iff the graph satisfies condition (L), is
    downward directed and has the countable separation property.

    Raises
    ------
    NotAField
        The ring is not Q or Z/p.
    """
    if not is_field(ring):
        raise NotAField(message=f'{ring} is not a field')
    cond_l, cycle = condition_L(graph)
    directed, pair = is_downward_directed(graph)
    csp, separating = has_csp(graph)
    clauses = {'condition_L': cond_l, 'downward_directed': directed, 'csp': csp, 'csp_witness': separating}
    if not cond_l:
        return PrimenessVerdict(False, 'structural', 'primitive', 'a cycle has no exit', {'cycle': cycle}, clauses)
    if not directed:
        return PrimenessVerdict(False, 'structural', 'primitive', 'graph is not downward directed',
                                {'vertices': list(pair)}, clauses)
    return PrimenessVerdict(True, 'structural', 'primitive', 'condition (L), downward directed, countable separation',
                            None, clauses)


def transitivity_crosscheck(graph, depth, caps=None):
    """
    Decide whether some groupoid arrow joins every pair of cylinders Z(alpha), Z(beta) with |alpha|, |beta| <= depth,
    and compare the aggregate with downward directedness.

    An arrow joins the two cylinders iff some vertex is reachable from the ends of both alpha and beta, so the answer
    depends only on the pair of end vertices. The paths of the sample are therefore grouped by end vertex and one pair
    of representatives is tested per pair of ends, not every pair of cylinders. Reachability is computed with
    networkx, independently of :meth:`is_downward_directed`.

    Parameters
    ----------
    graph : DirectedGraph
    depth : int
        At least 1.
    caps : {None, dict}, optional

    Returns
    -------
    joined : bool
    witness : {None, tuple}
        A pair of representative paths whose cylinders no arrow joins.

    Raises
    ------
    InternalDisagreement
        The aggregate differs from downward directedness.
    """
    if depth < 1:
        raise ValueError('Depth must be at least 1.')
    nx_graph = graph.to_networkx()
    reach = {v: nx.descendants(nx_graph, v) | {v} for v in range(graph.n_vertices)}
    paths = boundary_paths(graph, depth, caps).closure
    by_end = {}
    for p in paths:
        by_end.setdefault(p.end, p)

    joined, witness = True, None
    ends = sorted(by_end)
    for i, u in enumerate(ends):
        for v in ends[i:]:
            if not reach[u] & reach[v]:
                joined, witness = False, (str(by_end[u]), str(by_end[v]))
                break
        if not joined:
            break
    if joined != is_downward_directed(graph)[0]:
        raise InternalDisagreement('cylinder transitivity and downward directedness disagree')
    return joined, witness


def is_effective_graph(graph):
    """
    Whether the graph groupoid is effective, which is condition (L). Cross-checked on the groupoid for acyclic graphs.
    """
    holds = condition_L(graph)[0]
    if find_cycle(graph) is None and holds != is_effective(acyclic_graph_groupoid(graph)):
        raise InternalDisagreement('condition (L) and groupoid effectiveness disagree')
    return holds


def eventually_periodic_isotropy(graph, path):
    """
    Isotropy group at the boundary paths extending a finite path.

    Returns
    -------
    group : {FiniteGroup, InfiniteCyclic, None}
        Trivial when the path ends at a sink, infinite cyclic when it has reached an exit-free cycle (its continuation
        is then eventually periodic), None when the prefix does not decide it.
    """
    if graph.is_sink(path.end):
        return trivial_group()
    on_free_cycle = {int(graph.dst[e]) for cycle in exit_free_cycle_vertices(graph) for e in cycle}
    if path.end in on_free_cycle:
        return INFINITE_CYCLIC
    return None
