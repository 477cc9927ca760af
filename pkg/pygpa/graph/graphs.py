"""
Finite directed graphs: downward directedness, condition (L), countable separation, finite paths, cylinders and
truncated samples of the boundary path space

GNU GPL v3.0
V0.1 - October 2026
"""
from dataclasses import dataclass

from numpy import array, int64, ones, isfinite, bincount, where
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path, connected_components
import networkx as nx

from pygpa.common import CapExceeded, resolve_caps


__all__ = ['DirectedGraph', 'Path', 'Cylinder', 'PathSpaceSample', 'validate_graph', 'reachability',
           'is_downward_directed', 'condition_L', 'condition_L_by_cycles', 'exit_free_cycle_vertices', 'has_csp',
           'is_csp_witness', 'find_cycle', 'is_acyclic', 'paths_from', 'boundary_paths']


class DirectedGraph:
    def __init__(self, n_vertices, src, dst):
        """
        Finite directed graph, parallel edges and loops allowed.

        Parameters
        ----------
        n_vertices : int
            Number of vertices.
        src, dst : numpy.ndarray
            (n_edges, ) source s(e) and range r(e) of each edge.
        """
        self.n_vertices = int(n_vertices)
        self.src = src
        self.dst = dst

    @property
    def n_edges(self):
        return self.src.size

    @property
    def out_degree(self):
        return bincount(self.src, minlength=self.n_vertices)

    def out_edges(self, v):
        return [int(e) for e in where(self.src == v)[0]]

    def sinks(self):
        return [int(v) for v in where(self.out_degree == 0)[0]]

    def is_sink(self, v):
        return int(self.out_degree[v]) == 0

    def adjacency(self):
        """
        Sparse (n, n) adjacency matrix counting parallel edges.
        """
        n = self.n_vertices
        return csr_matrix((ones(self.n_edges), (self.src, self.dst)), shape=(n, n))

    def to_networkx(self):
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(range(self.n_vertices))
        for e in range(self.n_edges):
            graph.add_edge(int(self.src[e]), int(self.dst[e]), key=e)
        return graph

    def to_json(self):
        return {'vertices': self.n_vertices,
                'edges': [{'src': int(s), 'dst': int(d)} for s, d in zip(self.src, self.dst)]}

    def __repr__(self):
        return f'DirectedGraph(vertices={self.n_vertices}, edges={self.n_edges})'


@dataclass(frozen=True)
class Path:
    """
    A finite path. The empty path at v has start v and no edges.

    Attributes
    ----------
    start : int
        Source vertex.
    edges : tuple
        Edge ids, each starting where the previous one ends.
    end : int
        Range vertex.
    """
    start: int
    edges: tuple
    end: int

    def __len__(self):
        return len(self.edges)

    @property
    def is_empty(self):
        return len(self.edges) == 0

    def extend(self, graph, e):
        if int(graph.src[e]) != self.end:
            raise ValueError(f'Edge {e} does not start at {self.end}.')
        return Path(self.start, self.edges + (int(e),), int(graph.dst[e]))

    def is_prefix_of(self, other):
        return self.start == other.start and other.edges[:len(self.edges)] == self.edges

    def vertices(self, graph):
        return [self.start] + [int(graph.dst[e]) for e in self.edges]

    def to_json(self):
        return {'start': self.start, 'edges': list(self.edges)}

    def __str__(self):
        return f'eps_{self.start}' if self.is_empty else '.'.join(f'e{e}' for e in self.edges)


@dataclass(frozen=True)
class Cylinder:
    """
    Basic open set Z(alpha) minus the cylinders of some one-edge extensions of alpha.

    Attributes
    ----------
    base : Path
        alpha.
    excluded : tuple
        Edges e with alpha e removed, each starting at the end of alpha.
    """
    base: Path
    excluded: tuple = ()

    def contains(self, path):
        """
        Whether a boundary path (or a prefix standing for its extensions) lies in the set.
        """
        if not self.base.is_prefix_of(path):
            return False
        k = len(self.base)
        return not (len(path) > k and path.edges[k] in self.excluded)

    def members(self, paths):
        return [p for p in paths if self.contains(p)]


@dataclass
class PathSpaceSample:
    """
    Boundary paths seen to depth k.

    Attributes
    ----------
    depth : int
        k.
    members : list of tuple
        (path, kind, periodicity) with kind 'complete' for paths ending at a sink of length at most k and 'prefix'
        for length-k prefixes of longer boundary paths. Periodicity is 'finite' for complete paths, and
        'eventually-periodic' or 'unknown' for prefixes.
    closure : list of Path
        Every path of length at most k, ordered by length then edges.
    """
    depth: int
    members: list
    closure: list

    @property
    def complete(self):
        return [p for p, kind, _ in self.members if kind == 'complete']

    @property
    def prefixes(self):
        return [p for p, kind, _ in self.members if kind == 'prefix']

    def to_json(self):
        return {'depth': self.depth,
                'members': [{'path': p.to_json(), 'kind': kind, 'periodicity': per} for p, kind, per in self.members]}


def validate_graph(data):
    """
    Build a graph from {'vertices': n, 'edges': [{'src': i, 'dst': j}, ...]}.
    """
    try:
        n = int(data['vertices'])
        edges = data['edges']
    except KeyError as e:
        raise ValueError(f'Graph data is missing the {e} key.')
    if n < 1:
        raise ValueError('A graph needs at least one vertex.')
    src = array([e['src'] for e in edges], dtype=int64)
    dst = array([e['dst'] for e in edges], dtype=int64)
    if src.size and (min(src.min(), dst.min()) < 0 or max(src.max(), dst.max()) >= n):
        raise ValueError('Edge endpoints must be valid vertices.')
    return DirectedGraph(n, src, dst)


def reachability(graph):
    """
    Reflexive-transitive reachability, reach[u, v] iff there is a path from u to v.
    """
    dist = shortest_path(graph.adjacency(), directed=True, unweighted=True)
    return isfinite(dist)


def is_downward_directed(graph):
    """
    Whether every two vertices reach a common vertex.

    Returns
    -------
    directed : bool
    witness : {None, tuple}
        First pair (u, v) with disjoint sets of reachable vertices.
    """
    reach = reachability(graph)
    n = graph.n_vertices
    for u in range(n):
        for v in range(u + 1, n):
            if not (reach[u] & reach[v]).any():
                return False, (u, v)
    return True, None


def exit_free_cycle_vertices(graph):
    """
    Cycles without an exit, found by following the unique out-edge of out-degree 1 vertices.

    Returns
    -------
    cycles : list of list
        Edge ids of each exit-free cycle, starting at its smallest vertex.
    """
    degree = graph.out_degree
    succ = {}
    for v in range(graph.n_vertices):
        if degree[v] == 1:
            e = graph.out_edges(v)[0]
            if degree[graph.dst[e]] == 1:
                succ[v] = e

    cycles, state = [], {}  # 1 on the current walk, 2 finished
    for start in range(graph.n_vertices):
        walk, v = [], start
        while v in succ and v not in state:
            state[v] = 1
            walk.append(v)
            v = int(graph.dst[succ[v]])
        if v in state and state[v] == 1:
            cycle = walk[walk.index(v):]
            first = cycle.index(min(cycle))
            cycle = cycle[first:] + cycle[:first]
            cycles.append([succ[u] for u in cycle])
        for u in walk:
            state[u] = 2
    return sorted(cycles)


def condition_L(graph):
    """
    Whether every cycle has an exit.

    A cycle has no exit iff all its vertices have out-degree 1, so it is enough to look for cycles among the out-degree
    1 vertices.

    Returns
    -------
    holds : bool
    witness : {None, list}
        Edge ids of an exit-free cycle.
    """
    cycles = exit_free_cycle_vertices(graph)
    return (False, cycles[0]) if cycles else (True, None)


def condition_L_by_cycles(graph):
    """
    Condition (L) by enumerating all simple cycles and checking each for a vertex of out-degree at least 2.
    """
    degree = graph.out_degree
    simple = nx.DiGraph()
    simple.add_nodes_from(range(graph.n_vertices))
    simple.add_edges_from(zip(graph.src.tolist(), graph.dst.tolist()))
    for cycle in nx.simple_cycles(simple):
        if all(degree[v] == 1 for v in cycle):
            return False
    return True


def has_csp(graph):
    """
    Countable separation: a countable vertex set X that every vertex reaches. Always true for a finite graph.

    Returns
    -------
    holds : bool
    witness : list
        One vertex, the smallest, from every strongly connected component with no edge leaving it. Every vertex
        reaches such a component, and each one needs a representative.
    """
    _, comp = connected_components(graph.adjacency(), directed=True, connection='strong')
    terminal = set(comp.tolist())
    for s, d in zip(graph.src, graph.dst):
        if comp[s] != comp[d]:
            terminal.discard(comp[s])
    witness = sorted(min(v for v in range(graph.n_vertices) if comp[v] == c) for c in terminal)
    if not is_csp_witness(graph, witness):
        raise AssertionError('terminal components do not separate the graph')
    return True, witness


def is_csp_witness(graph, vertices):
    """
    Whether every vertex reaches some vertex of the set.
    """
    reach = reachability(graph)
    vertices = list(vertices)
    return bool(vertices) and all(reach[v, vertices].any() for v in range(graph.n_vertices))


def find_cycle(graph):
    """
    Edge ids of some cycle, or None for an acyclic graph.
    """
    try:
        cycle = nx.find_cycle(graph.to_networkx(), orientation='original')
    except nx.NetworkXNoCycle:
        return None
    return [int(key) for _, _, key, _ in cycle]


def is_acyclic(graph):
    return find_cycle(graph) is None


def _walk(graph, v, depth):
    stack = [Path(int(v), (), int(v))]
    while stack:
        path = stack.pop()
        yield path
        if len(path) < depth:
            stack.extend(path.extend(graph, e) for e in reversed(graph.out_edges(path.end)))


def paths_from(graph, v, depth):
    """
    All paths of length at most depth starting at v, in depth-first edge order.
    """
    return list(_walk(graph, v, depth))


def boundary_paths(graph, depth, caps=None):
    """
    Sample the boundary path space to a given depth.

    Boundary paths of a finite graph are the finite paths ending at sinks and the infinite paths. Finite ones of
    length at most k are listed as complete; longer ones and infinite ones are represented by their length-k prefixes.
    A prefix is flagged eventually periodic when it repeats a vertex and ends on an exit-free cycle, which fixes its
    continuation.

    Parameters
    ----------
    graph : DirectedGraph
    depth : int
        k, at least 0.
    caps : {None, dict}, optional
        Overrides of the default caps. Uses 'boundary_paths' for the closure size, checked as paths are
        enumerated.

    Returns
    -------
    sample : PathSpaceSample
    """
    if depth < 0:
        raise ValueError('Depth must be non-negative.')
    caps = resolve_caps(caps)
    on_free_cycle = {int(graph.dst[e]) for cycle in exit_free_cycle_vertices(graph) for e in cycle}

    closure = []
    for v in range(graph.n_vertices):
        for path in _walk(graph, v, depth):
            closure.append(path)
            if len(closure) > caps['boundary_paths']:
                raise CapExceeded(len(closure), caps['boundary_paths'], 'boundary_paths')
    closure.sort(key=lambda p: (len(p), p.start, p.edges))

    members = []
    for p in closure:
        if graph.is_sink(p.end):
            members.append((p, 'complete', 'finite'))
        elif len(p) == depth:
            verts = p.vertices(graph)
            periodic = p.end in on_free_cycle and len(set(verts)) < len(verts)
            members.append((p, 'prefix', 'eventually-periodic' if periodic else 'unknown'))
    return PathSpaceSample(depth=depth, members=members, closure=closure)
