"""
Seeded generators of test corpora: small groups, exhaustive and random finite groupoids, random bisections and
elements, random and exhaustive acyclic graphs, random graphs

GNU GPL v3.0
V0.1 - October 2026
"""
from fractions import Fraction
from itertools import combinations

from numpy import array, int64
from numpy.random import default_rng

from pygpa.algebra.groups import trivial_group, cyclic_group, direct_product, symmetric_group, dihedral_group, \
    quaternion_group
from pygpa.groupoid.groupoids import transitive_groupoid, disjoint_union, relabel_groupoid, Bisection
from pygpa.groupoid.convolution import AlgebraElem
from pygpa.graph.graphs import DirectedGraph


__all__ = ['small_groups', 'block_candidates', 'exhaustive_groupoids', 'random_groupoid', 'random_bisection',
           'random_scalar', 'random_element', 'random_graph', 'random_acyclic_graph', 'exhaustive_acyclic_graphs']


def small_groups(max_order=8):
    """
    One group from each isomorphism class of order at most 8.

    Returns
    -------
    groups : list of tuple
        (name, FiniteGroup), ordered by order.
    """
    c2 = cyclic_group(2)
    groups = [('C1', trivial_group()), ('C2', c2), ('C3', cyclic_group(3)), ('C4', cyclic_group(4)),
              ('C2xC2', direct_product(c2, c2)), ('C5', cyclic_group(5)), ('C6', cyclic_group(6)),
              ('S3', symmetric_group(3)), ('C7', cyclic_group(7)), ('C8', cyclic_group(8)),
              ('C4xC2', direct_product(cyclic_group(4), c2)), ('C2xC2xC2', direct_product(direct_product(c2, c2), c2)),
              ('D4', dihedral_group(4)), ('Q8', quaternion_group())]
    return [(name, g) for name, g in groups if g.order <= max_order]


def block_candidates(max_objects=3, max_arrows=8):
    """
    Transitive blocks n x n x G that fit the bounds, as (n, group name, group).
    """
    groups = small_groups(max_arrows)
    return [(n, name, g) for n in range(1, max_objects + 1) for name, g in groups if n * n * g.order <= max_arrows]


def exhaustive_groupoids(max_objects=3, max_arrows=8):
    """
    Every finite groupoid with at most max_objects objects and max_arrows arrows, up to isomorphism.

    A finite groupoid is the disjoint union of its transitive components, each isomorphic to n x n x G. The corpus
    lists the multisets of such blocks within the bounds.

    Yields
    ------
    name : str
        Eg '2xC1+1xC2'.
    groupoid : FiniteGroupoid
    """
    blocks = block_candidates(max_objects, max_arrows)

    def extend(start, chosen, objects, arrows):
        if chosen:
            yield chosen
        for i in range(start, len(blocks)):
            n, _, g = blocks[i]
            if objects + n <= max_objects and arrows + n * n * g.order <= max_arrows:
                yield from extend(i, chosen + [i], objects + n, arrows + n * n * g.order)

    for chosen in extend(0, [], 0, 0):
        name = '+'.join(f'{blocks[i][0]}x{blocks[i][1]}' for i in chosen)
        yield name, disjoint_union(*[transitive_groupoid(blocks[i][0], blocks[i][2]) for i in chosen])


def random_groupoid(rng=None, max_objects=3, max_arrows=8):
    """
    A random groupoid within the bounds, built from random blocks and then randomly relabelled.

    Parameters
    ----------
    rng : {None, int, numpy.random.Generator}, optional
        Generator or seed.
    """
    rng = default_rng(rng)
    blocks = block_candidates(max_objects, max_arrows)
    chosen, objects, arrows = [], 0, 0
    while True:
        fits = [b for b in blocks if objects + b[0] <= max_objects and arrows + b[0] ** 2 * b[2].order <= max_arrows]
        if not fits or (chosen and rng.random() < 0.4):
            break
        n, _, g = fits[rng.integers(len(fits))]
        chosen.append(transitive_groupoid(n, g))
        objects, arrows = objects + n, arrows + n * n * g.order
    groupoid = disjoint_union(*chosen)
    return relabel_groupoid(groupoid, rng.permutation(groupoid.n_objects), rng.permutation(groupoid.n_arrows))


def random_bisection(groupoid, rng=None, density=0.5):
    """
    A random bisection: arrows are visited in random order and kept with probability `density` when their source and
    range are still free.
    """
    rng = default_rng(rng)
    used_src, used_dst, arrows = set(), set(), []
    for g in rng.permutation(groupoid.n_arrows):
        s, d = int(groupoid.src[g]), int(groupoid.dst[g])
        if s not in used_src and d not in used_dst and rng.random() < density:
            arrows.append(int(g))
            used_src.add(s)
            used_dst.add(d)
    return Bisection(groupoid, arrows)


def random_scalar(ring, rng):
    if ring.is_finite:
        return int(rng.integers(ring.modulus))
    if ring.kind == 'Q':
        return Fraction(int(rng.integers(-3, 4)), int(rng.integers(1, 4)))
    if ring.kind == 'Laurent':
        return {int(rng.integers(-2, 3)): random_scalar(ring.base, rng) for _ in range(int(rng.integers(1, 3)))}
    return int(rng.integers(-3, 4))


def random_element(groupoid, ring, rng=None, density=0.5):
    """
    A random element of R G, each arrow in the support with probability `density`.
    """
    rng = default_rng(rng)
    coeffs = {g: random_scalar(ring, rng) for g in range(groupoid.n_arrows) if rng.random() < density}
    return AlgebraElem(groupoid, ring, coeffs)


def random_graph(rng=None, max_vertices=8, max_edges=16):
    """
    A random graph with loops and parallel edges allowed.
    """
    rng = default_rng(rng)
    n = int(rng.integers(1, max_vertices + 1))
    m = int(rng.integers(0, max_edges + 1))
    return DirectedGraph(n, rng.integers(0, n, m).astype(int64), rng.integers(0, n, m).astype(int64))


def random_acyclic_graph(rng=None, max_vertices=6, max_edges=6):
    """
    A random acyclic graph: edges go forward in a random vertex order, parallel edges allowed.
    """
    rng = default_rng(rng)
    n = int(rng.integers(1, max_vertices + 1))
    order = rng.permutation(n)
    src, dst = [], []
    if n > 1:
        for _ in range(int(rng.integers(0, max_edges + 1))):
            i, j = sorted(rng.choice(n, size=2, replace=False))
            src.append(int(order[i]))
            dst.append(int(order[j]))
    return DirectedGraph(n, array(src, dtype=int64), array(dst, dtype=int64))


def exhaustive_acyclic_graphs(max_vertices=4):
    """
    Every simple acyclic graph whose edges go from lower to higher vertex, for 1 to max_vertices vertices.

    Every simple acyclic graph is isomorphic to one of these.
    """
    for n in range(1, max_vertices + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(2 ** len(pairs)):
            chosen = [p for k, p in enumerate(pairs) if mask >> k & 1]
            yield DirectedGraph(n, array([p[0] for p in chosen], dtype=int64),
                                array([p[1] for p in chosen], dtype=int64))
