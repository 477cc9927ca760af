"""
Finite discrete groupoids: validation, builders, orbits, isotropy, invariant sets, transitivity, effectiveness,
bisections and the action and germ groupoid constructions

GNU GPL v3.0
V0.1 - October 2026
"""
from collections import deque
from dataclasses import dataclass

from numpy import array, full, int64, zeros, arange, where, ones, unique
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from pygpa.common import BadComposability, NotAssociative, MissingIdentity, MissingInverse, NotAnAction, Degenerate, \
    ValidationError, InternalDisagreement
from pygpa.algebra.groups import validate_group, trivial_group


__all__ = ['FiniteGroupoid', 'OrbitPartition', 'Bisection', 'validate_groupoid', 'groupoid_from_composition',
           'transitive_groupoid', 'pair_groupoid', 'group_groupoid', 'disjoint_union', 'relabel_groupoid', 'orbits',
           'isotropy_group', 'invariant_saturation', 'is_invariant', 'invariant_sets', 'is_effective',
           'is_topologically_transitive', 'transitivity_conditions', 'dense_orbits', 'has_dense_orbit',
           'identity_bisection', 'compose_bisections', 'bisection_inverse', 'bisection_action',
           'is_effective_by_action', 'action_groupoid', 'is_topologically_free', 'germ_groupoid']


class FiniteGroupoid:
    def __init__(self, n_objects, src, dst, comp, identities, inverse, labels=None, object_labels=None):
        """
        Certified finite discrete groupoid. Build with :meth:`validate_groupoid` or one of the builders.

        Parameters
        ----------
        n_objects : int
            Number of objects.
        src, dst : numpy.ndarray
            (m, ) source d(g) and range r(g) of each arrow.
        comp : numpy.ndarray
            (m, m) composition, comp[g, h] = g h, defined iff src[g] == dst[h], -1 otherwise.
        identities : numpy.ndarray
            (n_objects, ) identity arrow of each object.
        inverse : numpy.ndarray
            (m, ) inverse arrow of each arrow.
        labels : {None, list}, optional
            Names of the arrows, eg germs or graph triples.
        object_labels : {None, list}, optional
            Names of the objects.
        """
        self.n_objects = int(n_objects)
        self.src = src
        self.dst = dst
        self.comp = comp
        self.identities = identities
        self.inverse = inverse
        self.labels = labels
        self.object_labels = object_labels

    @property
    def n_arrows(self):
        return self.src.size

    def compose(self, g, h):
        """
        g h, or None when src(g) != dst(h).
        """
        c = int(self.comp[g, h])
        return None if c < 0 else c

    def is_identity(self, g):
        return int(self.identities[self.src[g]]) == g

    def arrows_between(self, x, y):
        """
        Arrows from x to y, in increasing id order.
        """
        return [int(g) for g in where((self.src == x) & (self.dst == y))[0]]

    def same_carrier(self, other):
        if self is other:
            return True
        return (isinstance(other, FiniteGroupoid) and self.n_objects == other.n_objects
                and self.n_arrows == other.n_arrows and (self.comp == other.comp).all()
                and (self.src == other.src).all() and (self.dst == other.dst).all())

    def to_json(self):
        return {'objects': self.n_objects,
                'arrows': [{'src': int(s), 'dst': int(d)} for s, d in zip(self.src, self.dst)],
                'compose': [[None if c < 0 else int(c) for c in row] for row in self.comp]}

    def __repr__(self):
        return f'FiniteGroupoid(objects={self.n_objects}, arrows={self.n_arrows})'


@dataclass(frozen=True)
class OrbitPartition:
    """
    Orbits of a groupoid.

    Attributes
    ----------
    blocks : tuple of tuple
        Disjoint object sets covering all objects, ordered by their smallest object.
    representatives : tuple
        Smallest object of each block.
    block_of : tuple
        Block index of each object.
    """
    blocks: tuple
    representatives: tuple
    block_of: tuple

    def __len__(self):
        return len(self.blocks)

    def to_json(self):
        return [list(b) for b in self.blocks]


def _certify(n_objects, src, dst, comp, identities=None, inverse=None, labels=None, object_labels=None):
    m = src.size
    if n_objects < 1:
        raise ValueError('A groupoid needs at least one object.')
    if m and (src.min() < 0 or dst.min() < 0 or src.max() >= n_objects or dst.max() >= n_objects):
        raise ValueError('Arrow endpoints must be valid objects.')
    if comp.shape != (m, m):
        raise ValueError(f'Composition table must be ({m}, {m}), got {comp.shape}.')
    if m and (comp.min() < -1 or comp.max() >= m):
        raise ValueError('Composition entries must be arrow ids or undefined.')

    # defined exactly on composable pairs, with the right endpoints
    composable = src[:, None] == dst[None, :]
    defined = comp >= 0
    bad = where(composable != defined)
    if bad[0].size:
        raise BadComposability(bad[0][0], bad[1][0])
    g_idx, h_idx = where(defined)
    ends = (src[comp[g_idx, h_idx]] != src[h_idx]) | (dst[comp[g_idx, h_idx]] != dst[g_idx])
    if ends.any():
        k = where(ends)[0][0]
        raise BadComposability(g_idx[k], h_idx[k], message=f'composite of ({g_idx[k]}, {h_idx[k]}) has wrong endpoints')

    # associativity wherever defined, one left factor at a time
    for g in range(m):
        hs = where(comp[g] >= 0)[0]
        if not hs.size:
            continue
        hk = comp[hs]  # (h k) for h composable with g
        mask = hk >= 0
        left = comp[comp[g, hs]]  # ((g h) k)
        right = where(mask, comp[g][where(mask, hk, 0)], -1)
        bad = where(mask & (left != right))
        if bad[0].size:
            raise NotAssociative(g, hs[bad[0][0]], bad[1][0])

    if identities is None:
        identities = full(n_objects, -1, dtype=int64)
        for x in range(n_objects):
            for g in where((src == x) & (dst == x))[0]:
                into, out_of = where(dst == x)[0], where(src == x)[0]
                if (comp[g, into] == into).all() and (comp[out_of, g] == out_of).all():
                    identities[x] = g
                    break
    for x in range(n_objects):
        g = identities[x]
        if not 0 <= g < m or src[g] != x or dst[g] != x:
            raise MissingIdentity(x)
        into, out_of = where(dst == x)[0], where(src == x)[0]
        if not ((comp[g, into] == into).all() and (comp[out_of, g] == out_of).all()):
            raise MissingIdentity(x)

    if inverse is None:
        inverse = full(m, -1, dtype=int64)
        for g in range(m):
            cand = where((comp[g, :] == identities[dst[g]]) & (comp[:, g] == identities[src[g]]))[0]
            if cand.size:
                inverse[g] = cand[0]
    for g in range(m):
        h = inverse[g]
        if not 0 <= h < m or comp[g, h] != identities[dst[g]] or comp[h, g] != identities[src[g]]:
            raise MissingInverse(g)

    return FiniteGroupoid(n_objects, src, dst, comp, identities, inverse, labels=labels, object_labels=object_labels)


def validate_groupoid(data):
    """
    Certify raw groupoid data.

    Parameters
    ----------
    data : dict
        {'objects': n, 'arrows': [{'src': i, 'dst': j}, ...], 'compose': [[...], ...]}. Undefined composites are None
        or -1. Optional 'identities' (per object) and 'inverses' (per arrow) are inferred when absent, and validated
        either way.

    Returns
    -------
    groupoid : FiniteGroupoid

    Raises
    ------
    BadComposability
        A composite is defined across mismatched endpoints, missing on a composable pair, or lands on the wrong
        endpoints.
    NotAssociative
        Witness (g, h, k).
    MissingIdentity
        Witness is the object.
    MissingInverse
        Witness is the arrow.
    """
    try:
        n = int(data['objects'])
        arrows = data['arrows']
        compose = data['compose']
    except KeyError as e:
        raise ValueError(f'Groupoid data is missing the {e} key.')
    src = array([a['src'] for a in arrows], dtype=int64)
    dst = array([a['dst'] for a in arrows], dtype=int64)
    comp = array([[-1 if c is None else c for c in row] for row in compose], dtype=int64)
    if comp.size == 0:
        comp = comp.reshape(len(arrows), len(arrows))
    identities = data.get('identities', None)
    inverses = data.get('inverses', None)
    return _certify(n, src, dst, comp,
                    identities=None if identities is None else array(identities, dtype=int64),
                    inverse=None if inverses is None else array(inverses, dtype=int64))


def groupoid_from_composition(n_objects, arrows, compose, object_labels=None):
    """
    Build and certify a groupoid from labelled arrows and a composition rule on labels.

    Parameters
    ----------
    n_objects : int
        Number of objects.
    arrows : list of tuple
        (label, src, dst) for each arrow. Labels must be hashable and distinct.
    compose : callable
        compose(label_g, label_h) -> label of g h, called only when src(g) == dst(h).
    object_labels : {None, list}, optional

    Returns
    -------
    groupoid : FiniteGroupoid
    """
    labels = [a[0] for a in arrows]
    lookup = {lab: i for i, lab in enumerate(labels)}
    if len(lookup) != len(labels):
        raise ValueError('Arrow labels must be distinct.')
    src = array([a[1] for a in arrows], dtype=int64)
    dst = array([a[2] for a in arrows], dtype=int64)
    m = len(arrows)
    comp = full((m, m), -1, dtype=int64)
    for g in range(m):
        for h in where(dst == src[g])[0]:
            comp[g, h] = lookup[compose(labels[g], labels[h])]
    return _certify(n_objects, src, dst, comp, labels=labels, object_labels=object_labels)


def transitive_groupoid(n, group):
    """
    The transitive groupoid n x n x G: arrows (y, g, x) from x to y, composed (z, g, y)(y, h, x) = (z, gh, x).

    Parameters
    ----------
    n : int
        Number of objects.
    group : FiniteGroup
        Isotropy group.

    Returns
    -------
    groupoid : FiniteGroupoid
    """
    arrows = [((y, g, x), x, y) for y in range(n) for x in range(n) for g in range(group.order)]
    # identities first inside each (y, x) block
    arrows.sort(key=lambda a: (a[0][0], a[0][2], a[0][1] != group.identity, a[0][1]))
    return groupoid_from_composition(n, arrows, lambda a, b: (a[0], group.mul(a[1], b[1]), b[2]))


def pair_groupoid(n):
    """
    The pair groupoid on n objects: exactly one arrow between any ordered pair.
    """
    return transitive_groupoid(n, trivial_group())


def group_groupoid(group):
    """
    A group as a one-object groupoid.
    """
    return transitive_groupoid(1, group)


def disjoint_union(*groupoids):
    """
    Disjoint union, objects and arrows of later summands shifted past the earlier ones.
    """
    if not groupoids:
        raise ValueError('Need at least one groupoid.')
    n = sum(g.n_objects for g in groupoids)
    m = sum(g.n_arrows for g in groupoids)
    src, dst = zeros(m, dtype=int64), zeros(m, dtype=int64)
    comp = full((m, m), -1, dtype=int64)
    identities, inverse = zeros(n, dtype=int64), zeros(m, dtype=int64)
    o_off = a_off = 0
    for g in groupoids:
        sl = slice(a_off, a_off + g.n_arrows)
        src[sl], dst[sl] = g.src + o_off, g.dst + o_off
        comp[sl, sl] = where(g.comp >= 0, g.comp + a_off, -1)
        identities[o_off:o_off + g.n_objects] = g.identities + a_off
        inverse[sl] = g.inverse + a_off
        o_off += g.n_objects
        a_off += g.n_arrows
    return _certify(n, src, dst, comp, identities=identities, inverse=inverse)


def relabel_groupoid(groupoid, object_perm, arrow_perm):
    """
    Isomorphic copy with object x renamed object_perm[x] and arrow g renamed arrow_perm[g].
    """
    object_perm, arrow_perm = array(object_perm, dtype=int64), array(arrow_perm, dtype=int64)
    m = groupoid.n_arrows
    src, dst = zeros(m, dtype=int64), zeros(m, dtype=int64)
    src[arrow_perm], dst[arrow_perm] = object_perm[groupoid.src], object_perm[groupoid.dst]
    comp = full((m, m), -1, dtype=int64)
    comp[arrow_perm[:, None], arrow_perm[None, :]] = where(groupoid.comp >= 0, arrow_perm[groupoid.comp], -1)
    return _certify(groupoid.n_objects, src, dst, comp)


# ---- orbits, isotropy, invariance ----
def orbits(groupoid):
    """
    Orbits as the connected components of the object graph with an edge d(g) - r(g) for every arrow.

    Parameters
    ----------
    groupoid : FiniteGroupoid

    Returns
    -------
    partition : OrbitPartition
    """
    n = groupoid.n_objects
    graph = csr_matrix((ones(groupoid.n_arrows), (groupoid.src, groupoid.dst)), shape=(n, n))
    _, comp_labels = connected_components(graph, directed=True, connection='weak')

    # renumber so blocks are ordered by smallest object
    _, first = unique(comp_labels, return_index=True)
    order = sorted(first)
    renumber = {int(comp_labels[o]): i for i, o in enumerate(order)}
    block_of = tuple(renumber[int(c)] for c in comp_labels)
    blocks = tuple(tuple(x for x in range(n) if block_of[x] == b) for b in range(len(order)))
    return OrbitPartition(blocks=blocks, representatives=tuple(int(o) for o in order), block_of=block_of)


def isotropy_group(groupoid, x):
    """
    The isotropy group at x: arrows from x to x under composition.

    Parameters
    ----------
    groupoid : FiniteGroupoid
    x : int
        Object.

    Returns
    -------
    group : FiniteGroup
        Certified group whose labels are the arrow ids.
    """
    if not 0 <= x < groupoid.n_objects:
        raise ValueError(f'Object {x} does not exist.')
    arrows = groupoid.arrows_between(x, x)
    local = {g: i for i, g in enumerate(arrows)}
    table = [[local[int(groupoid.comp[g, h])] for h in arrows] for g in arrows]
    return validate_group(table, labels=arrows)


def _check_objects(groupoid, objects):
    objects = set(int(x) for x in objects)
    if any(not 0 <= x < groupoid.n_objects for x in objects):
        raise ValueError('Object set contains invalid objects.')
    return objects


def is_invariant(groupoid, objects):
    """
    Whether r(d^-1(U)) is contained in U.
    """
    objects = _check_objects(groupoid, objects)
    return all(int(groupoid.dst[g]) in objects for g in range(groupoid.n_arrows) if int(groupoid.src[g]) in objects)


def invariant_saturation(groupoid, objects):
    """
    Smallest invariant set containing U, computed as r(d^-1(U)).

    The result is checked against d(r^-1(U)), against invariance, and against the union of the orbit blocks meeting U
    (the smallest invariant superset).

    Parameters
    ----------
    groupoid : FiniteGroupoid
    objects : iterable of int
        The set U.

    Returns
    -------
    saturation : frozenset
    """
    objects = _check_objects(groupoid, objects)
    by_source = frozenset(int(groupoid.dst[g]) for g in range(groupoid.n_arrows) if int(groupoid.src[g]) in objects)
    by_range = frozenset(int(groupoid.src[g]) for g in range(groupoid.n_arrows) if int(groupoid.dst[g]) in objects)
    partition = orbits(groupoid)
    smallest = frozenset(x for b in {partition.block_of[y] for y in objects} for x in partition.blocks[b])
    if by_source != by_range or by_source != smallest or not objects <= by_source or not is_invariant(groupoid, by_source):
        raise InternalDisagreement(f'saturation of {sorted(objects)}: r(d^-1 U)={sorted(by_source)}, '
                                   f'd(r^-1 U)={sorted(by_range)}, orbit union={sorted(smallest)}')
    return by_source


def invariant_sets(groupoid):
    """
    All invariant object sets, as unions of orbit blocks. There are 2^(number of orbits) of them.
    """
    partition = orbits(groupoid)
    b = len(partition)
    result = []
    for mask in range(2 ** b):
        result.append(frozenset(x for i in range(b) if mask >> i & 1 for x in partition.blocks[i]))
    return result


def is_effective(groupoid):
    """
    Whether every isotropy group is trivial. For discrete groupoids this is effectiveness.
    """
    loops = groupoid.src == groupoid.dst
    return int(loops.sum()) == groupoid.n_objects


def _pairwise_saturations_meet(groupoid):
    # every non-empty invariant set contains the saturation of a point
    # the saturations come from the arrows, orbits() only cross-checks them inside invariant_saturation
    sats = [invariant_saturation(groupoid, {x}) for x in range(groupoid.n_objects)]
    return all(sats[x] & sats[y] for x in range(groupoid.n_objects) for y in range(x + 1, groupoid.n_objects))


def _arrows_join_all(groupoid):
    # d^-1(U) meets r^-1(V) for all non-empty U, V reduces to singletons
    n = groupoid.n_objects
    joined = zeros((n, n), dtype=bool)
    joined[groupoid.src, groupoid.dst] = True
    return bool(joined.all())


def _no_invariant_split(groupoid):
    # invariant closure of one object by breadth-first search; anything smaller splits the unit space
    adjacency = [[] for _ in range(groupoid.n_objects)]
    for s, d in zip(groupoid.src, groupoid.dst):
        adjacency[int(s)].append(int(d))
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in adjacency[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == groupoid.n_objects


def transitivity_conditions(groupoid):
    """
    Evaluate the three equivalent forms of topological transitivity independently.

    Returns
    -------
    conditions : dict
        'pairwise_intersection': non-empty invariant sets meet pairwise,
        'arrows_between_all': some arrow goes from any non-empty U into any non-empty V,
        'no_invariant_cover': the objects are no union of two proper invariant sets,
        'single_orbit': there is exactly one orbit.
    """
    return {'pairwise_intersection': _pairwise_saturations_meet(groupoid),
            'arrows_between_all': _arrows_join_all(groupoid),
            'no_invariant_cover': _no_invariant_split(groupoid),
            'single_orbit': len(orbits(groupoid)) == 1}


def is_topologically_transitive(groupoid):
    """
    Topological transitivity, decided three independent ways which must agree with each other and with the orbit count.

    Parameters
    ----------
    groupoid : FiniteGroupoid

    Returns
    -------
    transitive : bool

    Raises
    ------
    InternalDisagreement
        The routines disagree.
    """
    conditions = transitivity_conditions(groupoid)
    if len(set(conditions.values())) != 1:
        raise InternalDisagreement(f'transitivity conditions disagree: {conditions}')
    return conditions['single_orbit']


def dense_orbits(groupoid):
    """
    Orbits whose closure is all objects. With the discrete topology, dense means equal to the unit space.
    """
    return [b for b in orbits(groupoid).blocks if len(b) == groupoid.n_objects]


def has_dense_orbit(groupoid):
    """
    Whether some orbit is dense. Checked to imply topological transitivity.
    """
    dense = len(dense_orbits(groupoid)) > 0
    if dense and not is_topologically_transitive(groupoid):
        raise InternalDisagreement('a dense orbit exists but the groupoid is not topologically transitive')
    return dense


# ---- bisections ----
class Bisection:
    def __init__(self, groupoid, arrows):
        """
        Set of arrows on which d and r are both injective.

        Parameters
        ----------
        groupoid : FiniteGroupoid
        arrows : iterable of int
        """
        arrows = frozenset(int(g) for g in arrows)
        if any(not 0 <= g < groupoid.n_arrows for g in arrows):
            raise ValueError('Bisection contains invalid arrows.')
        srcs = [int(groupoid.src[g]) for g in arrows]
        dsts = [int(groupoid.dst[g]) for g in arrows]
        if len(set(srcs)) != len(srcs) or len(set(dsts)) != len(dsts):
            raise ValidationError(*sorted(arrows), axiom='bisection')
        self.groupoid = groupoid
        self.arrows = arrows

    @property
    def domain(self):
        return frozenset(int(self.groupoid.src[g]) for g in self.arrows)

    @property
    def range(self):
        return frozenset(int(self.groupoid.dst[g]) for g in self.arrows)

    def __eq__(self, other):
        return isinstance(other, Bisection) and self.arrows == other.arrows

    def __hash__(self):
        return hash(self.arrows)

    def __len__(self):
        return len(self.arrows)

    def __repr__(self):
        return f'Bisection({sorted(self.arrows)})'


def identity_bisection(groupoid):
    return Bisection(groupoid, groupoid.identities.tolist())


def compose_bisections(first, second, groupoid):
    """
    Product UV = {u v : d(u) = r(v)} of two bisections.

    Parameters
    ----------
    first, second : Bisection
        U and V.
    groupoid : FiniteGroupoid

    Returns
    -------
    product : Bisection
    """
    return Bisection(groupoid, [groupoid.comp[u, v] for u in first.arrows for v in second.arrows
                                if groupoid.src[u] == groupoid.dst[v]])


def bisection_inverse(bisection):
    """
    U* = {u^-1 : u in U}.
    """
    return Bisection(bisection.groupoid, [bisection.groupoid.inverse[g] for g in bisection.arrows])


def bisection_action(bisection, x):
    """
    Image of object x under the partial bijection d(U) -> r(U) of the bisection U, or None outside d(U).
    """
    for g in bisection.arrows:
        if int(bisection.groupoid.src[g]) == x:
            return int(bisection.groupoid.dst[g])
    return None


def is_effective_by_action(groupoid):
    """
    Effectiveness as faithfulness: every bisection acting as the identity on its domain lies in the unit space.

    Singletons span all bisections at discrete scale, so it suffices to test each {g}.
    """
    for g in range(groupoid.n_arrows):
        single = Bisection(groupoid, [g])
        if bisection_action(single, int(groupoid.src[g])) == int(groupoid.src[g]) and not groupoid.is_identity(g):
            return False
    return True


# ---- action and germ groupoids ----
def _action_table(group, n_points, act):
    if callable(act):
        table = array([[act(g, x) for x in range(n_points)] for g in range(group.order)], dtype=int64)
    else:
        table = array(act, dtype=int64)
    if table.shape != (group.order, n_points) or table.min() < 0 or table.max() >= n_points:
        raise ValueError(f'Action table must be ({group.order}, {n_points}) with entries in the point set.')
    for x in range(n_points):
        if table[group.identity, x] != x:
            raise NotAnAction(group.identity, x)
    for g in range(group.order):
        for h in range(group.order):
            bad = where(table[g, table[h]] != table[group.mul(g, h)])[0]
            if bad.size:
                raise NotAnAction(g, h, bad[0])
    return table


def action_groupoid(group, points, act):
    """
    Transformation groupoid of a finite group action.

    Parameters
    ----------
    group : FiniteGroup
    points : {int, list}
        The set X, or its size.
    act : {callable, array_like}
        act(g, x) = g.x, or a (|G|, |X|) table.

    Returns
    -------
    groupoid : FiniteGroupoid
        Arrows (g, x) from x to g.x, composed (g, h.y)(h, y) = (gh, y).

    Raises
    ------
    NotAnAction
        The identity moves a point, or (gh).x != g.(h.x). Witness (g, h, x).
    """
    n = points if isinstance(points, int) else len(points)
    table = _action_table(group, n, act)
    arrows = [((g, x), x, int(table[g, x])) for x in range(n) for g in
              [group.identity] + [g for g in range(group.order) if g != group.identity]]
    return groupoid_from_composition(n, arrows, lambda a, b: (group.mul(a[0], b[0]), b[1]),
                                     object_labels=None if isinstance(points, int) else list(points))


def is_topologically_free(group, points, act):
    """
    Whether no non-identity group element fixes a point.
    """
    n = points if isinstance(points, int) else len(points)
    table = _action_table(group, n, act)
    return all(table[g, x] != x for g in range(group.order) if g != group.identity for x in range(n))


def germ_groupoid(semigroup, points, act):
    """
    Groupoid of germs of an inverse semigroup acting by partial bijections on a finite set.

    Germs [s, x] with x in dom(s) are identified when some u <= s, t has x in dom(u). Every class is found by
    exhaustive search over the semigroup and named by its smallest element.

    Parameters
    ----------
    semigroup : InverseSemigroup
    points : {int, list}
        The set X, or its size.
    act : array_like
        (|S|, |X|) table with act[s, x] = s.x, or -1 when x is outside dom(s).

    Returns
    -------
    groupoid : FiniteGroupoid
        Arrow labels are the germs (s, x). Arrow [s, x] goes from x to s.x; [s, t.y][t, y] = [st, y].

    Raises
    ------
    NotAnAction
        dom(s) differs from dom(s*s), or the map is not a homomorphism of partial bijections.
    Degenerate
        Some point lies in no dom(e).
    """
    n = points if isinstance(points, int) else len(points)
    act = array(act, dtype=int64)
    size = semigroup.order
    if act.shape != (size, n) or act.min() < -1 or act.max() >= n:
        raise ValueError(f'Action table must be ({size}, {n}) with entries in the point set or -1.')
    star, mul = semigroup.inverse, semigroup.table

    for s in range(size):
        e = int(mul[star[s], s])
        if ((act[s] >= 0) != (act[e] >= 0)).any() or (act[e][act[e] >= 0] != where(act[e] >= 0)[0]).any():
            raise NotAnAction(s)
        images = act[s][act[s] >= 0]
        if unique(images).size != images.size:
            raise NotAnAction(s)
    for s in range(size):
        for t in range(size):
            composite = where(act[t] >= 0, act[s][where(act[t] >= 0, act[t], 0)], -1)
            bad = where(composite != act[mul[s, t]])[0]
            if bad.size:
                raise NotAnAction(s, t, bad[0])
    covered = (act[semigroup.idempotents()] >= 0).any(axis=0)
    if not covered.all():
        raise Degenerate(where(~covered)[0][0])

    below = semigroup.natural_order()  # below[u, s] iff u <= s

    def canonical(s, x):
        for t in range(size):
            if act[t, x] < 0:
                continue
            if t == s or any(below[u, s] and below[u, t] and act[u, x] >= 0 for u in range(size)):
                return t, x
        raise InternalDisagreement(f'germ ({s}, {x}) has no class')

    germs = sorted({canonical(s, x) for x in range(n) for s in range(size) if act[s, x] >= 0},
                   key=lambda sx: (sx[1], sx[0]))
    cache = {}

    def compose(a, b):
        key = (a, b)
        if key not in cache:
            cache[key] = canonical(int(mul[a[0], b[0]]), b[1])
        return cache[key]

    arrows = [(g, g[1], int(act[g[0], g[1]])) for g in germs]
    return groupoid_from_composition(n, arrows, compose,
                                     object_labels=None if isinstance(points, int) else list(points))
