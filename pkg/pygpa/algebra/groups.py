"""
Finite groups by Cayley table, normal subgroup enumeration and primeness of group algebras

GNU GPL v3.0
V0.1 - October 2026
"""
from itertools import permutations

from numpy import array, arange, all as npall, argwhere, int64

from pygpa.common import NotAssociative, NoIdentity, NoInverse, associativity_failure
from pygpa.algebra.rings import is_integral_domain, is_reduced, is_zero_divisor


__all__ = ['FiniteGroup', 'InfiniteCyclic', 'INFINITE_CYCLIC', 'validate_group', 'group_from_elements',
           'trivial_group', 'cyclic_group', 'direct_product', 'symmetric_group', 'dihedral_group', 'quaternion_group',
           'subgroups', 'normal_subgroups', 'finite_normal_subgroups', 'connell_obstruction', 'passman_obstruction',
           'group_algebra_is_prime', 'group_algebra_is_semiprime']


class FiniteGroup:
    def __init__(self, table, identity, inverse, labels=None):
        """
        Certified finite group. Use :meth:`validate_group` to build one from a raw table.

        Parameters
        ----------
        table : numpy.ndarray
            (m, m) multiplication table of element indices.
        identity : int
            Index of the identity element.
        inverse : numpy.ndarray
            (m, ) inverse of each element.
        labels : {None, list}, optional
            External names of the elements, eg the arrow ids of an isotropy group. Default is the indices.
        """
        self.table = table
        self.identity = int(identity)
        self.inverse = inverse
        self.labels = list(range(table.shape[0])) if labels is None else list(labels)

    @property
    def order(self):
        return self.table.shape[0]

    @property
    def is_trivial(self):
        return self.order == 1

    def mul(self, a, b):
        return int(self.table[a, b])

    def index_of(self, label):
        return self.labels.index(label)

    def to_json(self):
        return {'order': self.order, 'table': self.table.tolist()}

    def __repr__(self):
        return f'FiniteGroup(order={self.order})'


class InfiniteCyclic:
    """
    The infinite cyclic group, carried symbolically. Its group algebra over R is Laurent(R).
    """
    order = None
    is_trivial = False

    def to_json(self):
        return 'InfiniteCyclic'

    def __repr__(self):
        return 'InfiniteCyclic'

    def __eq__(self, other):
        return isinstance(other, InfiniteCyclic)

    def __hash__(self):
        return hash('InfiniteCyclic')


INFINITE_CYCLIC = InfiniteCyclic()


def validate_group(table, labels=None):
    """
    Certify a Cayley table as a group.

    Parameters
    ----------
    table : array_like
        (m, m) table of element indices in [0, m).
    labels : {None, list}, optional
        External names of the elements.

    Returns
    -------
    group : FiniteGroup

    Raises
    ------
    NoIdentity
        No two-sided identity exists.
    NoInverse
        An element has no two-sided inverse. Witness is the element.
    NotAssociative
        Witness is the first failing triple (i, j, k).
    """
    table = array(table, dtype=int64)
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise ValueError('Group table must be a non-empty square matrix.')
    m = table.shape[0]
    if table.min() < 0 or table.max() >= m:
        raise ValueError(f'Group table entries must be in [0, {m}).')

    idx = arange(m)
    ids = [e for e in range(m) if npall(table[e, :] == idx) and npall(table[:, e] == idx)]
    if not ids:
        raise NoIdentity()
    e = ids[0]

    inverse = array([-1] * m, dtype=int64)
    for i in range(m):
        cand = argwhere((table[i, :] == e) & (table[:, i] == e)).flatten()
        if cand.size == 0:
            raise NoInverse(i)
        inverse[i] = cand[0]

    bad = associativity_failure(table)
    if bad is not None:
        raise NotAssociative(*bad)

    return FiniteGroup(table, e, inverse, labels=labels)


def group_from_elements(elements, op):
    """
    Build a group from a list of hashable elements and a binary operation on them.
    """
    lookup = {x: i for i, x in enumerate(elements)}
    table = [[lookup[op(a, b)] for b in elements] for a in elements]
    return validate_group(table, labels=list(elements))


def trivial_group():
    return validate_group([[0]])


def cyclic_group(n):
    if n < 1:
        raise ValueError('Cyclic group order must be positive.')
    return validate_group((arange(n)[:, None] + arange(n)[None, :]) % n)


def direct_product(g, h):
    """
    Direct product, element (a, b) at index a * |h| + b.
    """
    elements = [(a, b) for a in range(g.order) for b in range(h.order)]
    return group_from_elements(elements, lambda x, y: (g.mul(x[0], y[0]), h.mul(x[1], y[1])))


def symmetric_group(n):
    """
    Permutations of n points under composition, (p q)(i) = p(q(i)). Identity is index 0.
    """
    elements = list(permutations(range(n)))
    return group_from_elements(elements, lambda p, q: tuple(p[q[i]] for i in range(n)))


def dihedral_group(n):
    """
    Symmetries of the n-gon, order 2n. Element (k, f) is r^k s^f.
    """
    elements = [(k, f) for f in (0, 1) for k in range(n)]
    return group_from_elements(elements, lambda x, y: ((x[0] + (-1) ** x[1] * y[0]) % n, (x[1] + y[1]) % 2))


# unit quaternions 1, i, j, k as 0..3; product as (sign, unit)
_QUAT = [[(1, 0), (1, 1), (1, 2), (1, 3)],
         [(1, 1), (-1, 0), (1, 3), (-1, 2)],
         [(1, 2), (-1, 3), (-1, 0), (1, 1)],
         [(1, 3), (1, 2), (-1, 1), (-1, 0)]]


def quaternion_group():
    def op(x, y):
        sign, unit = _QUAT[x[1]][y[1]]
        return x[0] * y[0] * sign, unit

    return group_from_elements([(s, u) for s in (1, -1) for u in range(4)], op)


def _closure(group, generators):
    # closure under products is enough in a finite group
    members = {group.identity} | set(generators)
    frontier = set(members)
    while frontier:
        new = {group.mul(a, b) for a in frontier for b in members} | {group.mul(b, a) for a in frontier for b in members}
        frontier = new - members
        members |= frontier
    return frozenset(members)


def subgroups(group):
    """
    All subgroups, found as joins of cyclic subgroups until no new subgroup appears.

    Parameters
    ----------
    group : FiniteGroup

    Returns
    -------
    subs : list of tuple
        Sorted element-index tuples, ordered by size then lexicographically.
    """
    found = {_closure(group, [a]) for a in range(group.order)}
    frontier = set(found)
    while frontier:
        new = set()
        for h in frontier:
            for k in found:
                joined = _closure(group, h | k)
                if joined not in found:
                    new.add(joined)
        found |= new
        frontier = new
    for sub in found:
        if group.order % len(sub) != 0:  # Lagrange
            raise AssertionError(f'subgroup of order {len(sub)} in group of order {group.order}')
    return sorted((tuple(sorted(s)) for s in found), key=lambda s: (len(s), s))


def normal_subgroups(group):
    """
    All normal subgroups, each a sorted tuple of element indices, ordered by size.

    Parameters
    ----------
    group : FiniteGroup

    Returns
    -------
    normals : list of tuple
        Always starts with the trivial subgroup and ends with the whole group.
    """
    normals = []
    for sub in subgroups(group):
        members = set(sub)
        if all(group.mul(group.mul(g, n), int(group.inverse[g])) in members
               for g in range(group.order) for n in sub):
            normals.append(sub)
    return normals


def finite_normal_subgroups(group):
    """
    Finite normal subgroups of a finite group or of the infinite cyclic group, whose only one is trivial.
    """
    if isinstance(group, InfiniteCyclic):
        return [(0,)]
    return normal_subgroups(group)


def connell_obstruction(group, ring):
    """
    Reason why the group algebra fails to be prime, or None if it is prime.

    Returns
    -------
    obstruction : {None, dict}
        {'ring': ...} when the ring is not a domain, otherwise {'normal_subgroup': [...]} naming the smallest
        non-trivial finite normal subgroup, labelled by the group's element labels.
    """
    if not is_integral_domain(ring):
        return {'ring': str(ring), 'condition': 'integral domain'}
    for sub in finite_normal_subgroups(group):
        if len(sub) > 1:
            return {'normal_subgroup': [group.labels[i] for i in sub], 'order': len(sub)}
    return None


def passman_obstruction(group, ring):
    """
    Reason why the group algebra fails to be semiprime, or None if it is semiprime.
    """
    if not is_reduced(ring):
        return {'ring': str(ring), 'condition': 'reduced'}
    for sub in finite_normal_subgroups(group):
        if is_zero_divisor(len(sub), ring):
            labels = [0] if isinstance(group, InfiniteCyclic) else [group.labels[i] for i in sub]
            return {'normal_subgroup': labels, 'order': len(sub)}
    return None


def group_algebra_is_prime(group, ring):
    """
    Whether RG is prime: R is a domain and G has no non-trivial finite normal subgroup.

    Parameters
    ----------
    group : {FiniteGroup, InfiniteCyclic}
    ring : RingSpec

    Returns
    -------
    prime : bool
    """
    return connell_obstruction(group, ring) is None


def group_algebra_is_semiprime(group, ring):
    """
    Whether RG is semiprime: R is reduced and no finite normal subgroup has an order that is a zero divisor in R.

    Parameters
    ----------
    group : {FiniteGroup, InfiniteCyclic}
    ring : RingSpec

    Returns
    -------
    semiprime : bool
    """
    return passman_obstruction(group, ring) is None
