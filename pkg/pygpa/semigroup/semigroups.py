"""
Finite inverse semigroups: certification, natural order, semilattice of idempotents, characters, maximal subgroups,
(0-)bisimplicity, pseudofiniteness and exhaustive enumeration of small inverse semigroups

GNU GPL v3.0
V0.1 - October 2026
"""
from dataclasses import dataclass, field
from itertools import combinations, permutations
from warnings import warn

from numpy import array, int64, zeros

from pygpa.common import NotAssociative, NoInverse, NonUniqueInverse, NoZero, NotIdempotent, InternalDisagreement, \
    associativity_failure
from pygpa.algebra.groups import validate_group


__all__ = ['InverseSemigroup', 'Semilattice', 'Character', 'validate_inverse_semigroup', 'semilattice_structure',
           'maximal_subgroup', 'characters', 'is_bisimple', 'is_0_bisimple', 'is_pseudofinite',
           'orbit_of_idempotents', 'enumerate_inverse_semigroups', 'brandt_semigroup', 'chain_semilattice',
           'group_semigroup']


class InverseSemigroup:
    def __init__(self, table, inverse, zero=None):
        """
        Certified finite inverse semigroup. Build with :meth:`validate_inverse_semigroup`.

        Parameters
        ----------
        table : numpy.ndarray
            (m, m) Cayley table.
        inverse : numpy.ndarray
            (m, ) the unique s* of each s.
        zero : {None, int}, optional
            Index of the zero element if there is one.
        """
        self.table = table
        self.inverse = inverse
        self.zero = zero

    @property
    def order(self):
        return self.table.shape[0]

    def mul(self, s, t):
        return int(self.table[s, t])

    def star(self, s):
        return int(self.inverse[s])

    def is_idempotent(self, s):
        return int(self.table[s, s]) == s

    def is_zero(self, s):
        return self.zero is not None and s == self.zero

    def idempotents(self):
        """
        Indices of the idempotents, increasing.
        """
        return [s for s in range(self.order) if self.is_idempotent(s)]

    def natural_order(self):
        """
        Natural partial order as a boolean matrix, below[s, t] iff s <= t iff s = t s*s.
        """
        m = self.order
        below = zeros((m, m), dtype=bool)
        for s in range(m):
            e = self.mul(self.star(s), s)
            for t in range(m):
                below[s, t] = self.mul(t, e) == s
        return below

    def source(self, s):
        """
        s*s
        """
        return self.mul(self.star(s), s)

    def target(self, s):
        """
        ss*
        """
        return self.mul(s, self.star(s))

    def to_json(self):
        return {'order': self.order, 'table': self.table.tolist(), 'zero': self.zero}

    def __repr__(self):
        return f'InverseSemigroup(order={self.order}, zero={self.zero})'


@dataclass(frozen=True)
class Semilattice:
    """
    The idempotents of an inverse semigroup with their order and meet.

    Attributes
    ----------
    elements : tuple
        Idempotent indices in the parent semigroup, increasing.
    leq : numpy.ndarray
        leq[i, j] iff elements[i] <= elements[j], local indices.
    meet : numpy.ndarray
        Local index of the product of elements[i] and elements[j].
    zero : {None, int}
        Local index of the bottom element when the semigroup has a zero.
    """
    elements: tuple
    leq: object = field(repr=False)
    meet: object = field(repr=False)
    zero: int = None

    def __len__(self):
        return len(self.elements)

    def local(self, e):
        return self.elements.index(e)

    def up_set(self, i):
        return frozenset(j for j in range(len(self)) if self.leq[i, j])

    def strictly_below(self, i):
        return frozenset(j for j in range(len(self)) if self.leq[j, i] and j != i)


@dataclass(frozen=True)
class Character:
    """
    A non-zero semilattice homomorphism to {0, 1}, given by its filter.

    Attributes
    ----------
    idempotent : int
        The idempotent e, in semigroup indices, whose up-set is the filter.
    filter : frozenset
        Idempotents (semigroup indices) sent to 1.
    proper : bool
        Whether the zero is sent to 0. Always True when the semigroup has no zero.
    """
    idempotent: int
    filter: frozenset
    proper: bool = True

    def __call__(self, e):
        return int(e in self.filter)


def validate_inverse_semigroup(table, zero=None):
    """
    Certify a Cayley table as an inverse semigroup.

    Parameters
    ----------
    table : array_like
        (m, m) table of indices in [0, m).
    zero : {None, int}, optional
        Declared zero. Checked when given, detected otherwise.

    Returns
    -------
    semigroup : InverseSemigroup

    Raises
    ------
    NotAssociative
        Witness (i, j, k).
    NoInverse
        Witness s has no t with sts = s and tst = t.
    NonUniqueInverse
        Witness (s, t1, t2) with two such t.
    NoZero
        The declared zero is not a zero.
    """
    table = array(table, dtype=int64)
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise ValueError('Semigroup table must be a non-empty square matrix.')
    m = table.shape[0]
    if table.min() < 0 or table.max() >= m:
        raise ValueError(f'Semigroup table entries must be in [0, {m}).')

    bad = associativity_failure(table)
    if bad is not None:
        raise NotAssociative(*bad)

    inverse = zeros(m, dtype=int64)
    for s in range(m):
        cand = [t for t in range(m) if table[table[s, t], s] == s and table[table[t, s], t] == t]
        if not cand:
            raise NoInverse(s)
        if len(cand) > 1:
            raise NonUniqueInverse(s, cand[0], cand[1])
        inverse[s] = cand[0]

    zeros_found = [z for z in range(m) if (table[z, :] == z).all() and (table[:, z] == z).all()]
    if zero is not None:
        if int(zero) not in zeros_found:
            raise NoZero(zero)
    elif zeros_found:
        zero = zeros_found[0]

    semigroup = InverseSemigroup(table, inverse, zero=None if zero is None else int(zero))
    idem = semigroup.idempotents()
    for e, f in combinations(idem, 2):
        if table[e, f] != table[f, e]:
            raise InternalDisagreement(f'idempotents {e} and {f} of an inverse semigroup do not commute')
    return semigroup


def semilattice_structure(semigroup):
    """
    The meet semilattice E(S) of idempotents.

    Parameters
    ----------
    semigroup : InverseSemigroup

    Returns
    -------
    semilattice : Semilattice
        Meet is the semigroup product, checked commutative, associative and idempotent.
    """
    elements = tuple(semigroup.idempotents())
    local = {e: i for i, e in enumerate(elements)}
    k = len(elements)
    meet = array([[local[semigroup.mul(e, f)] for f in elements] for e in elements], dtype=int64)
    leq = meet == array(range(k))[:, None]  # e <= f iff ef = e

    if (meet != meet.T).any() or associativity_failure(meet) is not None or \
            any(meet[i, i] != i for i in range(k)):
        raise InternalDisagreement('product of idempotents is not a meet')
    zero = None if semigroup.zero is None else local[semigroup.zero]
    return Semilattice(elements=elements, leq=leq, meet=meet, zero=zero)


def maximal_subgroup(semigroup, e):
    """
    The maximal subgroup G_e = {s : s*s = e = ss*}.

    Parameters
    ----------
    semigroup : InverseSemigroup
    e : int
        An idempotent.

    Returns
    -------
    group : FiniteGroup
        Labels are the semigroup elements.

    Raises
    ------
    NotIdempotent
        e is not idempotent.
    """
    if not semigroup.is_idempotent(e):
        raise NotIdempotent(e)
    members = [s for s in range(semigroup.order) if semigroup.source(s) == e and semigroup.target(s) == e]
    local = {s: i for i, s in enumerate(members)}
    return validate_group([[local[semigroup.mul(s, t)] for t in members] for s in members], labels=members)


def _filters(semilattice):
    # non-empty subsets closed upward and under meets, by exhaustive search
    k = len(semilattice)
    found = []
    for mask in range(1, 2 ** k):
        subset = [i for i in range(k) if mask >> i & 1]
        members = set(subset)
        if any(semilattice.leq[i, j] and j not in members for i in subset for j in range(k)):
            continue
        if any(semilattice.meet[i, j] not in members for i in subset for j in subset):
            continue
        found.append(frozenset(members))
    return found


def characters(semilattice, exhaustive_limit=12):
    """
    All characters of a finite semilattice.

    Every filter of a finite semilattice has a minimum e, so the characters are the principal ones, theta_e(f) = 1
    iff f >= e. For semilattices up to `exhaustive_limit` elements this is checked against an exhaustive search of
    the filters.

    Parameters
    ----------
    semilattice : Semilattice
    exhaustive_limit : int, optional
        Largest size for which filters are searched exhaustively. Default is 12.

    Returns
    -------
    chars : list of Character
        One per idempotent, in idempotent order.
    """
    k = len(semilattice)
    principal = [semilattice.up_set(i) for i in range(k)]
    if k <= exhaustive_limit:
        found = _filters(semilattice)
        if sorted(map(sorted, found)) != sorted(map(sorted, principal)):
            raise InternalDisagreement('semilattice has a character that is not principal')
    else:
        warn(f'Semilattice has {k} elements, characters taken as principal without exhaustive search.')

    result = []
    for i in range(k):
        result.append(Character(idempotent=semilattice.elements[i],
                                filter=frozenset(semilattice.elements[j] for j in principal[i]),
                                proper=semilattice.zero is None or i != semilattice.zero))
    return result


def _linked(semigroup, e, f):
    return any(semigroup.source(s) == e and semigroup.target(s) == f for s in range(semigroup.order))


def is_bisimple(semigroup):
    """
    Whether any two idempotents e, f have some s with s*s = e and ss* = f.
    """
    idem = semigroup.idempotents()
    return all(_linked(semigroup, e, f) for e in idem for f in idem)


def is_0_bisimple(semigroup):
    """
    Whether any two non-zero idempotents e, f have some s with s*s = e and ss* = f.

    Raises
    ------
    NoZero
        The semigroup has no zero.
    """
    if semigroup.zero is None:
        raise NoZero(message='0-bisimplicity needs a semigroup with zero')
    idem = [e for e in semigroup.idempotents() if e != semigroup.zero]
    return all(_linked(semigroup, e, f) for e in idem for f in idem)


def is_pseudofinite(semilattice):
    """
    Whether each strictly-below set is generated as a lower set by finitely many of its maximal elements.

    Always true for a finite semilattice; computed from the definition.
    """
    for i in range(len(semilattice)):
        below = semilattice.strictly_below(i)
        maximal = [j for j in below if not any(semilattice.leq[j, k] and j != k for k in below)]
        generated = frozenset(k for j in maximal for k in range(len(semilattice)) if semilattice.leq[k, j])
        if generated != below:
            return False
    return True


def orbit_of_idempotents(semigroup):
    """
    Idempotents grouped by the D-relation, e ~ f iff some s has s*s = e and ss* = f.

    These are the orbits of the principal characters in the universal groupoid.
    """
    blocks = []
    for e in semigroup.idempotents():
        for block in blocks:
            if _linked(semigroup, block[0], e):
                block.append(e)
                break
        else:
            blocks.append([e])
    return [tuple(b) for b in blocks]


# ---- fixtures ----
def brandt_semigroup():
    """
    The Brandt semigroup B2 of 2x2 matrix units plus zero.

    Index 0 is the zero, 1..4 are E11, E12, E21, E22. The idempotents are 0, E11 and E22, and E12 links them.
    """
    units = [(0, 0), (0, 1), (1, 0), (1, 1)]

    def product(a, b):
        if a == 0 or b == 0:
            return 0
        (i, j), (k, l) = units[a - 1], units[b - 1]
        return 0 if j != k else units.index((i, l)) + 1

    return validate_inverse_semigroup([[product(a, b) for b in range(5)] for a in range(5)])


def chain_semilattice(n):
    """
    The n-element chain 0 < 1 < ... < n-1 under min.
    """
    return validate_inverse_semigroup([[min(a, b) for b in range(n)] for a in range(n)])


def group_semigroup(group):
    """
    A finite group as an inverse semigroup.
    """
    return validate_inverse_semigroup(group.table)


# ---- enumeration ----
def _consistent(table, m, i, j):
    # associativity on every triple whose four products are already filled and that uses cell (i, j)
    for a in range(m):
        for b in range(m):
            for c in range(m):
                if not ((a == i and b == j) or (b == i and c == j)
                        or (table[a][b] == i and c == j) or (table[b][c] == j and a == i)):
                    continue
                ab, bc = table[a][b], table[b][c]
                if ab < 0 or bc < 0:
                    continue
                left, right = table[ab][c], table[a][bc]
                if left >= 0 and right >= 0 and left != right:
                    return False
    return True


def _canonical_form(table, m):
    best = None
    for perm in permutations(range(m)):
        # perm maps old index -> new index
        inv = [0] * m
        for old, new in enumerate(perm):
            inv[new] = old
        relabelled = tuple(perm[table[inv[a]][inv[b]]] for a in range(m) for b in range(m))
        if best is None or relabelled < best:
            best = relabelled
    return best


def _has_unique_inverses(table, m):
    for s in range(m):
        cand = [t for t in range(m) if table[table[s][t]][s] == s and table[table[t][s]][t] == t]
        if len(cand) != 1:
            return False
    return True


def enumerate_inverse_semigroups(order, max_order=5):
    """
    All inverse semigroups of a given order, up to isomorphism, by exhaustive search over Cayley tables.

    Tables are filled cell by cell with associativity checked on every completed triple, complete tables are
    filtered for unique inverses, and isomorphic copies are removed by a minimal relabelling.

    Parameters
    ----------
    order : int
        Number of elements.
    max_order : int, optional
        Largest order accepted. Default is 5.

    Returns
    -------
    semigroups : list of InverseSemigroup
        Certified, ordered by their canonical tables.
    """
    if not 1 <= order <= max_order:
        raise ValueError(f'Order must be between 1 and {max_order}.')
    m = order
    table = [[-1] * m for _ in range(m)]
    cells = [(i, j) for i in range(m) for j in range(m)]
    found = {}

    def fill(pos):
        if pos == len(cells):
            if _has_unique_inverses(table, m):
                canon = _canonical_form(table, m)
                if canon not in found:
                    found[canon] = [list(row) for row in table]
            return
        i, j = cells[pos]
        for v in range(m):
            table[i][j] = v
            if _consistent(table, m, i, j):
                fill(pos + 1)
        table[i][j] = -1

    fill(0)
    result = []
    for canon in sorted(found):
        result.append(validate_inverse_semigroup([list(canon[r * m:(r + 1) * m]) for r in range(m)]))
    return result
