"""
The convolution algebra of a finite discrete groupoid, its matrix-algebra decomposition and the structural
primeness and semiprimeness deciders

GNU GPL v3.0
V0.1 - October 2026
"""
from dataclasses import dataclass
from warnings import warn

from numpy import empty

from pygpa.common import MismatchedCarrier, MismatchedRing, PrimenessVerdict, InternalDisagreement
from pygpa.algebra.rings import RingSpec, RingElem, is_integral_domain, is_reduced
from pygpa.algebra.groups import connell_obstruction, passman_obstruction
from pygpa.groupoid.groupoids import orbits, isotropy_group, is_effective, is_topologically_transitive, \
    identity_bisection, action_groupoid, is_topologically_free, _action_table


__all__ = ['AlgebraElem', 'convolve', 'indicator', 'delta', 'unit', 'is_unital', 'MatrixBlock', 'MatrixDecomposition',
           'matrix_decomposition', 'structural_is_prime', 'structural_is_semiprime', 'corner_iso_check',
           'crossed_product_verdict']


class AlgebraElem:
    def __init__(self, groupoid, ring, coeffs=None):
        """
        Finitely supported function from arrows to a coefficient ring.

        Parameters
        ----------
        groupoid : FiniteGroupoid
            Carrier.
        ring : RingSpec
            Coefficient ring.
        coeffs : {None, dict}, optional
            {arrow: value}. Values are canonicalized and zeros dropped.
        """
        self.groupoid = groupoid
        self.ring = ring
        self.coeffs = {}
        for g, c in (coeffs or {}).items():
            g = int(g)
            if not 0 <= g < groupoid.n_arrows:
                raise ValueError(f'Arrow {g} does not exist.')
            if isinstance(c, RingElem):
                if c.spec != ring:
                    raise MismatchedRing(f'Coefficient of arrow {g} is in {c.spec}, the algebra is over {ring}.')
                value = c.value
            else:
                value = ring.canon(c)
            if not ring.is_zero(value):
                self.coeffs[g] = value

    @property
    def support(self):
        return sorted(self.coeffs)

    def coefficient(self, g):
        return RingElem(self.ring, self.coeffs.get(g, self.ring.zero))

    def is_zero(self):
        return not self.coeffs

    def _check(self, other):
        if not self.groupoid.same_carrier(other.groupoid):
            raise MismatchedCarrier('Elements live on different groupoids.')
        if self.ring != other.ring:
            raise MismatchedRing(f'Elements have coefficients in {self.ring} and {other.ring}.')

    def __add__(self, other):
        self._check(other)
        acc = dict(self.coeffs)
        for g, c in other.coeffs.items():
            acc[g] = self.ring.add(acc[g], c) if g in acc else c
        return AlgebraElem(self.groupoid, self.ring, acc)

    def __neg__(self):
        return AlgebraElem(self.groupoid, self.ring, {g: self.ring.neg(c) for g, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AlgebraElem):
            return convolve(self, other)
        r = self.ring.canon(other.value if isinstance(other, RingElem) else other)
        return AlgebraElem(self.groupoid, self.ring, {g: self.ring.mul(r, c) for g, c in self.coeffs.items()})

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        return isinstance(other, AlgebraElem) and self.groupoid.same_carrier(other.groupoid) and \
            self.ring == other.ring and self.coeffs == other.coeffs

    def to_json(self):
        return {str(g): self.ring.to_json(c) for g, c in sorted(self.coeffs.items())}

    def __repr__(self):
        terms = ' + '.join(f'{self.ring.to_json(c)}*d{g}' for g, c in sorted(self.coeffs.items()))
        return f'AlgebraElem({terms or "0"})'


def convolve(first, second):
    """
    Convolution product, (f * g)(k) = sum of f(a) g(b) over composable a, b with ab = k.

    Parameters
    ----------
    first, second : AlgebraElem
        Elements over the same groupoid and ring.

    Returns
    -------
    product : AlgebraElem

    Raises
    ------
    MismatchedCarrier
        The groupoids differ.
    MismatchedRing
        The coefficient rings differ.
    """
    first._check(second)
    ring, comp = first.ring, first.groupoid.comp
    acc = {}
    for a, ca in first.coeffs.items():
        for b, cb in second.coeffs.items():
            k = int(comp[a, b])
            if k < 0:
                continue
            prod = ring.mul(ca, cb)
            acc[k] = ring.add(acc[k], prod) if k in acc else prod
    return AlgebraElem(first.groupoid, ring, acc)


def indicator(bisection, ring):
    """
    Characteristic function of a bisection: 1 on its arrows, 0 elsewhere.
    """
    return AlgebraElem(bisection.groupoid, ring, {g: ring.one for g in bisection.arrows})


def delta(groupoid, ring, g, coefficient=None):
    """
    Point mass at arrow g, optionally scaled.
    """
    return AlgebraElem(groupoid, ring, {g: ring.one if coefficient is None else coefficient})


def unit(groupoid, ring):
    """
    Multiplicative identity, the characteristic function of the unit space.
    """
    return indicator(identity_bisection(groupoid), ring)


def is_unital(groupoid, ring=None):
    """
    Whether the algebra has a unit. The unit space of a finite groupoid is compact, so it always does; the candidate
    is checked on every point mass.
    """
    ring = RingSpec.integers() if ring is None else ring
    one = unit(groupoid, ring)
    for g in range(groupoid.n_arrows):
        d = delta(groupoid, ring, g)
        if convolve(one, d) != d or convolve(d, one) != d:
            return False
    return True


# ---- matrix decomposition ----
@dataclass(frozen=True)
class MatrixBlock:
    """
    One orbit O of the decomposition, realized as M_|O|(R G_x).

    Attributes
    ----------
    objects : tuple
        The orbit, in increasing order. Row and column indices follow it.
    representative : int
        The object x.
    isotropy : FiniteGroup
        G_x, labelled by arrow ids.
    transversal : dict
        {y: t_y} with t_y the lowest-id arrow from x to y.
    """
    objects: tuple
    representative: int
    isotropy: object
    transversal: dict

    @property
    def size(self):
        return len(self.objects)

    @property
    def dimension(self):
        return self.size ** 2 * self.isotropy.order


class MatrixDecomposition:
    def __init__(self, groupoid, ring, blocks, images):
        """
        R G as a direct sum of matrix algebras over the isotropy group algebras of the orbit representatives.

        Parameters
        ----------
        groupoid : FiniteGroupoid
        ring : RingSpec
        blocks : list of MatrixBlock
        images : list of tuple
            Image of each arrow g: y -> z as (block, row of z, column of y, isotropy element index of t_z^-1 g t_y).
        """
        self.groupoid = groupoid
        self.ring = ring
        self.blocks = blocks
        self.images = images

    @property
    def dimension(self):
        return sum(b.dimension for b in self.blocks)

    def describe(self):
        """
        Short text form, eg 'M2(Q) + M1(Q[G2])'.
        """
        parts = []
        for b in self.blocks:
            coeff = str(self.ring) if b.isotropy.order == 1 else f'{self.ring}[G{b.isotropy.order}]'
            parts.append(f'M{b.size}({coeff})')
        return ' + '.join(parts)

    def image(self, element):
        """
        Matrix images of an algebra element, one (n, n, |G_x|) array of ring payloads per block.
        """
        mats = []
        for b in self.blocks:
            mat = empty((b.size, b.size, b.isotropy.order), dtype=object)
            mat.fill(self.ring.zero)
            mats.append(mat)
        for g, c in element.coeffs.items():
            blk, row, col, h = self.images[g]
            mats[blk][row, col, h] = self.ring.add(mats[blk][row, col, h], c)
        return mats

    def to_json(self):
        return {'blocks': [{'objects': list(b.objects), 'representative': b.representative, 'size': b.size,
                            'isotropy_order': b.isotropy.order,
                            'transversal': {str(y): t for y, t in sorted(b.transversal.items())}}
                           for b in self.blocks],
                'dimension': self.dimension, 'description': self.describe()}


def matrix_decomposition(groupoid, ring):
    """
    Decompose R G into a direct sum over orbits of M_|O|(R G_x).

    Arrow g: y -> z in the orbit of x is sent to the elementary matrix at (z, y) with entry t_z^-1 g t_y in G_x,
    where t_y is the lowest-id arrow x -> y. The map is checked to be bijective on the arrow basis and multiplicative
    on every composable pair.

    Parameters
    ----------
    groupoid : FiniteGroupoid
    ring : RingSpec

    Returns
    -------
    decomposition : MatrixDecomposition
    """
    partition = orbits(groupoid)
    blocks, block_of = [], {}
    for i, (objs, x) in enumerate(zip(partition.blocks, partition.representatives)):
        transversal = {y: groupoid.arrows_between(x, y)[0] for y in objs}
        blocks.append(MatrixBlock(objects=objs, representative=x, isotropy=isotropy_group(groupoid, x),
                                  transversal=transversal))
        for y in objs:
            block_of[y] = i

    images = []
    for g in range(groupoid.n_arrows):
        y, z = int(groupoid.src[g]), int(groupoid.dst[g])
        blk = blocks[block_of[y]]
        t_y, t_z = blk.transversal[y], blk.transversal[z]
        h = groupoid.comp[groupoid.inverse[t_z], groupoid.comp[g, t_y]]
        images.append((block_of[y], blk.objects.index(z), blk.objects.index(y), blk.isotropy.index_of(int(h))))

    if len(set(images)) != groupoid.n_arrows or groupoid.n_arrows != sum(b.dimension for b in blocks):
        raise InternalDisagreement('matrix decomposition is not bijective on the arrow basis')
    for g in range(groupoid.n_arrows):
        for k in range(groupoid.n_arrows):
            gk = groupoid.compose(g, k)
            if gk is None:
                continue
            (bg, rg, cg, hg), (bk, rk, ck, hk) = images[g], images[k]
            expected = (bg, rg, ck, blocks[bg].isotropy.mul(hg, hk))
            if bg != bk or cg != rk or images[gk] != expected:
                raise InternalDisagreement(f'matrix decomposition is not multiplicative on ({g}, {k})')
    return MatrixDecomposition(groupoid, ring, blocks, images)


# ---- structural verdicts ----
def _ring_witness(ring, condition):
    return {'ring': str(ring), 'condition': condition}


def structural_is_prime(groupoid, ring):
    """
    Primeness of R G from the groupoid structure.

    R G is prime iff R is an integral domain, the groupoid is topologically transitive (a single orbit, which is
    then dense) and the group algebra of the isotropy group at the orbit representative is prime. The matrix
    reduction R G = M_n(R G_x) carries primeness across.

    Parameters
    ----------
    groupoid : FiniteGroupoid
    ring : RingSpec

    Returns
    -------
    verdict : PrimenessVerdict
        Negative verdicts carry the failing ingredient: the ring, the orbits, or the object and normal subgroup.
    """
    partition = orbits(groupoid)
    effective = is_effective(groupoid)
    transitive = is_topologically_transitive(groupoid)
    domain = is_integral_domain(ring)
    x = partition.representatives[0]
    obstruction = connell_obstruction(isotropy_group(groupoid, x), ring) if transitive else None
    clauses = {'integral_domain': domain, 'topologically_transitive': transitive, 'orbits': len(partition),
               'effective': effective,
               'theorem': 'effective-hausdorff' if effective else 'dense-orbit',
               'chain': ['single orbit', 'topologically transitive', 'orbit is dense',
                         f'R G = M_{len(partition.blocks[0])}(R G_x)' if transitive else 'direct sum over orbits']}

    if not domain:
        return PrimenessVerdict(False, 'structural', 'prime', 'coefficient ring is not an integral domain',
                                _ring_witness(ring, 'integral domain'), clauses)
    if not transitive:
        return PrimenessVerdict(False, 'structural', 'prime', 'not topologically transitive',
                                {'orbits': [list(b) for b in partition.blocks]}, clauses)
    clauses['isotropy_prime'] = obstruction is None
    if obstruction is not None:
        return PrimenessVerdict(False, 'structural', 'prime',
                                'isotropy group has a non-trivial finite normal subgroup',
                                dict(object=x, **obstruction), clauses)
    return PrimenessVerdict(True, 'structural', 'prime',
                            'integral domain, single dense orbit, prime isotropy group algebra', None, clauses)


def structural_is_semiprime(groupoid, ring):
    """
    Semiprimeness of R G from the groupoid structure.

    The orbits split R G into a direct sum of M_|O|(R G_x), and each summand is semiprime iff its isotropy group
    algebra is. For effective groupoids this reduces to R being reduced.

    Parameters
    ----------
    groupoid : FiniteGroupoid
    ring : RingSpec

    Returns
    -------
    verdict : PrimenessVerdict
    """
    partition = orbits(groupoid)
    effective = is_effective(groupoid)
    reduced = is_reduced(ring)
    clauses = {'reduced': reduced, 'orbits': len(partition), 'effective': effective,
               'theorem': 'effective-reduced' if effective else 'orbit-decomposition'}
    if not reduced:
        return PrimenessVerdict(False, 'structural', 'semiprime', 'coefficient ring is not reduced',
                                _ring_witness(ring, 'reduced'), clauses)
    for x in partition.representatives:
        obstruction = passman_obstruction(isotropy_group(groupoid, x), ring)
        if obstruction is not None:
            clauses['isotropy_semiprime'] = False
            return PrimenessVerdict(False, 'structural', 'semiprime',
                                    'isotropy group has a finite normal subgroup whose order is a zero divisor',
                                    dict(object=x, **obstruction), clauses)
    clauses['isotropy_semiprime'] = True
    return PrimenessVerdict(True, 'structural', 'semiprime', 'reduced ring, semiprime isotropy group algebras', None,
                            clauses)


def corner_iso_check(groupoid, x, ring):
    """
    Check that the corner e R G e with e the point mass at the identity of x is the group algebra R G_x.

    Each point mass is cut down by e on both sides: exactly the isotropy arrows at x survive, unchanged, and
    convolution between them follows the isotropy group table.

    Returns
    -------
    ok : bool
    """
    e = delta(groupoid, ring, int(groupoid.identities[x]))
    group = isotropy_group(groupoid, x)
    for g in range(groupoid.n_arrows):
        cut = convolve(convolve(e, delta(groupoid, ring, g)), e)
        inside = g in group.labels
        if (inside and cut != delta(groupoid, ring, g)) or (not inside and not cut.is_zero()):
            warn(f'Corner at object {x} is not spanned by isotropy point masses (arrow {g}).')
            return False
    for i, g in enumerate(group.labels):
        for j, h in enumerate(group.labels):
            if convolve(delta(groupoid, ring, g), delta(groupoid, ring, h)) != \
                    delta(groupoid, ring, group.labels[group.mul(i, j)]):
                warn(f'Corner at object {x} does not multiply like the isotropy group ({g}, {h}).')
                return False
    return True


def crossed_product_verdict(group, points, act, ring):
    """
    Primeness of the crossed product C(X, R) x G for a topologically free action: prime iff R is an integral domain
    and the action is transitive. Cross-checked with the structural verdict on the action groupoid.

    Raises
    ------
    ValueError
        The action is not topologically free.
    """
    if not is_topologically_free(group, points, act):
        raise ValueError('Crossed product verdict needs a topologically free action.')
    n = points if isinstance(points, int) else len(points)
    table = _action_table(group, n, act)
    transitive = len({int(table[g, 0]) for g in range(group.order)}) == n
    domain = is_integral_domain(ring)
    decision = domain and transitive
    groupoid = action_groupoid(group, points, act)
    structural = structural_is_prime(groupoid, ring)
    if structural.decision != decision:
        raise InternalDisagreement('crossed product and action groupoid verdicts disagree')
    reason = 'integral domain and transitive free action' if decision else \
        ('coefficient ring is not an integral domain' if not domain else 'action is not transitive')
    return PrimenessVerdict(decision, 'structural', 'prime', reason, structural.witness,
                            {'integral_domain': domain, 'transitive': transitive, 'topologically_free': True,
                             'theorem': 'crossed-product'})
