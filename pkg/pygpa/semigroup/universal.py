"""
Universal groupoids of finite inverse semigroups, the isomorphism of the semigroup algebra with the groupoid algebra,
and the prime and semiprime verdicts for inverse semigroup algebras

GNU GPL v3.0
V0.1 - October 2026
"""
from dataclasses import dataclass

from numpy import full, int64, zeros, eye

from pygpa.common import NoZero, CapExceeded, InternalDisagreement, PrimenessVerdict, resolve_caps
from pygpa.algebra.groups import connell_obstruction, passman_obstruction
from pygpa.groupoid.groupoids import germ_groupoid
from pygpa.groupoid.convolution import AlgebraElem, convolve, structural_is_prime, structural_is_semiprime
from pygpa.semigroup.semigroups import semilattice_structure, characters, maximal_subgroup, is_bisimple, \
    is_0_bisimple, is_pseudofinite


__all__ = ['universal_groupoid', 'character_action', 'SemigroupAlgebraIso', 'semigroup_algebra_iso',
           'munn_prime_verdict', 'munn_semiprime_verdict']


def character_action(semigroup, contracted=False):
    """
    Action of S on its (proper) characters.

    A character theta lies in the domain of s iff theta(s*s) = 1, and then (s theta)(f) = theta(s* f s). The image
    filter is computed literally and matched back to the principal character it equals.

    Parameters
    ----------
    semigroup : InverseSemigroup
    contracted : bool, optional
        Use only the proper characters, those vanishing at zero. Default is False.

    Returns
    -------
    chars : list of Character
        The characters used as points.
    act : numpy.ndarray
        (|S|, len(chars)) table, -1 outside the domain.

    Raises
    ------
    NoZero
        contracted is set but S has no zero.
    """
    if contracted and semigroup.zero is None:
        raise NoZero(message='contracted universal groupoid needs a semigroup with zero')
    chars = characters(semilattice_structure(semigroup))
    if contracted:
        chars = [c for c in chars if c.proper]
        if not chars:
            raise ValueError('Contracted universal groupoid of the zero semigroup has no objects.')
    by_filter = {c.filter: i for i, c in enumerate(chars)}
    idem = semigroup.idempotents()

    act = full((semigroup.order, len(chars)), -1, dtype=int64)
    for s in range(semigroup.order):
        s_star = semigroup.star(s)
        for i, theta in enumerate(chars):
            if not theta(semigroup.source(s)):
                continue
            image = frozenset(f for f in idem if theta(semigroup.mul(semigroup.mul(s_star, f), s)))
            if image not in by_filter:
                raise InternalDisagreement(f'image of character {theta.idempotent} under {s} is not a character')
            act[s, i] = by_filter[image]
    return chars, act


def universal_groupoid(semigroup, contracted=False):
    """
    The universal groupoid of S, the germ groupoid of S acting on its character space.

    Parameters
    ----------
    semigroup : InverseSemigroup
    contracted : bool, optional
        Build the contracted groupoid on the proper characters. Default is False.

    Returns
    -------
    groupoid : FiniteGroupoid
        Object i is the principal character of the i-th (non-zero) idempotent. Arrow labels are germs (s, i).

    Raises
    ------
    NoZero
        contracted is set but S has no zero.
    """
    chars, act = character_action(semigroup, contracted)
    return germ_groupoid(semigroup, [c.idempotent for c in chars], act)


@dataclass
class SemigroupAlgebraIso:
    """
    The verified isomorphism R S -> R G(S).

    Attributes
    ----------
    groupoid : FiniteGroupoid
        The universal groupoid.
    basis : list
        Semigroup elements forming the basis of R S (the non-zero ones when contracted).
    arrow_element : list
        For each arrow [s, theta_e], the element s e it corresponds to.
    forward : numpy.ndarray
        (arrows, basis) 0/1 matrix of the images, forward[a, s] = 1 iff arrow a is in the image of s, which happens iff
        its element is below s in the natural order.
    inverse : numpy.ndarray
        (basis, arrows) integer matrix, the change of basis back.
    """
    groupoid: object
    basis: list
    arrow_element: list
    forward: object
    inverse: object

    def image(self, s, ring):
        """
        Image of the basis element s as an algebra element.
        """
        col = self.basis.index(s)
        return AlgebraElem(self.groupoid, ring, {a: 1 for a in range(self.groupoid.n_arrows) if self.forward[a, col]})

    def to_json(self):
        return {'basis': self.basis, 'arrow_element': self.arrow_element, 'forward': self.forward.tolist(),
                'inverse': self.inverse.tolist(), 'verified': True}


def semigroup_algebra_iso(semigroup, ring, contracted=False, caps=None):
    """
    Materialize and verify the isomorphism R S -> R G(S), s -> characteristic function of the germs of s over the
    domain of s.

    The arrow [s, theta_e] corresponds to the element s e, and the image of s is the sum of the point masses at the
    elements below s. The change of basis is unitriangular along a linear extension of the natural order and is
    inverted by back-substitution. Multiplicativity is checked on every pair by convolution.

    Parameters
    ----------
    semigroup : InverseSemigroup
    ring : RingSpec
    contracted : bool, optional
        Use R_0 S = R S / R z and the contracted groupoid. Default is False.
    caps : {None, dict}, optional
        Overrides of the default caps. Uses 'semigroup_order'.

    Returns
    -------
    iso : SemigroupAlgebraIso

    Raises
    ------
    CapExceeded
        The semigroup is larger than the cap.
    InternalDisagreement
        The map fails to be a bijection or fails multiplicativity.
    """
    caps = resolve_caps(caps)
    if semigroup.order > caps['semigroup_order']:
        raise CapExceeded(semigroup.order, caps['semigroup_order'], 'semigroup_order')
    groupoid = universal_groupoid(semigroup, contracted)
    objects = groupoid.object_labels  # idempotent of each object
    basis = [s for s in range(semigroup.order) if not (contracted and semigroup.is_zero(s))]
    position = {s: i for i, s in enumerate(basis)}

    arrow_element = [semigroup.mul(s, objects[x]) for s, x in groupoid.labels]
    if sorted(arrow_element) != basis:
        raise InternalDisagreement('germs of the universal groupoid do not match the semigroup elements')

    below = semigroup.natural_order()
    n = len(basis)
    forward = zeros((n, n), dtype=int64)
    for a, t in enumerate(arrow_element):
        for s in basis:
            forward[a, position[s]] = int(below[t, s])

    # back-substitution: delta_t = image(t) - sum of delta_u over u < t
    order = sorted(basis, key=lambda s: (int(below[:, s].sum()), s))
    inverse = zeros((n, n), dtype=int64)
    arrow_of = {t: a for a, t in enumerate(arrow_element)}
    for t in order:
        row = zeros(n, dtype=int64)
        row[position[t]] = 1
        for u in basis:
            if u != t and below[u, t]:
                row -= inverse[arrow_of[u]]
        inverse[arrow_of[t]] = row
    if not ((forward @ inverse.T) == eye(n, dtype=int64)).all():
        raise InternalDisagreement('change of basis is not inverted by back-substitution')

    iso = SemigroupAlgebraIso(groupoid, basis, arrow_element, forward, inverse.T)
    images = {s: iso.image(s, ring) for s in basis}
    for s in basis:
        for t in basis:
            st = semigroup.mul(s, t)
            expected = AlgebraElem(groupoid, ring) if st not in images else images[st]
            if convolve(images[s], images[t]) != expected:
                raise InternalDisagreement(f'algebra map is not multiplicative on ({s}, {t})')
    return iso


def _munn_setup(semigroup, contracted):
    semilattice = semilattice_structure(semigroup)
    if not is_pseudofinite(semilattice):
        raise InternalDisagreement('finite semilattice is not pseudofinite')
    idem = [e for e in semigroup.idempotents() if not (contracted and semigroup.is_zero(e))]
    if not idem:
        raise ValueError('Contracted algebra of the zero semigroup is the zero ring.')
    return idem


def munn_prime_verdict(semigroup, ring, contracted=False):
    """
    Primeness of the inverse semigroup algebra.

    R S (or R_0 S when contracted) is prime if S is bisimple (0-bisimple) and the group algebra of a maximal subgroup
    is prime. The converse applies because finite semilattices are pseudofinite. The verdict is cross-checked with the
    structural verdict on the universal groupoid.

    Parameters
    ----------
    semigroup : InverseSemigroup
    ring : RingSpec
    contracted : bool, optional
        Decide R_0 S. Needs a zero. Default is False.

    Returns
    -------
    verdict : PrimenessVerdict
        Clause 'direction' is 'sufficient' for prime and 'converse' otherwise.
    """
    idem = _munn_setup(semigroup, contracted)
    bisimple = is_0_bisimple(semigroup) if contracted else is_bisimple(semigroup)
    e = idem[0]
    obstruction = connell_obstruction(maximal_subgroup(semigroup, e), ring)
    decision = bisimple and obstruction is None
    clauses = {'bisimple': bisimple, 'contracted': contracted, 'pseudofinite': True, 'idempotent': e,
               'maximal_subgroup_prime': obstruction is None,
               'direction': 'sufficient' if decision else 'converse'}
    if decision:
        verdict = PrimenessVerdict(True, 'structural', 'prime', f'{"0-" if contracted else ""}bisimple with prime '
                                   f'maximal subgroup algebra', None, clauses)
    elif not bisimple:
        verdict = PrimenessVerdict(False, 'structural', 'prime', f'not {"0-" if contracted else ""}bisimple',
                                   {'idempotents': idem}, clauses)
    else:
        verdict = PrimenessVerdict(False, 'structural', 'prime', 'maximal subgroup algebra is not prime',
                                   dict(idempotent=e, **obstruction), clauses)

    structural = structural_is_prime(universal_groupoid(semigroup, contracted), ring)
    if structural.decision != verdict.decision:
        raise InternalDisagreement(f'semigroup and universal groupoid prime verdicts disagree for {semigroup}')
    verdict.clauses['groupoid_theorem'] = structural.clauses['theorem']
    return verdict


def munn_semiprime_verdict(semigroup, ring, contracted=False):
    """
    Semiprimeness of the inverse semigroup algebra: semiprime iff the group algebra of every maximal subgroup at a
    (non-zero) idempotent is semiprime. Cross-checked with the universal groupoid.

    Parameters
    ----------
    semigroup : InverseSemigroup
    ring : RingSpec
    contracted : bool, optional
        Decide R_0 S. Needs a zero. Default is False.

    Returns
    -------
    verdict : PrimenessVerdict
    """
    if contracted and semigroup.zero is None:
        raise NoZero(message='contracted algebra needs a semigroup with zero')
    idem = _munn_setup(semigroup, contracted)
    verdict = None
    for e in idem:
        obstruction = passman_obstruction(maximal_subgroup(semigroup, e), ring)
        if obstruction is not None:
            verdict = PrimenessVerdict(False, 'structural', 'semiprime', 'maximal subgroup algebra is not semiprime',
                                       dict(idempotent=e, **obstruction),
                                       {'contracted': contracted, 'pseudofinite': True, 'direction': 'converse'})
            break
    if verdict is None:
        verdict = PrimenessVerdict(True, 'structural', 'semiprime', 'every maximal subgroup algebra is semiprime',
                                   None, {'contracted': contracted, 'pseudofinite': True, 'direction': 'sufficient'})

    structural = structural_is_semiprime(universal_groupoid(semigroup, contracted), ring)
    if structural.decision != verdict.decision:
        raise InternalDisagreement(f'semigroup and universal groupoid semiprime verdicts disagree for {semigroup}')
    return verdict
