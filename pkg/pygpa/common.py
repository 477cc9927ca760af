"""
Errors, verdicts and helpers that are common across the rings, groups, groupoids, semigroups and graphs

GNU GPL v3.0
V0.1 - October 2026
"""
from dataclasses import dataclass, field
import hashlib
import json

from numpy import argwhere, integer, ndarray


__all__ = ['ValidationError', 'NotAssociative', 'NoIdentity', 'NoInverse', 'NonUniqueInverse', 'BadComposability',
           'MissingIdentity', 'MissingInverse', 'NotAnAction', 'Degenerate', 'NotIdempotent', 'NoZero', 'NotAcyclic',
           'NotAField', 'MismatchedRing', 'MismatchedCarrier', 'CapExceeded', 'InternalDisagreement',
           'PrimenessVerdict', 'canonical_json', 'digest', 'associativity_failure', 'DEFAULT_CAPS', 'resolve_caps']


class ValidationError(ValueError):
    """
    Input structure failed one of its axioms.

    Parameters
    ----------
    axiom : str
        Short name of the violated axiom.
    witness : tuple
        Indices witnessing the violation.
    message : str, optional
        Human readable message. Built from axiom and witness if not provided.
    """
    axiom = 'validation'

    def __init__(self, *witness, message=None, axiom=None):
        if axiom is not None:
            self.axiom = axiom
        self.witness = tuple(int(w) if isinstance(w, integer) else w for w in witness)
        if message is None:
            message = f'{self.axiom} violated, witness {self.witness}'
        super().__init__(message)


class NotAssociative(ValidationError):
    axiom = 'associativity'


class NoIdentity(ValidationError):
    axiom = 'identity'


class NoInverse(ValidationError):
    axiom = 'inverse'


class NonUniqueInverse(ValidationError):
    axiom = 'unique inverse'


class BadComposability(ValidationError):
    axiom = 'composability'


class MissingIdentity(ValidationError):
    axiom = 'identity arrow'


class MissingInverse(ValidationError):
    axiom = 'inverse arrow'


class NotAnAction(ValidationError):
    axiom = 'action'


class Degenerate(ValidationError):
    axiom = 'non-degeneracy'


class NotIdempotent(ValidationError):
    axiom = 'idempotent'


class NoZero(ValidationError):
    axiom = 'zero element'


class NotAcyclic(ValidationError):
    axiom = 'acyclic'


class NotAField(ValidationError):
    axiom = 'field'


class MismatchedRing(ValueError):
    pass


class MismatchedCarrier(ValueError):
    pass


class CapExceeded(RuntimeError):
    """
    An exhaustive search would need more candidates than its configured cap.

    Parameters
    ----------
    required : int
        Number of candidates the search would need.
    cap : int
        The configured cap.
    what : str, optional
        Name of the cap.
    """
    def __init__(self, required, cap, what='candidates'):
        self.required = int(required)
        self.cap = int(cap)
        self.what = what
        super().__init__(f'{what}: {self.required} required, cap is {self.cap}')


class InternalDisagreement(AssertionError):
    pass


@dataclass
class PrimenessVerdict:
    """
    Decision on a ring-theoretic property together with its evidence.

    Attributes
    ----------
    decision : bool
        Whether the property holds.
    method : {'structural', 'bruteforce'}
        How the decision was reached.
    prop : {'prime', 'semiprime', 'primitive'}
        Property decided.
    reason : str
        Short human readable justification.
    witness : {None, dict}
        Machine-checkable evidence. Brute-force failures carry the element pair, structural failures the reason's
        ingredients (orbits, isotropy object, normal subgroup, ...).
    clauses : dict
        Individual conditions that make up the decision, including the chain of results the decision rests on.
    """
    decision: bool
    method: str
    prop: str = 'prime'
    reason: str = ''
    witness: dict = None
    clauses: dict = field(default_factory=dict)

    def __bool__(self):
        return bool(self.decision)

    def to_json(self):
        return {self.prop: bool(self.decision), 'method': self.method, 'reason': self.reason,
                'witness': self.witness, 'clauses': self.clauses}


def _default(obj):
    if isinstance(obj, integer):
        return int(obj)
    if isinstance(obj, ndarray):
        return obj.tolist()
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if hasattr(obj, 'to_json'):
        return obj.to_json()
    return str(obj)


def canonical_json(obj, indent=None):
    """
    Serialize with sorted keys so that equal structures give byte-identical text.
    """
    return json.dumps(obj, sort_keys=True, indent=indent, default=_default)


def digest(obj):
    """
    SHA-256 of the canonical JSON form of obj.
    """
    return hashlib.sha256(canonical_json(obj).encode('utf-8')).hexdigest()


def associativity_failure(table):
    """
    Find the first triple where a full multiplication table fails associativity.

    Parameters
    ----------
    table : numpy.ndarray
        (m, m) integer array, table[i, j] = i * j.

    Returns
    -------
    triple : {None, tuple}
        First (i, j, k) in lexicographic order with (ij)k != i(jk), or None if associative.
    """
    left = table[table, :]  # left[i, j, k] = (ij)k
    right = table[:, table]  # right[i, j, k] = i(jk)
    bad = argwhere(left != right)
    if bad.shape[0] == 0:
        return None
    return tuple(int(i) for i in bad[0])


DEFAULT_CAPS = {
    'pair_candidates': 2 ** 24,  # brute-force prime test, a and b candidates
    'single_candidates': 2 ** 20,  # brute-force semiprime test
    'semigroup_order': 24,
    'group_order': 24,
    'boundary_paths': 4096,
}


def resolve_caps(caps=None):
    """
    Default search caps with any provided keys overridden.

    Parameters
    ----------
    caps : {None, dict}, optional
        Caps to change. Only the given keys are modified. Unknown keys raise a ValueError.

    Returns
    -------
    caps : dict
    """
    resolved = dict(DEFAULT_CAPS)
    if caps is not None:
        for key in caps.keys():
            if key not in resolved:
                raise ValueError(f'Unknown cap "{key}". Valid caps are {sorted(resolved)}.')
            resolved[key] = int(caps[key])
    return resolved
