"""
Exact coefficient rings: integers, rationals, integers modulo n and Laurent polynomials over those

GNU GPL v3.0
V0.1 - October 2026
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
import re

from sympy import isprime, factorint

from pygpa.common import MismatchedRing


__all__ = ['RingSpec', 'RingElem', 'parse_ring', 'arith', 'is_integral_domain', 'is_reduced', 'is_zero_divisor',
           'is_field']


INTEGERS = 'Z'
RATIONALS = 'Q'
MODULAR = 'Z/n'
LAURENT = 'Laurent'


@dataclass(frozen=True)
class RingSpec:
    """
    Descriptor of a commutative coefficient ring with unit.

    Element payloads are plain python values so that the hot loops of the algebra code can work on them directly:

    - ``Z``: int
    - ``Q``: fractions.Fraction
    - ``Z/n``: int in [0, n)
    - ``Laurent(B)``: tuple of (exponent, B payload) pairs sorted by exponent, zero coefficients dropped

    Parameters
    ----------
    kind : {'Z', 'Q', 'Z/n', 'Laurent'}
        Ring variant.
    modulus : int, optional
        Modulus for 'Z/n'. Must be at least 2.
    base : RingSpec, optional
        Coefficient ring for 'Laurent'. Laurent over Laurent is rejected.
    """
    kind: str
    modulus: int = None
    base: 'RingSpec' = None

    def __post_init__(self):
        if self.kind == MODULAR:
            if self.modulus is None or int(self.modulus) < 2:
                raise ValueError(f'Modulus must be at least 2, got {self.modulus}.')
        elif self.kind == LAURENT:
            if not isinstance(self.base, RingSpec):
                raise ValueError('Laurent rings need a base RingSpec.')
            if self.base.kind == LAURENT:
                raise ValueError('Laurent rings over Laurent rings are not supported.')
        elif self.kind not in (INTEGERS, RATIONALS):
            raise ValueError(f'Unknown ring kind "{self.kind}".')

    @classmethod
    def integers(cls):
        return cls(INTEGERS)

    @classmethod
    def rationals(cls):
        return cls(RATIONALS)

    @classmethod
    def integers_mod(cls, n):
        return cls(MODULAR, modulus=int(n))

    @classmethod
    def laurent(cls, base):
        return cls(LAURENT, base=base)

    def __str__(self):
        if self.kind == MODULAR:
            return f'Z/{self.modulus}'
        if self.kind == LAURENT:
            return f'Laurent({self.base})'
        return self.kind

    # ---- size ----
    @property
    def is_finite(self):
        return self.kind == MODULAR

    @property
    def size(self):
        """
        Number of elements, or None for infinite rings.
        """
        return self.modulus if self.kind == MODULAR else None

    def elements(self):
        """
        All element payloads of a finite ring, in increasing order.
        """
        if not self.is_finite:
            raise ValueError(f'{self} is not finite.')
        return list(range(self.modulus))

    # ---- payload arithmetic ----
    @property
    def zero(self):
        if self.kind == RATIONALS:
            return Fraction(0)
        if self.kind == LAURENT:
            return ()
        return 0

    @property
    def one(self):
        return self.from_int(1)

    def from_int(self, k):
        """
        Image of the integer k under the unique ring map from the integers.
        """
        k = int(k)
        if self.kind == INTEGERS:
            return k
        if self.kind == RATIONALS:
            return Fraction(k)
        if self.kind == MODULAR:
            return k % self.modulus
        c = self.base.from_int(k)
        return () if self.base.is_zero(c) else ((0, c),)

    def canon(self, value):
        """
        Canonical payload of a user supplied value.

        Laurent values may be given as a dict {exponent: coefficient} or as (exponent, coefficient) pairs.
        """
        if self.kind == INTEGERS:
            if isinstance(value, Fraction) and value.denominator != 1:
                raise ValueError(f'{value} is not an integer.')
            return int(value)
        if self.kind == RATIONALS:
            return Fraction(value)
        if self.kind == MODULAR:
            return int(value) % self.modulus
        if isinstance(value, int):
            return self.from_int(value)
        items = value.items() if isinstance(value, dict) else value
        acc = {}
        for exp, c in items:
            exp = int(exp)
            acc[exp] = self.base.add(acc.get(exp, self.base.zero), self.base.canon(c))
        return tuple(sorted((e, c) for e, c in acc.items() if not self.base.is_zero(c)))

    def is_zero(self, a):
        if self.kind == LAURENT:
            return len(a) == 0
        return a == 0

    def add(self, a, b):
        if self.kind == MODULAR:
            return (a + b) % self.modulus
        if self.kind == LAURENT:
            acc = dict(a)
            for e, c in b:
                acc[e] = self.base.add(acc[e], c) if e in acc else c
            return tuple(sorted((e, c) for e, c in acc.items() if not self.base.is_zero(c)))
        return a + b

    def neg(self, a):
        if self.kind == MODULAR:
            return (-a) % self.modulus
        if self.kind == LAURENT:
            return tuple((e, self.base.neg(c)) for e, c in a)
        return -a

    def mul(self, a, b):
        if self.kind == MODULAR:
            return (a * b) % self.modulus
        if self.kind == LAURENT:
            acc = {}
            for e1, c1 in a:
                for e2, c2 in b:
                    prod = self.base.mul(c1, c2)
                    acc[e1 + e2] = self.base.add(acc[e1 + e2], prod) if e1 + e2 in acc else prod
            return tuple(sorted((e, c) for e, c in acc.items() if not self.base.is_zero(c)))
        return a * b

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def elem(self, value):
        """
        Wrap a value as a RingElem of this ring.
        """
        return RingElem(self, self.canon(value))

    def to_json(self, a):
        """
        JSON friendly form of a payload.
        """
        if self.kind == RATIONALS:
            return str(a)
        if self.kind == LAURENT:
            return {str(e): self.base.to_json(c) for e, c in a}
        return int(a)


_RING_RE = re.compile(r'^\s*(?:(Z)\s*/\s*(\d+)|(Z)|(Q)|Laurent\s*\((.*)\))\s*$')


def parse_ring(text):
    """
    Parse the textual form ``Z | Q | Z/<n> | Laurent(<spec>)``.

    Parameters
    ----------
    text : {str, RingSpec}
        Textual ring description. RingSpec instances are returned unchanged.

    Returns
    -------
    spec : RingSpec
    """
    if isinstance(text, RingSpec):
        return text
    match = _RING_RE.match(str(text))
    if match is None:
        raise ValueError(f'Cannot parse ring "{text}". Expected Z, Q, Z/<n> or Laurent(<ring>).')
    if match.group(1):
        return RingSpec.integers_mod(int(match.group(2)))
    if match.group(3):
        return RingSpec.integers()
    if match.group(4):
        return RingSpec.rationals()
    return RingSpec.laurent(parse_ring(match.group(5)))


@dataclass(frozen=True)
class RingElem:
    """
    An element of a coefficient ring. Equality is structural equality of canonical payloads.
    """
    spec: RingSpec
    value: object

    def _check(self, other):
        if not isinstance(other, RingElem):
            other = self.spec.elem(other)
        if other.spec != self.spec:
            raise MismatchedRing(f'Operands belong to {self.spec} and {other.spec}.')
        return other

    def __add__(self, other):
        other = self._check(other)
        return RingElem(self.spec, self.spec.add(self.value, other.value))

    __radd__ = __add__

    def __mul__(self, other):
        other = self._check(other)
        return RingElem(self.spec, self.spec.mul(self.value, other.value))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElem(self.spec, self.spec.neg(self.value))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __pow__(self, k):
        result = RingElem(self.spec, self.spec.one)
        for _ in range(int(k)):
            result = result * self
        return result

    def __bool__(self):
        return not self.spec.is_zero(self.value)

    def __repr__(self):
        return f'RingElem({self.spec}, {self.spec.to_json(self.value)})'


def arith(kind, a, b, spec):
    """
    Exact ring arithmetic.

    Parameters
    ----------
    kind : {'add', 'mul', 'neg'}
        Operation. 'neg' ignores b.
    a, b : RingElem
        Operands.
    spec : RingSpec
        Ring both operands must belong to.

    Returns
    -------
    result : RingElem
    """
    for x in (a, b):
        if x is not None and x.spec != spec:
            raise MismatchedRing(f'Operand in {x.spec}, expected {spec}.')
    if kind == 'add':
        return a + b
    if kind == 'mul':
        return a * b
    if kind == 'neg':
        return -a
    raise ValueError(f'Unknown operation "{kind}".')


def is_integral_domain(spec):
    """
    Whether the ring has no zero divisors. Z/n is a domain iff n is prime, Laurent(B) iff B is.
    """
    if spec.kind == MODULAR:
        return bool(isprime(spec.modulus))
    if spec.kind == LAURENT:
        return is_integral_domain(spec.base)
    return True


def is_reduced(spec):
    """
    Whether the ring has no nonzero nilpotents. Z/n is reduced iff n is squarefree, Laurent(B) iff B is.
    """
    if spec.kind == MODULAR:
        return all(k == 1 for k in factorint(spec.modulus).values())
    if spec.kind == LAURENT:
        return is_reduced(spec.base)
    return True


def is_field(spec):
    return spec.kind == RATIONALS or (spec.kind == MODULAR and bool(isprime(spec.modulus)))


def is_zero_divisor(m, spec):
    """
    Whether multiplication by the image of the positive integer m is non-injective.

    The image of m counts as a zero divisor when it is zero, since all rings here are nonzero.
    """
    m = int(m)
    if m < 1:
        raise ValueError('m must be a positive integer.')
    if spec.kind == MODULAR:
        return gcd(m, spec.modulus) > 1
    if spec.kind == LAURENT:
        return is_zero_divisor(m, spec.base)
    return False
