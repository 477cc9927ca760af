from pygpa.semigroup import semigroups
from pygpa.semigroup import universal
from pygpa.semigroup.semigroups import *
from pygpa.semigroup.universal import *

__all__ = ['semigroups', 'universal'] + semigroups.__all__ + universal.__all__
