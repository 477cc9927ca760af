from pygpa.algebra import rings
from pygpa.algebra import groups
from pygpa.algebra.rings import *
from pygpa.algebra.groups import *

__all__ = ['rings', 'groups'] + rings.__all__ + groups.__all__
