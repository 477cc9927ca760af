from pygpa.groupoid import groupoids
from pygpa.groupoid import convolution
from pygpa.groupoid import oracle
from pygpa.groupoid.groupoids import *
from pygpa.groupoid.convolution import *
from pygpa.groupoid.oracle import *

__all__ = ['groupoids', 'convolution', 'oracle'] + groupoids.__all__ + convolution.__all__ + oracle.__all__
