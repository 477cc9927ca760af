from pygpa.graph import graphs
from pygpa.graph import leavitt
from pygpa.graph.graphs import *
from pygpa.graph.leavitt import *

__all__ = ['graphs', 'leavitt'] + graphs.__all__ + leavitt.__all__
