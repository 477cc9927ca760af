from pygpa.version import __version__
from pygpa import algebra
from pygpa import groupoid
from pygpa import semigroup
from pygpa import graph
from pygpa import corpus
from pygpa import serialize
from pygpa.common import *
from pygpa.core import GroupoidAnalysis, GraphAnalysis, SemigroupAnalysis, CorpusAnalysis
