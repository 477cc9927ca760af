"""
Testing imports of required libraries
"""


def test_numpy():
    import numpy


def test_scipy():
    from scipy.sparse import csgraph


def test_networkx():
    import networkx


def test_sympy():
    from sympy import isprime, factorint


def test_pygpa():
    import pygpa
    from pygpa import algebra, groupoid, semigroup, graph, corpus, serialize
    from pygpa.core import GroupoidAnalysis, GraphAnalysis, SemigroupAnalysis, CorpusAnalysis
    from pygpa.cli import main


def test_pygpa_subpackages():
    from pygpa.algebra import rings, groups
    from pygpa.groupoid import groupoids, convolution, oracle
    from pygpa.semigroup import semigroups, universal
    from pygpa.graph import graphs, leavitt
