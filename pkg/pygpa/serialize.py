"""
JSON input and output of groups, groupoids, inverse semigroups and graphs, and their canonical dumps

GNU GPL v3.0
V0.1 - October 2026
"""
import json

from numpy import array_equal

from pygpa.common import ValidationError, canonical_json
from pygpa.algebra.groups import INFINITE_CYCLIC, InfiniteCyclic, validate_group
from pygpa.groupoid.groupoids import FiniteGroupoid, validate_groupoid
from pygpa.semigroup.semigroups import InverseSemigroup, validate_inverse_semigroup
from pygpa.graph.graphs import DirectedGraph, validate_graph


__all__ = ['read_json', 'load_group', 'load_groupoid', 'load_semigroup', 'load_graph', 'load_structure',
           'dump_structure', 'dump_canonical', 'same_structure']


def read_json(path):
    """
    Read a JSON file.

    Raises
    ------
    ValueError
        The file cannot be read or is not valid JSON.
    """
    try:
        with open(path, 'r') as f:
            return json.load(f)
    except OSError as e:
        raise ValueError(f'Cannot read "{path}": {e.strerror}.')
    except json.JSONDecodeError as e:
        raise ValueError(f'"{path}" is not valid JSON: {e.msg} (line {e.lineno}).')


def _check_order(kind, data, order):
    if 'order' in data and data['order'] != order:
        raise ValidationError(data['order'], order, axiom='order',
                              message=f'{kind} order {data["order"]} does not match a table of order {order}.')


def load_group(data):
    """
    Build a group from {'order': m, 'table': [[...], ...]}, or the infinite cyclic group from the string
    'InfiniteCyclic'. 'order' is optional and must match the table when given.

    Raises
    ------
    ValidationError
        'order' disagrees with the size of the table.
    """
    if data == 'InfiniteCyclic':
        return INFINITE_CYCLIC
    if not isinstance(data, dict):
        raise ValueError('Group data must be a JSON object or "InfiniteCyclic".')
    try:
        table = data['table']
    except KeyError:
        raise ValueError('Group data is missing the \'table\' key.')
    group = validate_group(table)
    _check_order('Group', data, group.order)
    return group


def load_groupoid(data):
    """
    Build a groupoid from {'objects': n, 'arrows': [...], 'compose': [[...], ...]}. See
    :meth:`pygpa.groupoid.validate_groupoid`.
    """
    return validate_groupoid(data)


def load_semigroup(data):
    """
    Build an inverse semigroup from {'order': m, 'table': [[...], ...], 'zero': optional index}. 'order' is
    optional and must match the table when given.
    """
    try:
        table = data['table']
    except KeyError:
        raise ValueError('Semigroup data is missing the \'table\' key.')
    semigroup = validate_inverse_semigroup(table, zero=data.get('zero', None))
    _check_order('Semigroup', data, semigroup.order)
    return semigroup


def load_graph(data):
    """
    Build a graph from {'vertices': n, 'edges': [{'src': i, 'dst': j}, ...]}.
    """
    return validate_graph(data)


_LOADERS = {
    'group': load_group,
    'groupoid': load_groupoid,
    'semigroup': load_semigroup,
    'graph': load_graph,
}


def load_structure(kind, data):
    """
    Build and certify a structure of the given kind from parsed JSON.

    Parameters
    ----------
    kind : {'group', 'groupoid', 'semigroup', 'graph'}
    data : {dict, str}
        Groups may also be given as the string 'InfiniteCyclic'.

    Returns
    -------
    structure : {FiniteGroup, InfiniteCyclic, FiniteGroupoid, InverseSemigroup, DirectedGraph}
    """
    if kind not in _LOADERS:
        raise ValueError(f'Unknown structure kind "{kind}". Valid kinds are {sorted(_LOADERS)}.')
    if kind == 'group':
        return load_group(data)
    if not isinstance(data, dict):
        raise ValueError(f'{kind.title()} data must be a JSON object.')
    return _LOADERS[kind](data)


def dump_structure(structure):
    """
    JSON-ready form of a structure. Groupoids also carry their identities and inverses.
    """
    data = structure.to_json()
    if isinstance(structure, FiniteGroupoid):
        data['identities'] = structure.identities.tolist()
        data['inverses'] = structure.inverse.tolist()
    return data


def dump_canonical(structure, indent=None):
    """
    Canonical text of a structure, equal for equal structures.
    """
    return canonical_json(dump_structure(structure), indent=indent)


def same_structure(first, second):
    """
    Whether two certified structures have identical presentations.
    """
    if type(first) is not type(second):
        return False
    if isinstance(first, FiniteGroupoid):
        return first.same_carrier(second) and array_equal(first.identities, second.identities) and \
            array_equal(first.inverse, second.inverse)
    if isinstance(first, InverseSemigroup):
        return array_equal(first.table, second.table) and first.zero == second.zero
    if isinstance(first, InfiniteCyclic):
        return True
    if isinstance(first, DirectedGraph):
        return first.n_vertices == second.n_vertices and array_equal(first.src, second.src) and \
            array_equal(first.dst, second.dst)
    return array_equal(first.table, second.table)
