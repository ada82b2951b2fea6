# -*- coding: utf-8 -*-
# spectral-distance, Connes distances on finite spectral triples,
# (C) 2026 The spectral-distance authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
specdist.parsers
~~~~~~~~~~~~~~~~

This module parses triple, state and metric files.

Triple file::

    {"label": "...", "dim": n, "dirac": [[entry, ...], ...],
     "grading": optional matrix,
     "algebra": {"kind": "diagonal" | "full_matrix" | "explicit",
                 "k": size for full_matrix, "basis": list of matrices}}

or a named construction, ``{"builtin": "two_point", "lambda": 0.5}``.
Matrix entries are numbers or ``{"re": x, "im": y}``.

State file::

    {"kind": "density" | "bloch" | "simplex" | "coeffs", <payload>}

with payload keys ``rho``, ``x``, ``p`` and ``coeffs`` respectively.

Metric file::

    {"size": N, "g": [[...], ...]}   entries may be "inf"

:copyright: (c) 2026 by the spectral-distance authors.
:license: Apache 2.0, see LICENSE for more details.

"""

import json
import math

import numpy as np

from .error import InvalidFileError
from .triples import (MetricSpace, State, FiniteSpectralTriple, DIAGONAL,
                      FULL_MATRIX, EXPLICIT, ALGEBRA_SPACE, two_point_triple,
                      simplex_triple, trivial_triple, bloch_triples,
                      finite_metric_triple, diagonal_triple,
                      matrix_algebra_triple, state_from_bloch,
                      state_from_simplex)

_INFINITY = ('inf', '+inf', 'infinity')


class JsonDocument(object):
    """
    Parsed JSON object with typed accessors. ``root_name`` is used in
    error messages.
    """

    def __init__(self, root_name, data):
        if not isinstance(data, dict):
            raise InvalidFileError('"{0}" must contain a JSON object'.format(
                root_name))
        self.root_name = root_name
        self.data = data

    @classmethod
    def fromstring(cls, root_name, text):
        try:
            return cls(root_name, json.loads(text))
        except ValueError as error:
            raise InvalidFileError(
                '"{0}" is not parsable JSON. Message: {1}'.format(
                    root_name, error))

    @classmethod
    def fromfile(cls, path):
        try:
            with open(path) as handle:
                text = handle.read()
        except (IOError, OSError) as error:
            raise InvalidFileError('cannot read "{0}": {1}'.format(
                path, error))
        return cls.fromstring(str(path), text)

    def get(self, name, strict=True, default=None):
        if name not in self.data:
            if strict:
                raise InvalidFileError('"{0}" is missing the key '
                                       '"{1}"'.format(self.root_name, name))
            return default
        return self.data[name]

    def child(self, name):
        return JsonDocument('{0}.{1}'.format(self.root_name, name),
                            self.get(name))

    def get_float(self, name, strict=True, default=None):
        value = self.get(name, strict, default)
        return None if value is None else _real(value, self.root_name)

    def get_int(self, name, strict=True, default=None):
        value = self.get(name, strict, default)
        if value is None:
            return None
        if not isinstance(value, int) or isinstance(value, bool):
            raise InvalidFileError('"{0}.{1}" must be an integer'.format(
                self.root_name, name))
        return value

    def get_vector(self, name):
        value = self.get(name)
        if not isinstance(value, list):
            raise InvalidFileError('"{0}.{1}" must be a list'.format(
                self.root_name, name))
        return np.array([_real(v, self.root_name) for v in value])

    def get_matrix(self, name, strict=True):
        value = self.get(name, strict)
        if value is None:
            return None
        return parse_matrix(value, '{0}.{1}'.format(self.root_name, name))


def _real(value, where):
    if isinstance(value, str) and value.strip().lower() in _INFINITY:
        return math.inf
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InvalidFileError('"{0}" has a non-numeric entry {1!r}'.format(
            where, value))
    return float(value)


def _entry(value, where):
    if isinstance(value, dict):
        try:
            return complex(float(value.get('re', 0.0)),
                           float(value.get('im', 0.0)))
        except (TypeError, ValueError):
            raise InvalidFileError('"{0}" has an invalid complex entry '
                                   '{1!r}'.format(where, value))
    return complex(_real(value, where))


def parse_matrix(value, where='matrix'):
    """
    Square complex matrix from nested lists.
    """
    if not isinstance(value, list) or not value or \
            not all(isinstance(row, list) for row in value):
        raise InvalidFileError('"{0}" must be a list of rows'.format(where))
    size = len(value)
    if any(len(row) != size for row in value):
        raise InvalidFileError('"{0}" must be square'.format(where))
    return np.array([[_entry(v, where) for v in row] for row in value])


def parse_metric(doc):
    """
    :return: :class:`MetricSpace`
    """
    size = doc.get_int('size', strict=False)
    rows = doc.get('g')
    if not isinstance(rows, list) or not all(isinstance(r, list)
                                             for r in rows):
        raise InvalidFileError('"{0}.g" must be a list of rows'.format(
            doc.root_name))
    g = np.array([[_real(v, doc.root_name + '.g') for v in row]
                  for row in rows])
    if size is not None and g.shape != (size, size):
        raise InvalidFileError('"{0}" declares size {1} but g has shape '
                               '{2}'.format(doc.root_name, size, g.shape))
    return MetricSpace(g)


def _builtin(doc):
    name = doc.get('builtin')
    if name == 'two_point':
        return two_point_triple(doc.get_float('lambda', False, 0.5))
    if name == 'simplex':
        return simplex_triple()
    if name == 'trivial':
        return trivial_triple()
    if name == 'metric':
        return finite_metric_triple(parse_metric(doc))
    if isinstance(name, str) and name.startswith('bloch_'):
        triples = bloch_triples()
        variant = name[len('bloch_'):]
        if variant in triples:
            return triples[variant]
    raise InvalidFileError('"{0}" names an unknown builtin triple '
                           '{1!r}'.format(doc.root_name, name))


def parse_triple(doc):
    """
    :return: :class:`FiniteSpectralTriple`
    """
    if 'builtin' in doc.data:
        return _builtin(doc)
    if 'g' in doc.data:
        return finite_metric_triple(parse_metric(doc))
    dirac = doc.get_matrix('dirac')
    dim = doc.get_int('dim', strict=False)
    if dim is not None and dirac.shape[0] != dim:
        raise InvalidFileError('"{0}" declares dim {1} but dirac is '
                               '{2} x {2}'.format(doc.root_name, dim,
                                                  dirac.shape[0]))
    grading = doc.get_matrix('grading', strict=False)
    label = doc.get('label', strict=False, default='')
    algebra = doc.child('algebra') if 'algebra' in doc.data else \
        JsonDocument(doc.root_name + '.algebra', {'kind': DIAGONAL})
    kind = algebra.get('kind')
    if kind == DIAGONAL:
        return diagonal_triple(dirac, grading=grading, label=label)
    if kind == FULL_MATRIX:
        return matrix_algebra_triple(dirac, algebra.get_int('k', False, 2),
                                     grading=grading, label=label)
    if kind == EXPLICIT:
        basis = algebra.get('basis')
        if not isinstance(basis, list) or not basis:
            raise InvalidFileError('"{0}.basis" must be a non-empty list of '
                                   'matrices'.format(algebra.root_name))
        matrices = [parse_matrix(b, algebra.root_name + '.basis')
                    for b in basis]
        defining = algebra.get('defining_basis', strict=False)
        if defining is not None:
            defining = [parse_matrix(b, algebra.root_name +
                                     '.defining_basis') for b in defining]
        return FiniteSpectralTriple(dirac, matrices, grading=grading,
                                    label=label, defining_basis=defining)
    raise InvalidFileError('"{0}" has unknown algebra kind {1!r}'.format(
        algebra.root_name, kind))


def parse_state(doc):
    """
    :return: :class:`State`
    """
    kind = doc.get('kind')
    label = doc.get('label', strict=False, default='')
    if kind == 'density':
        dims = doc.get('factor_dims', strict=False)
        state = State(doc.get_matrix('rho'), factor_dims=dims,
                      space=doc.get('space', strict=False,
                                    default=ALGEBRA_SPACE))
    elif kind == 'bloch':
        state = state_from_bloch(doc.get_vector('x'))
    elif kind == 'simplex':
        state = state_from_simplex(doc.get_vector('p'))
    elif kind == 'coeffs':
        state = State(coeffs=doc.get_vector('coeffs'))
    else:
        raise InvalidFileError('"{0}" has unknown state kind {1!r}'.format(
            doc.root_name, kind))
    if label:
        state.label = label
    elif not state.label:
        state.label = doc.root_name
    return state


def load_triple(path):
    return parse_triple(JsonDocument.fromfile(path))


def load_state(path):
    return parse_state(JsonDocument.fromfile(path))


def load_metric(path):
    return parse_metric(JsonDocument.fromfile(path))


def parse_vector(text, what='vector'):
    """
    Comma separated real vector, e.g. "0.5,0.3,0.2".
    """
    try:
        return np.array([float(v) for v in text.split(',')])
    except ValueError:
        raise InvalidFileError('invalid {0} {1!r}'.format(what, text))


def parse_probability(text):
    return parse_vector(text, 'probability vector')
