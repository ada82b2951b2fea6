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
specdist.surface
~~~~~~~~~~~~~~~~

States of C^2 x C^2 = C^4 drawn inside a regular tetrahedron. Product
states fill the saddle z = x y and taking the product of the marginals
is the vertical projection onto it.

:copyright: (c) 2026 by the spectral-distance authors.
:license: Apache 2.0, see LICENSE for more details.

"""

import numpy as np

from .error import InvalidArgumentError, InvalidStateError
from .helpers import STRUCTURE_TOL, is_valid_probability

# Images of the four pure states e1 ... e4.
VERTICES = np.array([[1.0, 1.0, 1.0],
                     [1.0, -1.0, -1.0],
                     [-1.0, 1.0, -1.0],
                     [-1.0, -1.0, 1.0]])

COLUMNS = ('t', 's', 'x', 'y', 'z')


def _simplex_point(p):
    p = np.asarray(p, dtype=float)
    if p.shape != (4,):
        raise InvalidStateError('points of the 3-simplex have four '
                                'coordinates')
    is_valid_probability(p)
    return p


def tetrahedron_map(p):
    """
    f(p) = sum_i p_i f(e_i).
    """
    return _simplex_point(p) @ VERTICES


def parametrize(t, s):
    """
    The product state ((1+t)/2, (1-t)/2) x ((1+s)/2, (1-s)/2).
    """
    if abs(t) > 1.0 or abs(s) > 1.0:
        raise InvalidArgumentError('(t, s) must lie in [-1, 1]^2')
    return np.array([(1 + t) * (1 + s), (1 + t) * (1 - s),
                     (1 - t) * (1 + s), (1 - t) * (1 - s)]) / 4.0


def product_marginal(p):
    """
    Product of the two marginals of p, read off [[p1, p2], [p3, p4]].
    """
    table = _simplex_point(p).reshape(2, 2)
    return np.outer(table.sum(axis=1), table.sum(axis=0)).ravel()


class MarginalProjection(object):
    """
    A state of C^4 against the product of its marginals.

    :param point: f(p).
    :param projected: f(p1 x p2).
    """

    def __init__(self, point, projected):
        self.point = point
        self.projected = projected

    @property
    def residual(self):
        return float(np.max(np.abs(self.point[:2] - self.projected[:2])))

    def __str__(self):
        return '<MarginalProjection: point: {0} projected: {1}>'.format(
            self.point, self.projected)


def marginal_projection(p):
    """
    :raises InvalidStateError: if the projection moves x or y.
    """
    report = MarginalProjection(tetrahedron_map(p),
                                tetrahedron_map(product_marginal(p)))
    if report.residual > STRUCTURE_TOL:
        raise InvalidStateError('marginal projection is not vertical: '
                                'residual {0!r}'.format(report.residual))
    return report


def sample(n):
    """
    Rows (t, s, x, y, z) over an n x n grid of [-1, 1]^2.
    """
    if int(n) != n or n < 2:
        raise InvalidArgumentError('grid resolution must be at least 2')
    rows = []
    axis = np.linspace(-1.0, 1.0, int(n))
    for t in axis:
        for s in axis:
            x, y, z = tetrahedron_map(parametrize(t, s))
            rows.append((float(t), float(s), float(x), float(y), float(z)))
    return rows


def vertex_rows():
    """
    Rows for the corners: the images of e1 ... e4 with their (t, s).
    """
    corners = ((1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0))
    return [(t, s) + tuple(float(v) for v in vertex)
            for (t, s), vertex in zip(corners, VERTICES)]
