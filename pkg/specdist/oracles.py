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
specdist.oracles
~~~~~~~~~~~~~~~~

Closed-form distances. They are the reference values the engine is
tested against.

:copyright: (c) 2026 by the spectral-distance authors.
:license: Apache 2.0, see LICENSE for more details.

"""

import math

import numpy as np

from .error import InvalidArgumentError, InvalidStateError
from .helpers import (is_valid_bloch_vector, is_valid_probability,
                      is_positive_number)
from .triples import state_from_bloch

# Factor coefficients of 1 and gamma on the two-point basis
# diag(1, 0), diag(0, 1).
_ONE = np.array([1.0, 1.0])
_GAMMA = np.array([1.0, -1.0])


class BlochPoint(object):
    """
    Point of the closed unit ball, the state (1 + x . sigma) / 2 of M_2.

    :param x: Vector in R^3 with norm at most 1.
    """

    def __init__(self, x):
        if isinstance(x, BlochPoint):
            x = x.x
        x = np.asarray(x, dtype=float)
        is_valid_bloch_vector(x)
        norm = np.linalg.norm(x)
        self.x = x / norm if norm > 1.0 else x

    @property
    def norm(self):
        return float(np.linalg.norm(self.x))

    def state(self):
        return state_from_bloch(self.x)

    def polar_angle(self, other):
        """
        Polar angle in [0, pi] of self - other.
        """
        diff = self.x - BlochPoint(other).x
        return math.atan2(math.hypot(diff[0], diff[1]), diff[2])

    def __str__(self):
        return '<BlochPoint: x: ({0:.6g}, {1:.6g}, {2:.6g})>'.format(*self.x)


def two_point_distance(lam, phi, psi):
    """
    Distance |phi - psi| between states of the two-point space with
    coordinates in [-lam, lam].
    """
    is_positive_number(lam, 'lambda')
    for value in (phi, psi):
        if abs(value) > lam * (1 + 1e-12):
            raise InvalidStateError('two-point coordinate {0!r} outside '
                                    '[-{1}, {1}]'.format(value, lam))
    return abs(float(phi) - float(psi))


def chebyshev_distance(p, q):
    """
    ||p - q||_inf between two probability vectors.
    """
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    is_valid_probability(p)
    is_valid_probability(q)
    if p.shape != q.shape:
        raise InvalidArgumentError('probability vectors differ in length')
    return float(np.max(np.abs(p - q)))


def simplex3_distance(p, q):
    """
    Distance on the three-point triple: ||p - q||_inf.
    """
    if np.size(p) != 3 or np.size(q) != 3:
        raise InvalidArgumentError('points of the 2-simplex have three '
                                   'coordinates')
    return chebyshev_distance(p, q)


def bloch_conjugation_distance(x, y):
    return float(np.linalg.norm(BlochPoint(x).x - BlochPoint(y).x))


def bloch_flip_distance(x, y):
    return float(np.linalg.norm(BlochPoint(x).x - BlochPoint(y).x))


def truncated_moyal_factor(theta):
    """
    c(theta) = sin(theta) for pi/4 <= theta <= 3pi/4 and 1/|2 cos(theta)|
    otherwise.
    """
    theta = float(theta)
    if not 0.0 <= theta <= math.pi:
        raise InvalidArgumentError('polar angle {0!r} outside [0, pi]'.format(
            theta))
    if math.pi / 4 <= theta <= 3 * math.pi / 4:
        return math.sin(theta)
    return 1.0 / abs(2.0 * math.cos(theta))


def bloch_truncated_moyal_distance(x, y):
    """
    c(theta) ||x - y|| with theta the polar angle of x - y; 0 when the
    points coincide.
    """
    first, second = BlochPoint(x), BlochPoint(y)
    length = float(np.linalg.norm(first.x - second.x))
    if length == 0.0:
        return 0.0
    return truncated_moyal_factor(first.polar_angle(second)) * length


def purified_distance_pure(v, w):
    """
    sqrt(1 - |<v, w>|^2) for unit vectors.
    """
    v = np.asarray(v, dtype=complex).ravel()
    w = np.asarray(w, dtype=complex).ravel()
    if v.shape != w.shape:
        raise InvalidArgumentError('vectors differ in length')
    for vector in (v, w):
        if abs(np.linalg.norm(vector) - 1.0) > 1e-10:
            raise InvalidStateError('purified distance needs unit vectors')
    overlap = abs(np.vdot(v, w)) ** 2
    return math.sqrt(max(0.0, 1.0 - overlap))


def purified_distance_qubit(x, y):
    """
    Purified distance of two qubit states given by Bloch points.
    """
    x, y = BlochPoint(x), BlochPoint(y)
    root = (math.sqrt(max(0.0, 1.0 - x.norm ** 2)) *
            math.sqrt(max(0.0, 1.0 - y.norm ** 2)))
    inner = 1.0 - float(x.x @ y.x) - root
    return math.sqrt(max(0.0, inner) / 2.0)


def two_two_point_element(x, phi1, psi2, x0=0.0):
    """
    Coefficients, on the product basis of two two-point triples, of

        a(x) = x0 + x1/2 g x 1 + x2/2 1 x g + x3/2 (phi1 + g) x (psi2 + g)

    with g the grading of each factor.

    :param x: (x1, x2, x3).
    :param phi1: Value of the first factor state on g, in [-1, 1].
    :param psi2: Value of the second factor state on g, in [-1, 1].
    """
    x1, x2, x3 = (float(v) for v in x)
    _check_unit_interval(phi1, psi2)
    return (x0 * np.kron(_ONE, _ONE) +
            x1 / 2.0 * np.kron(_GAMMA, _ONE) +
            x2 / 2.0 * np.kron(_ONE, _GAMMA) +
            x3 / 2.0 * np.kron(phi1 * _ONE + _GAMMA, psi2 * _ONE + _GAMMA))


def two_two_point_lipnorm(x1, x2, x3, phi1, psi2, lam=0.5):
    """
    ||[D, a(x)]|| on the product of two two-point spaces of half-length
    ``lam``:

        (sqrt(2)|x3| + sqrt((x1 + x3 psi2)^2 + (x2 + x3 phi1)^2)) / (2 lam)
    """
    is_positive_number(lam, 'lambda')
    _check_unit_interval(phi1, psi2)
    value = (math.sqrt(2.0) * abs(x3) +
             math.hypot(x1 + x3 * psi2, x2 + x3 * phi1))
    return value / (2.0 * lam)


def _check_unit_interval(*values):
    for value in values:
        if abs(value) > 1.0 + 1e-12:
            raise InvalidStateError('state value {0!r} outside '
                                    '[-1, 1]'.format(value))
