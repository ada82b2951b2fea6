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
specdist.berezin
~~~~~~~~~~~~~~~~

Berezin symbol and quantization for the spin 1/2 representation of
SU(2), with the sphere replaced by an equal-weight Fibonacci quadrature.

The symbol of a is sigma_a(x) = Tr(alpha_x(P) a), with P the highest
weight projection; its adjoint is Q_f = N sum_i w_i alpha_{x_i}(P) f(x_i).
The cost distance W(rho, tau) is the Wasserstein-1 distance between the
distributions N sigma_rho and N sigma_tau for the geodesic cost.

:copyright: (c) 2026 by the spectral-distance authors.
:license: Apache 2.0, see LICENSE for more details.

"""

import logging
import math

import numpy as np
from scipy.linalg import expm

from .engine import kantorovich
from .error import InvalidArgumentError, DimensionMismatch
from .helpers import DEFAULT_QUADRATURE_NODES, as_matrix, is_valid_density
from .triples import PAULI, State

logger = logging.getLogger(__name__)

NORTH = np.array([0.0, 0.0, 1.0])
# Radius of the sphere of total area one: geodesic lengths measured with
# the normalized invariant measure as volume form.
SPHERE_RADIUS = 1.0 / math.sqrt(4.0 * math.pi)


def rotation_to(node):
    """
    SU(2) element exp(-i theta k . sigma / 2) rotating the north pole onto
    ``node`` about k = north x node.
    """
    node = np.asarray(node, dtype=float)
    theta = math.acos(float(np.clip(node[2], -1.0, 1.0)))
    axis = np.cross(NORTH, node)
    length = np.linalg.norm(axis)
    axis = axis / length if length > 1e-15 else np.array([1.0, 0.0, 0.0])
    generator = axis[0] * PAULI[1] + axis[1] * PAULI[2] + axis[2] * PAULI[3]
    return expm(-0.5j * theta * generator)


class SphereQuadrature(object):
    """
    Fibonacci points on S^2 with equal weights.

    :param n: Number of nodes.
    """

    def __init__(self, n=DEFAULT_QUADRATURE_NODES):
        if int(n) != n or n < 1:
            raise InvalidArgumentError('quadrature needs a positive number '
                                       'of nodes')
        n = int(n)
        index = np.arange(n)
        z = 1.0 - (2.0 * index + 1.0) / n
        azimuth = index * math.pi * (3.0 - math.sqrt(5.0))
        radius = np.sqrt(np.clip(1.0 - z * z, 0.0, None))
        self.nodes = np.column_stack([radius * np.cos(azimuth),
                                      radius * np.sin(azimuth), z])
        self.weights = np.full(n, 1.0 / n)
        self.rotations = np.array([rotation_to(node) for node in self.nodes])

    @property
    def size(self):
        return self.nodes.shape[0]

    def integrate(self, values):
        return np.tensordot(self.weights, values, axes=1)

    def __str__(self):
        return '<SphereQuadrature: nodes: {0}>'.format(self.size)


class BerezinMaps(object):
    """
    Symbol and quantization maps of M_2 on a sphere quadrature.

    :param quadrature: :class:`SphereQuadrature`, built with the default
       resolution when omitted.
    """

    def __init__(self, quadrature=None):
        self.quadrature = quadrature or SphereQuadrature()
        self.N = 2
        # Projection on the +1 eigenvector of sigma3.
        self.P = np.diag([1.0, 0.0]).astype(complex)
        u = self.quadrature.rotations
        self.projections = np.einsum('iab,bc,idc->iad', u, self.P, u.conj())
        self._cost = None

    def __str__(self):
        return '<BerezinMaps: N: {0} nodes: {1}>'.format(
            self.N, self.quadrature.size)


def _operator(maps, a):
    if isinstance(a, State):
        a = a.rho
    a = as_matrix(a)
    if a.shape != (maps.N, maps.N):
        raise DimensionMismatch('operator must be {0} x {0}'.format(maps.N))
    return a


def symbol(maps, a):
    """
    Values Tr(alpha_x(P) a) on the quadrature nodes.
    """
    a = _operator(maps, a)
    return np.einsum('iab,ba->i', maps.projections, a)


def quantize(maps, f):
    """
    Q_f = N sum_i w_i alpha_{x_i}(P) f_i.
    """
    f = np.asarray(f)
    if f.shape != (maps.quadrature.size,):
        raise DimensionMismatch('function must be sampled on the {0} '
                                'nodes'.format(maps.quadrature.size))
    return maps.N * np.einsum('i,iab->ab', maps.quadrature.weights * f,
                              maps.projections)


def hs_inner(maps, a, b):
    """
    <a, b>_HS = Tr(a* b) / N.
    """
    return complex(np.vdot(_operator(maps, a), _operator(maps, b))) / maps.N


def adjointness_residual(maps, a, f):
    """
    |<sigma_a, f>_L2 - <a, Q_f>_HS| for the quadrature inner products.
    """
    lhs = complex(np.sum(maps.quadrature.weights *
                         np.conj(symbol(maps, a)) * np.asarray(f)))
    rhs = hs_inner(maps, a, quantize(maps, f))
    return abs(lhs - rhs)


def symbol_distribution(maps, rho):
    """
    Probability vector w_i N sigma_rho(x_i), renormalized on the nodes.
    """
    rho = _operator(maps, rho)
    is_valid_density(rho)
    mass = maps.N * maps.quadrature.weights * symbol(maps, rho).real
    mass = np.clip(mass, 0.0, None)
    return mass / mass.sum()


def cost_matrix(maps):
    """
    Geodesic distances between nodes on the sphere of unit area.
    """
    # Unlocked, same as engine.reduction.
    if maps._cost is None:
        nodes = maps.quadrature.nodes
        cosine = np.clip(nodes @ nodes.T, -1.0, 1.0)
        cost = SPHERE_RADIUS * np.arccos(cosine)
        np.fill_diagonal(cost, 0.0)
        maps._cost = cost
    return maps._cost


def cost_distance(maps, rho, tau):
    """
    W(rho, tau), Wasserstein-1 between the symbol distributions.
    """
    p = symbol_distribution(maps, rho)
    q = symbol_distribution(maps, tau)
    plan = kantorovich(cost_matrix(maps), p, q)
    logger.debug('cost distance %r (transport gap %r)', plan.value,
                 plan.gap)
    return plan.value


def hs_distance(maps, rho, tau):
    """
    ||rho - tau||_HS for the normalized inner product.
    """
    diff = _operator(maps, rho) - _operator(maps, tau)
    return math.sqrt(max(0.0, hs_inner(maps, diff, diff).real))


def mean_base_distance(maps):
    """
    Quadrature mean of the geodesic distance to the base point.
    """
    angles = np.arccos(np.clip(maps.quadrature.nodes[:, 2], -1.0, 1.0))
    return float(maps.quadrature.integrate(SPHERE_RADIUS * angles))


def cost_bound(maps, rho, tau):
    """
    N^(3/2) l ||rho - tau||_HS, an upper bound of W(rho, tau).
    """
    return (maps.N ** 1.5 * mean_base_distance(maps) *
            hs_distance(maps, rho, tau))
