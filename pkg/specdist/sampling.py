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
specdist.sampling
~~~~~~~~~~~~~~~~~

Seeded random instances: metrics, states and triples. Every function
takes a ``numpy.random.Generator``.

:copyright: (c) 2026 by the spectral-distance authors.
:license: Apache 2.0, see LICENSE for more details.

"""

import itertools
import math

import numpy as np
from scipy.sparse.csgraph import shortest_path

from .error import InvalidArgumentError
from .triples import (MetricSpace, State, FiniteSpectralTriple, DIAGONAL,
                      FULL_MATRIX, PAULI, FLIP, GAMMA, diagonal_triple,
                      matrix_algebra_triple,
                      state_from_simplex, state_from_vector,
                      state_from_bloch, pure_state)


def generator(seed):
    return np.random.default_rng(seed)


def random_metric(rng, size, low=0.5, high=2.0, components=1):
    """
    Random finite metric: shortest-path closure of random edge weights.
    With ``components`` > 1 the points are split into that many groups
    at infinite distance from each other.
    """
    weights = rng.uniform(low, high, size=(size, size))
    weights = np.triu(weights, 1)
    weights = weights + weights.T
    if components > 1:
        labels = np.arange(size) % components
        weights[labels[:, None] != labels[None, :]] = 0.0
    g = shortest_path(weights, method='FW', directed=False)
    g = np.minimum(g, g.T)
    np.fill_diagonal(g, 0.0)
    return MetricSpace(g)


def random_probability(rng, size, sparse=False):
    """
    Dirichlet(1, ..., 1) sample; ``sparse`` zeroes a random subset.
    """
    p = rng.dirichlet(np.ones(size))
    if sparse and size > 1:
        mask = rng.random(size) < 0.3
        if mask.all():
            mask[rng.integers(size)] = False
        p[mask] = 0.0
        p = p / p.sum()
    return p


def random_vector(rng, size):
    v = rng.normal(size=size) + 1j * rng.normal(size=size)
    return v / np.linalg.norm(v)


def random_density(rng, size, rank=None):
    """
    Density matrix G G* / Tr(G G*) with G a size x rank Ginibre matrix.
    """
    rank = rank or size
    g = rng.normal(size=(size, rank)) + 1j * rng.normal(size=(size, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_bloch(rng, pure=False):
    x = rng.normal(size=3)
    x = x / np.linalg.norm(x)
    if not pure:
        x = x * rng.random() ** (1.0 / 3.0)
    return x


def random_hermitian(rng, size, scale=1.0):
    g = rng.normal(size=(size, size)) + 1j * rng.normal(size=(size, size))
    return scale * (g + g.conj().T) / 2


def random_even_triple(rng, k, algebra=DIAGONAL):
    """
    Even triple on C^k x C^2 with D = T1 x sigma1 + T2 x sigma2 and
    grading 1 x sigma3, the algebra acting as a x 1.
    """
    dirac = (np.kron(random_hermitian(rng, k), FLIP) +
             np.kron(random_hermitian(rng, k), PAULI[2]))
    grading = np.kron(np.eye(k), GAMMA)
    if algebra == DIAGONAL:
        basis = [np.kron(np.diag(row), np.eye(2)) for row in np.eye(k)]
        defining = [np.diag(row) for row in np.eye(k)]
        return FiniteSpectralTriple(dirac, basis, grading=grading,
                                    label='even-diag({0})'.format(k),
                                    defining_basis=defining, kind=DIAGONAL)
    return matrix_algebra_triple(dirac, k, grading=grading,
                                 label='even-mat({0})'.format(k))


def random_triple(rng, size, algebra=DIAGONAL):
    """
    Odd triple: diagonal algebra C^size, or M_2 acting on C^2 x C^(size/2),
    with a random Hermitian Dirac operator.
    """
    dirac = random_hermitian(rng, size)
    if algebra == DIAGONAL:
        return diagonal_triple(dirac, label='diag({0})'.format(size))
    return matrix_algebra_triple(dirac, 2, label='mat(2,{0})'.format(size))


def random_factor_pair(rng, max_dim=4):
    """
    Random (even, arbitrary) pair of triples with Hilbert dims <= max_dim.
    """
    left_algebra = DIAGONAL if rng.random() < 0.5 else FULL_MATRIX
    left = random_even_triple(rng, 2, left_algebra)
    choice = rng.integers(3)
    if choice == 0:
        right = random_triple(rng, int(rng.integers(2, max_dim + 1)))
    elif choice == 1:
        right = random_triple(rng, 4, FULL_MATRIX)
    else:
        right = random_even_triple(rng, 2, DIAGONAL if rng.random() < 0.5
                                   else FULL_MATRIX)
    return left, right


def random_state(rng, triple, pure=False):
    """
    Random density state on the defining space of a triple's algebra.
    """
    size = triple.defining_dim
    if triple.kind == DIAGONAL:
        if pure:
            return vertex_states(triple)[int(rng.integers(size))]
        return state_from_simplex(random_probability(rng, size))
    if pure:
        return state_from_vector(random_vector(rng, size))
    return State(random_density(rng, size), label='random')


def vertex_states(triple):
    """
    A fixed list of pure states: the points of a diagonal algebra, or
    basis vectors and their two-by-two superpositions for full matrix
    algebras.
    """
    size = triple.defining_dim
    if triple.kind == DIAGONAL:
        return [pure_state(triple, i) for i in range(size)]
    if triple.kind != FULL_MATRIX:
        raise InvalidArgumentError('no pure state list for triples of kind '
                                   '{0!r}'.format(triple.kind))
    states = []
    eye = np.eye(size)
    for i in range(size):
        states.append(pure_state(triple, i))
    for i, j in itertools.combinations(range(size), 2):
        for phase, name in ((1, '+'), (-1, '-'), (1j, '+i'), (-1j, '-i')):
            states.append(state_from_vector(
                eye[i] + phase * eye[j],
                label='e{0}{1}e{2}'.format(i, name, j)))
    return states


def grid_states(triple, points):
    """
    Lattice of the simplex with step 1/(points - 1) for diagonal
    algebras; Bloch ball axis points for M_2.
    """
    if points < 2:
        raise InvalidArgumentError('grid needs at least two points')
    size = triple.defining_dim
    if triple.kind == DIAGONAL:
        states = []
        for combo in itertools.product(range(points), repeat=size):
            if sum(combo) == points - 1:
                states.append(state_from_simplex(
                    np.array(combo, dtype=float) / (points - 1)))
        return states
    if triple.kind == FULL_MATRIX and size == 2:
        states = []
        for axis in np.eye(3):
            for t in np.linspace(-1.0, 1.0, points):
                if axis[0] != 1.0 and t == 0.0:
                    continue
                states.append(state_from_bloch(t * axis))
        return states
    return vertex_states(triple)


def haar_pure_qubit(rng):
    x = random_bloch(rng, pure=True)
    theta = math.acos(np.clip(x[2], -1.0, 1.0))
    phi = math.atan2(x[1], x[0])
    return np.array([math.cos(theta / 2),
                     complex(math.cos(phi), math.sin(phi)) *
                     math.sin(theta / 2)]), x
