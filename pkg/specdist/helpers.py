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
specdist.helpers
~~~~~~~~~~~~~~~~

This module implements all helper functions: tolerance constants and
validators shared by every other module.

:copyright: (c) 2026 by the spectral-distance authors.
:license: Apache 2.0, see LICENSE for more details.

"""

import numpy as np

from .error import (InvalidArgumentError, DimensionMismatch, NotHermitian,
                    InvalidStateError, OutOfBall, NotProbability,
                    InvalidMetricError)

# Relative tolerance of the Hermiticity check done before eigensolves.
HERMITIAN_TOL = 1e-12
# Structural tolerance for gradings, idempotents and unitality.
STRUCTURE_TOL = 1e-10
# States: trace one and positivity.
STATE_TOL = 1e-10
# Gram matrices of algebra bases above this condition number are singular.
GRAM_CONDITION_LIMIT = 1e8
# A commutant direction separates two states past this pairing.
SEPARATION_TOL = 1e-9
# Norm bound of Bloch vectors.
BALL_TOL = 1e-12
# Residual allowed when projecting rho onto the algebra span.
PROJECTION_TOL = 1e-10
# Pythagoras verdict band.
VERDICT_TOL = 1e-4
# Default sphere resolution of the Berezin quadrature.
DEFAULT_QUADRATURE_NODES = 800


def as_matrix(value, name='matrix'):
    """
    Coerce input to a 2-d complex ndarray.

    :param value: Array-like input.
    :param name: Name used in error messages.
    :return: Complex ndarray with ndim == 2.
    """
    matrix = np.array(value, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] < 1 or matrix.shape[1] < 1:
        raise DimensionMismatch('{0} must be a non-empty 2-d array, got '
                                'shape {1}'.format(name, matrix.shape))
    return matrix


def is_valid_square(matrix, name='matrix'):
    """
    Validate square shape.

    :param matrix: 2-d ndarray.
    :param name: Name used in error messages.
    :return: True if square. Raise :exc:`DimensionMismatch` otherwise.
    """
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DimensionMismatch('{0} must be square, got shape '
                                '{1}'.format(name, matrix.shape))
    return True


def is_valid_hermitian(matrix, tol=HERMITIAN_TOL, name='matrix'):
    """
    Validate self-adjointness relative to the size of the matrix.

    :param matrix: Square ndarray.
    :param tol: Relative tolerance on ||M - M*||.
    :param name: Name used in error messages.
    :return: True if Hermitian. Raise :exc:`NotHermitian` otherwise.
    """
    is_valid_square(matrix, name)
    scale = max(1.0, np.linalg.norm(matrix, 2))
    defect = np.linalg.norm(matrix - matrix.conj().T, 2)
    if defect > tol * scale:
        raise NotHermitian('{0} is not Hermitian: ||M - M*|| = '
                           '{1:.3e}'.format(name, defect))
    return True


def is_same_shape(first, second, operation='operation'):
    """
    Validate that two matrices have the same shape.

    :return: True if shapes agree. Raise :exc:`DimensionMismatch` otherwise.
    """
    if first.shape != second.shape:
        raise DimensionMismatch('{0}: shapes {1} and {2} differ'.format(
            operation, first.shape, second.shape))
    return True


def is_valid_density(rho, tol=STATE_TOL):
    """
    Validate a density matrix: Hermitian, trace one, positive.

    :param rho: Square ndarray.
    :return: True if valid. Raise :exc:`InvalidStateError` otherwise.
    """
    try:
        is_valid_hermitian(rho, tol=tol, name='density matrix')
    except NotHermitian as err:
        raise InvalidStateError(err.message)
    trace = np.trace(rho).real
    if abs(trace - 1.0) > tol:
        raise InvalidStateError('density matrix trace is {0!r}, expected '
                                '1'.format(trace))
    smallest = np.linalg.eigvalsh((rho + rho.conj().T) / 2)[0]
    if smallest < -tol:
        raise InvalidStateError('density matrix is not positive: smallest '
                                'eigenvalue {0!r}'.format(smallest))
    return True


def is_valid_probability(p, tol=STATE_TOL):
    """
    Validate a probability vector.

    :param p: 1-d array-like.
    :return: True if valid. Raise :exc:`NotProbability` otherwise.
    """
    p = np.asarray(p, dtype=float)
    if p.ndim != 1 or p.size < 1:
        raise NotProbability('probability vector must be 1-d and '
                             'non-empty')
    if not np.all(np.isfinite(p)):
        raise NotProbability('probability vector has non-finite entries')
    if np.min(p) < -tol:
        raise NotProbability('probability vector has negative entry '
                             '{0!r}'.format(np.min(p)))
    if abs(p.sum() - 1.0) > tol:
        raise NotProbability('probability vector sums to {0!r}, expected '
                             '1'.format(p.sum()))
    return True


def is_valid_bloch_vector(x, tol=BALL_TOL):
    """
    Validate a point of the closed unit ball in R^3.

    :return: True if valid. Raise :exc:`OutOfBall` otherwise.
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (3,):
        raise OutOfBall('Bloch vector must have three components')
    norm = np.linalg.norm(x)
    if norm > 1.0 + tol:
        raise OutOfBall('Bloch vector norm {0!r} exceeds 1'.format(norm))
    return True


def is_valid_metric(g, tol=STRUCTURE_TOL):
    """
    Validate an extended metric: symmetric, zero diagonal, positive off
    the diagonal, triangle inequality with the usual conventions on inf.

    :param g: N x N array, entries may be +inf.
    :return: True if valid. Raise :exc:`InvalidMetricError` otherwise.
    """
    g = np.asarray(g, dtype=float)
    if g.ndim != 2 or g.shape[0] != g.shape[1] or g.shape[0] < 1:
        raise InvalidMetricError('metric must be a non-empty square matrix')
    if np.any(np.isnan(g)):
        raise InvalidMetricError('metric has NaN entries')
    if np.any(np.diag(g) != 0):
        raise InvalidMetricError('metric diagonal must be zero')
    if not np.array_equal(g, g.T):
        raise InvalidMetricError('metric is not symmetric')
    off = ~np.eye(g.shape[0], dtype=bool)
    if np.any(g[off] <= 0):
        raise InvalidMetricError('metric must be positive off the diagonal')
    # g_ij <= g_ik + g_kj for every k; inf on the right never binds.
    via = np.min(g[:, :, None] + g[None, :, :], axis=1)
    finite = np.isfinite(via)
    excess = g[finite] - via[finite]
    if excess.size and np.max(excess) > tol * max(1.0, np.max(via[finite])):
        raise InvalidMetricError('metric violates the triangle inequality')
    return True


def is_positive_number(value, name='value'):
    """
    Validate a strictly positive finite real.

    :return: True if valid. Raise :exc:`InvalidArgumentError` otherwise.
    """
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise InvalidArgumentError('{0} must be a number'.format(name))
    if not np.isfinite(value) or value <= 0:
        raise InvalidArgumentError('{0} must be positive, got '
                                   '{1!r}'.format(name, value))
    return True


def is_non_negative_int(value, name='value'):
    """
    Validate a non-negative integer.

    :return: True if valid. Raise :exc:`InvalidArgumentError` otherwise.
    """
    if isinstance(value, bool) or int(value) != value or value < 0:
        raise InvalidArgumentError('{0} must be a non-negative integer, '
                                   'got {1!r}'.format(name, value))
    return True
