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
specdist.matcore
~~~~~~~~~~~~~~~~

Dense complex linear algebra: Hermitian eigendecomposition, operator
norms, Kronecker products, direct sums, commutators and the trace inner
product. Every function is pure.

:copyright: (c) 2026 by the spectral-distance authors.
:license: Apache 2.0, see LICENSE for more details.

"""

import numpy as np
import scipy.linalg
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .error import NoConvergence, DimensionMismatch
from .helpers import (HERMITIAN_TOL, as_matrix, is_valid_hermitian,
                      is_same_shape)


class HermitianEig(object):
    """
    Eigendecomposition of a Hermitian matrix.

    :param eigenvalues: Real eigenvalues in ascending order.
    :param eigenvectors: Unitary matrix whose columns are eigenvectors.
    """

    def __init__(self, eigenvalues, eigenvectors):
        self.eigenvalues = eigenvalues
        self.eigenvectors = eigenvectors

    def reconstruct(self):
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T

    def __str__(self):
        return ('<HermitianEig: dim: {0} eigenvalues: '
                '{1}>'.format(len(self.eigenvalues), self.eigenvalues))


def dagger(matrix):
    return np.conj(matrix).T


def hermitian_eig(matrix):
    """
    Eigendecomposition of a Hermitian matrix.

    LAPACK ?heev is used: Householder reduction to tridiagonal form
    followed by the implicit-shift QL/QR iteration.

    :param matrix: Square Hermitian matrix.
    :return: :class:`HermitianEig`
    """
    matrix = as_matrix(matrix)
    is_valid_hermitian(matrix, HERMITIAN_TOL)
    matrix = (matrix + dagger(matrix)) / 2
    try:
        values, vectors = scipy.linalg.eigh(matrix, driver='ev')
    except (np.linalg.LinAlgError, ValueError) as err:
        raise NoConvergence('eigensolver failed: {0}'.format(err))
    return HermitianEig(values, vectors)


def _is_normal_kind(matrix):
    scale = max(1.0, np.max(np.abs(matrix)))
    adjoint = dagger(matrix)
    if np.allclose(matrix, adjoint, rtol=0, atol=HERMITIAN_TOL * scale):
        return 1
    if np.allclose(matrix, -adjoint, rtol=0, atol=HERMITIAN_TOL * scale):
        return -1
    return 0


def operator_norm(matrix):
    """
    Largest singular value.

    Hermitian and anti-Hermitian inputs use their spectral radius, every
    other input the square root of the top eigenvalue of M*M.

    :param matrix: Any 2-d matrix.
    :return: Non-negative float.
    """
    matrix = as_matrix(matrix)
    if not np.any(matrix):
        return 0.0
    if matrix.shape[0] == matrix.shape[1]:
        kind = _is_normal_kind(matrix)
        if kind:
            hermitian = matrix if kind == 1 else 1j * matrix
            hermitian = (hermitian + dagger(hermitian)) / 2
            values = _eigvalsh(hermitian)
            return float(max(abs(values[0]), abs(values[-1])))
    gram = dagger(matrix) @ matrix
    values = _eigvalsh((gram + dagger(gram)) / 2)
    return float(np.sqrt(max(values[-1], 0.0)))


def _eigvalsh(hermitian):
    try:
        return scipy.linalg.eigh(hermitian, eigvals_only=True, driver='ev')
    except (np.linalg.LinAlgError, ValueError) as err:
        raise NoConvergence('eigensolver failed: {0}'.format(err))


def stacked_eigh(stack):
    """
    Eigendecomposition of a stack of Hermitian matrices of equal size.

    :param stack: Array of shape (count, s, s).
    :return: (eigenvalues (count, s), eigenvectors (count, s, s))
    """
    try:
        return np.linalg.eigh(stack)
    except np.linalg.LinAlgError as err:
        raise NoConvergence('eigensolver failed: {0}'.format(err))


def kron(first, second, *rest):
    """
    Kronecker product with first-operand-major block layout.
    """
    result = np.kron(as_matrix(first), as_matrix(second))
    for factor in rest:
        result = np.kron(result, as_matrix(factor))
    return result


def direct_sum(*blocks):
    """
    Block diagonal matrix of the given blocks, in order.
    """
    if not blocks:
        raise DimensionMismatch('direct sum of no blocks')
    return scipy.linalg.block_diag(*[as_matrix(b) for b in blocks])


def commutator(first, second):
    """
    [A, B] = AB - BA.
    """
    first, second = as_matrix(first), as_matrix(second)
    is_same_shape(first, second, 'commutator')
    return first @ second - second @ first


def anticommutator(first, second):
    """
    {A, B} = AB + BA.
    """
    first, second = as_matrix(first), as_matrix(second)
    is_same_shape(first, second, 'anticommutator')
    return first @ second + second @ first


def trace_inner(first, second):
    """
    Trace inner product Tr(a* b).
    """
    first, second = as_matrix(first), as_matrix(second)
    is_same_shape(first, second, 'trace_inner')
    return complex(np.vdot(first, second))


def block_partition(matrices):
    """
    Split the index set into the connected components of the joint
    sparsity pattern of the given square matrices. Every matrix is
    block diagonal with respect to the returned partition.

    :param matrices: Iterable of n x n arrays.
    :return: List of sorted index arrays, ordered by smallest index.
    """
    pattern = None
    for matrix in matrices:
        mask = np.abs(np.asarray(matrix)) > 0
        pattern = mask if pattern is None else (pattern | mask)
    if pattern is None:
        raise DimensionMismatch('block partition of no matrices')
    pattern = pattern | pattern.T
    count, labels = connected_components(csr_matrix(pattern),
                                         directed=False)
    blocks = [np.flatnonzero(labels == label) for label in range(count)]
    blocks.sort(key=lambda block: block[0])
    return blocks
