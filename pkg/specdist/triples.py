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
specdist.triples
~~~~~~~~~~~~~~~~

Data model of finite spectral triples, their states and products.

A triple is stored as a list of :class:`TripleBlock`, the connected
pieces of the joint sparsity of the Dirac operator, the grading and the
represented algebra. Dense matrices are assembled on demand, so products
of large block triples stay cheap.

:copyright: (c) 2026 by the spectral-distance authors.
:license: Apache 2.0, see LICENSE for more details.

"""

import math

import numpy as np

from .error import (InvalidArgumentError, DimensionMismatch,
                    InvalidTripleError, MissingGrading, AlreadyEven,
                    InvalidStateError, NotProbability, NonUnital)
from .helpers import (HERMITIAN_TOL, STRUCTURE_TOL, GRAM_CONDITION_LIMIT,
                      as_matrix, is_valid_hermitian, is_valid_density,
                      is_valid_probability, is_valid_bloch_vector,
                      is_valid_metric, is_positive_number)
from .matcore import (block_partition, operator_norm, dagger)

PAULI = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
FLIP = PAULI[1]
GAMMA = PAULI[3]

ALGEBRA_SPACE = 'algebra'
HILBERT_SPACE = 'hilbert'

DIAGONAL = 'diagonal'
FULL_MATRIX = 'full_matrix'
EXPLICIT = 'explicit'
PRODUCT = 'product'


class TripleBlock(object):
    """
    One invariant piece of a finite spectral triple.

    :param indices: Positions of the block inside the full Hilbert space.
    :param dirac: s x s Hermitian block of D.
    :param basis: (m, s, s) blocks of the represented algebra basis.
    :param grading: s x s block of the grading, or None.
    """

    def __init__(self, indices, dirac, basis, grading=None):
        self.indices = np.asarray(indices, dtype=int)
        self.dirac = np.asarray(dirac, dtype=complex)
        self.basis = np.asarray(basis, dtype=complex)
        self.grading = (None if grading is None
                        else np.asarray(grading, dtype=complex))

    @property
    def size(self):
        return len(self.indices)

    def element(self, coeffs):
        return np.tensordot(coeffs, self.basis, axes=1)


class MetricSpace(object):
    """
    Finite extended metric space.

    :param g: N x N matrix, symmetric with zero diagonal, entries may be
       ``inf``.
    """

    def __init__(self, g):
        g = np.array(g, dtype=float)
        is_valid_metric(g)
        self.g = g
        self.g.setflags(write=False)

    @property
    def size(self):
        return self.g.shape[0]

    def __str__(self):
        return '<MetricSpace: size: {0}>'.format(self.size)


class FiniteSpectralTriple(object):
    """
    Finite spectral triple (A, H, D) with optional grading.

    :param dirac: n x n Hermitian Dirac operator.
    :param algebra_basis: Hermitian n x n matrices spanning the image of
       the self-adjoint part of the algebra.
    :param grading: Optional n x n grading.
    :param label: Free text.
    :param unital: True to require the identity of H in the span of the
       basis, False to skip the check, None to detect it.
    :param defining_basis: The same basis elements in the defining
       representation of the algebra, where algebra states live as
       density matrices. Defaults to ``algebra_basis``.
    :param real_linear: Marks triples over the real numbers.
    :param kind: 'diagonal', 'full_matrix' or 'explicit'.
    """

    def __init__(self, dirac, algebra_basis, grading=None, label='',
                 unital=None, defining_basis=None, real_linear=False,
                 kind=EXPLICIT):
        dirac = as_matrix(dirac, 'dirac')
        is_valid_hermitian(dirac, HERMITIAN_TOL, 'dirac')
        dim = dirac.shape[0]
        basis = _as_basis(algebra_basis, dim, 'algebra basis')
        if grading is not None:
            grading = as_matrix(grading, 'grading')
            if grading.shape != dirac.shape:
                raise DimensionMismatch('grading must have the shape of D')
        pieces = [dirac] + list(basis)
        if grading is not None:
            pieces.append(grading)
        blocks = []
        for indices in block_partition(pieces):
            window = np.ix_(indices, indices)
            blocks.append(TripleBlock(
                indices, dirac[window],
                basis[(slice(None),) + window],
                None if grading is None else grading[window]))
        self._setup(dim, blocks, label, unital, defining_basis,
                    real_linear, kind)

    @classmethod
    def from_blocks(cls, dim, blocks, label='', unital=None,
                    defining_basis=None, real_linear=False, kind=EXPLICIT,
                    metric=None):
        """
        Build a triple directly from its blocks.
        """
        triple = cls.__new__(cls)
        triple._setup(dim, blocks, label, unital, defining_basis,
                      real_linear, kind)
        triple.metric = metric
        return triple

    def _setup(self, dim, blocks, label, unital, defining_basis,
               real_linear, kind):
        self.dim = int(dim)
        self.blocks = list(blocks)
        self.label = label
        self.real_linear = real_linear
        self.kind = kind
        self.metric = None
        self._dense = {}
        covered = np.concatenate([b.indices for b in self.blocks])
        if not np.array_equal(np.sort(covered), np.arange(self.dim)):
            raise InvalidTripleError('blocks must partition the Hilbert '
                                     'space')
        counts = set(b.basis.shape[0] for b in self.blocks)
        if len(counts) != 1:
            raise InvalidTripleError('every block must carry the full '
                                     'algebra basis')
        self.algebra_dim = counts.pop()
        gradings = [b.grading is not None for b in self.blocks]
        if any(gradings) and not all(gradings):
            raise InvalidTripleError('grading must be given on every block')
        self.is_even = all(gradings)
        self._validate_blocks()
        self.gram = sum(np.einsum('jab,kba->jk', b.basis, b.basis).real
                        for b in self.blocks)
        _check_gram(self.gram, 'algebra basis')
        if defining_basis is None:
            self.defining_basis = self.algebra_basis
        else:
            self.defining_basis = _as_basis(
                defining_basis, None, 'defining basis')
            if self.defining_basis.shape[0] != self.algebra_dim:
                raise DimensionMismatch(
                    'defining basis has {0} elements, algebra basis '
                    '{1}'.format(self.defining_basis.shape[0],
                                 self.algebra_dim))
        self.defining_gram = np.einsum('jab,kba->jk', self.defining_basis,
                                       self.defining_basis).real
        _check_gram(self.defining_gram, 'defining basis')
        detected = self._identity_residual() <= STRUCTURE_TOL
        if unital and not detected:
            raise InvalidTripleError('identity is not in the span of the '
                                     'algebra basis')
        self.unital = detected if unital is None else bool(unital)

    def _validate_blocks(self):
        for block in self.blocks:
            s = block.size
            if block.dirac.shape != (s, s) or block.basis.shape[1:] != (s, s):
                raise DimensionMismatch('block matrices do not match the '
                                        'block size')
            is_valid_hermitian(block.dirac, HERMITIAN_TOL, 'dirac')
            for element in block.basis:
                is_valid_hermitian(element, STRUCTURE_TOL, 'algebra basis')
            gamma = block.grading
            if gamma is None:
                continue
            scale = max(1.0, operator_norm(block.dirac))
            if np.max(np.abs(gamma - dagger(gamma))) > STRUCTURE_TOL:
                raise InvalidTripleError('grading is not self-adjoint')
            if np.max(np.abs(gamma @ gamma - np.eye(s))) > STRUCTURE_TOL:
                raise InvalidTripleError('grading does not square to the '
                                         'identity')
            anti = gamma @ block.dirac + block.dirac @ gamma
            if np.max(np.abs(anti)) > STRUCTURE_TOL * scale:
                raise InvalidTripleError('grading does not anticommute '
                                         'with D')
            comm = (np.einsum('ab,kbc->kac', gamma, block.basis) -
                    np.einsum('kab,bc->kac', block.basis, gamma))
            if comm.size and np.max(np.abs(comm)) > STRUCTURE_TOL:
                raise InvalidTripleError('grading does not commute with '
                                         'the algebra')

    def _identity_residual(self):
        try:
            coeffs = self.identity_coefficients(check=False)
        except np.linalg.LinAlgError:
            return math.inf
        total = 0.0
        for block in self.blocks:
            diff = block.element(coeffs) - np.eye(block.size)
            total += np.sum(np.abs(diff) ** 2)
        return math.sqrt(total)

    def identity_coefficients(self, check=True):
        """
        Coefficients of the identity of H on the algebra basis.

        :raises NonUnital: if the identity is not in the span.
        """
        target = np.array([sum(np.trace(b.basis[k]).real
                               for b in self.blocks)
                           for k in range(self.algebra_dim)])
        coeffs = np.linalg.solve(self.gram, target)
        if check and not self.unital:
            raise NonUnital('identity of H is not in the span of the '
                            'algebra basis of {0!r}'.format(self.label))
        return coeffs

    def defining_identity_coefficients(self):
        """
        Coefficients of the unit of the algebra, computed in the defining
        representation.

        :raises NonUnital: if the algebra has no unit in the span.
        """
        size = self.defining_basis.shape[1]
        target = np.trace(self.defining_basis, axis1=1, axis2=2).real
        coeffs = np.linalg.solve(self.defining_gram, target)
        residual = np.linalg.norm(
            np.tensordot(coeffs, self.defining_basis, axes=1) - np.eye(size))
        if residual > STRUCTURE_TOL:
            raise NonUnital('algebra of {0!r} has no unit in its '
                            'span'.format(self.label))
        return coeffs

    @property
    def defining_dim(self):
        return self.defining_basis.shape[1]

    @property
    def dirac(self):
        if 'dirac' not in self._dense:
            self._dense['dirac'] = self._assemble(
                [b.dirac for b in self.blocks])
        return self._dense['dirac']

    @property
    def grading(self):
        if not self.is_even:
            return None
        if 'grading' not in self._dense:
            self._dense['grading'] = self._assemble(
                [b.grading for b in self.blocks])
        return self._dense['grading']

    @property
    def algebra_basis(self):
        if 'basis' not in self._dense:
            self._dense['basis'] = np.array([
                self._assemble([b.basis[k] for b in self.blocks])
                for k in range(self.algebra_dim)])
        return self._dense['basis']

    def _assemble(self, pieces):
        full = np.zeros((self.dim, self.dim), dtype=complex)
        for block, piece in zip(self.blocks, pieces):
            full[np.ix_(block.indices, block.indices)] = piece
        return full

    def element(self, coeffs):
        """
        Represented algebra element sum_k c_k B_k as a dense matrix.
        """
        coeffs = self._coeffs(coeffs)
        return self._assemble([b.element(coeffs) for b in self.blocks])

    def lipschitz_norm(self, coeffs):
        """
        ||[D, a]|| for a = sum_k c_k B_k, evaluated blockwise.
        """
        coeffs = self._coeffs(coeffs)
        norm = 0.0
        for block in self.blocks:
            a = block.element(coeffs)
            norm = max(norm, operator_norm(block.dirac @ a - a @ block.dirac))
        return norm

    def _coeffs(self, coeffs):
        coeffs = np.asarray(coeffs, dtype=float)
        if coeffs.shape != (self.algebra_dim,):
            raise DimensionMismatch('expected {0} coefficients, got '
                                    '{1}'.format(self.algebra_dim,
                                                 coeffs.shape))
        return coeffs

    def __str__(self):
        return ('<FiniteSpectralTriple: label: {0!r} dim: {1} algebra_dim: '
                '{2} even: {3} blocks: {4}>').format(
                    self.label, self.dim, self.algebra_dim, self.is_even,
                    len(self.blocks))


def _as_basis(basis, dim, name):
    basis = np.array(basis, dtype=complex)
    if basis.ndim == 2:
        basis = basis[None]
    if basis.ndim != 3 or basis.shape[0] < 1 or \
            basis.shape[1] != basis.shape[2]:
        raise DimensionMismatch('{0} must be a non-empty list of square '
                                'matrices'.format(name))
    if dim is not None and basis.shape[1] != dim:
        raise DimensionMismatch('{0} elements must be {1} x {1}'.format(
            name, dim))
    for element in basis:
        is_valid_hermitian(element, STRUCTURE_TOL, name)
    return basis


def _check_gram(gram, name):
    if np.linalg.cond(gram) > GRAM_CONDITION_LIMIT:
        raise InvalidTripleError('{0} is not linearly independent'.format(
            name))


class State(object):
    """
    State on the algebra of a triple.

    Exactly one of ``rho`` or ``coeffs`` is given. A density matrix lives
    either on the defining space of the algebra (``space='algebra'``) or
    on the Hilbert space of the triple (``space='hilbert'``). Coefficient
    states give the values phi(B_k) on the algebra basis directly.

    :param rho: Density matrix.
    :param coeffs: Values of the functional on the algebra basis.
    :param factor_dims: Optional (n1, n2) bipartite structure of rho.
    :param space: 'algebra' or 'hilbert'.
    :param label: Free text used in reports.
    """

    def __init__(self, rho=None, coeffs=None, factor_dims=None,
                 space=ALGEBRA_SPACE, label=''):
        if (rho is None) == (coeffs is None):
            raise InvalidStateError('a state is given by exactly one of '
                                    'rho or coeffs')
        if space not in (ALGEBRA_SPACE, HILBERT_SPACE):
            raise InvalidArgumentError('unknown state space '
                                       '{0!r}'.format(space))
        self.rho = None
        self.coeffs = None
        if rho is not None:
            rho = as_matrix(rho, 'density matrix')
            is_valid_density(rho)
            self.rho = (rho + dagger(rho)) / 2
        else:
            coeffs = np.asarray(coeffs, dtype=float)
            if coeffs.ndim != 1 or not np.all(np.isfinite(coeffs)):
                raise InvalidStateError('coefficient state must be a finite '
                                        '1-d vector')
            self.coeffs = coeffs
        if factor_dims is not None:
            factor_dims = (int(factor_dims[0]), int(factor_dims[1]))
            if self.rho is not None and \
                    factor_dims[0] * factor_dims[1] != self.rho.shape[0]:
                raise DimensionMismatch('factor dims {0} do not match rho '
                                        'of size {1}'.format(
                                            factor_dims, self.rho.shape[0]))
        self.factor_dims = factor_dims
        self.space = space
        self.label = label

    @property
    def is_density(self):
        return self.rho is not None

    def pairing(self, triple):
        """
        Values phi(B_k) on the algebra basis of ``triple``.
        """
        if self.coeffs is not None:
            if self.coeffs.shape[0] != triple.algebra_dim:
                raise DimensionMismatch(
                    'coefficient state has {0} entries, algebra has '
                    'dimension {1}'.format(self.coeffs.shape[0],
                                           triple.algebra_dim))
            return self.coeffs
        if self.space == ALGEBRA_SPACE:
            if self.rho.shape[0] != triple.defining_dim:
                raise DimensionMismatch(
                    'state of size {0} does not act on the defining space '
                    'of size {1}'.format(self.rho.shape[0],
                                         triple.defining_dim))
            return np.einsum('ab,kba->k', self.rho,
                             triple.defining_basis).real
        if self.rho.shape[0] != triple.dim:
            raise DimensionMismatch(
                'state of size {0} does not act on H of size {1}'.format(
                    self.rho.shape[0], triple.dim))
        return np.array([
            sum(np.einsum('ab,ba->', self.rho[np.ix_(b.indices, b.indices)],
                          b.basis[k]).real for b in triple.blocks)
            for k in range(triple.algebra_dim)])

    def __str__(self):
        return '<State: label: {0!r} space: {1} density: {2}>'.format(
            self.label, self.space, self.is_density)


class ProductStructure(object):
    """
    Product of an even triple with an arbitrary one.

    :param left: Even :class:`FiniteSpectralTriple`.
    :param right: :class:`FiniteSpectralTriple`.
    :param combined: Triple with D = D1 x 1 + gamma1 x D2.
    """

    def __init__(self, left, right, combined):
        self.left = left
        self.right = right
        self.combined = combined

    def product_state(self, phi1, phi2):
        return product_state(phi1, phi2)

    def marginal_states(self, phi):
        """
        Marginals of a state on the product algebra.
        """
        if phi.rho is not None and phi.space == ALGEBRA_SPACE:
            dims = (self.left.defining_dim, self.right.defining_dim)
            return marginals(phi, dims)
        if phi.rho is not None and self.left.unital and self.right.unital:
            return marginals(phi, (self.left.dim, self.right.dim))
        values = phi.pairing(self.combined).reshape(
            self.left.algebra_dim, self.right.algebra_dim)
        e1 = self.left.defining_identity_coefficients()
        e2 = self.right.defining_identity_coefficients()
        return (State(coeffs=values @ e2, label=phi.label + '|1'),
                State(coeffs=e1 @ values, label=phi.label + '|2'))

    def embed_left(self, coeffs):
        """
        Coefficients of a1 x 1 on the product basis.
        """
        e2 = self.right.defining_identity_coefficients()
        return np.kron(np.asarray(coeffs, dtype=float), e2)

    def embed_right(self, coeffs):
        """
        Coefficients of 1 x a2 on the product basis.
        """
        e1 = self.left.defining_identity_coefficients()
        return np.kron(e1, np.asarray(coeffs, dtype=float))

    def __str__(self):
        return '<ProductStructure: {0!r} x {1!r}>'.format(
            self.left.label, self.right.label)


def two_point_triple(lam):
    """
    Two-point space with distance 2*lam between its pure states.

    :param lam: Positive length.
    """
    is_positive_number(lam, 'lambda')
    basis = [np.diag([1.0, 0.0]), np.diag([0.0, 1.0])]
    return FiniteSpectralTriple(FLIP / (2.0 * lam), basis, grading=GAMMA,
                                label='two-point({0:g})'.format(lam),
                                unital=True, kind=DIAGONAL)


def two_point_state(lam, phi):
    """
    State of the two-point space with coordinate phi in [-lam, lam].
    """
    is_positive_number(lam, 'lambda')
    if abs(phi) > lam * (1 + 1e-12):
        raise InvalidStateError('two-point coordinate {0!r} outside '
                                '[-{1}, {1}]'.format(phi, lam))
    t = float(np.clip(phi / float(lam), -1.0, 1.0))
    return state_from_simplex([(1 + t) / 2, (1 - t) / 2])


def trivial_triple():
    """
    A = C on H = C with D = 0.
    """
    return FiniteSpectralTriple([[0.0]], [[[1.0]]], grading=[[1.0]],
                                label='point', unital=True, kind=DIAGONAL)


def finite_metric_triple(space):
    """
    Canonical even triple of a finite metric space: one two-point block
    per ordered pair i != j, with D_ij = F/g_ij (zero when g_ij = inf).

    :param space: :class:`MetricSpace` or a distance matrix.
    """
    if not isinstance(space, MetricSpace):
        space = MetricSpace(space)
    size = space.size
    blocks = []
    position = 0
    for i in range(size):
        for j in range(size):
            if i == j:
                continue
            g = space.g[i, j]
            dirac = np.zeros((2, 2)) if math.isinf(g) else FLIP / g
            basis = np.zeros((size, 2, 2))
            basis[i, 0, 0] = 1.0
            basis[j, 1, 1] = 1.0
            blocks.append(TripleBlock([position, position + 1], dirac,
                                      basis, GAMMA))
            position += 2
    defining = np.array([np.diag(row) for row in np.eye(size)])
    if size == 1:
        return FiniteSpectralTriple.from_blocks(
            1, [TripleBlock([0], [[0.0]], [[[1.0]]], [[1.0]])],
            label='metric(1)', unital=True, kind=DIAGONAL, metric=space)
    return FiniteSpectralTriple.from_blocks(
        position, blocks, label='metric({0})'.format(size), unital=True,
        defining_basis=defining, kind=DIAGONAL, metric=space)


def simplex_triple():
    """
    Three-point triple on C^3 + C^3 with D(v + w) = D_- w + D_+ v, D_+
    the cyclic shift. Its distance is the Chebyshev distance.
    """
    shift = np.roll(np.eye(3), 1, axis=0)
    zero = np.zeros((3, 3))
    dirac = np.block([[zero, shift.T], [shift, zero]])
    basis = [np.diag(np.concatenate([row, row])) for row in np.eye(3)]
    grading = np.diag([1.0, 1.0, 1.0, -1.0, -1.0, -1.0])
    defining = [np.diag(row) for row in np.eye(3)]
    return FiniteSpectralTriple(dirac, basis, grading=grading,
                                label='simplex(3)', unital=True,
                                defining_basis=defining, kind=DIAGONAL)


def _realify(operator):
    """
    Real 8 x 8 matrix of a real-linear map on M_2(C), in the orthonormal
    basis E_11, iE_11, E_12, iE_12, ... for Re Tr(a* b).
    """
    units = []
    for r in range(2):
        for c in range(2):
            unit = np.zeros((2, 2), dtype=complex)
            unit[r, c] = 1.0
            units.extend([unit, 1j * unit])
    columns = []
    for unit in units:
        image = operator(unit)
        columns.append(np.column_stack([image.real.ravel(),
                                        image.imag.ravel()]).ravel())
    return np.array(columns).T


def bloch_triples():
    """
    The three triples on M_2(C) whose distances are explicit on the Bloch
    ball.

    :return: dict with keys 'conjugation', 'flip', 'moyal'.
    """
    defining = np.array(PAULI)
    # The conjugation b -> b* gives ||[D, a]|| = 2||v||; halving it puts
    # the distance at ||x - y||.
    conjugation = FiniteSpectralTriple(
        _realify(lambda b: dagger(b) / 2.0),
        [_realify(lambda b, s=s: s @ b) for s in PAULI],
        label='bloch-conjugation', unital=True, defining_basis=defining,
        real_linear=True, kind=FULL_MATRIX)
    zero = np.zeros((2, 2))
    eye = np.eye(2)
    grading = np.diag([1.0, 1.0, -1.0, -1.0])
    flip = FiniteSpectralTriple(
        np.block([[zero, eye], [eye, zero]]),
        [np.block([[s, zero], [zero, zero]]) for s in PAULI],
        grading=grading, label='bloch-flip', unital=False,
        defining_basis=defining, kind=FULL_MATRIX)
    d_plus = np.array([[0.0, 1.0], [0.0, 0.0]])
    moyal = FiniteSpectralTriple(
        np.block([[zero, d_plus.T], [d_plus, zero]]),
        [np.block([[s, zero], [zero, s]]) for s in PAULI],
        grading=grading, label='bloch-moyal', unital=True,
        defining_basis=defining, kind=FULL_MATRIX)
    return {'conjugation': conjugation, 'flip': flip, 'moyal': moyal}


def hermitian_matrix_basis(k):
    """
    Orthonormal basis (for Tr(a* b)) of the k x k Hermitian matrices.
    """
    basis = []
    for i in range(k):
        unit = np.zeros((k, k), dtype=complex)
        unit[i, i] = 1.0
        basis.append(unit)
    for i in range(k):
        for j in range(i + 1, k):
            real = np.zeros((k, k), dtype=complex)
            real[i, j] = real[j, i] = 1 / math.sqrt(2)
            imag = np.zeros((k, k), dtype=complex)
            imag[i, j] = -1j / math.sqrt(2)
            imag[j, i] = 1j / math.sqrt(2)
            basis.extend([real, imag])
    return np.array(basis)


def matrix_algebra_triple(dirac, k, grading=None, label=''):
    """
    M_k acting as a x 1 on C^k x C^(n/k) with the given Dirac operator.
    """
    dirac = as_matrix(dirac, 'dirac')
    n = dirac.shape[0]
    if n % k:
        raise DimensionMismatch('dimension {0} is not a multiple of '
                                '{1}'.format(n, k))
    defining = hermitian_matrix_basis(k)
    basis = [np.kron(b, np.eye(n // k)) for b in defining]
    return FiniteSpectralTriple(dirac, basis, grading=grading, label=label,
                                defining_basis=defining, kind=FULL_MATRIX)


def diagonal_triple(dirac, grading=None, label=''):
    """
    C^n acting diagonally on C^n with the given Dirac operator.
    """
    dirac = as_matrix(dirac, 'dirac')
    basis = [np.diag(row) for row in np.eye(dirac.shape[0])]
    return FiniteSpectralTriple(dirac, basis, grading=grading, label=label,
                                kind=DIAGONAL)


def product_triple(first, second):
    """
    Product of an even triple with any triple, D = D1 x 1 + gamma1 x D2.
    The product is even with gamma1 x gamma2 when the second factor is.

    :return: :class:`ProductStructure`
    """
    if not first.is_even:
        raise MissingGrading('left factor {0!r} of a product must be '
                             'even'.format(first.label))
    m1, m2 = first.algebra_dim, second.algebra_dim
    blocks = []
    for b1 in first.blocks:
        for b2 in second.blocks:
            s1, s2 = b1.size, b2.size
            indices = (b1.indices[:, None] * second.dim +
                       b2.indices[None, :]).ravel()
            dirac = (np.kron(b1.dirac, np.eye(s2)) +
                     np.kron(b1.grading, b2.dirac))
            basis = np.einsum('jab,kcd->jkacbd', b1.basis, b2.basis)
            basis = basis.reshape(m1 * m2, s1 * s2, s1 * s2)
            grading = (None if b2.grading is None
                       else np.kron(b1.grading, b2.grading))
            blocks.append(TripleBlock(indices, dirac, basis, grading))
    k1, k2 = first.defining_dim, second.defining_dim
    defining = np.einsum('jab,kcd->jkacbd', first.defining_basis,
                         second.defining_basis)
    defining = defining.reshape(m1 * m2, k1 * k2, k1 * k2)
    combined = FiniteSpectralTriple.from_blocks(
        first.dim * second.dim, blocks,
        label='{0} x {1}'.format(first.label, second.label),
        defining_basis=defining,
        real_linear=first.real_linear or second.real_linear,
        kind=DIAGONAL if first.kind == second.kind == DIAGONAL else PRODUCT)
    return ProductStructure(first, second, combined)


def evenize(triple):
    """
    Even triple on H x C^2 with D x sigma1, grading 1 x sigma3 and
    a -> a x 1. Distances are unchanged.
    """
    if triple.is_even:
        raise AlreadyEven('triple {0!r} already has a grading'.format(
            triple.label))
    blocks = []
    for block in triple.blocks:
        indices = (block.indices[:, None] * 2 + np.arange(2)).ravel()
        basis = np.array([np.kron(b, np.eye(2)) for b in block.basis])
        blocks.append(TripleBlock(indices, np.kron(block.dirac, FLIP), basis,
                                  np.kron(np.eye(block.size), GAMMA)))
    return FiniteSpectralTriple.from_blocks(
        2 * triple.dim, blocks, label='even({0})'.format(triple.label),
        unital=triple.unital, defining_basis=triple.defining_basis,
        real_linear=triple.real_linear, kind=triple.kind,
        metric=triple.metric)


def scale_dirac(triple, factor):
    """
    The same triple with D replaced by factor * D.
    """
    blocks = [TripleBlock(b.indices, factor * b.dirac, b.basis, b.grading)
              for b in triple.blocks]
    return FiniteSpectralTriple.from_blocks(
        triple.dim, blocks, label='{0:g}*{1}'.format(factor, triple.label),
        unital=triple.unital, defining_basis=triple.defining_basis,
        real_linear=triple.real_linear, kind=triple.kind)


def _bipartite(phi, dims):
    dims = dims or phi.factor_dims
    if phi.rho is None:
        raise InvalidStateError('bipartite operations need a density '
                                'matrix')
    if dims is None:
        raise DimensionMismatch('bipartite structure is not known')
    n1, n2 = int(dims[0]), int(dims[1])
    if n1 * n2 != phi.rho.shape[0]:
        raise DimensionMismatch('dims {0} do not match a state of size '
                                '{1}'.format(dims, phi.rho.shape[0]))
    return phi.rho.reshape(n1, n2, n1, n2), n1, n2


def marginals(phi, dims=None):
    """
    Partial traces of a bipartite state, so that phi1(a1) = phi(a1 x 1).

    :return: (State, State)
    """
    tensor, n1, n2 = _bipartite(phi, dims)
    first = np.einsum('ijkj->ik', tensor)
    second = np.einsum('ijil->jl', tensor)
    return (State(first, space=phi.space, label=phi.label + '|1'),
            State(second, space=phi.space, label=phi.label + '|2'))


def peres_partial_transpose(phi, dims=None):
    """
    Transpose on the first tensor factor.
    """
    tensor, n1, n2 = _bipartite(phi, dims)
    return tensor.transpose(2, 1, 0, 3).reshape(n1 * n2, n1 * n2)


def product_state(phi1, phi2):
    """
    phi1 x phi2 as a state on the tensor product.
    """
    label = '{0}*{1}'.format(phi1.label, phi2.label)
    if phi1.rho is not None and phi2.rho is not None:
        if phi1.space != phi2.space:
            raise InvalidArgumentError('factors live on different spaces')
        return State(np.kron(phi1.rho, phi2.rho),
                     factor_dims=(phi1.rho.shape[0], phi2.rho.shape[0]),
                     space=phi1.space, label=label)
    if phi1.coeffs is not None and phi2.coeffs is not None:
        return State(coeffs=np.kron(phi1.coeffs, phi2.coeffs), label=label)
    raise InvalidArgumentError('cannot tensor a density state with a '
                               'coefficient state')


def is_product_state(phi, dims=None, tol=STRUCTURE_TOL):
    """
    True if rho equals the product of its marginals.
    """
    first, second = marginals(phi, dims)
    return np.max(np.abs(np.kron(first.rho, second.rho) - phi.rho)) <= tol


def state_from_bloch(x):
    """
    rho_x = (1 + x . sigma) / 2.
    """
    x = np.asarray(x, dtype=float)
    is_valid_bloch_vector(x)
    norm = np.linalg.norm(x)
    if norm > 1.0:
        x = x / norm
    rho = (PAULI[0] + x[0] * PAULI[1] + x[1] * PAULI[2] +
           x[2] * PAULI[3]) / 2
    return State(rho, label='bloch({0:.6g},{1:.6g},{2:.6g})'.format(*x))


def state_from_simplex(p):
    """
    Diagonal state with the given probability vector.
    """
    p = np.asarray(p, dtype=float)
    is_valid_probability(p)
    p = np.clip(p, 0.0, None)
    p = p / p.sum()
    return State(np.diag(p), label='simplex(' +
                 ','.join('{0:.6g}'.format(v) for v in p) + ')')


def state_from_vector(v, label=''):
    """
    Pure state |v><v| / <v, v>.
    """
    v = np.asarray(v, dtype=complex).ravel()
    norm = np.linalg.norm(v)
    if norm == 0:
        raise InvalidStateError('zero vector is not a state')
    v = v / norm
    return State(np.outer(v, v.conj()), label=label or 'pure')


def pure_state(triple, index):
    """
    The point evaluation at ``index`` of a diagonal algebra, or the
    basis vector state e_index of a full matrix algebra.
    """
    size = triple.defining_dim
    if not 0 <= index < size:
        raise InvalidArgumentError('pure state index {0} out of range '
                                   '[0, {1})'.format(index, size))
    if triple.kind == DIAGONAL:
        p = np.zeros(size)
        p[index] = 1.0
        return state_from_simplex(p)
    if triple.kind == FULL_MATRIX:
        return state_from_vector(np.eye(size)[index],
                                 label='e{0}'.format(index))
    raise InvalidArgumentError('no pure states for triples of kind '
                               '{0!r}'.format(triple.kind))


def bloch_vector(phi):
    """
    Bloch vector of a 2 x 2 density state.
    """
    if phi.rho is None or phi.rho.shape != (2, 2):
        raise InvalidStateError('Bloch vectors exist for 2 x 2 density '
                                'matrices only')
    return np.array([np.trace(phi.rho @ s).real for s in PAULI[1:]])


def simplex_point(phi):
    """
    Probability vector of a diagonal density state.
    """
    if phi.rho is None:
        raise NotProbability('state has no density matrix')
    return np.clip(np.diag(phi.rho).real, 0.0, None)


def hilbert_schmidt_inner(first, second):
    """
    Normalized inner product Tr(a* b) / N.
    """
    first, second = as_matrix(first), as_matrix(second)
    return complex(np.vdot(first, second)) / first.shape[0]

