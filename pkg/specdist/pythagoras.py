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
specdist.pythagoras
~~~~~~~~~~~~~~~~~~~

Distances on products of spectral triples compared with the product
metric of the factor distances.

For a product D = D1 x 1 + gamma1 x D2 and any two states,

    d1 [x] d2 (marginals) <= d_D <= sqrt(2) d1 [x] d2 (marginals)

the upper bound holding for product states. The idempotent
P = phi1# x id + id x psi2# - phi1# x psi2# projects the product algebra
onto A1 + A2; equality follows whenever P does not increase
||[D, .]||.

:copyright: (c) 2026 by the spectral-distance authors.
:license: Apache 2.0, see LICENSE for more details.

"""

import logging
import math

import numpy as np

from .definitions import (PythagorasReport, ContractionReport, KEstimate,
                          BlockReduction, IdentityCheck, EQUALITY, STRICT,
                          VIOLATION)
from .engine import spectral_distance
from .error import (InvalidArgumentError, InvalidStateError, NonUnital,
                    PythagorasViolation, DimensionMismatch)
from .helpers import VERDICT_TOL, STRUCTURE_TOL, is_valid_density
from .matcore import operator_norm, commutator
from .options import SolverOptions
from .triples import (FiniteSpectralTriple, TripleBlock, MetricSpace, State,
                      HILBERT_SPACE, ALGEBRA_SPACE, finite_metric_triple,
                      product_triple, product_state, is_product_state,
                      state_from_simplex)

logger = logging.getLogger(__name__)

MARGINAL = 'marginal'
DIRECT = 'direct'


def product_metric(d1, d2, p=2):
    """
    l^p combination of two distances, inf absorbing. ``p=2`` is the
    product metric d1 [x] d2, ``p=inf`` the maximum.
    """
    for value in (d1, d2):
        if value < 0 or math.isnan(value):
            raise InvalidArgumentError('distances must be non-negative')
    if p < 1:
        raise InvalidArgumentError('p must be at least 1')
    if math.isinf(d1) or math.isinf(d2):
        return math.inf
    if math.isinf(p):
        return float(max(d1, d2))
    if p == 2:
        return math.hypot(d1, d2)
    return float((d1 ** p + d2 ** p) ** (1.0 / p))


def _require_unital(structure):
    for triple in (structure.left, structure.right):
        if not triple.unital:
            raise NonUnital('factor {0!r} is not unital'.format(triple.label))


def restrict(triple, rows, label=''):
    """
    The triple with its algebra cut down to the span of the given
    coefficient rows.

    :param rows: (r, m) independent coefficient vectors.
    """
    rows = np.asarray(rows, dtype=float)
    blocks = [TripleBlock(b.indices, b.dirac,
                          np.einsum('rk,kab->rab', rows, b.basis), b.grading)
              for b in triple.blocks]
    defining = np.einsum('rk,kab->rab', rows, triple.defining_basis)
    return FiniteSpectralTriple.from_blocks(
        triple.dim, blocks, label=label or triple.label,
        defining_basis=defining, real_linear=triple.real_linear,
        kind=triple.kind)


def sum_subalgebra_rows(structure):
    """
    Orthonormal coefficient rows spanning A1 x 1 + 1 x A2.
    """
    m1, m2 = structure.left.algebra_dim, structure.right.algebra_dim
    rows = np.vstack([structure.embed_left(np.eye(m1)[k]) for k in range(m1)] +
                     [structure.embed_right(np.eye(m2)[k])
                      for k in range(m2)])
    _, singular, vt = np.linalg.svd(rows, full_matrices=False)
    rank = int(np.sum(singular > STRUCTURE_TOL * singular[0]))
    return vt[:rank]


def factor_distances(structure, phi, psi, options=None):
    """
    Distances of the marginals on each factor.

    :return: (d1, d2)
    """
    phi1, phi2 = structure.marginal_states(phi)
    psi1, psi2 = structure.marginal_states(psi)
    d1 = spectral_distance(structure.left, phi1, psi1, options).value
    d2 = spectral_distance(structure.right, phi2, psi2, options).value
    return d1, d2


def d_times(structure, phi, psi, options=None, mode=MARGINAL):
    """
    Supremum of phi(a) - psi(a) over a in A1 + A2 with ||[D, a]|| <= 1.

    ``mode='marginal'`` evaluates it as the product metric of the
    marginal distances; ``mode='direct'`` solves the restricted problem
    on the product triple.
    """
    if mode == MARGINAL:
        return product_metric(*factor_distances(structure, phi, psi,
                                                options))
    if mode != DIRECT:
        raise InvalidArgumentError('unknown d_times mode {0!r}'.format(mode))
    _require_unital(structure)
    rows = sum_subalgebra_rows(structure)
    restricted = restrict(structure.combined, rows,
                          label='{0} (A1+A2)'.format(
                              structure.combined.label))
    first = State(coeffs=rows @ phi.pairing(structure.combined))
    second = State(coeffs=rows @ psi.pairing(structure.combined))
    return spectral_distance(restricted, first, second, options).value


def _is_product(structure, phi):
    if phi.rho is not None:
        if phi.space == ALGEBRA_SPACE:
            dims = (structure.left.defining_dim, structure.right.defining_dim)
        else:
            dims = (structure.left.dim, structure.right.dim)
        return is_product_state(phi, phi.factor_dims or dims)
    values = phi.pairing(structure.combined).reshape(
        structure.left.algebra_dim, structure.right.algebra_dim)
    singular = np.linalg.svd(values, compute_uv=False)
    return singular.size < 2 or singular[1] <= STRUCTURE_TOL * max(
        1.0, singular[0])


def _ratio(d_spectral, d_product):
    if math.isinf(d_product):
        return 1.0 if math.isinf(d_spectral) else 0.0
    if d_product <= 1e-12:
        return 1.0 if d_spectral <= 1e-9 else math.inf
    return d_spectral / d_product


def pythagoras_check(structure, phi, psi, options=None,
                     tolerance=VERDICT_TOL, raise_on_violation=True):
    """
    Compare d_D(phi, psi) on the product triple with the product metric
    of the marginal distances.

    :return: :class:`PythagorasReport`
    :raises PythagorasViolation: if the ratio leaves [1, sqrt(2)] (the
       lower end only for non-product states) by more than ``tolerance``
       and ``raise_on_violation`` is set.
    """
    options = options or SolverOptions()
    d1, d2 = factor_distances(structure, phi, psi, options)
    d_product = product_metric(d1, d2)
    result = spectral_distance(structure.combined, phi, psi, options)
    ratio = _ratio(result.value, d_product)
    products = _is_product(structure, phi) and _is_product(structure, psi)
    if abs(ratio - 1.0) <= tolerance:
        verdict = EQUALITY
    elif ratio < 1.0 - tolerance or \
            (products and ratio > math.sqrt(2.0) + tolerance):
        verdict = VIOLATION
    else:
        verdict = STRICT
    report = PythagorasReport(
        d1, d2, d_product, result.value, ratio, verdict, tolerance,
        product_states=products,
        labels=(structure.left.label, structure.right.label),
        descriptors=(phi.label, psi.label))
    if verdict == VIOLATION:
        logger.error('product bound violated: %s (gap %r, iterations %d)',
                     report, result.gap, result.iterations)
        if raise_on_violation:
            raise PythagorasViolation('ratio {0!r} outside the product '
                                      'bounds'.format(ratio), report)
    else:
        logger.debug('%s', report)
    return report


def k_bounded_ratio(report, k, tolerance=VERDICT_TOL):
    """
    True if d_D <= K d_times holds for the report.
    """
    if math.isinf(report.d_product):
        return True
    return report.d_spectral <= k * report.d_product + tolerance * max(
        1.0, report.d_product)


class IdempotentP(object):
    """
    P = phi1# x id + id x psi2# - phi1# x psi2# on product coefficients,
    with phi1#(a) = phi1(a) 1.

    :param phi1: State on the left factor.
    :param psi2: State on the right factor.
    :param left_map: m1 x m1 matrix of phi1#.
    :param right_map: m2 x m2 matrix of psi2#.
    """

    def __init__(self, phi1, psi2, left_map, right_map):
        self.phi1 = phi1
        self.psi2 = psi2
        self.left_map = left_map
        self.right_map = right_map
        eye1 = np.eye(left_map.shape[0])
        eye2 = np.eye(right_map.shape[0])
        self.matrix = (np.kron(left_map, eye2) + np.kron(eye1, right_map) -
                       np.kron(left_map, right_map))

    def __call__(self, coeffs):
        return self.matrix @ np.asarray(coeffs, dtype=float)

    @property
    def idempotency_residual(self):
        return float(np.max(np.abs(self.matrix @ self.matrix - self.matrix)))

    @property
    def rank(self):
        return int(np.linalg.matrix_rank(self.matrix, tol=STRUCTURE_TOL))

    def kernel(self):
        """
        Orthonormal coefficient rows spanning the kernel of P.
        """
        _, singular, vt = np.linalg.svd(self.matrix)
        return vt[int(np.sum(singular > STRUCTURE_TOL)):]

    def __str__(self):
        return '<IdempotentP: dim: {0} rank: {1}>'.format(
            self.matrix.shape[0], self.rank)


def build_P(structure, phi1, psi2):
    """
    Idempotent of the pair (phi1, psi2) on the product algebra.

    :raises NonUnital: if a factor algebra has no unit.
    """
    e1 = structure.left.defining_identity_coefficients()
    e2 = structure.right.defining_identity_coefficients()
    left_map = np.outer(e1, phi1.pairing(structure.left))
    right_map = np.outer(e2, psi2.pairing(structure.right))
    return IdempotentP(phi1, psi2, left_map, right_map)


def check_contraction(structure, idem, samples=200, rng=None, slack=1e-10,
                      elements=None):
    """
    Sample ||[D, P(a)]|| <= ||[D, a]|| over random self-adjoint a.

    :param elements: Optional explicit coefficient vectors tested in
       addition to the random ones.
    :return: :class:`ContractionReport`
    """
    rng = rng if rng is not None else np.random.default_rng(0)
    combined = structure.combined
    candidates = list(elements or [])
    candidates.extend(rng.normal(size=combined.algebra_dim)
                      for _ in range(samples))
    violations = 0
    worst = -math.inf
    for coeffs in candidates:
        before = combined.lipschitz_norm(coeffs)
        after = combined.lipschitz_norm(idem(coeffs))
        excess = after - before
        worst = max(worst, excess)
        if excess > slack * max(1.0, before):
            violations += 1
    report = ContractionReport(len(candidates), violations,
                               worst if candidates else 0.0)
    logger.debug('%s', report)
    return report


def normal_extension(triple, phi):
    """
    Density matrix on the Hilbert space of ``triple`` reproducing phi on
    the represented algebra.

    :raises InvalidStateError: if the representative is not a state.
    """
    if phi.rho is not None and phi.space == HILBERT_SPACE:
        return phi.rho
    coeffs = np.linalg.solve(triple.gram, phi.pairing(triple))
    rho = triple.element(coeffs)
    is_valid_density(rho, 1e-8)
    return (rho + rho.conj().T) / 2


def _as_density(value, size, name):
    rho = value.rho if isinstance(value, State) else np.asarray(
        value, dtype=complex)
    if rho is None or rho.shape != (size, size):
        raise DimensionMismatch('{0} must be a {1} x {1} density '
                                'matrix'.format(name, size))
    is_valid_density(rho)
    return rho


class _ExtendedP(object):
    """
    P on all of B(H1 x H2), through normal states rho1 and rho2.
    """

    def __init__(self, rho1, rho2):
        self.rho1 = rho1
        self.rho2 = rho2
        self.n1 = rho1.shape[0]
        self.n2 = rho2.shape[0]

    def __call__(self, b):
        tensor = b.reshape(self.n1, self.n2, self.n1, self.n2)
        # (phi1# x id)(b) = 1 x Tr_1((rho1 x 1) b)
        right = np.einsum('ki,ijkl->jl', self.rho1, tensor)
        # (id x psi2#)(b) = Tr_2((1 x rho2) b) x 1
        left = np.einsum('lj,ijkl->ik', self.rho2, tensor)
        scalar = np.einsum('ki,lj,ijkl->', self.rho1, self.rho2, tensor)
        return (np.kron(np.eye(self.n1), right) +
                np.kron(left, np.eye(self.n2)) -
                scalar * np.eye(self.n1 * self.n2))

    def ratio(self, b):
        norm = operator_norm(b)
        return operator_norm(self(b)) / norm if norm > 0 else 0.0


def idempotent_norm_K(structure, idem, rho1=None, rho2=None, samples=200,
                      rng=None):
    """
    Sampled lower bound of K = ||P|| on B(H), always including the
    identity and, for even factors, the grading witness gamma1 x gamma2.

    :param rho1: Density on H1 extending phi1; derived from the state
       when omitted.
    :param rho2: Density on H2 extending psi2.
    :return: :class:`KEstimate`
    """
    left, right = structure.left, structure.right
    rho1 = _as_density(rho1 if rho1 is not None else
                       normal_extension(left, idem.phi1), left.dim, 'rho1')
    rho2 = _as_density(rho2 if rho2 is not None else
                       normal_extension(right, idem.psi2), right.dim, 'rho2')
    for triple, rho, state in ((left, rho1, idem.phi1),
                               (right, rho2, idem.psi2)):
        values = np.einsum('ab,kba->k', rho, triple.algebra_basis).real
        if np.max(np.abs(values - state.pairing(triple))) > 1e-8:
            raise InvalidStateError('density does not extend the state on '
                                    '{0!r}'.format(triple.label))
    extended = _ExtendedP(rho1, rho2)
    size = left.dim * right.dim
    best = extended.ratio(np.eye(size))
    witness = None
    if left.is_even and right.is_even:
        witness = extended.ratio(np.kron(left.grading, right.grading))
        best = max(best, witness)
    rng = rng if rng is not None else np.random.default_rng(0)
    for _ in range(samples):
        b = rng.normal(size=(size, size)) + 1j * rng.normal(size=(size, size))
        best = max(best, extended.ratio(b))
    estimate = KEstimate(best, witness, samples)
    logger.debug('%s', estimate)
    return estimate


def block_reduction_bound(structure, r, s, phi2, psi2, options=None):
    """
    Distance between x_r x phi2 and x_s x psi2 on a finite metric space
    times T2, against the same distance on the two-point block (r, s).

    :return: :class:`BlockReduction`
    """
    options = options or SolverOptions()
    metric = structure.left.metric
    if metric is None:
        raise InvalidArgumentError('left factor must be a finite metric '
                                   'triple')
    if r == s or not (0 <= r < metric.size and 0 <= s < metric.size):
        raise InvalidArgumentError('block needs two distinct points')
    points = np.eye(metric.size)
    d_full = spectral_distance(
        structure.combined,
        product_state(state_from_simplex(points[r]), phi2),
        product_state(state_from_simplex(points[s]), psi2), options).value
    g = metric.g[r, s]
    block = product_triple(finite_metric_triple(MetricSpace(
        [[0.0, g], [g, 0.0]])), structure.right)
    d_block = spectral_distance(
        block.combined,
        product_state(state_from_simplex([1.0, 0.0]), phi2),
        product_state(state_from_simplex([0.0, 1.0]), psi2), options).value
    return BlockReduction(r, s, d_full, d_block, options.tol * 10)


def lemma_norm_identity(structure, c1, c2):
    """
    ||[D1, a1]||^2 + ||[D2, a2]||^2 against ||[D, a1 x 1 + 1 x a2]||^2.
    """
    _require_unital(structure)
    lhs = (structure.left.lipschitz_norm(c1) ** 2 +
           structure.right.lipschitz_norm(c2) ** 2)
    coeffs = structure.embed_left(c1) + structure.embed_right(c2)
    rhs = structure.combined.lipschitz_norm(coeffs) ** 2
    return IdentityCheck('lemma-norm', lhs, rhs)


def horizontal_check(structure, phi1, psi1, phi2, options=None):
    """
    d_D(phi1 x phi2, psi1 x phi2) against d_D1(phi1, psi1).
    """
    _require_unital(structure)
    lhs = spectral_distance(structure.combined, product_state(phi1, phi2),
                            product_state(psi1, phi2), options).value
    rhs = spectral_distance(structure.left, phi1, psi1, options).value
    return IdentityCheck('horizontal', lhs, rhs)


def null_conditions(structure, rho1, rho2):
    """
    Residuals of phi1(gamma1 [D1, a]) = 0 and psi2([D2, b]) = 0 over the
    factor bases, with the commutators that imply them.

    :param rho1: Density on H1.
    :param rho2: Density on H2.
    :return: dict of residuals.
    """
    left, right = structure.left, structure.right
    rho1 = _as_density(rho1, left.dim, 'rho1')
    rho2 = _as_density(rho2, right.dim, 'rho2')
    null_a = max(abs(np.trace(rho1 @ left.grading @
                              commutator(left.dirac, b)))
                 for b in left.algebra_basis)
    null_b = max(abs(np.trace(rho2 @ commutator(right.dirac, b)))
                 for b in right.algebra_basis)
    residuals = {
        'null_a': float(null_a),
        'null_b': float(null_b),
        'rho1_gamma1': float(np.max(np.abs(commutator(rho1, left.grading)))),
        'rho2_dirac2': float(np.max(np.abs(commutator(rho2, right.dirac)))),
    }
    if right.is_even:
        residuals['rho2_gamma2'] = float(np.max(np.abs(
            commutator(rho2, right.grading))))
    return residuals
