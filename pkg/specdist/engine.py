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
specdist.engine
~~~~~~~~~~~~~~~

Optimization core.

The spectral distance is sup { phi(a) - psi(a) : ||[D, a]|| <= 1 } over
self-adjoint a = sum_k c_k B_k. Writing X(c) = i[D, a(c)], the feasible
set is { c : -1 <= X(c) <= 1 }, convex and symmetric. The solver

1. splits off the commutant (the kernel of c -> X(c)); a state pair
   separated by the commutant is at infinite distance,
2. runs supergradient ascent on phi(a)/||[D, a]|| from several seeded
   starts to collect supporting cuts,
3. refines with a cutting-plane linear program whose optimum is an upper
   bound and whose rescaled optimizer is a feasible lower bound.

The reported value is the feasible lower bound; ``gap`` is the distance
to the certified upper bound.

The dual solve minimizes b -> ||[D, rho + b]|| over the trace-orthogonal
complement of rho with the same cut machinery. Transport problems go to
the network simplex of POT.

:copyright: (c) 2026 by the spectral-distance authors.
:license: Apache 2.0, see LICENSE for more details.

"""

import logging
import math

import numpy as np
import ot
from scipy.optimize import linprog

from .definitions import DistanceResult, TransportPlan
from .error import (NoConvergence, DimensionMismatch, RhoNotInAlgebra,
                    DualUnavailable, Infeasible, InvalidArgumentError)
from .helpers import (SEPARATION_TOL, PROJECTION_TOL, STATE_TOL,
                      is_valid_probability)
from .matcore import stacked_eigh
from .options import SolverOptions
from .triples import HILBERT_SPACE, MetricSpace

logger = logging.getLogger(__name__)

# Singular values of c -> X(c) below this fraction of the largest one
# span the commutant.
_RANK_TOL = 1e-10
# Eigenpairs within this relative band of the top one share the
# supergradient.
_TOP_BAND = 1e-8
# Cuts added per cutting-plane iteration.
_CUTS_PER_ROUND = 48
# Ascent stops after this many iterations without improvement.
_STALL = 50


class CommutatorMap(object):
    """
    y -> X(Q y) = i[D, a(Q y)] on the blocks of a triple, with blocks of
    equal size stacked for batched eigensolves.

    :param triple: :class:`FiniteSpectralTriple`
    :param directions: (m, p) matrix Q of coefficient directions.
    """

    def __init__(self, triple, directions):
        self.dim = directions.shape[1]
        groups = {}
        for block in triple.blocks:
            comm = 1j * (np.einsum('ab,kbc->kac', block.dirac, block.basis) -
                         np.einsum('kab,bc->kac', block.basis, block.dirac))
            reduced = np.einsum('kab,kp->pab', comm, directions)
            if not np.any(np.abs(reduced) > 0):
                continue
            groups.setdefault(block.size, []).append(reduced)
        self.groups = [np.stack(pieces, axis=1)
                       for _, pieces in sorted(groups.items())]
        self.total_dim = sum(g.shape[1] * g.shape[2] for g in self.groups)

    def spectra(self, y):
        result = []
        for stack in self.groups:
            matrices = np.tensordot(y, stack, axes=1)
            matrices = (matrices + np.conj(np.swapaxes(matrices, 1, 2))) / 2
            values, vectors = stacked_eigh(matrices)
            result.append((stack, values, vectors))
        return result

    def norm(self, y):
        norm = 0.0
        for _, values, _ in self.spectra(y):
            norm = max(norm, np.max(np.abs(values)))
        return float(norm)

    @staticmethod
    def _cut(stack, block, vector):
        # d lambda / d y_j = <u, Y_j u>
        return np.einsum('a,jab,b->j', vector.conj(), stack[:, block],
                         vector).real

    def pairs(self, y, threshold, limit=None):
        """
        Signed cut vectors h with h . y = |lambda| for every eigenpair of
        X(y) whose |lambda| is at least ``threshold``, largest first.

        :return: (norm, list of (|lambda|, h))
        """
        found = []
        norm = 0.0
        for stack, values, vectors in self.spectra(y):
            magnitudes = np.abs(values)
            if magnitudes.size:
                norm = max(norm, float(np.max(magnitudes)))
            blocks, positions = np.nonzero(magnitudes >= threshold)
            for block, position in zip(blocks, positions):
                found.append((magnitudes[block, position], stack, block,
                              np.sign(values[block, position]),
                              vectors[block, :, position]))
        found.sort(key=lambda item: -item[0])
        if limit is not None:
            found = found[:limit]
        cuts = [(magnitude, sign * self._cut(stack, block, vector))
                for magnitude, stack, block, sign, vector in found]
        return norm, cuts

    def supergradient(self, y):
        """
        ||X(y)|| and the average gradient of its top eigenpairs.
        """
        norm = self.norm(y)
        _, cuts = self.pairs(y, norm - _TOP_BAND * max(1.0, norm))
        if not cuts:
            return norm, np.zeros(self.dim), []
        gradient = np.mean([h for _, h in cuts], axis=0)
        return norm, gradient, [h for _, h in cuts]


class Reduction(object):
    """
    Splitting of coefficient space into the commutant and its
    complement.

    :param kernel: (m, q) orthonormal basis of the commutant.
    :param range: (m, p) orthonormal basis of the complement.
    :param sigma_min: Smallest nonzero singular value of c -> X(c) for
       the Frobenius norm.
    """

    def __init__(self, triple):
        rows = []
        for block in triple.blocks:
            comm = (np.einsum('ab,kbc->kac', block.dirac, block.basis) -
                    np.einsum('kab,bc->kac', block.basis, block.dirac))
            flat = comm.reshape(comm.shape[0], -1).T
            rows.extend([flat.real, flat.imag])
        matrix = np.vstack(rows)
        if matrix.shape[0] > matrix.shape[1]:
            # Same singular values and right vectors, smaller problem.
            matrix = np.linalg.qr(matrix, mode='r')
        _, singular, vt = np.linalg.svd(matrix, full_matrices=True)
        top = singular[0] if singular.size else 0.0
        rank = int(np.sum(singular > _RANK_TOL * max(top, 1.0)))
        self.algebra_dim = triple.algebra_dim
        self.kernel = vt[rank:].T
        self.range = vt[:rank].T
        self.sigma_min = float(singular[rank - 1]) if rank else 0.0
        self.map = CommutatorMap(triple, self.range) if rank else None
        self.radius = (math.sqrt(triple.dim) / self.sigma_min * 1.01
                       if rank else 0.0)

    def separating(self, delta):
        """
        Unit commutant direction on which delta pairs non-trivially, or
        None.
        """
        if not self.kernel.shape[1]:
            return None
        projection = self.kernel.T @ delta
        if np.linalg.norm(projection) <= SEPARATION_TOL * max(
                1.0, np.linalg.norm(delta)):
            return None
        direction = self.kernel @ projection
        return direction / np.linalg.norm(direction)


def reduction(triple):
    """
    Cached :class:`Reduction` of a triple.
    """
    # Unlocked: concurrent first calls may each build one, the results are
    # identical and the last store wins.
    cached = triple._dense.get('reduction')
    if cached is None:
        cached = triple._dense['reduction'] = Reduction(triple)
    return cached


def commutant_directions(triple):
    """
    Basis of { a = a* in span(B), [D, a] = 0 }, orthonormal for the trace
    inner product.

    :return: (q, m) array; row r holds the coefficients of the r-th
       element on the algebra basis.
    """
    kernel = reduction(triple).kernel
    if not kernel.shape[1]:
        return np.zeros((0, triple.algebra_dim))
    gram = kernel.T @ triple.gram @ kernel
    lower = np.linalg.cholesky((gram + gram.T) / 2)
    return np.linalg.solve(lower, kernel.T)


def _pairing_difference(triple, phi, psi):
    first = phi.pairing(triple)
    second = psi.pairing(triple)
    if first.shape != second.shape:
        raise DimensionMismatch('states pair with different bases')
    return first - second


def _solve_lp(cost, a_ub, b_ub, bounds):
    result = linprog(cost, A_ub=a_ub, b_ub=b_ub, bounds=bounds,
                     method='highs')
    if result.status != 0:
        raise NoConvergence('cutting-plane LP failed: {0}'.format(
            result.message))
    return result.x, float(result.fun)


class _PrimalSolver(object):
    """
    Maximize d . y subject to ||X(y)|| <= 1.
    """

    def __init__(self, commutators, direction, radius, options):
        self.map = commutators
        self.direction = direction
        self.radius = radius
        self.options = options
        self.cuts = []
        self.lower = 0.0
        self.best = None
        self.iterations = 0

    def _offer(self, y, norm):
        value = float(self.direction @ y) / norm
        if value > self.lower:
            self.lower = value
            self.best = y / norm
        return value

    def ascend(self, start):
        """
        Supergradient ascent of F(y) = d . y / ||X(y)|| from ``start``.
        """
        y = start
        best = -math.inf
        stalled = 0
        for step in range(self.options.ascent_iter):
            self.iterations += 1
            norm, gradient, cuts = self.map.supergradient(y)
            self.cuts.extend(cuts)
            y = y / norm
            gradient = gradient / norm
            value = self._offer(y, 1.0)
            if math.isinf(best) or \
                    value > best + self.options.tol * abs(best):
                best = value
                stalled = 0
            else:
                stalled += 1
                if stalled >= _STALL:
                    break
            ascent = self.direction - value * gradient
            size = float(ascent @ ascent)
            if size <= 1e-30:
                break
            target = self.lower * (1.0 + 0.1 / (step + 1.0))
            length = (target - value) / size
            if not np.isfinite(length) or length <= 0:
                length = 1.0 / (math.sqrt(size) * (step + 1.0))
            y = y + length * ascent
        logger.debug('ascent finished at %r', best)

    def refine(self):
        """
        Cutting-plane LP rounds until the gap is within tolerance.
        """
        dim = self.map.dim
        bounds = [(-self.radius, self.radius)] * dim
        upper = math.inf
        for round_ in range(self.options.max_iter):
            self.iterations += 1
            a_ub = np.array(self.cuts) if self.cuts else None
            b_ub = np.ones(len(self.cuts)) if self.cuts else None
            y, fun = _solve_lp(-self.direction, a_ub, b_ub, bounds)
            upper = min(upper, -fun)
            norm, cuts = self.map.pairs(y, 1.0 + 1e-12, _CUTS_PER_ROUND)
            if norm > 0:
                self._offer(y, norm)
            if upper - self.lower <= self.options.tol * max(self.lower,
                                                            1e-300):
                return max(upper, self.lower)
            if not cuts:
                return max(upper, self.lower)
            self.cuts.extend(h for _, h in cuts)
            logger.debug('round %d: lower %r upper %r cuts %d', round_,
                         self.lower, upper, len(self.cuts))
        raise NoConvergence('cutting-plane iteration limit reached',
                            lower_bound=self.lower, upper_bound=upper,
                            iterations=self.iterations)


def spectral_distance(triple, phi, psi, options=None):
    """
    Spectral distance between two states by the primal method.

    :param triple: :class:`FiniteSpectralTriple`
    :param phi: :class:`State`
    :param psi: :class:`State`
    :param options: :class:`SolverOptions`
    :return: :class:`DistanceResult`
    """
    options = options or SolverOptions()
    delta = _pairing_difference(triple, phi, psi)
    split = reduction(triple)
    separating = split.separating(delta)
    if separating is not None:
        logger.info('states separated by a commutant direction')
        return DistanceResult(math.inf, separating=separating)
    direction = split.range.T @ delta
    if split.map is None or np.linalg.norm(direction) <= STATE_TOL * 1e-5:
        return DistanceResult(0.0, optimizer=np.zeros(triple.algebra_dim))

    solver = _PrimalSolver(split.map, direction, split.radius, options)
    rng = np.random.default_rng(options.seed)
    for restart in range(options.restarts):
        if restart == 0:
            start = direction / np.linalg.norm(direction)
        else:
            start = rng.normal(size=split.map.dim)
        solver.ascend(start)
    upper = solver.refine()
    coefficients = split.range @ solver.best
    gap = max(upper - solver.lower, 0.0)
    logger.debug('primal distance %r gap %r iterations %d', solver.lower,
                 gap, solver.iterations)
    return DistanceResult(solver.lower, optimizer=coefficients, gap=gap,
                          iterations=solver.iterations, method='primal')


def _dual_representative(triple, phi, psi, delta):
    """
    Coefficients r of rho = sum_k r_k B_k with <rho, B_k>_Tr = delta_k.
    """
    if not (phi.is_density and psi.is_density):
        raise DualUnavailable('the dual formula needs density matrices; '
                              'use the primal method for coefficient '
                              'states')
    coeffs = np.linalg.solve(triple.gram, delta)
    if phi.space == HILBERT_SPACE or psi.space == HILBERT_SPACE:
        if phi.space != psi.space:
            raise DimensionMismatch('states live on different spaces')
        rho = phi.rho - psi.rho
        residual = np.linalg.norm(rho - triple.element(coeffs))
        if residual > PROJECTION_TOL * max(1.0, np.linalg.norm(rho)):
            raise RhoNotInAlgebra('rho_phi - rho_psi is not in the algebra '
                                  'span: residual {0:.3e}'.format(residual))
    return coeffs


def spectral_distance_dual(triple, phi, psi, options=None):
    """
    Spectral distance as ||rho||^2 / L(rho) with
    L(rho) = inf { ||[D, rho + b]|| : b = b*, <b, rho>_Tr = 0 }.

    :return: :class:`DistanceResult` whose optimizer holds the
       coefficients of the minimizing b.
    """
    options = options or SolverOptions()
    delta = _pairing_difference(triple, phi, psi)
    coeffs = _dual_representative(triple, phi, psi, delta)
    norm_squared = float(delta @ coeffs)
    if norm_squared <= 0.0 or np.max(np.abs(delta)) <= STATE_TOL * 1e-5:
        return DistanceResult(0.0, optimizer=np.zeros(triple.algebra_dim),
                              method='dual')
    split = reduction(triple)
    separating = split.separating(delta)
    if separating is not None or split.map is None:
        return DistanceResult(math.inf, method='dual',
                              separating=separating)
    base = split.range.T @ coeffs
    direction = split.range.T @ delta
    # Orthonormal basis of the directions d . z = 0.
    _, _, vt = np.linalg.svd(direction[None, :])
    free = vt[1:].T
    rho_norm = split.map.norm(base)
    zero = options.zero_tol * rho_norm + 1e-12
    lower, upper, best, iterations = _minimize_lipschitz(
        split.map, base, free, 2.0 * rho_norm * split.radius, options)
    if upper <= zero:
        return DistanceResult(math.inf, method='dual', iterations=iterations)
    value = norm_squared / upper
    gap = (norm_squared / lower - value) if lower > 0 else math.inf
    optimizer = split.range @ (free @ best) if free.shape[1] else \
        np.zeros(triple.algebra_dim)
    logger.debug('dual distance %r gap %r iterations %d', value, gap,
                 iterations)
    return DistanceResult(value, optimizer=optimizer, gap=max(gap, 0.0),
                          iterations=iterations, method='dual')


def _minimize_lipschitz(commutators, base, free, radius, options):
    """
    Minimize ||X(base + free w)|| over w.

    :return: (lower bound, upper bound, best w, iterations)
    """
    dim = free.shape[1]
    upper = commutators.norm(base)
    best = np.zeros(dim)
    if dim == 0:
        return upper, upper, best, 1
    cuts, offsets = [], []

    def evaluate(w):
        point = base + free @ w
        norm, gradient, tops = commutators.supergradient(point)
        for h in tops:
            cuts.append(free.T @ h)
            offsets.append(float(h @ base))
        return norm, free.T @ gradient

    iterations = 0
    rng = np.random.default_rng(options.seed)
    for restart in range(options.restarts):
        w = np.zeros(dim) if restart == 0 else \
            rng.normal(scale=radius / (4.0 * math.sqrt(dim)), size=dim)
        for step in range(options.ascent_iter):
            iterations += 1
            value, gradient = evaluate(w)
            if value < upper:
                upper, best = value, w.copy()
            size = float(gradient @ gradient)
            if size <= 1e-30:
                break
            target = upper * (1.0 - 0.1 / (step + 1.0))
            length = (value - target) / size
            if not np.isfinite(length) or length <= 0:
                length = 1.0 / (math.sqrt(size) * (step + 1.0))
            w = w - length * gradient

    bounds = [(-radius, radius)] * dim + [(0.0, None)]
    cost = np.zeros(dim + 1)
    cost[-1] = 1.0
    lower = 0.0
    for round_ in range(options.max_iter):
        iterations += 1
        # h . (base + free w) <= t  as  (free^T h) . w - t <= -h . base
        a_ub = np.hstack([np.array(cuts), -np.ones((len(cuts), 1))])
        b_ub = -np.array(offsets)
        solution, fun = _solve_lp(cost, a_ub, b_ub, bounds)
        lower = max(lower, fun)
        w = solution[:dim]
        value, _ = evaluate(w)
        point = base + free @ w
        _, extra = commutators.pairs(point, max(fun, 0.0) * (1 + 1e-12) +
                                     1e-15, _CUTS_PER_ROUND)
        for _, h in extra:
            cuts.append(free.T @ h)
            offsets.append(float(h @ base))
        if value < upper:
            upper, best = value, w.copy()
        if upper - lower <= options.tol * max(upper, 1e-300):
            return lower, upper, best, iterations
        logger.debug('dual round %d: lower %r upper %r', round_, lower,
                     upper)
    raise NoConvergence('dual cutting-plane iteration limit reached',
                        lower_bound=lower, upper_bound=upper,
                        iterations=iterations)


def kantorovich(cost, p, q, max_iter=100000):
    """
    Optimal transport between probability vectors.

    Infinite costs are replaced by a penalty larger than any finite
    rerouting; mass left on them means the supports are disconnected.

    :param cost: N x M matrix, non-negative, entries may be inf.
    :param p: Source probability vector (length N).
    :param q: Target probability vector (length M).
    :return: :class:`TransportPlan`
    """
    cost = np.array(cost, dtype=float)
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    is_valid_probability(p)
    is_valid_probability(q)
    if cost.shape != (p.size, q.size):
        raise DimensionMismatch('cost matrix of shape {0} does not match '
                                'marginals of sizes {1} and {2}'.format(
                                    cost.shape, p.size, q.size))
    if np.any(np.isnan(cost)) or np.any(cost < 0):
        raise InvalidArgumentError('costs must be non-negative')
    p = np.clip(p, 0.0, None)
    q = np.clip(q, 0.0, None)
    p, q = p / p.sum(), q / q.sum()
    finite = np.isfinite(cost)
    largest = float(np.max(cost[finite])) if np.any(finite) else 0.0
    penalty = 2.0 * (p.size + q.size) * (largest + 1.0)
    priced = np.ascontiguousarray(np.where(finite, cost, penalty))
    coupling, log = ot.emd(p, q, priced, numItermax=max_iter, log=True)
    coupling = np.asarray(coupling, dtype=float)
    if log.get('warning'):
        logger.warning('network simplex: %s', log['warning'])
    stranded = coupling[~finite]
    if stranded.size and np.max(stranded) > 1e-12:
        raise Infeasible('infinite costs disconnect the supports of the '
                         'two distributions')
    coupling[~finite] = 0.0
    value = float(np.sum(coupling[finite] * cost[finite]))

    dual_a, dual_b = _c_transform(cost, finite,
                                  np.asarray(log['v'], dtype=float))
    gap = value - float(p @ dual_a + q @ dual_b)

    plan = np.full(coupling.shape, 1.0 / q.size)
    rows = p > 0
    plan[rows] = coupling[rows] / p[rows, None]
    return TransportPlan(plan, value, dual_a, dual_b, coupling, gap)


def _c_transform(cost, finite, dual_b):
    # a_i = min_j (c_ij - b_j), then b_j = min_i (c_ij - a_i); both stay
    # feasible and never lower the dual objective.
    masked = np.where(finite, cost, np.inf)
    dual_a = np.min(masked - dual_b[None, :], axis=1)
    dual_a[~np.isfinite(dual_a)] = 0.0
    dual_b = np.min(masked - dual_a[:, None], axis=0)
    dual_b[~np.isfinite(dual_b)] = 0.0
    return dual_a, dual_b


def commutative_distance(space, p, q):
    """
    Wasserstein distance on a finite metric space with cost c = g.

    :param space: :class:`MetricSpace` or distance matrix.
    """
    if not isinstance(space, MetricSpace):
        space = MetricSpace(space)
    return kantorovich(space.g, p, q).value


def distance(triple, phi, psi, options=None, dual=False):
    """
    Primal or dual spectral distance.
    """
    if dual:
        return spectral_distance_dual(triple, phi, psi, options)
    return spectral_distance(triple, phi, psi, options)
