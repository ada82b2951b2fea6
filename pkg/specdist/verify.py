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
specdist.verify
~~~~~~~~~~~~~~~

Self-check suites: the engine against closed forms, transport against
the nonsmooth solver, the product bounds, duality, numerical identities,
the Berezin maps and the tetrahedron embedding.

:copyright: (c) 2026 by the spectral-distance authors.
:license: Apache 2.0, see LICENSE for more details.

"""

import itertools
import logging
import math
import time

import numpy as np

from . import berezin, oracles, pythagoras, sampling, surface
from .definitions import VIOLATION
from .engine import (spectral_distance, spectral_distance_dual, kantorovich,
                     commutant_directions)
from .error import InvalidArgumentError, SpecdistError
from .options import SolverOptions
from .thread_pool import run_tasks
from .triples import (State, bloch_triples, diagonal_triple,
                      finite_metric_triple, matrix_algebra_triple,
                      peres_partial_transpose, product_state, product_triple,
                      scale_dirac, simplex_triple, state_from_bloch,
                      state_from_simplex, state_from_vector, two_point_state,
                      two_point_triple)

logger = logging.getLogger(__name__)

DISTANCE_TOL = 1e-4

# Sizes of the product-metric sweeps.
SANDWICH_TRIPLES = 100
SANDWICH_PAIRS = 10
GRID_POINTS = 9
METRIC_PRODUCTS = 3
METRIC_MAX_SIZE = 5


class Check(object):
    """
    Outcome of one verification.

    :param suite: Suite name.
    :param name: Check name.
    :param error: Measured error (or measured value for bounds).
    :param tolerance: Threshold the error was compared with.
    :param passed: Outcome.
    :param message: Free text.
    :param duration: Seconds spent.
    """

    def __init__(self, suite, name, error, tolerance, passed, message='',
                 duration=0.0):
        self.suite = suite
        self.name = name
        self.error = error
        self.tolerance = tolerance
        self.passed = passed
        self.message = message
        self.duration = duration

    def as_row(self):
        return {
            'suite': self.suite,
            'check': self.name,
            'status': 'PASS' if self.passed else 'FAIL',
            'error': self.error,
            'tolerance': self.tolerance,
            'message': self.message,
        }

    def __str__(self):
        return '<Check: {0}/{1}: {2} error: {3}>'.format(
            self.suite, self.name, 'PASS' if self.passed else 'FAIL',
            self.error)


def relative_error(value, expected):
    if math.isinf(value) or math.isinf(expected):
        return 0.0 if value == expected else math.inf
    return abs(value - expected) / max(abs(expected), 1e-6)


class _Suite(object):
    """
    Collects the checks of one suite.
    """

    def __init__(self, name):
        self.name = name
        self.checks = []

    def check(self, name, func, tolerance, message=''):
        """
        Run ``func`` returning a measured error, compare with tolerance.
        Library errors fail the check instead of aborting the suite.
        """
        start = time.time()
        try:
            error = float(func())
            passed = error <= tolerance
        except SpecdistError as err:
            error, passed, message = math.inf, False, str(err)
        check = Check(self.name, name, error, tolerance, passed, message,
                      time.time() - start)
        log = logger.info if passed else logger.warning
        log('%s', check)
        self.checks.append(check)
        return check


def _worst(pairs):
    return max([relative_error(a, b) for a, b in pairs] or [0.0])


def oracles_suite(options, rng, samples):
    suite = _Suite('oracles')

    def two_point():
        pairs = []
        for _ in range(samples):
            lam = float(rng.uniform(0.2, 2.0))
            phi, psi = rng.uniform(-lam, lam, size=2)
            value = spectral_distance(two_point_triple(lam),
                                      two_point_state(lam, phi),
                                      two_point_state(lam, psi), options)
            pairs.append((value.value,
                          oracles.two_point_distance(lam, phi, psi)))
        return _worst(pairs)

    def simplex():
        triple = simplex_triple()
        pairs = []
        for _ in range(samples):
            p = sampling.random_probability(rng, 3)
            q = sampling.random_probability(rng, 3)
            value = spectral_distance(triple, state_from_simplex(p),
                                      state_from_simplex(q), options)
            pairs.append((value.value, oracles.simplex3_distance(p, q)))
        return _worst(pairs)

    def metric():
        pairs = []
        for _ in range(max(1, samples // 4)):
            space = sampling.random_metric(rng, int(rng.integers(2, 6)))
            triple = finite_metric_triple(space)
            for k, l in itertools.combinations(range(space.size), 2):
                value = spectral_distance(
                    triple, state_from_simplex(np.eye(space.size)[k]),
                    state_from_simplex(np.eye(space.size)[l]), options)
                pairs.append((value.value, space.g[k, l]))
        return _worst(pairs)

    def bloch(variant, oracle):
        def run():
            triple = bloch_triples()[variant]
            pairs = []
            for _ in range(samples):
                x = sampling.random_bloch(rng)
                y = sampling.random_bloch(rng)
                value = spectral_distance(triple, state_from_bloch(x),
                                          state_from_bloch(y), options)
                pairs.append((value.value, oracle(x, y)))
            return _worst(pairs)
        return run

    def two_two_point():
        structure = product_triple(two_point_triple(0.5),
                                   two_point_triple(0.5))
        pairs = []
        for _ in range(samples):
            coords = rng.uniform(-0.5, 0.5, size=4)
            phi = product_state(two_point_state(0.5, coords[0]),
                                two_point_state(0.5, coords[1]))
            psi = product_state(two_point_state(0.5, coords[2]),
                                two_point_state(0.5, coords[3]))
            value = spectral_distance(structure.combined, phi, psi, options)
            pairs.append((value.value, pythagoras.product_metric(
                abs(coords[0] - coords[2]), abs(coords[1] - coords[3]))))
        return _worst(pairs)

    suite.check('two-point', two_point, DISTANCE_TOL)
    suite.check('simplex', simplex, DISTANCE_TOL)
    suite.check('finite-metric', metric, DISTANCE_TOL)
    suite.check('bloch-conjugation',
                bloch('conjugation', oracles.bloch_conjugation_distance),
                DISTANCE_TOL)
    suite.check('bloch-flip', bloch('flip', oracles.bloch_flip_distance),
                DISTANCE_TOL)
    suite.check('bloch-moyal',
                bloch('moyal', oracles.bloch_truncated_moyal_distance),
                DISTANCE_TOL)
    suite.check('two-two-point', two_two_point, DISTANCE_TOL)
    return suite.checks


def transport_suite(options, rng, samples):
    suite = _Suite('transport')
    instances = []
    for _ in range(samples):
        space = sampling.random_metric(rng, int(rng.integers(2, 9)))
        instances.append((space, sampling.random_probability(rng, space.size),
                          sampling.random_probability(rng, space.size,
                                                      sparse=True)))

    def agreement():
        pairs = []
        for space, p, q in instances:
            value = spectral_distance(finite_metric_triple(space),
                                      state_from_simplex(p),
                                      state_from_simplex(q), options)
            pairs.append((value.value, kantorovich(space.g, p, q).value))
        return _worst(pairs)

    def duality_gap():
        return max(abs(kantorovich(space.g, p, q).gap)
                   for space, p, q in instances)

    def plan_marginals():
        worst = 0.0
        for space, p, q in instances:
            plan = kantorovich(space.g, p, q)
            worst = max(worst,
                        np.max(np.abs(plan.plan.sum(axis=1) - 1.0)),
                        np.max(np.abs(p @ plan.plan - q)))
        return worst

    def chebyshev():
        g = np.ones((3, 3)) - np.eye(3)
        return abs(kantorovich(g, [1.0, 0.0, 0.0], [1 / 3.0] * 3).value -
                   2 / 3.0)

    suite.check('lp-vs-spectral', agreement, DISTANCE_TOL)
    suite.check('duality-gap', duality_gap, 1e-9)
    suite.check('plan-marginals', plan_marginals, 1e-10)
    suite.check('unit-metric', chebyshev, 1e-12)
    return suite.checks


def _pythagoras_ratio_excursion(reports):
    worst = 0.0
    for report in reports:
        if report.verdict == VIOLATION:
            worst = max(worst, abs(report.ratio - 1.0))
    return worst


def pythagoras_suite(options, rng, samples, triples=SANDWICH_TRIPLES,
                     pairs=SANDWICH_PAIRS, grid_points=GRID_POINTS,
                     metric_products=METRIC_PRODUCTS,
                     max_metric_size=METRIC_MAX_SIZE):
    """
    Product bounds on ``triples`` random factor pairs with ``pairs``
    product states each, equality on a ``grid_points`` x ``grid_points``
    grid of two-point product states (every unordered pair) and on every
    pure pair of ``metric_products`` random metric products with at most
    ``max_metric_size`` points per factor.
    """
    suite = _Suite('pythagoras')

    def sandwich():
        reports = []
        for _ in range(triples):
            left, right = sampling.random_factor_pair(rng)
            structure = product_triple(left, right)
            for _ in range(pairs):
                phi = product_state(sampling.random_state(rng, left),
                                    sampling.random_state(rng, right))
                psi = product_state(sampling.random_state(rng, left),
                                    sampling.random_state(rng, right))
                reports.append(pythagoras.pythagoras_check(
                    structure, phi, psi, options, raise_on_violation=False))
        return _pythagoras_ratio_excursion(reports)

    def two_point_grid():
        structure = product_triple(two_point_triple(0.5),
                                   two_point_triple(0.5))
        grid = np.linspace(-0.5, 0.5, grid_points)
        worst = 0.0
        states = [product_state(two_point_state(0.5, a),
                                two_point_state(0.5, b))
                  for a, b in itertools.product(grid, grid)]
        for phi, psi in itertools.combinations(states, 2):
            report = pythagoras.pythagoras_check(structure, phi, psi, options,
                                                 raise_on_violation=False)
            worst = max(worst, abs(report.ratio - 1.0))
        return worst

    def metric_product():
        worst = 0.0
        for _ in range(metric_products):
            n1, n2 = (int(n) for n in rng.integers(2, max_metric_size + 1,
                                                   size=2))
            structure = product_triple(
                finite_metric_triple(sampling.random_metric(rng, n1)),
                finite_metric_triple(sampling.random_metric(rng, n2)))
            pure = [product_state(state_from_simplex(np.eye(n1)[i]),
                                  state_from_simplex(np.eye(n2)[j]))
                    for i in range(n1) for j in range(n2)]
            for phi, psi in itertools.combinations(pure, 2):
                report = pythagoras.pythagoras_check(
                    structure, phi, psi, options, raise_on_violation=False)
                worst = max(worst, abs(report.ratio - 1.0))
        return worst

    def k_witness():
        structure = product_triple(two_point_triple(0.5),
                                   two_point_triple(0.5))
        up = state_from_simplex([1.0, 0.0])
        idem = pythagoras.build_P(structure, up, up)
        estimate = pythagoras.idempotent_norm_K(structure, idem, samples=20,
                                                rng=rng)
        return abs(estimate.witness - 3.0)

    def k_range():
        smallest, largest = math.inf, 0.0
        for _ in range(max(1, samples // 4)):
            left, right = sampling.random_factor_pair(rng, max_dim=3)
            structure = product_triple(left, right)
            if not (left.unital and right.unital):
                continue
            idem = pythagoras.build_P(structure,
                                      sampling.random_state(rng, left),
                                      sampling.random_state(rng, right))
            estimate = pythagoras.idempotent_norm_K(structure, idem,
                                                    samples=20, rng=rng)
            smallest = min(smallest, estimate.value)
            largest = max(largest, estimate.value)
        logger.info('K estimates between %r and %r', smallest, largest)
        if math.isinf(smallest):
            return 0.0
        return max(0.0, 1.0 - smallest, largest - 3.0)

    suite.check('sandwich', sandwich, 0.0,
                'largest ratio excursion outside [1, sqrt(2)]')
    suite.check('two-point-grid', two_point_grid, DISTANCE_TOL)
    suite.check('metric-product', metric_product, DISTANCE_TOL)
    suite.check('k-witness', k_witness, 1e-9)
    suite.check('k-range', k_range, 1e-9)
    return suite.checks


def duality_suite(options, rng, samples):
    suite = _Suite('duality')
    triple = matrix_algebra_triple(sampling.random_hermitian(rng, 4), 2,
                                   label='connected')

    def connectedness():
        return abs(len(commutant_directions(triple)) - 1)

    def agreement():
        pairs = []
        for _ in range(samples):
            phi = sampling.random_state(rng, triple)
            psi = sampling.random_state(rng, triple)
            primal = spectral_distance(triple, phi, psi, options).value
            dual = spectral_distance_dual(triple, phi, psi, options).value
            pairs.append((dual, primal))
        return _worst(pairs)

    def separation():
        flat = diagonal_triple(np.zeros((2, 2)), label='D=0')
        phi = state_from_simplex([0.7, 0.3])
        psi = state_from_simplex([0.2, 0.8])
        misses = 0
        for result in (spectral_distance(flat, phi, psi, options),
                       spectral_distance_dual(flat, phi, psi, options)):
            misses += 0 if math.isinf(result.value) else 1
        connected = spectral_distance(triple, sampling.random_state(
            rng, triple), sampling.random_state(rng, triple), options)
        misses += 0 if connected.is_finite else 1
        return misses

    suite.check('connectedness', connectedness, 0)
    suite.check('primal-vs-dual', agreement, DISTANCE_TOL)
    suite.check('infinite-detection', separation, 0)
    return suite.checks


def identities_suite(options, rng, samples):
    suite = _Suite('identities')

    def lemma_norm():
        worst = 0.0
        for _ in range(samples):
            left, right = sampling.random_factor_pair(rng)
            structure = product_triple(left, right)
            if not (left.unital and right.unital):
                continue
            check = pythagoras.lemma_norm_identity(
                structure, rng.normal(size=left.algebra_dim),
                rng.normal(size=right.algebra_dim))
            worst = max(worst, check.residual / max(1.0, check.rhs))
        return worst

    def lipnorm():
        structure = product_triple(two_point_triple(0.5),
                                   two_point_triple(0.5))
        worst = 0.0
        for _ in range(samples * 5):
            x = rng.normal(size=3)
            phi1, psi2 = rng.uniform(-1.0, 1.0, size=2)
            element = oracles.two_two_point_element(x, phi1, psi2)
            worst = max(worst, abs(
                structure.combined.lipschitz_norm(element) -
                oracles.two_two_point_lipnorm(x[0], x[1], x[2], phi1, psi2)))
        return worst

    def peres():
        bell = state_from_vector([1.0, 0.0, 0.0, 1.0], label='bell')
        transposed = peres_partial_transpose(bell, (2, 2))
        return abs(np.min(np.linalg.eigvalsh(transposed)) + 0.5)

    def purification():
        worst = 0.0
        for _ in range(samples * 5):
            v, x = sampling.haar_pure_qubit(rng)
            w, y = sampling.haar_pure_qubit(rng)
            worst = max(worst, abs(oracles.purified_distance_pure(v, w) -
                                   np.linalg.norm(x - y) / 2.0))
        return worst

    def scaling():
        triple = finite_metric_triple(sampling.random_metric(rng, 4))
        phi = State(np.diag(sampling.random_probability(rng, 4)))
        psi = State(np.diag(sampling.random_probability(rng, 4)))
        base = spectral_distance(triple, phi, psi, options).value
        pairs = [(spectral_distance(scale_dirac(triple, t), phi, psi,
                                    options).value * t, base)
                 for t in (0.5, 2.0)]
        return _worst(pairs)

    suite.check('lemma-norm', lemma_norm, 1e-9)
    suite.check('lipnorm-closed-form', lipnorm, 1e-10)
    suite.check('peres-bell', peres, 1e-12)
    suite.check('purified-pure', purification, 1e-12)
    suite.check('dirac-scaling', scaling, 1e-5)
    return suite.checks


def berezin_suite(options, rng, samples):
    suite = _Suite('berezin')
    maps = berezin.BerezinMaps()
    size = maps.quadrature.size

    def unit():
        identity = berezin.quantize(maps, np.ones(size))
        return np.max(np.abs(identity - np.eye(2)))

    def adjointness():
        worst = 0.0
        for _ in range(samples):
            a = sampling.random_hermitian(rng, 2) + 1j * \
                sampling.random_hermitian(rng, 2)
            f = rng.normal(size=size) + 1j * rng.normal(size=size)
            worst = max(worst, berezin.adjointness_residual(maps, a, f))
        return worst

    points = [(sampling.random_bloch(rng, pure=True),
               sampling.random_bloch(rng, pure=True))
              for _ in range(max(2, samples))]

    def proportionality():
        ratios = [berezin.cost_distance(maps, state_from_bloch(x),
                                        state_from_bloch(y)) /
                  np.linalg.norm(x - y) for x, y in points]
        logger.info('cost distance over Euclidean distance: mean %r',
                    float(np.mean(ratios)))
        return (max(ratios) - min(ratios)) / float(np.mean(ratios))

    def bound():
        excess = 0.0
        for x, y in points[:5]:
            rho, tau = state_from_bloch(x), state_from_bloch(y)
            excess = max(excess, berezin.cost_distance(maps, rho, tau) -
                         berezin.cost_bound(maps, rho, tau))
        return excess

    suite.check('quantize-unit', unit, 5e-3)
    suite.check('adjointness', adjointness, 1e-10)
    suite.check('proportionality', proportionality, 0.03)
    suite.check('cost-bound', bound, 0.0)
    return suite.checks


def surface_suite(options, rng, samples):
    suite = _Suite('surface')

    def saddle():
        return max(abs(z - t * s) + abs(x - t) + abs(y - s)
                   for t, s, x, y, z in surface.sample(9))

    def projection():
        worst = 0.0
        for _ in range(samples * 5):
            report = surface.marginal_projection(
                sampling.random_probability(rng, 4))
            worst = max(worst, report.residual)
        return worst

    suite.check('saddle', saddle, 1e-12)
    suite.check('marginal-projection', projection, 1e-10)
    return suite.checks


SUITES = {
    'oracles': oracles_suite,
    'transport': transport_suite,
    'pythagoras': pythagoras_suite,
    'duality': duality_suite,
    'identities': identities_suite,
    'berezin': berezin_suite,
    'surface': surface_suite,
}
ALL = 'all'


def suite_names():
    return sorted(SUITES) + [ALL]


def run_suite(name, options=None, samples=20):
    """
    Run one suite, or every suite for 'all'. Suites run on
    ``options.workers`` threads, each seeded from ``options.seed``.

    :return: list of :class:`Check` in suite order.
    """
    options = options or SolverOptions()
    if name == ALL:
        names = sorted(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise InvalidArgumentError('unknown suite {0!r}; expected one of '
                                   '{1}'.format(name, ', '.join(
                                       suite_names())))
    order = sorted(SUITES)
    tasks = [(SUITES[n], options, np.random.default_rng(
        [options.seed, order.index(n)]), samples) for n in names]
    results = run_tasks(lambda func, *args: func(*args), tasks,
                        options.workers)
    return [check for checks in results for check in checks]
