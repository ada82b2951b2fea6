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

import math
from unittest import TestCase

import mock
import numpy as np

from specdist.definitions import DistanceResult, EQUALITY, VIOLATION
from specdist.error import InvalidArgumentError, PythagorasViolation
from specdist.options import SolverOptions
from specdist.pythagoras import (product_metric, pythagoras_check,
                                 k_bounded_ratio, build_P,
                                 check_contraction, idempotent_norm_K,
                                 d_times, sum_subalgebra_rows,
                                 lemma_norm_identity, horizontal_check,
                                 null_conditions, block_reduction_bound,
                                 factor_distances, DIRECT)
from specdist.triples import (two_point_triple, two_point_state,
                              finite_metric_triple, product_triple,
                              product_state, pure_state, state_from_simplex)

OPTIONS = SolverOptions(tol=1e-7)


def two_by_two(lam=0.5, mu=0.5):
    return product_triple(two_point_triple(lam), two_point_triple(mu))


class ProductMetricTest(TestCase):
    def test_euclidean(self):
        self.assertEqual(product_metric(3.0, 4.0), 5.0)

    def test_variants(self):
        self.assertEqual(product_metric(3.0, 4.0, p=1), 7.0)
        self.assertEqual(product_metric(3.0, 4.0, p=math.inf), 4.0)

    def test_infinite_absorbs(self):
        self.assertEqual(product_metric(math.inf, 0.0), math.inf)

    def test_invalid(self):
        self.assertRaises(InvalidArgumentError, product_metric, -1.0, 1.0)
        self.assertRaises(InvalidArgumentError, product_metric, 1.0, 1.0,
                          0.5)


class PythagorasCheckTest(TestCase):
    def test_two_point_pure_states(self):
        structure = two_by_two()
        up, down = two_point_state(0.5, 0.5), two_point_state(0.5, -0.5)
        report = pythagoras_check(structure, product_state(up, up),
                                  product_state(down, down), OPTIONS)
        self.assertAlmostEqual(report.d1, 1.0, places=5)
        self.assertAlmostEqual(report.d2, 1.0, places=5)
        self.assertAlmostEqual(report.d_spectral, math.sqrt(2), places=5)
        self.assertEqual(report.verdict, EQUALITY)
        self.assertTrue(report.product_states)
        row = report.as_row()
        self.assertEqual(row['verdict'], EQUALITY)
        self.assertEqual(row['left'], 'two-point(0.5)')

    def test_metric_product_pure_states(self):
        g = [[0.0, 1.0, 2.0], [1.0, 0.0, 1.5], [2.0, 1.5, 0.0]]
        metric = finite_metric_triple(g)
        structure = product_triple(metric, two_point_triple(0.5))
        right = structure.right
        report = pythagoras_check(
            structure,
            product_state(pure_state(metric, 0), pure_state(right, 0)),
            product_state(pure_state(metric, 2), pure_state(right, 1)),
            OPTIONS)
        self.assertAlmostEqual(report.d_product, math.hypot(2.0, 1.0),
                               places=5)
        self.assertEqual(report.verdict, EQUALITY)

    def test_ratio_within_bounds_for_mixed_products(self):
        structure = two_by_two()
        phi = product_state(two_point_state(0.5, 0.3),
                            two_point_state(0.5, -0.1))
        psi = product_state(two_point_state(0.5, -0.2),
                            two_point_state(0.5, 0.4))
        report = pythagoras_check(structure, phi, psi, OPTIONS)
        self.assertGreaterEqual(report.ratio, 1.0 - 1e-4)
        self.assertLessEqual(report.ratio, math.sqrt(2) + 1e-4)

    def test_symmetric_in_states(self):
        structure = two_by_two()
        phi = product_state(two_point_state(0.5, 0.3),
                            two_point_state(0.5, -0.1))
        psi = product_state(two_point_state(0.5, -0.2),
                            two_point_state(0.5, 0.4))
        forward = pythagoras_check(structure, phi, psi, OPTIONS)
        backward = pythagoras_check(structure, psi, phi, OPTIONS)
        self.assertAlmostEqual(forward.d_spectral, backward.d_spectral,
                               places=5)
        self.assertAlmostEqual(forward.ratio, backward.ratio, places=4)

    def test_violation(self):
        structure = two_by_two()
        phi = product_state(two_point_state(0.5, 0.5),
                            two_point_state(0.5, 0.5))
        psi = product_state(two_point_state(0.5, -0.5),
                            two_point_state(0.5, -0.5))
        results = [DistanceResult(1.0), DistanceResult(1.0),
                   DistanceResult(0.5)]
        with mock.patch('specdist.pythagoras.spectral_distance',
                        side_effect=list(results)):
            with self.assertRaises(PythagorasViolation) as context:
                pythagoras_check(structure, phi, psi)
        self.assertEqual(context.exception.report.verdict, VIOLATION)
        with mock.patch('specdist.pythagoras.spectral_distance',
                        side_effect=list(results)):
            report = pythagoras_check(structure, phi, psi,
                                      raise_on_violation=False)
        self.assertAlmostEqual(report.ratio, 0.5 / math.sqrt(2))

    def test_k_bounded_ratio(self):
        structure = two_by_two()
        phi = product_state(two_point_state(0.5, 0.5),
                            two_point_state(0.5, 0.5))
        psi = product_state(two_point_state(0.5, -0.5),
                            two_point_state(0.5, 0.5))
        report = pythagoras_check(structure, phi, psi, OPTIONS)
        self.assertTrue(k_bounded_ratio(report, 1.0))


class DTimesTest(TestCase):
    def test_direct_matches_marginal(self):
        structure = two_by_two(0.5, 1.0)
        phi = product_state(two_point_state(0.5, 0.5),
                            two_point_state(1.0, 0.2))
        psi = product_state(two_point_state(0.5, -0.1),
                            two_point_state(1.0, -1.0))
        marginal = d_times(structure, phi, psi, OPTIONS)
        direct = d_times(structure, phi, psi, OPTIONS, mode=DIRECT)
        self.assertAlmostEqual(marginal, math.hypot(0.6, 1.2), places=5)
        self.assertAlmostEqual(direct, marginal, places=4)

    def test_unknown_mode(self):
        structure = two_by_two()
        phi = product_state(two_point_state(0.5, 0.5),
                            two_point_state(0.5, 0.5))
        self.assertRaises(InvalidArgumentError, d_times, structure, phi,
                          phi, mode='sideways')

    def test_sum_subalgebra_dimension(self):
        self.assertEqual(sum_subalgebra_rows(two_by_two()).shape, (3, 4))

    def test_factor_distances(self):
        structure = two_by_two()
        phi = product_state(two_point_state(0.5, 0.5),
                            two_point_state(0.5, 0.0))
        psi = product_state(two_point_state(0.5, 0.0),
                            two_point_state(0.5, 0.0))
        d1, d2 = factor_distances(structure, phi, psi, OPTIONS)
        self.assertAlmostEqual(d1, 0.5, places=5)
        self.assertAlmostEqual(d2, 0.0)


class IdempotentTest(TestCase):
    def setUp(self):
        self.structure = two_by_two()
        self.phi1 = state_from_simplex([0.8, 0.2])
        self.psi2 = state_from_simplex([0.3, 0.7])
        self.idem = build_P(self.structure, self.phi1, self.psi2)

    def test_idempotent(self):
        self.assertLess(self.idem.idempotency_residual, 1e-12)
        self.assertEqual(self.idem.rank, 3)

    def test_fixes_sum_subalgebra(self):
        a = (self.structure.embed_left([0.3, -1.0]) +
             self.structure.embed_right([2.0, 0.5]))
        np.testing.assert_allclose(self.idem(a), a, atol=1e-12)

    def test_kernel_vector(self):
        one, gamma = np.array([1.0, 1.0]), np.array([1.0, -1.0])
        phi1_gamma, psi2_gamma = 0.6, -0.4
        v = np.kron(phi1_gamma * one - gamma, psi2_gamma * one - gamma)
        np.testing.assert_allclose(self.idem(v), np.zeros(4), atol=1e-12)
        kernel = self.idem.kernel()
        self.assertEqual(kernel.shape, (1, 4))
        cosine = abs(kernel[0] @ v) / np.linalg.norm(v)
        self.assertAlmostEqual(cosine, 1.0)

    def test_contraction_on_sum_subalgebra(self):
        elements = [self.structure.embed_left([1.0, 0.0]),
                    self.structure.embed_right([0.0, 2.0])]
        report = check_contraction(self.structure, self.idem, samples=0,
                                   elements=elements)
        self.assertEqual(report.samples, 2)
        self.assertEqual(report.violations, 0)
        self.assertEqual(report.fraction, 0.0)

    def test_norm_witness(self):
        up = state_from_simplex([1.0, 0.0])
        idem = build_P(self.structure, up, up)
        estimate = idempotent_norm_K(self.structure, idem, samples=20,
                                     rng=np.random.default_rng(1))
        self.assertAlmostEqual(estimate.witness, 3.0)
        self.assertGreaterEqual(estimate.value, 3.0)
        self.assertEqual(estimate.samples, 20)


class IdentitiesTest(TestCase):
    def test_lemma_norm_identity(self):
        structure = two_by_two(0.5, 2.0)
        rng = np.random.default_rng(7)
        for _ in range(5):
            check = lemma_norm_identity(structure, rng.normal(size=2),
                                        rng.normal(size=2))
            self.assertLess(check.residual, 1e-10)

    def test_horizontal(self):
        structure = two_by_two()
        check = horizontal_check(structure, two_point_state(0.5, 0.5),
                                 two_point_state(0.5, -0.3),
                                 two_point_state(0.5, 0.1), OPTIONS)
        self.assertAlmostEqual(check.lhs, 0.8, places=5)
        self.assertLess(check.residual, 1e-5)

    def test_null_conditions_for_traces(self):
        structure = two_by_two()
        residuals = null_conditions(structure, np.eye(2) / 2,
                                    np.eye(2) / 2)
        self.assertEqual(set(residuals), {'null_a', 'null_b', 'rho1_gamma1',
                                          'rho2_dirac2', 'rho2_gamma2'})
        for value in residuals.values():
            self.assertLess(value, 1e-12)

    def test_null_conditions_detect_pure_state(self):
        structure = two_by_two()
        residuals = null_conditions(structure, np.eye(2) / 2,
                                    np.diag([1.0, 0.0]))
        self.assertGreater(residuals['rho2_dirac2'], 0.1)

    def test_block_reduction(self):
        g = [[0.0, 1.0, 2.0], [1.0, 0.0, 1.0], [2.0, 1.0, 0.0]]
        structure = product_triple(finite_metric_triple(g),
                                   two_point_triple(0.5))
        report = block_reduction_bound(structure, 0, 2,
                                       two_point_state(0.5, 0.5),
                                       two_point_state(0.5, -0.5), OPTIONS)
        self.assertTrue(report.holds)
        self.assertAlmostEqual(report.d_block, math.sqrt(5.0), places=4)

    def test_block_reduction_needs_metric(self):
        structure = two_by_two()
        up = two_point_state(0.5, 0.5)
        self.assertRaises(InvalidArgumentError, block_reduction_bound,
                          structure, 0, 1, up, up)
