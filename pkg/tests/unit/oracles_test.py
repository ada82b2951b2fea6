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

import numpy as np

from specdist.error import (InvalidArgumentError, InvalidStateError,
                            OutOfBall)
from specdist.oracles import (BlochPoint, two_point_distance,
                              chebyshev_distance, simplex3_distance,
                              bloch_conjugation_distance,
                              bloch_flip_distance, truncated_moyal_factor,
                              bloch_truncated_moyal_distance,
                              purified_distance_pure,
                              purified_distance_qubit,
                              two_two_point_element, two_two_point_lipnorm)
from specdist.triples import product_triple, two_point_triple


class BlochPointTest(TestCase):
    def test_state(self):
        point = BlochPoint([0.0, 0.0, 1.0])
        np.testing.assert_allclose(point.state().rho, np.diag([1.0, 0.0]))
        self.assertEqual(point.norm, 1.0)

    def test_out_of_ball(self):
        self.assertRaises(OutOfBall, BlochPoint, [0.9, 0.9, 0.0])

    def test_polar_angle(self):
        up, down = BlochPoint([0, 0, 1]), BlochPoint([0, 0, -1])
        self.assertAlmostEqual(up.polar_angle(down), 0.0)
        self.assertAlmostEqual(down.polar_angle(up), math.pi)
        self.assertAlmostEqual(BlochPoint([1, 0, 0]).polar_angle([0, 0, 0]),
                               math.pi / 2)


class ClosedFormsTest(TestCase):
    def test_two_point(self):
        self.assertEqual(two_point_distance(0.5, 0.5, -0.5), 1.0)
        self.assertRaises(InvalidStateError, two_point_distance, 0.5, 0.7,
                          0.0)

    def test_chebyshev(self):
        self.assertAlmostEqual(chebyshev_distance([1, 0, 0],
                                                  [1 / 3.0] * 3), 2 / 3.0)
        self.assertRaises(InvalidArgumentError, chebyshev_distance,
                          [1, 0], [1, 0, 0])

    def test_simplex3(self):
        self.assertAlmostEqual(simplex3_distance([0.5, 0.5, 0], [0, 0.5, 0.5]),
                               0.5)
        self.assertRaises(InvalidArgumentError, simplex3_distance, [1, 0],
                          [0, 1])

    def test_euclidean_variants(self):
        x, y = [0.0, 0.0, 1.0], [0.0, 0.0, -1.0]
        self.assertEqual(bloch_conjugation_distance(x, y), 2.0)
        self.assertEqual(bloch_flip_distance(x, y), 2.0)

    def test_moyal_factor(self):
        self.assertAlmostEqual(truncated_moyal_factor(math.pi / 2), 1.0)
        self.assertAlmostEqual(truncated_moyal_factor(0.0), 0.5)
        # Continuous at pi/4: sin = 1/(2 cos) = 1/sqrt(2).
        self.assertAlmostEqual(truncated_moyal_factor(math.pi / 4),
                               1 / math.sqrt(2))
        self.assertRaises(InvalidArgumentError, truncated_moyal_factor,
                          4.0)

    def test_moyal_distance(self):
        self.assertAlmostEqual(
            bloch_truncated_moyal_distance([0, 0, 1], [0, 0, -1]), 1.0)
        self.assertAlmostEqual(
            bloch_truncated_moyal_distance([1, 0, 0], [-1, 0, 0]), 2.0)
        self.assertEqual(
            bloch_truncated_moyal_distance([0.1, 0, 0], [0.1, 0, 0]), 0.0)


class PurifiedDistanceTest(TestCase):
    def test_orthogonal(self):
        self.assertAlmostEqual(purified_distance_pure([1, 0], [0, 1]), 1.0)

    def test_phase_invariant(self):
        v = np.array([1.0, 1j]) / math.sqrt(2)
        self.assertAlmostEqual(purified_distance_pure(v, 1j * v), 0.0)

    def test_requires_unit_vectors(self):
        self.assertRaises(InvalidStateError, purified_distance_pure,
                          [2, 0], [0, 1])

    def test_qubit_pure_matches_vectors(self):
        # |0> and |+> have Bloch vectors e3 and e1.
        expected = purified_distance_pure([1, 0],
                                          np.array([1, 1]) / math.sqrt(2))
        self.assertAlmostEqual(purified_distance_qubit([0, 0, 1],
                                                       [1, 0, 0]),
                               expected)

    def test_qubit_mixed_identical(self):
        self.assertAlmostEqual(purified_distance_qubit([0.2, 0.1, 0],
                                                       [0.2, 0.1, 0]), 0.0)


class TwoTwoPointTest(TestCase):
    def test_lipnorm_matches_triple(self):
        rng = np.random.default_rng(6)
        for lam in (0.5, 1.5):
            combined = product_triple(two_point_triple(lam),
                                      two_point_triple(lam)).combined
            for _ in range(5):
                x = rng.normal(size=3)
                phi1, psi2 = rng.uniform(-1, 1, size=2)
                coeffs = two_two_point_element(x, phi1, psi2)
                self.assertAlmostEqual(
                    combined.lipschitz_norm(coeffs),
                    two_two_point_lipnorm(x[0], x[1], x[2], phi1, psi2,
                                          lam=lam))

    def test_constant_term_invisible(self):
        combined = product_triple(two_point_triple(0.5),
                                  two_point_triple(0.5)).combined
        with_shift = two_two_point_element((1.0, 0.5, 0.2), 0.3, -0.3,
                                           x0=4.0)
        without = two_two_point_element((1.0, 0.5, 0.2), 0.3, -0.3)
        self.assertAlmostEqual(combined.lipschitz_norm(with_shift),
                               combined.lipschitz_norm(without))

    def test_state_values_checked(self):
        self.assertRaises(InvalidStateError, two_two_point_element,
                          (1, 0, 0), 1.5, 0.0)
