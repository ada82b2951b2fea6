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
from hypothesis import given, settings, strategies as st

from specdist.error import InvalidArgumentError
from specdist.sampling import (generator, random_metric, random_probability,
                               random_density, random_even_triple,
                               random_triple, random_state, vertex_states,
                               grid_states, haar_pure_qubit)
from specdist.triples import (DIAGONAL, FULL_MATRIX, bloch_vector,
                              simplex_triple, matrix_algebra_triple,
                              pure_state, two_point_triple, State)

QUBIT = matrix_algebra_triple(np.diag([1.0, -1.0]), 2)


class RandomTest(TestCase):
    @settings(max_examples=20, deadline=None)
    @given(st.integers(min_value=0, max_value=2 ** 31),
           st.integers(min_value=2, max_value=6))
    def test_probability(self, seed, size):
        p = random_probability(generator(seed), size, sparse=True)
        self.assertAlmostEqual(p.sum(), 1.0)
        self.assertTrue(np.all(p >= 0))
        self.assertTrue(np.any(p > 0))

    @settings(max_examples=20, deadline=None)
    @given(st.integers(min_value=0, max_value=2 ** 31))
    def test_density(self, seed):
        rho = random_density(generator(seed), 3, rank=2)
        self.assertAlmostEqual(np.trace(rho).real, 1.0)
        np.testing.assert_allclose(rho, rho.conj().T, atol=1e-12)
        self.assertGreater(np.linalg.eigvalsh(rho).min(), -1e-12)

    def test_metric_components(self):
        space = random_metric(generator(1), 4, components=2)
        self.assertEqual(space.g[0, 1], math.inf)
        self.assertTrue(np.isfinite(space.g[0, 2]))

    def test_seeded(self):
        first = random_metric(generator(5), 5).g
        second = random_metric(generator(5), 5).g
        np.testing.assert_array_equal(first, second)

    def test_triples(self):
        rng = generator(3)
        even = random_even_triple(rng, 2, FULL_MATRIX)
        self.assertTrue(even.is_even)
        self.assertEqual(even.dim, 4)
        odd = random_triple(rng, 3)
        self.assertFalse(odd.is_even)
        self.assertEqual(odd.kind, DIAGONAL)

    def test_state(self):
        rng = generator(0)
        state = random_state(rng, QUBIT, pure=True)
        self.assertAlmostEqual(np.trace(state.rho @ state.rho).real, 1.0)
        state = random_state(rng, simplex_triple())
        self.assertEqual(state.rho.shape, (3, 3))

    def test_haar_qubit(self):
        v, x = haar_pure_qubit(generator(2))
        rho = np.outer(v, v.conj())
        np.testing.assert_allclose(bloch_vector(State(rho)), x, atol=1e-12)


class StateListTest(TestCase):
    def test_vertex_states(self):
        self.assertEqual(len(vertex_states(simplex_triple())), 3)
        self.assertEqual(len(vertex_states(QUBIT)), 6)

    def test_grid_states(self):
        self.assertEqual(len(grid_states(simplex_triple(), 3)), 6)
        self.assertEqual(len(grid_states(QUBIT, 3)), 7)
        self.assertRaises(InvalidArgumentError, grid_states, QUBIT, 1)

    def test_pure_state(self):
        np.testing.assert_allclose(pure_state(two_point_triple(1.0), 1).rho,
                                   np.diag([0.0, 1.0]))
        np.testing.assert_allclose(pure_state(QUBIT, 0).rho,
                                   np.diag([1.0, 0.0]))
        self.assertRaises(InvalidArgumentError, pure_state, QUBIT, 2)
