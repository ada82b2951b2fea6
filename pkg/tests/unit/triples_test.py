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

from specdist.engine import spectral_distance
from specdist.error import (InvalidTripleError, MissingGrading, AlreadyEven,
                            InvalidStateError, DimensionMismatch,
                            InvalidArgumentError, NonUnital, OutOfBall,
                            NotProbability)
from specdist.options import SolverOptions
from specdist.sampling import (generator, random_density, random_hermitian,
                               random_probability)
from specdist.triples import (FiniteSpectralTriple, MetricSpace, State,
                              FLIP, GAMMA, DIAGONAL, FULL_MATRIX,
                              HILBERT_SPACE, two_point_triple,
                              two_point_state, trivial_triple,
                              finite_metric_triple, simplex_triple,
                              bloch_triples, hermitian_matrix_basis,
                              matrix_algebra_triple, diagonal_triple,
                              product_triple, evenize, scale_dirac,
                              marginals, peres_partial_transpose,
                              product_state, is_product_state,
                              state_from_bloch, state_from_simplex,
                              state_from_vector, bloch_vector,
                              simplex_point, pure_state,
                              hilbert_schmidt_inner)

OPTIONS = SolverOptions(tol=1e-7)


class TripleValidation(TestCase):
    def test_grading_must_anticommute(self):
        self.assertRaises(InvalidTripleError, FiniteSpectralTriple,
                          FLIP, [np.eye(2)], grading=np.eye(2))

    def test_grading_must_commute_with_algebra(self):
        self.assertRaises(InvalidTripleError, FiniteSpectralTriple,
                          GAMMA, [np.eye(2), GAMMA], grading=FLIP)

    def test_dependent_basis(self):
        self.assertRaises(InvalidTripleError, FiniteSpectralTriple,
                          FLIP, [np.eye(2), 2 * np.eye(2)])

    def test_grading_shape(self):
        self.assertRaises(DimensionMismatch, FiniteSpectralTriple,
                          FLIP, [np.eye(2)], grading=np.eye(3))

    def test_unital_detection(self):
        self.assertTrue(two_point_triple(0.5).unital)
        flip = bloch_triples()['flip']
        self.assertFalse(flip.unital)
        self.assertRaises(NonUnital, flip.identity_coefficients)

    def test_unital_request_checked(self):
        self.assertRaises(InvalidTripleError, FiniteSpectralTriple,
                          FLIP, [np.diag([1.0, 0.0])], unital=True)


class TwoPointTest(TestCase):
    def test_structure(self):
        triple = two_point_triple(0.25)
        self.assertTrue(triple.is_even)
        self.assertEqual(triple.kind, DIAGONAL)
        np.testing.assert_allclose(triple.dirac, FLIP * 2.0)

    def test_lipschitz_norm(self):
        triple = two_point_triple(0.5)
        # a = diag(1, 0): ||[F, a]|| = 1.
        self.assertAlmostEqual(triple.lipschitz_norm([1.0, 0.0]), 1.0)
        self.assertAlmostEqual(triple.lipschitz_norm([1.0, 1.0]), 0.0)

    def test_state_coordinate(self):
        np.testing.assert_allclose(two_point_state(0.5, 0.5).rho,
                                   np.diag([1.0, 0.0]))
        np.testing.assert_allclose(two_point_state(1.0, 0.0).rho,
                                   np.eye(2) / 2)
        self.assertRaises(InvalidStateError, two_point_state, 0.5, 0.6)

    def test_invalid_length(self):
        self.assertRaises(InvalidArgumentError, two_point_triple, 0.0)


class MetricTripleTest(TestCase):
    def test_block_per_ordered_pair(self):
        triple = finite_metric_triple([[0.0, 1.0, 2.0], [1.0, 0.0, 1.0],
                                       [2.0, 1.0, 0.0]])
        self.assertEqual(len(triple.blocks), 6)
        self.assertEqual(triple.dim, 12)
        self.assertEqual(triple.algebra_dim, 3)
        self.assertTrue(triple.unital)
        self.assertIsInstance(triple.metric, MetricSpace)

    def test_single_point(self):
        triple = finite_metric_triple([[0.0]])
        self.assertEqual(triple.dim, 1)
        self.assertEqual(triple.algebra_dim, 1)

    def test_infinite_entry_gives_zero_block(self):
        triple = finite_metric_triple([[0.0, math.inf], [math.inf, 0.0]])
        self.assertEqual(np.max(np.abs(triple.dirac)), 0.0)


class MatrixTriplesTest(TestCase):
    def test_hermitian_basis_orthonormal(self):
        basis = hermitian_matrix_basis(3)
        self.assertEqual(len(basis), 9)
        gram = np.einsum('iab,jba->ij', basis, basis).real
        np.testing.assert_allclose(gram, np.eye(9), atol=1e-12)

    def test_matrix_algebra_multiplicity(self):
        dirac = np.kron(np.eye(2), FLIP)
        triple = matrix_algebra_triple(dirac, 2)
        self.assertEqual(triple.kind, FULL_MATRIX)
        self.assertEqual(triple.defining_dim, 2)
        self.assertEqual(triple.algebra_dim, 4)

    def test_matrix_algebra_bad_size(self):
        self.assertRaises(DimensionMismatch, matrix_algebra_triple,
                          np.eye(3), 2)

    def test_bloch_triples(self):
        triples = bloch_triples()
        self.assertEqual(set(triples), {'conjugation', 'flip', 'moyal'})
        self.assertTrue(triples['conjugation'].real_linear)
        self.assertTrue(triples['moyal'].is_even)

    def test_simplex_triple(self):
        triple = simplex_triple()
        self.assertTrue(triple.is_even)
        self.assertEqual(triple.defining_dim, 3)

    def test_trivial(self):
        triple = trivial_triple()
        self.assertEqual(triple.dim, 1)
        self.assertTrue(triple.unital)


class ProductTripleTest(TestCase):
    def test_left_must_be_even(self):
        odd = diagonal_triple(FLIP)
        self.assertRaises(MissingGrading, product_triple, odd,
                          two_point_triple(0.5))

    def test_dirac_formula(self):
        left, right = two_point_triple(0.5), two_point_triple(1.0)
        combined = product_triple(left, right).combined
        expected = (np.kron(left.dirac, np.eye(2)) +
                    np.kron(left.grading, right.dirac))
        np.testing.assert_allclose(combined.dirac, expected)
        self.assertTrue(combined.is_even)
        np.testing.assert_allclose(combined.grading,
                                   np.kron(GAMMA, GAMMA))

    def test_embeddings(self):
        structure = product_triple(two_point_triple(0.5),
                                   two_point_triple(0.5))
        np.testing.assert_allclose(structure.embed_left([1.0, 0.0]),
                                   [1.0, 1.0, 0.0, 0.0])
        np.testing.assert_allclose(structure.embed_right([1.0, 0.0]),
                                   [1.0, 0.0, 1.0, 0.0])

    def test_evenize(self):
        odd = diagonal_triple(FLIP)
        even = evenize(odd)
        self.assertTrue(even.is_even)
        self.assertEqual(even.dim, 4)
        self.assertAlmostEqual(even.lipschitz_norm([1.0, 0.0]),
                               odd.lipschitz_norm([1.0, 0.0]))
        self.assertRaises(AlreadyEven, evenize, even)

    def test_evenize_keeps_distances(self):
        rng = generator(2)
        odd = diagonal_triple(random_hermitian(rng, 3))
        even = evenize(odd)
        for _ in range(3):
            phi = state_from_simplex(random_probability(rng, 3))
            psi = state_from_simplex(random_probability(rng, 3))
            self.assertAlmostEqual(
                spectral_distance(even, phi, psi, OPTIONS).value,
                spectral_distance(odd, phi, psi, OPTIONS).value, places=5)

    def test_associative(self):
        factor = two_point_triple(0.5)
        pair = product_triple(factor, factor).combined
        left = product_triple(pair, factor).combined
        right = product_triple(factor, pair).combined
        self.assertEqual(left.dim, 8)
        np.testing.assert_allclose(left.dirac, right.dirac, atol=1e-12)
        np.testing.assert_allclose(left.grading, right.grading, atol=1e-12)
        np.testing.assert_allclose(left.algebra_basis, right.algebra_basis,
                                   atol=1e-12)

    def test_scale_dirac(self):
        triple = scale_dirac(two_point_triple(0.5), 3.0)
        self.assertAlmostEqual(triple.lipschitz_norm([1.0, 0.0]), 3.0)


class StateTest(TestCase):
    def test_exactly_one_payload(self):
        self.assertRaises(InvalidStateError, State)
        self.assertRaises(InvalidStateError, State, np.eye(2) / 2,
                          coeffs=[1.0])

    def test_unknown_space(self):
        self.assertRaises(InvalidArgumentError, State, np.eye(2) / 2,
                          space='nowhere')

    def test_pairing_on_defining_space(self):
        triple = two_point_triple(0.5)
        phi = state_from_simplex([0.25, 0.75])
        np.testing.assert_allclose(phi.pairing(triple), [0.25, 0.75])

    def test_pairing_on_hilbert_space(self):
        triple = two_point_triple(0.5)
        phi = State(np.diag([0.25, 0.75]), space=HILBERT_SPACE)
        np.testing.assert_allclose(phi.pairing(triple), [0.25, 0.75])

    def test_pairing_dimension(self):
        triple = two_point_triple(0.5)
        self.assertRaises(DimensionMismatch,
                          State(coeffs=[1.0, 0.0, 0.0]).pairing, triple)
        self.assertRaises(DimensionMismatch,
                          state_from_simplex([1.0, 0.0, 0.0]).pairing,
                          triple)

    def test_bloch_round_trip(self):
        x = np.array([0.3, -0.4, 0.5])
        np.testing.assert_allclose(bloch_vector(state_from_bloch(x)), x,
                                   atol=1e-12)
        self.assertRaises(OutOfBall, state_from_bloch, [1.0, 1.0, 0.0])

    def test_simplex_point(self):
        p = simplex_point(state_from_simplex([0.2, 0.3, 0.5]))
        np.testing.assert_allclose(p, [0.2, 0.3, 0.5])
        self.assertRaises(NotProbability, state_from_simplex, [0.5, 0.4])

    def test_vector_state(self):
        phi = state_from_vector([1.0, 1.0])
        np.testing.assert_allclose(phi.rho, np.full((2, 2), 0.5))
        self.assertRaises(InvalidStateError, state_from_vector, [0.0, 0.0])

    def test_pure_state(self):
        metric = finite_metric_triple([[0.0, 1.0], [1.0, 0.0]])
        np.testing.assert_allclose(pure_state(metric, 1).rho,
                                   np.diag([0.0, 1.0]))
        matrix = matrix_algebra_triple(FLIP, 2)
        np.testing.assert_allclose(pure_state(matrix, 0).rho,
                                   np.diag([1.0, 0.0]))
        self.assertRaises(InvalidArgumentError, pure_state, metric, 2)


class BipartiteTest(TestCase):
    def test_marginals_of_product(self):
        phi = product_state(state_from_simplex([0.2, 0.8]),
                            state_from_bloch([0.0, 0.0, 0.6]))
        first, second = marginals(phi)
        np.testing.assert_allclose(first.rho, np.diag([0.2, 0.8]))
        np.testing.assert_allclose(second.rho, np.diag([0.8, 0.2]))
        self.assertTrue(is_product_state(phi))

    def test_marginals_convention(self):
        # phi1(a1) = phi(a1 x 1)
        rng = np.random.default_rng(4)
        g = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
        rho = g @ g.conj().T
        phi = State(rho / np.trace(rho).real, factor_dims=(2, 3))
        a1 = np.diag([1.0, -2.0])
        first, _ = marginals(phi)
        self.assertAlmostEqual(np.trace(first.rho @ a1).real,
                               np.trace(phi.rho @ np.kron(a1,
                                                          np.eye(3))).real)

    def test_bell_state_is_entangled(self):
        bell = state_from_vector([1.0, 0.0, 0.0, 1.0])
        self.assertFalse(is_product_state(bell, (2, 2)))
        smallest = np.linalg.eigvalsh(peres_partial_transpose(bell,
                                                              (2, 2)))[0]
        self.assertAlmostEqual(smallest, -0.5)

    def test_separable_mixture_stays_positive(self):
        rng = generator(6)
        weights = random_probability(rng, 3)
        rho = sum(w * np.kron(random_density(rng, 2), random_density(rng, 3))
                  for w in weights)
        transposed = peres_partial_transpose(State(rho, factor_dims=(2, 3)))
        self.assertGreater(np.linalg.eigvalsh(transposed)[0], -1e-12)

    def test_missing_dims(self):
        self.assertRaises(DimensionMismatch, marginals,
                          State(np.eye(4) / 4))

    def test_mixed_payloads(self):
        self.assertRaises(InvalidArgumentError, product_state,
                          State(coeffs=[1.0]), State(np.eye(2) / 2))


class HilbertSchmidtTest(TestCase):
    def test_normalized(self):
        self.assertAlmostEqual(hilbert_schmidt_inner(np.eye(2), np.eye(2)),
                               1.0)
        self.assertAlmostEqual(hilbert_schmidt_inner(FLIP, GAMMA), 0.0)
