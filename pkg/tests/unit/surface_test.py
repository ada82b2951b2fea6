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

from unittest import TestCase

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from specdist.error import (InvalidArgumentError, InvalidStateError,
                            NotProbability)
from specdist.surface import (VERTICES, COLUMNS, tetrahedron_map,
                              parametrize, product_marginal,
                              marginal_projection, sample, vertex_rows)

unit = st.floats(min_value=-1.0, max_value=1.0)


class TetrahedronTest(TestCase):
    def test_vertices(self):
        for k in range(4):
            np.testing.assert_allclose(tetrahedron_map(np.eye(4)[k]),
                                       VERTICES[k])

    def test_barycenter(self):
        np.testing.assert_allclose(tetrahedron_map(np.full(4, 0.25)),
                                   np.zeros(3))

    def test_invalid_point(self):
        self.assertRaises(InvalidStateError, tetrahedron_map, [1.0, 0.0])
        self.assertRaises(NotProbability, tetrahedron_map,
                          [0.5, 0.5, 0.5, -0.5])


class ParametrizeTest(TestCase):
    def test_corners(self):
        np.testing.assert_allclose(parametrize(1.0, 1.0), [1, 0, 0, 0])
        np.testing.assert_allclose(tetrahedron_map(parametrize(1.0, -1.0)),
                                   [1.0, -1.0, -1.0])

    def test_out_of_range(self):
        self.assertRaises(InvalidArgumentError, parametrize, 1.5, 0.0)

    @settings(max_examples=50, deadline=None)
    @given(unit, unit)
    def test_saddle(self, t, s):
        x, y, z = tetrahedron_map(parametrize(t, s))
        self.assertAlmostEqual(x, t)
        self.assertAlmostEqual(y, s)
        self.assertAlmostEqual(z, t * s)


class MarginalProjectionTest(TestCase):
    def test_correlated_state(self):
        report = marginal_projection([0.5, 0.0, 0.0, 0.5])
        np.testing.assert_allclose(report.point, [0.0, 0.0, 1.0])
        np.testing.assert_allclose(report.projected, [0.0, 0.0, 0.0])
        self.assertEqual(report.residual, 0.0)

    def test_product_state_fixed(self):
        p = parametrize(0.3, -0.6)
        np.testing.assert_allclose(product_marginal(p), p)
        report = marginal_projection(p)
        np.testing.assert_allclose(report.point, report.projected)

    @settings(max_examples=30, deadline=None)
    @given(st.lists(st.floats(min_value=0.01, max_value=1.0), min_size=4,
                    max_size=4))
    def test_vertical(self, weights):
        p = np.array(weights) / np.sum(weights)
        report = marginal_projection(p)
        self.assertLess(report.residual, 1e-10)
        x, y, z = report.projected
        self.assertAlmostEqual(z, x * y)


class SampleTest(TestCase):
    def test_grid(self):
        rows = sample(3)
        self.assertEqual(len(rows), 9)
        self.assertEqual(len(rows[0]), len(COLUMNS))
        self.assertIn((0.0, 0.0, 0.0, 0.0, 0.0), rows)

    def test_resolution(self):
        self.assertRaises(InvalidArgumentError, sample, 1)

    def test_vertex_rows(self):
        rows = vertex_rows()
        self.assertEqual(rows[0], (1.0, 1.0, 1.0, 1.0, 1.0))
        self.assertEqual(rows[1], (1.0, -1.0, 1.0, -1.0, -1.0))
