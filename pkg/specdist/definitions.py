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
specdist.definitions
~~~~~~~~~~~~~~~~~~~~

This module contains the primary objects returned by the solvers and
checks in this library.

:copyright: (c) 2026 by the spectral-distance authors.
:license: Apache 2.0, see LICENSE for more details.

"""

import math

EQUALITY = 'equality'
STRICT = 'strict'
VIOLATION = 'violation'


class DistanceResult(object):
    """
    A spectral distance together with its certificate.

    :param value: Distance, a non-negative float or ``math.inf``.
    :param optimizer: Coefficients (on the triple's algebra basis) of the
       element achieving ``value`` for the primal method, or of the
       minimizing ``b`` for the dual method. None if the value is infinite.
    :param gap: Difference between the certified upper and lower bounds.
    :param iterations: Total solver iterations.
    :param method: 'primal' or 'dual'.
    :param separating: For infinite values, coefficients of the
       commutant direction separating the two states.
    """

    def __init__(self, value, optimizer=None, gap=0.0, iterations=0,
                 method='primal', separating=None):
        self.value = value
        self.optimizer = optimizer
        self.gap = gap
        self.iterations = iterations
        self.method = method
        self.separating = separating

    @property
    def is_finite(self):
        return not math.isinf(self.value)

    @property
    def upper_bound(self):
        return self.value + self.gap

    def __str__(self):
        return ('<DistanceResult: value: {0} gap: {1} iterations: {2} '
                'method: {3}>').format(self.value, self.gap,
                                        self.iterations, self.method)


class TransportPlan(object):
    """
    Optimal transport plan in stochastic form.

    :param plan: N x N row-stochastic matrix, p_ij is the fraction of the
       mass at i moved to j. Rows of zero mass are uniform.
    :param value: Total transport cost.
    :param dual_a: Potential on the source points.
    :param dual_b: Potential on the target points, a_i + b_j <= c_ij.
    :param coupling: The joint coupling phi_i p_ij.
    :param gap: Primal cost minus dual objective.
    """

    def __init__(self, plan, value, dual_a, dual_b, coupling, gap):
        self.plan = plan
        self.value = value
        self.dual_a = dual_a
        self.dual_b = dual_b
        self.coupling = coupling
        self.gap = gap

    def __str__(self):
        return '<TransportPlan: value: {0} gap: {1} size: {2}>'.format(
            self.value, self.gap, self.plan.shape[0])


class PythagorasReport(object):
    """
    Comparison of a spectral distance on a product triple with the
    product metric of the factor distances of the marginals.

    :param d1: Distance of the first marginals.
    :param d2: Distance of the second marginals.
    :param d_product: sqrt(d1^2 + d2^2).
    :param d_spectral: Distance on the product triple.
    :param ratio: d_spectral / d_product.
    :param verdict: One of 'equality', 'strict', 'violation'.
    :param tolerance: Band used for the verdict.
    :param product_states: Whether both states were product states, in
       which case the upper bound sqrt(2) was checked too.
    :param labels: (left label, right label).
    :param descriptors: (phi descriptor, psi descriptor).
    """

    def __init__(self, d1, d2, d_product, d_spectral, ratio, verdict,
                 tolerance, product_states=True, labels=('', ''),
                 descriptors=('', '')):
        self.d1 = d1
        self.d2 = d2
        self.d_product = d_product
        self.d_spectral = d_spectral
        self.ratio = ratio
        self.verdict = verdict
        self.tolerance = tolerance
        self.product_states = product_states
        self.labels = labels
        self.descriptors = descriptors

    def as_row(self):
        return {
            'left': self.labels[0],
            'right': self.labels[1],
            'phi': self.descriptors[0],
            'psi': self.descriptors[1],
            'd1': self.d1,
            'd2': self.d2,
            'd_product': self.d_product,
            'd_spectral': self.d_spectral,
            'ratio': self.ratio,
            'verdict': self.verdict,
        }

    def __str__(self):
        return ('<PythagorasReport: d1: {0} d2: {1} d_product: {2} '
                'd_spectral: {3} ratio: {4} verdict: {5}>').format(
                    self.d1, self.d2, self.d_product, self.d_spectral,
                    self.ratio, self.verdict)


class ContractionReport(object):
    """
    Outcome of sampling ||[D, P(a)]|| <= ||[D, a]||.
    """

    def __init__(self, samples, violations, worst_excess):
        self.samples = samples
        self.violations = violations
        self.worst_excess = worst_excess

    @property
    def fraction(self):
        return self.violations / float(self.samples) if self.samples else 0.0

    def __str__(self):
        return ('<ContractionReport: samples: {0} violations: {1} '
                'worst_excess: {2}>').format(self.samples, self.violations,
                                             self.worst_excess)


class KEstimate(object):
    """
    Sampled lower bound of the operator norm of an idempotent.

    :param value: max(witness, sampled) estimate.
    :param witness: Ratio reached by the grading witness, None if the
       factors carry no grading.
    :param samples: Number of random operators tried.
    """

    def __init__(self, value, witness, samples):
        self.value = value
        self.witness = witness
        self.samples = samples

    def __str__(self):
        return '<KEstimate: value: {0} witness: {1} samples: {2}>'.format(
            self.value, self.witness, self.samples)


class BlockReduction(object):
    """
    Distance on a full product against the distance on one of its
    two-point blocks.
    """

    def __init__(self, r, s, d_full, d_block, tol):
        self.r = r
        self.s = s
        self.d_full = d_full
        self.d_block = d_block
        self.tol = tol

    @property
    def holds(self):
        return self.d_full <= self.d_block + self.tol * max(1.0, self.d_block)

    def __str__(self):
        return ('<BlockReduction: block: ({0}, {1}) d_full: {2} '
                'd_block: {3}>').format(self.r, self.s, self.d_full,
                                        self.d_block)


class IdentityCheck(object):
    """
    Two sides of a numerical identity.
    """

    def __init__(self, name, lhs, rhs):
        self.name = name
        self.lhs = lhs
        self.rhs = rhs

    @property
    def residual(self):
        if math.isinf(self.lhs) and math.isinf(self.rhs):
            return 0.0
        return abs(self.lhs - self.rhs)

    def __str__(self):
        return '<IdentityCheck: {0}: lhs: {1} rhs: {2}>'.format(
            self.name, self.lhs, self.rhs)
