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
specdist - Connes spectral distances on finite spectral triples
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

   >>> from specdist import two_point_triple, two_point_state
   >>> from specdist import spectral_distance
   >>> triple = two_point_triple(0.5)
   >>> phi, psi = two_point_state(0.5, 0.5), two_point_state(0.5, -0.5)
   >>> round(spectral_distance(triple, phi, psi).value, 6)
   1.0

:copyright: (c) 2026 by the spectral-distance authors.
:license: Apache 2.0, see LICENSE for more details.
"""

__title__ = 'spectral-distance'
__author__ = 'The spectral-distance authors'
__version__ = '0.1.0'
__license__ = 'Apache 2.0'
__copyright__ = 'Copyright 2026 The spectral-distance authors'

from .error import SpecdistError, NoConvergence, PythagorasViolation
from .definitions import DistanceResult, TransportPlan, PythagorasReport
from .options import SolverOptions
from .triples import (FiniteSpectralTriple, State, MetricSpace,
                      ProductStructure, two_point_triple, two_point_state,
                      finite_metric_triple, simplex_triple, bloch_triples,
                      product_triple, product_state, pure_state)
from .engine import (spectral_distance, spectral_distance_dual, distance,
                     kantorovich, commutative_distance)
from .pythagoras import pythagoras_check, build_P, idempotent_norm_K
