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

from abc import ABCMeta, abstractmethod

from ..error import InvalidArgumentError
from ..helpers import is_positive_number, is_non_negative_int

FIELDS = ('tol', 'max_iter', 'seed', 'restarts', 'ascent_iter', 'zero_tol',
          'workers')
INTEGER_FIELDS = ('max_iter', 'seed', 'restarts', 'ascent_iter', 'workers')


class Value(object):
    """
    Partial set of solver options; None marks an unset field.
    """

    def __init__(self, tol=None, max_iter=None, seed=None, restarts=None,
                 ascent_iter=None, zero_tol=None, workers=None):
        self.tol = tol
        self.max_iter = max_iter
        self.seed = seed
        self.restarts = restarts
        self.ascent_iter = ascent_iter
        self.zero_tol = zero_tol
        self.workers = workers

    def items(self):
        return [(name, getattr(self, name)) for name in FIELDS
                if getattr(self, name) is not None]


class SolverOptions(object):
    """
    Options shared by every solver.

    :param tol: Relative tolerance of the certified gap.
    :param max_iter: Cutting-plane iterations per solve.
    :param seed: Seed of the restart generator.
    :param restarts: Number of ascent restarts.
    :param ascent_iter: Iterations per ascent restart.
    :param zero_tol: Relative threshold under which L(rho) counts as zero.
    :param workers: Threads used by batch sweeps.
    """

    def __init__(self, tol=1e-6, max_iter=2000, seed=42, restarts=5,
                 ascent_iter=60, zero_tol=1e-9, workers=1):
        is_positive_number(tol, 'tol')
        is_positive_number(zero_tol, 'zero_tol')
        for name, value in (('max_iter', max_iter), ('restarts', restarts),
                            ('ascent_iter', ascent_iter),
                            ('workers', workers), ('seed', seed)):
            is_non_negative_int(value, name)
        if restarts < 1 or workers < 1:
            raise InvalidArgumentError('restarts and workers must be at '
                                       'least 1')
        self.tol = float(tol)
        self.max_iter = int(max_iter)
        self.seed = int(seed)
        self.restarts = int(restarts)
        self.ascent_iter = int(ascent_iter)
        self.zero_tol = float(zero_tol)
        self.workers = int(workers)

    @classmethod
    def from_value(cls, value):
        return cls(**dict(value.items()))

    def replace(self, **changes):
        fields = dict((name, getattr(self, name)) for name in FIELDS)
        fields.update(changes)
        return SolverOptions(**fields)

    def __str__(self):
        return '<SolverOptions: {0}>'.format(' '.join(
            '{0}: {1}'.format(name, getattr(self, name)) for name in FIELDS))


class Provider(metaclass=ABCMeta):
    @abstractmethod
    def retrieve(self):
        pass

    @abstractmethod
    def is_expired(self):
        pass


class Options(object):
    """
    Resolved options of a provider, cached until expired.
    """

    def __init__(self, provider, force_refresh=True):
        self._options = None
        self._force_refresh = force_refresh
        self._provider = provider

    def get(self):
        if self.is_expired():
            self._options = SolverOptions.from_value(
                self._provider.retrieve())
            self._force_refresh = False
        return self._options

    def expire(self):
        self._force_refresh = True

    def is_expired(self):
        return self._force_refresh or self._provider.is_expired()


def parse_field(name, raw):
    """
    Convert a textual option value.
    """
    try:
        if name in INTEGER_FIELDS:
            return int(raw)
        return float(raw)
    except (TypeError, ValueError):
        raise InvalidArgumentError('option {0} has invalid value '
                                   '{1!r}'.format(name, raw))
