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

import os

from .options import FIELDS, Provider, Value, parse_field


class EnvOptions(Provider):
    """
    Options from SPECDIST_TOL, SPECDIST_MAX_ITER, SPECDIST_SEED, ...
    """

    def __init__(self, prefix='SPECDIST_', retrieved=False):
        super(EnvOptions, self).__init__()
        self._prefix = prefix
        self._retrieved = retrieved

    def retrieve(self):
        self._retrieved = False
        fields = {}
        for name in FIELDS:
            raw = os.environ.get(self._prefix + name.upper())
            if raw:
                fields[name] = parse_field(name, raw)
        self._retrieved = True
        return Value(**fields)

    def is_expired(self):
        return not self._retrieved
