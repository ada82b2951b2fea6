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

from .options import FIELDS, Provider, Value


class Chain(Provider):
    """
    Merge providers field by field, earlier providers win.
    """

    def __init__(self, providers):
        super(Chain, self).__init__()
        self._providers = providers

    def retrieve(self):
        merged = {}
        for provider in self._providers:
            for name, value in provider.retrieve().items():
                merged.setdefault(name, value)
        return Value(**dict((name, merged[name]) for name in FIELDS
                            if name in merged))

    def is_expired(self):
        return any(provider.is_expired() for provider in self._providers)
