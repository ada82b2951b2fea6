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
import configparser

from .options import FIELDS, Provider, Value, parse_field


class FileOptions(Provider):
    """
    Options from an INI file, one section per profile:

        [default]
        tol = 1e-7
        restarts = 8
    """

    def __init__(self, filename=None, profile=None, retrieved=False):
        super(FileOptions, self).__init__()
        self._filename = (
            filename or
            os.environ.get('SPECDIST_CONFIG_FILE') or
            os.path.join(os.path.expanduser('~'), '.specdist', 'config.ini')
        )
        self._profile = (profile or os.environ.get('SPECDIST_PROFILE') or
                         'default')
        self._retrieved = retrieved

    def retrieve(self):
        self._retrieved = False
        parser = configparser.ConfigParser()
        parser.read(self._filename)
        fields = {}
        if parser.has_section(self._profile):
            for name in FIELDS:
                if parser.has_option(self._profile, name):
                    fields[name] = parse_field(
                        name, parser.get(self._profile, name))
        self._retrieved = True
        return Value(**fields)

    def is_expired(self):
        return not self._retrieved
