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
import shutil
import tempfile
from unittest import TestCase

import mock

from specdist.error import InvalidArgumentError
from specdist.options import (Chain, EnvOptions, FileOptions, Options,
                              SolverOptions, Static, Value)

CONFIG = """
[default]
tol = 1e-5
restarts = 3

[fast]
max_iter = 50
"""


class SolverOptionsTest(TestCase):
    def test_defaults(self):
        options = SolverOptions()
        self.assertEqual(options.max_iter, 2000)
        self.assertEqual(options.workers, 1)

    def test_invalid(self):
        self.assertRaises(InvalidArgumentError, SolverOptions, tol=0)
        self.assertRaises(InvalidArgumentError, SolverOptions, restarts=0)
        self.assertRaises(InvalidArgumentError, SolverOptions, max_iter=-1)

    def test_replace(self):
        options = SolverOptions().replace(seed=7)
        self.assertEqual(options.seed, 7)
        self.assertEqual(options.tol, 1e-6)


class EnvOptionsTest(TestCase):
    @mock.patch.dict(os.environ, {'SPECDIST_TOL': '1e-4',
                                  'SPECDIST_SEED': '9'}, clear=True)
    def test_retrieve(self):
        provider = EnvOptions()
        # is_expired should be True before retrieve()
        self.assertTrue(provider.is_expired())
        value = provider.retrieve()
        self.assertEqual(value.tol, 1e-4)
        self.assertEqual(value.seed, 9)
        self.assertIsNone(value.restarts)
        self.assertFalse(provider.is_expired())

    @mock.patch.dict(os.environ, {'SPECDIST_MAX_ITER': 'many'}, clear=True)
    def test_invalid_value(self):
        self.assertRaises(InvalidArgumentError, EnvOptions().retrieve)


class FileOptionsTest(TestCase):
    def setUp(self):
        self.directory = tempfile.mkdtemp()
        self.filename = os.path.join(self.directory, 'config.ini')
        with open(self.filename, 'w') as handle:
            handle.write(CONFIG)

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_default_profile(self):
        value = FileOptions(self.filename).retrieve()
        self.assertEqual(value.tol, 1e-5)
        self.assertEqual(value.restarts, 3)
        self.assertIsNone(value.max_iter)

    def test_profile(self):
        value = FileOptions(self.filename, 'fast').retrieve()
        self.assertEqual(value.max_iter, 50)
        self.assertIsNone(value.tol)

    @mock.patch.dict(os.environ, {}, clear=True)
    def test_missing_file(self):
        missing = os.path.join(self.directory, 'none.ini')
        value = FileOptions(missing).retrieve()
        self.assertEqual(value.items(), [])

    @mock.patch.dict(os.environ, {'SPECDIST_PROFILE': 'fast'}, clear=True)
    def test_profile_from_environment(self):
        self.assertEqual(FileOptions(self.filename).retrieve().max_iter, 50)


class ChainTest(TestCase):
    def setUp(self):
        self.directory = tempfile.mkdtemp()
        self.filename = os.path.join(self.directory, 'config.ini')
        with open(self.filename, 'w') as handle:
            handle.write(CONFIG)

    def tearDown(self):
        shutil.rmtree(self.directory)

    @mock.patch.dict(os.environ, {'SPECDIST_TOL': '1e-3',
                                  'SPECDIST_RESTARTS': '4'}, clear=True)
    def test_precedence(self):
        chain = Chain([Static(tol=1e-2, seed=None), EnvOptions(),
                       FileOptions(self.filename)])
        options = Options(chain).get()
        # flag beats environment
        self.assertEqual(options.tol, 1e-2)
        # environment beats file
        self.assertEqual(options.restarts, 4)
        # defaults fill the rest
        self.assertEqual(options.seed, 42)

    @mock.patch.dict(os.environ, {}, clear=True)
    def test_file_beats_defaults(self):
        chain = Chain([EnvOptions(), FileOptions(self.filename)])
        self.assertEqual(Options(chain).get().tol, 1e-5)

    def test_is_expired(self):
        chain = Chain([Static(tol=1.0), EnvOptions()])
        self.assertTrue(chain.is_expired())
        chain.retrieve()
        self.assertFalse(chain.is_expired())


class OptionsTest(TestCase):
    def test_cached_until_expired(self):
        provider = mock.Mock()
        provider.retrieve.return_value = Value(seed=3)
        provider.is_expired.return_value = False
        options = Options(provider)
        self.assertEqual(options.get().seed, 3)
        options.get()
        self.assertEqual(provider.retrieve.call_count, 1)
        options.expire()
        options.get()
        self.assertEqual(provider.retrieve.call_count, 2)
