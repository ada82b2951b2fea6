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

import json
import os


def write_json(directory, name, data):
    path = os.path.join(directory, name)
    with open(path, 'w') as handle:
        json.dump(data, handle)
    return path


def generate_two_point(lam=0.5):
    return {'builtin': 'two_point', 'lambda': lam}


def generate_metric(g):
    return {'size': len(g), 'g': g}


def generate_simplex_state(p, label=''):
    data = {'kind': 'simplex', 'p': list(p)}
    if label:
        data['label'] = label
    return data


def generate_bloch_state(x):
    return {'kind': 'bloch', 'x': list(x)}
