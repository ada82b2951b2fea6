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
specdist.marshal
~~~~~~~~~~~~~~~~

This module contains the wrappers turning results into text, CSV and
JSON. Text uses 6 significant digits, CSV and JSON full precision.
Infinity is "inf" in text and CSV, ``{"extended": "+inf"}`` in JSON.

:copyright: (c) 2026 by the spectral-distance authors.
:license: Apache 2.0, see LICENSE for more details.

"""

import csv
import io
import json
import math

import numpy as np

from .error import InvalidArgumentError

TEXT = 'text'
CSV = 'csv'
JSON = 'json'
FORMATS = (TEXT, CSV, JSON)


def json_value(value):
    """
    JSON-safe copy of numbers, arrays and nested containers.
    """
    if isinstance(value, dict):
        return dict((k, json_value(v)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return [json_value(v) for v in value]
    if isinstance(value, np.ndarray):
        return json_value(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, complex):
        if value.imag == 0:
            return json_value(value.real)
        return {'re': json_value(value.real), 'im': json_value(value.imag)}
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isinf(value):
            return {'extended': '+inf' if value > 0 else '-inf'}
        if math.isnan(value):
            return {'extended': 'nan'}
        return value
    return value


def text_value(value, precise=False):
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isinf(value):
            return 'inf' if value > 0 else '-inf'
        return repr(value) if precise else '{0:.6g}'.format(value)
    if value is None:
        return ''
    return str(value)


def render_rows(rows, columns, fmt=TEXT):
    """
    Render a list of row dicts.
    """
    if fmt not in FORMATS:
        raise InvalidArgumentError('unknown output format {0!r}'.format(fmt))
    if fmt == JSON:
        return json.dumps([json_value(dict((c, row.get(c)) for c in columns))
                           for row in rows], indent=2) + '\n'
    if fmt == CSV:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(columns)
        for row in rows:
            writer.writerow([text_value(row.get(c), precise=True)
                             for c in columns])
        return buffer.getvalue()
    cells = [[text_value(row.get(c)) for c in columns] for row in rows]
    widths = [max([len(c)] + [len(line[i]) for line in cells])
              for i, c in enumerate(columns)]
    lines = ['  '.join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    for line in cells:
        lines.append('  '.join(v.ljust(w) for v, w in
                               zip(line, widths)).rstrip())
    return '\n'.join(lines) + '\n'


def render_record(record, fmt=TEXT):
    """
    Render one record: a key/value listing in text mode, a JSON object,
    or a one-row CSV.
    """
    if fmt == JSON:
        return json.dumps(json_value(record), indent=2) + '\n'
    if fmt == CSV:
        scalars = [k for k, v in record.items()
                   if not isinstance(v, (list, tuple, np.ndarray, dict))]
        return render_rows([record], scalars, CSV)
    if fmt not in FORMATS:
        raise InvalidArgumentError('unknown output format {0!r}'.format(fmt))
    lines = []
    for key, value in record.items():
        if isinstance(value, np.ndarray) and value.ndim == 2:
            lines.append('{0}:'.format(key))
            for row in value:
                lines.append('  ' + ' '.join(text_value(v) for v in row))
        elif isinstance(value, (list, tuple, np.ndarray)):
            lines.append('{0}: {1}'.format(
                key, ' '.join(text_value(v) for v in value)))
        else:
            lines.append('{0}: {1}'.format(key, text_value(value)))
    return '\n'.join(lines) + '\n'


def distance_record(result):
    record = {
        'value': result.value,
        'gap': result.gap,
        'iterations': result.iterations,
        'method': result.method,
    }
    if result.optimizer is not None:
        record['optimizer'] = result.optimizer
    if result.separating is not None:
        record['separating'] = result.separating
    return record


def transport_record(plan):
    return {
        'value': plan.value,
        'gap': plan.gap,
        'plan': plan.plan,
        'dual_a': plan.dual_a,
        'dual_b': plan.dual_b,
    }
