# -*- coding: utf-8 -*-
#
# Copyright 2020 - The BDS simulator authors.
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
"""Serializers for the link budget comparison."""

from collections import OrderedDict

from bds.core.models.tabulate import tabulate

from .experiment import fixed

COLUMNS = OrderedDict((
    ('model', None),
    ('cellular_db', 'cellular (dB)'),
    ('d2d_db', 'd2d (dB)'),
    ('pl_diff_db', 'pl diff (dB)'),
    ('tx_diff_db', 'tx diff (dB)'),
))


def tabular(rows):
    """Format link budget rows as a table."""
    return tabulate(rows, headers=COLUMNS, float_fmt='{0:.1f}')


def csv(rows):
    """Format link budget rows as CSV."""
    lines = [','.join(COLUMNS)]
    for row in rows:
        lines.append(','.join(
            [row.model] + [
                fixed(getattr(row, column), decimals=1)
                for column in list(COLUMNS)[1:]
            ]
        ))
    return '\n'.join(lines) + '\n'


LINK_BUDGET_FORMATS = {
    'tabular': tabular,
    'csv': csv,
}
"""Valid formatting options."""
