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
"""Check the link budget against the published comparison."""

from ..echo import WARNING

REFERENCE_DB = {
    'UMTS': (127.0, 67.0, 60.0, 42.0),
    'WINNER II': (122.0, 73.0, 49.0, 31.0),
}
"""Cellular PL, D2D PL, PL difference and Tx difference per model, dB."""

TOLERANCE_DB = 1.5


def check_link_budget(rows, tolerance_db=TOLERANCE_DB):
    """Compare link budget rows with :data:`REFERENCE_DB`."""
    problems = []
    for row in rows:
        reference = REFERENCE_DB.get(row.model)
        if reference is None:
            continue
        values = (row.cellular_db, row.d2d_db, row.pl_diff_db, row.tx_diff_db)
        names = ('cellular', 'D2D', 'PL difference', 'Tx difference')
        for name, value, expected in zip(names, values, reference):
            if abs(value - expected) > tolerance_db:
                problems.append(
                    '{0} {1}: {2:.1f} dB, expected {3:.1f} dB'.format(
                        row.model, name, value, expected
                    )
                )

    if not problems:
        return True, None
    return False, WARNING + 'The link budget deviates from the reference.' \
        '\n\t' + '\n\t'.join(problems) + '\n'
