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
"""Print a collection as a table."""

from operator import attrgetter

from tabulate import tabulate as tblte


def format_cell(cell, float_fmt=None):
    """Format a cell."""
    if float_fmt and isinstance(cell, float):
        return float_fmt.format(cell)
    if cell is None:
        return '-'
    return cell


def tabulate(collection, headers, float_fmt=None, **kwargs):
    """Pretty-print a collection."""
    if isinstance(headers, dict):
        attrs = headers.keys()
        # if mapping is not specified keep original
        names = [
            key if value is None else value for key, value in headers.items()
        ]
    else:
        attrs = names = headers
    getter = attrgetter(*attrs)
    table = []
    for item in collection:
        cells = getter(item)
        if len(attrs) == 1:
            cells = (cells, )
        table.append([
            format_cell(cell, float_fmt=float_fmt) for cell in cells
        ])
    return tblte(table, headers=[h.upper() for h in names], **kwargs)
