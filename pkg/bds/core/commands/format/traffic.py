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
"""Serializers for the traffic rate validation."""

from collections import OrderedDict

from bds.core.models.tabulate import tabulate

from .experiment import fixed

COLUMNS = OrderedDict((
    ('name', 'scenario'),
    ('weight', None),
    ('interarrival_s', 'inter-arrival (s)'),
    ('size_bytes', 'size (bytes)'),
    ('rate_bps', 'rate (B/s)'),
))


def tabular(rate_check):
    """Format the application mix and both rates as text."""
    table = tabulate(rate_check.scenarios, headers=COLUMNS)
    return (
        '{0}\n\nmixture rate:   {1:.1f} B/s\n'
        'generator rate: {2:.1f} B/s\nratio:          {3:.4f}\n'.format(
            table, rate_check.mixture_bps, rate_check.generator_bps,
            rate_check.ratio
        )
    )


def csv(rate_check):
    """Format the application mix and both rates as CSV."""
    lines = [','.join(COLUMNS)]
    for scenario in rate_check.scenarios:
        lines.append(','.join((
            scenario.name,
            fixed(scenario.weight),
            fixed(scenario.interarrival_s),
            str(scenario.size_bytes),
            fixed(scenario.rate_bps),
        )))
    lines.append('mixture,,,,{0}'.format(fixed(rate_check.mixture_bps)))
    lines.append('generator,,,,{0}'.format(fixed(rate_check.generator_bps)))
    return '\n'.join(lines) + '\n'


TRAFFIC_FORMATS = {
    'tabular': tabular,
    'csv': csv,
}
"""Valid formatting options."""
