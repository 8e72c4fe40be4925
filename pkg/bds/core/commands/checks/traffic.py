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
"""Check the traffic generator against the application mix."""

from ..echo import WARNING

TOLERANCE = 0.02


def check_traffic_rate(rate_check, tolerance=TOLERANCE):
    """Check the generator rate is within ``tolerance`` of the mix."""
    deviation = abs(rate_check.ratio - 1.0)
    if deviation <= tolerance:
        return True, None
    return False, (
        WARNING + 'The generator rate {0:.1f} B/s deviates {1:.1%} from the '
        'application mix rate {2:.1f} B/s.\n'.format(
            rate_check.generator_bps, deviation, rate_check.mixture_bps
        )
    )
