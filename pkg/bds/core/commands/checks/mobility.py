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
"""Check that mobility keeps the location distribution uniform."""

from ..echo import WARNING

KS_THRESHOLD = 0.03


def check_mobility_uniformity(ks_statistic, threshold=KS_THRESHOLD):
    """Check a radial KS statistic against ``threshold``."""
    if ks_statistic < threshold:
        return True, None
    return False, (
        WARNING + 'The radial distribution is not uniform: KS {0:.4f} '
        '>= {1}.\n'.format(ks_statistic, threshold)
    )
