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
"""Validation of the models against reference values.

Every check returns (ok, problems) where problems is None or a
printable description of what deviates.
"""

from .link_budget import check_link_budget
from .mobility import check_mobility_uniformity
from .traffic import check_traffic_rate

__all__ = (
    'check_link_budget',
    'check_traffic_rate',
    'check_mobility_uniformity',
)
