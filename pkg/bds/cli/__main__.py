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
"""Support for ``python -m bds``."""

import sys

from bds.cli import cli

if __name__ == '__main__':  # pragma: no cover
    sys.argv[0] = 'python -m bds'
    cli()
