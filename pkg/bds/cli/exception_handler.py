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
"""Turn simulator errors into readable messages and exit codes.

Invalid parameters and unintended usage exit with status 2, every other
simulator error with status 1. Unexpected exceptions keep their traceback.
"""

import sys
import traceback

import click

from bds.core.errors import BDSException, ParameterError, UsageError


class BDSExceptionsHandler(click.Group):
    """Handles all BDS exceptions."""

    def main(self, *args, **kwargs):
        """Catch and print all simulator exceptions."""
        try:
            return super().main(*args, **kwargs)
        except BDSException as e:
            click.echo('Error: {}'.format(e))
            if e.__cause__ is not None:
                click.echo('\n{}'.format(traceback.format_exc()))
            exit_code = 1
            if isinstance(e, (ParameterError, UsageError)):
                exit_code = 2
            sys.exit(exit_code)
