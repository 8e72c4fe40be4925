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
"""Validate the traffic generator against the application mix.

.. code-block:: console

    $ bds traffic-check

The byte rate of the Poisson burst generator, mean burst size over mean
inter-arrival time, is compared with the weighted rate of a typical
smartphone application mix.
"""

import click

from bds.core.commands.checks import check_traffic_rate
from bds.core.commands.format.traffic import TRAFFIC_FORMATS
from bds.core.commands.options import option_config, option_format
from bds.core.models.traffic import aggregate_rate_check


@click.command('traffic-check')
@option_config
@option_format(TRAFFIC_FORMATS)
@click.pass_context
def traffic_check(ctx, config_path, output_format):
    """Compare the generator rate with the application mix."""
    rate_check = aggregate_rate_check(ctx.obj.load(config_path))
    click.echo(TRAFFIC_FORMATS[output_format](rate_check))

    if output_format == 'tabular':
        ok, problems = check_traffic_rate(rate_check)
        if not ok:
            click.secho(problems)
            ctx.exit(1)
