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
"""Compare the path loss of cellular and D2D links.

.. code-block:: console

    $ bds link-budget
    MODEL        CELLULAR (DB)    D2D (DB)    PL DIFF (DB)    TX DIFF (DB)
    ---------  ---------------  ----------  --------------  --------------
    UMTS                 127.1        68.0            59.1            41.1
    WINNER II            122.0        72.6            49.4            31.4

The transmit power difference is the path loss difference minus the antenna
gain and noise figure advantage of the eNodeB receiver. At the nominal
300 m and 10 m distances the values are compared with reference link
budgets and the command fails on deviations above 1.5 dB. Use
``--format csv`` for machine-readable output.
"""

import click

from bds.core.commands.checks import check_link_budget
from bds.core.commands.format.link_budget import LINK_BUDGET_FORMATS
from bds.core.commands.options import option_config, option_format
from bds.core.models.channel import link_budget_report


@click.command('link-budget')
@option_config
@click.option(
    '--cellular-distance',
    type=float,
    default=300.0,
    show_default=True,
    help='UE to eNodeB distance in meters.',
)
@click.option(
    '--d2d-distance',
    type=float,
    default=10.0,
    show_default=True,
    help='UE to UE distance in meters.',
)
@click.option('--enb-gain', type=float, default=14.0, show_default=True,
              help='eNodeB antenna gain in dBi.')
@click.option('--ue-gain', type=float, default=0.0, show_default=True,
              help='UE antenna gain in dBi.')
@click.option('--enb-noise-figure', type=float, default=5.0,
              show_default=True, help='eNodeB noise figure in dB.')
@click.option('--ue-noise-figure', type=float, default=9.0,
              show_default=True, help='UE noise figure in dB.')
@option_format(LINK_BUDGET_FORMATS)
@click.pass_context
def link_budget(
    ctx, config_path, cellular_distance, d2d_distance, enb_gain, ue_gain,
    enb_noise_figure, ue_noise_figure, output_format
):
    """Show the cellular versus D2D link budget."""
    cfg = ctx.obj.load(config_path)
    rows = link_budget_report(
        cfg,
        cellular_distance_m=cellular_distance,
        d2d_distance_m=d2d_distance,
        enb_gain_dbi=enb_gain,
        ue_gain_dbi=ue_gain,
        enb_noise_figure_db=enb_noise_figure,
        ue_noise_figure_db=ue_noise_figure,
    )
    click.echo(LINK_BUDGET_FORMATS[output_format](rows))

    # reference values exist for the nominal geometry only
    nominal = (cellular_distance, d2d_distance) == (300.0, 10.0)
    if output_format == 'tabular' and nominal:
        ok, problems = check_link_budget(rows)
        if not ok:
            click.secho(problems)
            ctx.exit(1)
