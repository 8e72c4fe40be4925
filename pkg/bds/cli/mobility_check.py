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
"""Check that UEs stay uniformly distributed over the cell.

.. code-block:: console

    $ bds mobility-check --samples 100000 --interval 100
    random-duration: KS = 0.0041 over 100000 samples
    Everything seems to be ok.

One UE is followed for a long time and its distance to the cell centre is
sampled at a fixed interval. The Kolmogorov-Smirnov distance to the radial
distribution of a uniform disk is printed and the command fails when it
reaches 0.03. Compare with ``--model random-waypoint``, which concentrates
UEs around the centre.
"""

import click

from bds.core.commands.checks import check_mobility_uniformity
from bds.core.commands.options import option_config, option_seed
from bds.core.models.mobility import MOBILITY_MODELS, \
    stationary_uniformity_check


@click.command('mobility-check')
@option_config
@option_seed
@click.option(
    '--samples',
    type=int,
    default=100000,
    show_default=True,
    help='Number of sampled positions.',
)
@click.option(
    '--interval',
    type=float,
    default=100.0,
    show_default=True,
    help='Seconds between samples.',
)
@click.option(
    '--model',
    type=click.Choice(sorted(MOBILITY_MODELS)),
    default='random-duration',
    show_default=True,
    help='Mobility model.',
)
@click.pass_context
def mobility_check(ctx, config_path, seed, samples, interval, model):
    """Measure how uniform the long-run UE locations are."""
    cfg = ctx.obj.load(config_path, {'seed': seed})
    ks = stationary_uniformity_check(
        cfg, samples, sample_interval_s=interval, model=model
    )
    click.echo('{0}: KS = {1:.4f} over {2} samples'.format(model, ks, samples))

    ok, problems = check_mobility_uniformity(ks)
    if ok:
        click.secho('Everything seems to be ok.', fg='green')
        ctx.exit(0)

    click.secho(problems)
    ctx.exit(1)
