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
"""Run paired cooperative and non-cooperative replications.

Run an experiment
~~~~~~~~~~~~~~~~~

.. code-block:: console

    $ bds run --replications 10 --out results/

Every replication is simulated once with and once without cooperation on
identical placements, batteries, traffic and mobility. The outage
probability and valueless battery at each target usage time are printed
with 95 % confidence half-widths across replications.

Use ``--coop on`` or ``--coop off`` to run a single arm. Targets are
given in hours:

.. code-block:: console

    $ bds run --targets 8,10 --horizon 24 --strategy max-battery

Output files
~~~~~~~~~~~~

With ``--out DIR`` the following files are written:

``records.csv``
  one row per UE, replication and arm;
``associations.csv``
  one row per helper association;
``cdf_<arm>.csv`` and ``histogram_<arm>.csv``
  plot-ready usage time distributions;
``summary.yml``
  configuration, calibration levers and all estimates.

Identical seeds produce byte-identical files, also with ``--jobs``.
"""

import click

from bds.core.commands.echo import WARNING, progressbar
from bds.core.commands.experiment import ARMS, COOP_MODES, \
    DEFAULT_TARGETS_H, run_experiment
from bds.core.commands.format.experiment import tabular
from bds.core.commands.options import option_config, option_seed, \
    parse_hours
from bds.core.models.protocol import STRATEGIES


@click.command()
@option_config
@option_seed
@click.option(
    '--replications',
    type=int,
    default=10,
    show_default=True,
    help='Number of replications per arm.',
)
@click.option(
    '--coop',
    type=click.Choice(sorted(COOP_MODES)),
    default='paired',
    show_default=True,
    help='Arms to simulate.',
)
@click.option(
    '--targets',
    callback=parse_hours,
    default=','.join('{0:g}'.format(h) for h in DEFAULT_TARGETS_H),
    show_default=True,
    help='Comma separated target usage times in hours.',
)
@click.option(
    '--out',
    'out_dir',
    type=click.Path(file_okay=False, writable=True),
    default=None,
    help='Directory for the result files.',
)
@click.option(
    '--strategy',
    type=click.Choice(sorted(STRATEGIES)),
    default=None,
    help='Helper selection strategy.',
)
@click.option(
    '--horizon',
    type=float,
    default=None,
    help='Simulated time in hours.  [default: 24]',
)
@click.option(
    '--jobs',
    type=int,
    default=1,
    show_default=True,
    help='Replications simulated in parallel.',
)
@click.option(
    '--bin-width',
    type=float,
    default=1800.0,
    show_default=True,
    help='Histogram bin width in seconds.',
)
@click.pass_obj
def run(
    manager, config_path, seed, replications, coop, targets, out_dir,
    strategy, horizon, jobs, bin_width
):
    """Run paired replications and report outage probabilities."""
    overrides = {
        'seed': seed,
        'strategy': strategy,
        'sim_end_s': None if horizon is None else horizon * 3600.0,
    }
    cfg = manager.load(config_path, overrides)
    arms = {arm: ARMS[arm] for arm in COOP_MODES[coop]}

    def progress(results):
        with progressbar(
            results,
            length=replications * len(arms),
            label='Simulating',
        ) as bar:
            yield from bar

    result = run_experiment(
        cfg,
        n_replications=replications,
        targets_h=targets,
        arms=arms,
        out_dir=out_dir,
        jobs=jobs,
        bin_width_s=bin_width,
        progress=progress,
    )

    click.echo(tabular(result))
    for arm in result.arms:
        censored = result.summaries[arm].usage.n_censored
        if censored:
            click.echo(
                WARNING + '{0} UEs of arm "{1}" survived the horizon and '
                'are right-censored.'.format(censored, arm)
            )
    if out_dir:
        click.secho('Results written to {0}'.format(out_dir), fg='green')
