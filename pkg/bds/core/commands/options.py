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
"""Command line options."""

import click

from bds.core.errors import ParameterError


def install_completion(ctx, attr, value):  # pragma: no cover
    """Install completion for the current shell."""
    import click_completion.core

    if not value or ctx.resilient_parsing:
        return value

    shell, path = click_completion.core.install()
    click.secho(
        '{0} completion installed in {1}'.format(shell, path), fg='green'
    )
    ctx.exit()


def parse_hours(ctx, param, value):
    """Parse a comma separated list of hours."""
    if value is None:
        return None
    try:
        hours = tuple(float(h) for h in value.split(',') if h.strip())
    except ValueError:
        raise ParameterError(
            '"{0}" is not a list of hours.'.format(value),
            param_hint='--{0}'.format(param.name)
        )
    if not hours:
        raise ParameterError(
            'at least one value is required.',
            param_hint='--{0}'.format(param.name)
        )
    return hours


option_config = click.option(
    '--config',
    'config_path',
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help='Scenario configuration file.',
)
option_seed = click.option(
    '--seed',
    type=int,
    default=None,
    help='Base random seed.',
)


def option_format(formats):
    """Select one of ``formats``."""
    return click.option(
        '--format',
        'output_format',
        type=click.Choice(sorted(formats)),
        default='tabular',
        show_default=True,
        help='Choose an output format.',
    )
