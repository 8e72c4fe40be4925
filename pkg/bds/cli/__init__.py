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
r"""The base command of the Battery Deposit Service simulator.

``bds`` (base command)
----------------------

To list the available commands, either run ``bds`` with no parameters or
execute ``bds help``:

.. code-block:: console

    $ bds help
    Usage: bds [OPTIONS] COMMAND [ARGS]...

      Simulate cooperative D2D relaying and its effect on battery life.

    Options:
      --version                   Print version number.
      --global-config-path        Print global application's config path.
      --install-completion        Install completion for the current shell.
      --config-dir <path>         Directory of the user-level defaults.
      --log-level [DEBUG|INFO|WARNING|ERROR]
                                  Logging verbosity.  [default: WARNING]
      -h, --help                  Show this message and exit.

    Commands:
      # [...]

Configuration files
~~~~~~~~~~~~~~~~~~~

User-level scenario defaults live in ``scenario.ini`` inside the
application directory. Depending on your system it is found in:

MacOS:
  ``~/Library/Application Support/bds``
Unix:
  ``~/.config/bds``
Windows:
  ``C:\Users\<user>\AppData\Roaming\bds``

If in doubt where to look for the configuration file, you can display its path
by running ``bds --global-config-path``. Every option can also be set
through an environment variable prefixed with ``BDS_``, for example
``BDS_RUN_SEED=3``.
"""

import logging

import click
import click_completion

from bds.cli.config import config
from bds.cli.exception_handler import BDSExceptionsHandler
from bds.cli.link_budget import link_budget
from bds.cli.mobility_check import mobility_check
from bds.cli.run import run
from bds.cli.traffic_check import traffic_check
from bds.core.commands.options import install_completion
from bds.core.management.config import ConfigManager

#: Monkeypatch Click application.
click_completion.init()

LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR')


def print_version(ctx, param, value):
    """Print version number."""
    if not value or ctx.resilient_parsing:
        return

    from bds.version import __version__
    click.echo(__version__)
    ctx.exit()


def print_global_config_path(ctx, param, value):
    """Print global application's config path."""
    if not value or ctx.resilient_parsing:
        return
    config_dir = ctx.params.get('config_dir')
    manager = ConfigManager(config_dir) if config_dir else ConfigManager()
    click.echo(manager.global_config_path)
    ctx.exit()


@click.group(
    cls=BDSExceptionsHandler,
    context_settings={
        'auto_envvar_prefix': 'BDS',
        'help_option_names': ['-h', '--help'],
    }
)
@click.option(
    '--version',
    is_flag=True,
    callback=print_version,
    expose_value=False,
    is_eager=True,
    help=print_version.__doc__
)
@click.option(
    '--config-dir',
    envvar='BDS_CONFIG_DIR',
    metavar='<path>',
    default=None,
    is_eager=True,
    help='Directory of the user-level defaults.'
)
@click.option(
    '--global-config-path',
    is_flag=True,
    callback=print_global_config_path,
    expose_value=False,
    is_eager=True,
    help=print_global_config_path.__doc__
)
@click.option(
    '--install-completion',
    is_flag=True,
    callback=install_completion,
    expose_value=False,
    is_eager=True,
    help=install_completion.__doc__,
)
@click.option(
    '--log-level',
    type=click.Choice(LOG_LEVELS, case_sensitive=False),
    default='WARNING',
    show_default=True,
    help='Logging verbosity.',
)
@click.pass_context
def cli(ctx, config_dir, log_level):
    """Simulate cooperative D2D relaying and its effect on battery life."""
    logging.basicConfig(
        level=getattr(logging, log_level.upper()),
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
    )
    ctx.obj = ConfigManager(config_dir) if config_dir else ConfigManager()


@cli.command()
@click.pass_context
def help(ctx):
    """Show help message and exit."""
    click.echo(ctx.parent.get_help())


# Register subcommands:
cli.add_command(config)
cli.add_command(link_budget)
cli.add_command(mobility_check)
cli.add_command(run)
cli.add_command(traffic_check)
