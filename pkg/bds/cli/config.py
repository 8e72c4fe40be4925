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
"""Get and set user-level scenario defaults.

Set values
~~~~~~~~~~

Scenario parameters used by every command can be stored in your home
directory:

.. code-block:: console

    $ bds config n_rbs 2

Values are checked before they are written.

Remove values
~~~~~~~~~~~~~

To remove a specific key from the user-level defaults use:

.. code-block:: console

    $ bds config --remove n_rbs

Query values
~~~~~~~~~~~~

You can display the effective configuration with:

.. code-block:: console

    $ bds config

Defaults, the user-level file and the file given with ``--config`` are
merged, later ones taking precedence. You can provide a KEY to display only
its value:

.. code-block:: console

    $ bds config n_rbs
    2
"""
import click

from bds.core import errors
from bds.core.commands.options import option_config


@click.command()
@click.argument('key', required=False, default=None)
@click.argument('value', required=False, default=None)
@click.option('--remove', is_flag=True, help='Remove specified key.')
@option_config
@click.pass_obj
def config(manager, key, value, remove, config_path):
    """Manage scenario defaults."""
    is_write = value is not None

    if is_write and remove:
        raise errors.UsageError('Cannot remove and set at the same time.')
    if remove and not key:
        raise errors.UsageError('KEY is missing.')
    if (is_write or remove) and config_path:
        raise errors.UsageError('--config is read-only.')

    if remove:
        manager.remove_value(key)
    elif is_write:
        manager.set_value(key, value)
    elif key:
        click.secho(manager.get_value(key, config_path))
    else:
        click.secho(manager.get_config(config_path), nl=False)
