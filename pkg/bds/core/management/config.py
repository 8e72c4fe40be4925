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
"""Loading and storing scenario configuration files.

Files are flat ``key = value`` lists without section headers::

    # a smaller cell
    cell_radius_m = 250
    speed_range_mps = 0.5, 2

Values are layered: scenario defaults, the user-level defaults file,
an explicit configuration file and finally command line overrides.
"""

import configparser
import os
from pathlib import Path

import attr
import click
import filelock

from bds.core import errors
from bds.core.models.scenario import ScenarioConfig, format_value

APP_NAME = 'bds'
"""Application name for storing configuration."""

SECTION = 'scenario'
"""Implicit section of configuration files."""

CONFIG_DIR_ENV = 'BDS_CONFIG_DIR'
"""Environment variable overriding the user-level defaults directory."""


def _get_global_config_dir():
    """Return user's config directory."""
    return os.environ.get(CONFIG_DIR_ENV) or click.get_app_dir(
        APP_NAME, force_posix=True
    )


def parse_config(text, source=None):
    """Parse flat ``key = value`` text into an ordered dict."""
    parser = configparser.ConfigParser(
        interpolation=None,
        comment_prefixes=('#', ';'),
        inline_comment_prefixes=('#', ';'),
    )
    try:
        parser.read_string(
            '[{0}]\n{1}'.format(SECTION, text), source=source or '<string>'
        )
    except configparser.Error as e:
        raise errors.ConfigurationError(
            'Malformed configuration{0}: {1}'.format(
                ' in {0}'.format(source) if source else '', e
            )
        )
    return dict(parser.items(SECTION))


def check_keys(values, source=None):
    """Reject keys that are not scenario fields."""
    unknown = set(values) - set(ScenarioConfig.field_names())
    if unknown:
        raise errors.UnknownConfigKeys(unknown, source=source)
    return values


def read_config_file(path):
    """Read a configuration file into a dict of raw values."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise errors.ConfigurationError(
            'Cannot read configuration "{0}": {1}'.format(path, e)
        )
    return check_keys(parse_config(text, source=str(path)), source=str(path))


def build_config(*layers):
    """Merge layers of raw values into a :class:`ScenarioConfig`.

    Later layers win; ``None`` values are ignored.
    """
    values = {}
    for layer in layers:
        for key, value in (layer or {}).items():
            if value is not None:
                values[key] = value
    check_keys(values)

    fields = attr.fields_dict(ScenarioConfig)
    for key, value in values.items():
        try:
            fields[key].converter(value)
        except (errors.ParameterError, TypeError, ValueError):
            raise errors.ParameterError(
                'cannot convert {0!r}.'.format(value), param_hint=key
            )
    return ScenarioConfig(**values)


@attr.s
class ConfigManager:
    """Handle the user-level defaults and configuration layering."""

    CONFIG_NAME = 'scenario.ini'

    _global_config_dir = attr.ib(default=attr.Factory(_get_global_config_dir))

    @property
    def global_config_dir(self):
        """Return user's config directory."""
        return self._global_config_dir

    @property
    def global_config_path(self):
        """User-level defaults file path."""
        config = Path(self.global_config_dir)
        if not config.exists():
            config.mkdir(parents=True)

        return str(config / self.CONFIG_NAME)

    @property
    def global_config_lock(self):
        """Create a user-level config lock."""
        lock_file = '{0}/{1}.lock'.format(
            self.global_config_dir, self.CONFIG_NAME
        )
        return filelock.FileLock(lock_file, timeout=0)

    def load_global(self):
        """Return the raw values of the user-level defaults file."""
        path = Path(self.global_config_path)
        with self.global_config_lock:
            if not path.exists():
                return {}
            text = path.read_text()
        return check_keys(
            parse_config(text, source=str(path)), source=str(path)
        )

    def store_global(self, values):
        """Persist raw values as the user-level defaults."""
        filepath = self.global_config_path
        lines = [
            '{0} = {1}\n'.format(key, value) for key, value in values.items()
        ]

        fd = os.open(filepath, os.O_CREAT | os.O_RDWR | os.O_TRUNC, 0o600)
        with self.global_config_lock:
            with open(fd, 'w+') as file:
                file.writelines(lines)

    def load(self, config_path=None, overrides=None):
        """Return the effective :class:`ScenarioConfig`."""
        file_values = read_config_file(config_path) if config_path else {}
        return build_config(self.load_global(), file_values, overrides)

    def get_value(self, key, config_path=None):
        """Return the effective value of ``key`` as text."""
        check_keys({key: None})
        return format_value(getattr(self.load(config_path), key))

    def get_config(self, config_path=None):
        """Return the effective configuration as ``key = value`` text."""
        cfg = self.load(config_path)
        return ''.join(
            '{0} = {1}\n'.format(key, value) for key, value in cfg.to_items()
        )

    def set_value(self, key, value):
        """Store ``key`` in the user-level defaults."""
        values = self.load_global()
        values[key] = value
        # validates the value before it is written
        build_config(values)
        self.store_global(values)
        return value

    def remove_value(self, key):
        """Drop ``key`` from the user-level defaults."""
        values = self.load_global()
        value = values.pop(key, None)
        if value is None:
            raise errors.ParameterError('Key "{}" not found.'.format(key))
        self.store_global(values)
        return value
