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
"""BDS simulator exceptions."""


class BDSException(Exception):
    """A base class for all simulator related exceptions.

    You can catch all errors raised by the simulator by using
    ``except BDSException:``.
    """


class ParameterError(BDSException):
    """Raise in case of invalid parameter."""

    def __init__(self, message, param_hint=None):
        """Build a custom message."""
        if param_hint:
            if isinstance(param_hint, (tuple, list)):
                param_hint = ' / '.join('"{}"'.format(x) for x in param_hint)
            else:
                param_hint = '"{}"'.format(param_hint)
            message = 'Invalid parameter value for {}: {}'.format(
                param_hint, message
            )
        else:
            message = 'Invalid parameter value: {}'.format(message)

        super().__init__(message)


class UsageError(BDSException):
    """Raise in case of unintended usage of certain function calls."""


class ConfigurationError(BDSException):
    """Raise in case of misconfiguration."""


class UnknownConfigKeys(ConfigurationError):
    """Raise when a configuration file contains unknown keys."""

    def __init__(self, keys, source=None):
        """Build a custom message."""
        self.keys = sorted(keys)
        message = 'Unknown configuration keys: {0}'.format(
            ', '.join(self.keys)
        )
        if source:
            message += ' (in {0})'.format(source)
        super().__init__(message)


class SimulationError(BDSException):
    """Raise when the simulation kernel detects a broken invariant."""

    def __init__(self, message, clock=None):
        """Build a custom message."""
        if clock is not None:
            message = 't={0:.6f} s: {1}'.format(clock, message)
        super().__init__('Simulation aborted: {0}'.format(message))


class OutputError(BDSException):
    """Raise when results cannot be written."""

    def __init__(self, path, cause):
        """Build a custom message."""
        self.path = path
        super().__init__(
            'Cannot write results to "{0}": {1}'.format(path, cause)
        )
