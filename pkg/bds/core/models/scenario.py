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
"""Scenario parameters of a single-cell cooperative relaying simulation.

Every field of :class:`ScenarioConfig` accepts either a typed value or its
textual form, so values read from a configuration file can be passed to the
constructor unchanged:

>>> cfg = ScenarioConfig(cell_radius_m='250', speed_range_mps='0.5, 2')
>>> cfg.cell_radius_m, cfg.speed_range_mps
(250.0, (0.5, 2.0))
>>> ScenarioConfig(gamma1=1.5)
Traceback (most recent call last):
...
bds.core.errors.ParameterError: Invalid parameter value for "gamma1": ...
"""

import math
from fractions import Fraction

import attr

from bds.core import errors

SHADOWING_MODES = ('per-burst', 'per-ue')
"""Valid values of ``shadowing_mode``."""

_TRUE = {'1', 'true', 'yes', 'on'}
_FALSE = {'0', 'false', 'no', 'off'}


def to_bool(value):
    """Convert a flag written as text."""
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in _TRUE:
        return True
    if text in _FALSE:
        return False
    raise errors.ParameterError('"{0}" is not a boolean.'.format(value))


def to_float(value):
    """Convert a number, accepting fractions such as ``1/3``."""
    if isinstance(value, str):
        text = value.strip()
        try:
            return float(text)
        except ValueError:
            try:
                return float(Fraction(text))
            except (ValueError, ZeroDivisionError):
                raise errors.ParameterError(
                    '"{0}" is not a number.'.format(value)
                )
    return float(value)


def to_int(value):
    """Convert an integer written as text."""
    if isinstance(value, str):
        try:
            return int(value.strip())
        except ValueError:
            raise errors.ParameterError(
                '"{0}" is not an integer.'.format(value)
            )
    return int(value)


def to_range(value):
    """Convert a ``low, high`` pair."""
    if isinstance(value, str):
        parts = [part for part in value.split(',') if part.strip()]
        if len(parts) != 2:
            raise errors.ParameterError(
                '"{0}" is not a "low, high" range.'.format(value)
            )
        value = parts
    low, high = value
    return to_float(low), to_float(high)


def _positive(instance, attribute, value):
    """Check that the value is strictly positive."""
    if not value > 0:
        raise errors.ParameterError(
            'must be positive, got {0!r}.'.format(value),
            param_hint=attribute.name
        )


def _nonnegative(instance, attribute, value):
    """Check that the value is not negative."""
    if not value >= 0:
        raise errors.ParameterError(
            'must not be negative, got {0!r}.'.format(value),
            param_hint=attribute.name
        )


def _open_unit_interval(instance, attribute, value):
    """Check that the value lies strictly between 0 and 1."""
    if not 0 < value < 1:
        raise errors.ParameterError(
            'must lie in (0, 1), got {0!r}.'.format(value),
            param_hint=attribute.name
        )


def _unit_interval(instance, attribute, value):
    """Check that the value lies in [0, 1]."""
    if not 0 <= value <= 1:
        raise errors.ParameterError(
            'must lie in [0, 1], got {0!r}.'.format(value),
            param_hint=attribute.name
        )


def _ordered_range(instance, attribute, value):
    """Check a nonnegative ``(low, high)`` range."""
    low, high = value
    if not 0 <= low <= high:
        raise errors.ParameterError(
            'expected 0 <= low <= high, got {0!r}.'.format(value),
            param_hint=attribute.name
        )


def _one_of(choices):
    """Check that the value is one of ``choices``."""

    def validate(instance, attribute, value):
        if value not in choices:
            raise errors.ParameterError(
                '{0!r} is not one of {1}.'.format(value, ', '.join(choices)),
                param_hint=attribute.name
            )

    return validate


def _strategy_name(instance, attribute, value):
    """Check that a helper selection strategy is registered."""
    from bds.core.models.protocol import STRATEGIES

    _one_of(tuple(STRATEGIES))(instance, attribute, value)


def _field(default, converter, validator=None, unit=None):
    """Define a unit-annotated scenario field."""
    return attr.ib(
        default=default,
        converter=converter,
        validator=validator,
        metadata={'unit': unit},
    )


@attr.s(frozen=True, slots=True)
class ScenarioConfig:
    """All parameters of one simulated scenario.

    Defaults are the nominal values of the reference scenario; the knobs
    after ``sim_end_s`` select modelling variants.
    """

    cell_radius_m = _field(500.0, to_float, _positive, 'm')
    n_ues = _field(500, to_int, _positive)
    mean_interarrival_s = _field(30.0, to_float, _positive, 's')
    mean_burst_bytes = _field(7800.0, to_float, _positive, 'bytes')
    speed_range_mps = _field((0.1, 3.0), to_range, _ordered_range, 'm/s')
    pause_range_s = _field((0.0, 300.0), to_range, _ordered_range, 's')
    walk_range_s = _field((30.0, 300.0), to_range, _ordered_range, 's')
    alpha = _field(0.8, to_float, _unit_interval)
    e_const_j = _field(0.015, to_float, _nonnegative, 'J')
    battery_capacity_j = _field(300.0, to_float, _positive, 'J')
    p0_dbm = _field(-69.0, to_float, unit='dBm')
    p_max_dbm = _field(24.0, to_float, unit='dBm')
    modulation_bits = _field(4, to_int, _positive, 'bit/symbol')
    code_rate = _field(1.0 / 3.0, to_float, _positive)
    fc_ghz = _field(2.0, to_float, _positive, 'GHz')
    h_enb_m = _field(25.0, to_float, _positive, 'm')
    h_ue_m = _field(1.5, to_float, _positive, 'm')
    n_walls = _field(1, to_int, _positive)
    gamma1 = _field(0.3, to_float, _open_unit_interval)
    gamma2 = _field(0.3, to_float, _open_unit_interval)
    coop_pl_threshold_db = _field(110.0, to_float, unit='dB')
    coop_radius_m = _field(30.0, to_float, _positive, 'm')
    cooperation_enabled = _field(True, to_bool)
    n_rbs = _field(1, to_int, _positive)
    shadow_sigma_cellular_db = _field(8.0, to_float, _nonnegative, 'dB')
    shadow_sigma_d2d_db = _field(4.0, to_float, _nonnegative, 'dB')
    d2d_p_min_dbm = _field(-40.0, to_float, unit='dBm')
    seed = _field(0, to_int, _nonnegative)
    sim_end_s = _field(24 * 3600.0, to_float, _positive, 's')

    shadowing_mode = _field(
        'per-burst', str, _one_of(SHADOWING_MODES)
    )
    trigger_uses_shadowing = _field(True, to_bool)
    strategy = _field('proximity', str, _strategy_name)
    max_association_s = _field(math.inf, to_float, _positive, 's')
    min_cellular_distance_m = _field(10.0, to_float, _positive, 'm')
    min_d2d_distance_m = _field(1.0, to_float, _positive, 'm')
    stop_when_all_depleted = _field(True, to_bool)

    def __attrs_post_init__(self):
        """Check constraints spanning several fields."""
        if self.p_max_dbm < self.p0_dbm:
            raise errors.ParameterError(
                'must not be below p0_dbm ({0}).'.format(self.p0_dbm),
                param_hint='p_max_dbm'
            )

    @classmethod
    def field_names(cls):
        """Return the names of all configurable fields."""
        return [field.name for field in attr.fields(cls)]

    @classmethod
    def unit_of(cls, name):
        """Return the unit annotation of a field."""
        return getattr(attr.fields(cls), name).metadata.get('unit')

    def to_items(self):
        """Return ``(key, text)`` pairs in declaration order."""
        return [(name, format_value(getattr(self, name)))
                for name in self.field_names()]


def format_value(value):
    """Format a configuration value as it is written in files."""
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, tuple):
        return ', '.join(format_value(v) for v in value)
    if isinstance(value, float):
        return repr(value)
    return str(value)
