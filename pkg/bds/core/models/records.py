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
"""Outcomes of simulation runs."""

import attr

from bds.core import errors


@attr.s(frozen=True, slots=True)
class UsageRecord:
    """Per-UE outcome of one run: depletion time or remaining energy."""

    ue_id = attr.ib()
    initial_j = attr.ib()
    depleted_at = attr.ib()
    remaining_j = attr.ib()
    energy_spent_j = attr.ib(default=0.0)
    bytes_sent_direct = attr.ib(default=0)
    bytes_sent_d2d = attr.ib(default=0)
    bytes_relayed_for_others = attr.ib(default=0)
    was_helpee = attr.ib(default=False)
    battery_at = attr.ib(default=attr.Factory(dict), eq=False, repr=False)

    def __attrs_post_init__(self):
        """Check the record is self-consistent."""
        if (self.depleted_at is None) == (self.remaining_j == 0):
            raise errors.ParameterError(
                'depleted_at must be set exactly when remaining_j is 0.',
                param_hint=('depleted_at', 'remaining_j')
            )
        if min(
            self.bytes_sent_direct, self.bytes_sent_d2d,
            self.bytes_relayed_for_others
        ) < 0:
            raise errors.ParameterError('byte counters must not be negative.')

    @property
    def depleted(self):
        """True if the battery ran out during the run."""
        return self.depleted_at is not None

    def usage_time_s(self, horizon_s):
        """Depletion time, or ``horizon_s`` for a survivor."""
        return horizon_s if self.depleted_at is None else self.depleted_at

    def battery_at_target(self, target_s):
        """Battery snapshot taken at ``target_s``."""
        if target_s in self.battery_at:
            return self.battery_at[target_s]
        if target_s == 0:
            return self.initial_j
        raise errors.UsageError(
            'No battery snapshot for target {0} s of UE {1}.'.format(
                target_s, self.ue_id
            )
        )


@attr.s(slots=True)
class AssociationRecord:
    """Audit entry of one helper association."""

    helpee_id = attr.ib()
    helper_id = attr.ib()
    established_at = attr.ib()
    distance_m = attr.ib(default=None)
    helpee_fraction = attr.ib(default=None)
    helper_fraction = attr.ib(default=None)
    teardown_at = attr.ib(default=None)
    reason = attr.ib(default=None)
    bytes_relayed = attr.ib(default=0)

    @helper_id.validator
    def _check_partner(self, attribute, value):
        if value == self.helpee_id:
            raise errors.ParameterError(
                'a UE cannot help itself.', param_hint=attribute.name
            )

    @property
    def duration_s(self):
        """Lifetime of the association, ``None`` while it is open."""
        if self.teardown_at is None:
            return None
        return self.teardown_at - self.established_at


@attr.s(frozen=True, slots=True)
class Estimate:
    """Replication mean with a normal-approximation half-width."""

    mean = attr.ib()
    half_width = attr.ib(default=0.0)
    n = attr.ib(default=1)

    @property
    def low(self):
        """Lower confidence bound."""
        return self.mean - self.half_width

    @property
    def high(self):
        """Upper confidence bound."""
        return self.mean + self.half_width


def _fraction_estimate(instance, attribute, value):
    """Check that an estimated fraction lies in [0, 1]."""
    if value is not None and not 0 <= value.mean <= 1:
        raise errors.ParameterError(
            'must lie in [0, 1], got {0!r}.'.format(value.mean),
            param_hint=attribute.name
        )


@attr.s(frozen=True, slots=True)
class OutageReport:
    """Outage and valueless battery of both arms at one target."""

    target_s = attr.ib()
    n_replications = attr.ib()
    p_outage_coop = attr.ib(default=None, validator=_fraction_estimate)
    p_outage_noncoop = attr.ib(default=None, validator=_fraction_estimate)
    valueless_coop = attr.ib(default=None, validator=_fraction_estimate)
    valueless_noncoop = attr.ib(default=None, validator=_fraction_estimate)

    @property
    def target_h(self):
        """Target usage time in hours."""
        return self.target_s / 3600.0

    @property
    def outage_gap(self):
        """Non-cooperative minus cooperative outage probability."""
        if self.p_outage_coop is None or self.p_outage_noncoop is None:
            return None
        return self.p_outage_noncoop.mean - self.p_outage_coop.mean
