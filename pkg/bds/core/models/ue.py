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
"""State of the simulated user equipment."""

import enum
import math

import attr
import numpy as np

from bds.core.models.mobility import SegmentKind, position_at

ORIGIN = (0.0, 0.0)
"""Position of the eNodeB."""


class Role(enum.Enum):
    """Cooperation role of a UE."""

    NORMAL = 'normal'
    HELPEE = 'helpee'
    HELPER = 'helper'


@attr.s(slots=True)
class UeState:
    """One device: mobility, battery, cooperation role and counters."""

    id = attr.ib()
    segment = attr.ib()
    battery_j = attr.ib()
    capacity_j = attr.ib()
    streams = attr.ib(default=None, repr=False, eq=False)

    initial_j = attr.ib(default=None)
    role = attr.ib(default=Role.NORMAL)
    assoc = attr.ib(default=None, repr=False)
    depleted_at = attr.ib(default=None)
    was_helpee = attr.ib(default=False)
    seeking_help = attr.ib(default=False)
    # (start time, battery before) of the burst that emptied the battery
    final_burst = attr.ib(default=None, repr=False)

    energy_spent_j = attr.ib(default=0.0)
    bytes_sent_direct = attr.ib(default=0)
    bytes_sent_d2d = attr.ib(default=0)
    bytes_relayed = attr.ib(default=0)

    fixed_shadow_db = attr.ib(default=attr.Factory(dict), repr=False)
    battery_at = attr.ib(default=attr.Factory(dict), repr=False)

    def __attrs_post_init__(self):
        """Remember the initial battery."""
        if self.initial_j is None:
            self.initial_j = self.battery_j

    @property
    def alive(self):
        """True until the battery is exhausted."""
        return self.depleted_at is None

    @property
    def battery_fraction(self):
        """Remaining battery relative to the capacity."""
        return self.battery_j / self.capacity_j

    def battery_at_time(self, t):
        """Battery level at ``t``, not before the last processed event.

        The burst that empties the battery drains it linearly until
        :attr:`depleted_at`.
        """
        if self.alive or self.final_burst is None or self.depleted_at <= t:
            return self.battery_j
        start, before = self.final_burst
        return before * (self.depleted_at - t) / (self.depleted_at - start)


class Population:
    """All UEs of a replication plus array mirrors for neighbour scans.

    The :class:`UeState` objects are authoritative; the arrays are updated
    through :meth:`update_segment`, :meth:`update_battery` and
    :meth:`update_availability` whenever the kernel changes a UE.
    """

    def __init__(self, ues, radius_m):
        """Build the array mirrors of ``ues``."""
        self.ues = list(ues)
        self.radius_m = radius_m

        n = len(self.ues)
        self._sx = np.zeros(n)
        self._sy = np.zeros(n)
        self._t0 = np.zeros(n)
        self._speed = np.zeros(n)
        self._ux = np.zeros(n)
        self._uy = np.zeros(n)
        self.battery_fraction = np.zeros(n)
        self.available = np.zeros(n, dtype=bool)

        for ue in self.ues:
            self.update_segment(ue)
            self.update_battery(ue)
            self.update_availability(ue)

    def __len__(self):
        """Return the number of UEs."""
        return len(self.ues)

    def __getitem__(self, ue_id):
        """Return the UE with ``ue_id``."""
        return self.ues[ue_id]

    def __iter__(self):
        """Iterate over UEs in id order."""
        return iter(self.ues)

    def update_segment(self, ue):
        """Mirror the current mobility segment of ``ue``."""
        segment = ue.segment
        self._sx[ue.id], self._sy[ue.id] = segment.start_pos
        self._t0[ue.id] = segment.start_time
        if segment.kind is SegmentKind.WALK:
            self._speed[ue.id] = segment.speed
            self._ux[ue.id], self._uy[ue.id] = segment.heading
        else:
            self._speed[ue.id] = 0.0

    def update_battery(self, ue):
        """Mirror the battery fraction of ``ue``."""
        self.battery_fraction[ue.id] = ue.battery_fraction

    def update_availability(self, ue):
        """Mirror whether ``ue`` may be picked as a helper."""
        self.available[ue.id] = (
            ue.alive and ue.role is Role.NORMAL and not ue.seeking_help
        )

    def position_of(self, ue, t):
        """Exact position of ``ue`` at ``t``."""
        return position_at(ue.segment, t, self.radius_m)

    def positions_at(self, ids, t):
        """Positions of the UEs ``ids`` at ``t`` as two arrays.

        Straight-line extrapolation is exact for walks that have not reached
        the boundary yet; the others are resolved by :func:`position_at`.
        """
        distance = self._speed[ids] * (t - self._t0[ids])
        xs = self._sx[ids] + distance * self._ux[ids]
        ys = self._sy[ids] + distance * self._uy[ids]

        outside = np.flatnonzero(xs * xs + ys * ys > self.radius_m**2)
        for k in outside:
            xs[k], ys[k] = self.position_of(self.ues[ids[k]], t)
        return xs, ys


def distance_m(a, b):
    """Euclidean distance between two points."""
    return math.hypot(a[0] - b[0], a[1] - b[1])
