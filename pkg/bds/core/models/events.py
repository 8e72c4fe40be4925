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
"""Simulation events and the event queue.

Events leave the queue in ``(time, seq)`` order, where ``seq`` is issued at
scheduling time, so simultaneous events keep their insertion order:

>>> queue = EventQueue()
>>> _ = queue.schedule(5.0, SimulationEnd())
>>> _ = queue.schedule(3.0, BurstArrival(ue_id=1))
>>> _ = queue.schedule(3.0, BurstArrival(ue_id=0))
>>> [event.kind for event in queue.drain()]
[BurstArrival(ue_id=1), BurstArrival(ue_id=0), SimulationEnd()]
"""

import heapq

import attr

from bds.core import errors


@attr.s(frozen=True, slots=True)
class BurstArrival:
    """A new uplink burst of ``ue_id`` is ready for transmission."""

    ue_id = attr.ib()


@attr.s(frozen=True, slots=True)
class SegmentEnd:
    """The current mobility segment of ``ue_id`` is over."""

    ue_id = attr.ib()


@attr.s(frozen=True, slots=True)
class Checkpoint:
    """Snapshot every battery at a target usage time."""

    target_s = attr.ib()


@attr.s(frozen=True, slots=True)
class SimulationEnd:
    """The simulation horizon is reached."""


@attr.s(frozen=True, slots=True)
class Event:
    """A timestamped simulation event."""

    time = attr.ib()
    seq = attr.ib()
    kind = attr.ib()


@attr.s
class EventQueue:
    """Priority queue of events ordered by ``(time, seq)``."""

    clock = attr.ib(default=0.0)
    _heap = attr.ib(default=attr.Factory(list), repr=False)
    _next_seq = attr.ib(default=0, repr=False)

    def __len__(self):
        """Return the number of pending events."""
        return len(self._heap)

    def schedule(self, time, kind):
        """Schedule ``kind`` at ``time`` and return the new event."""
        if time < self.clock:
            raise errors.SimulationError(
                'cannot schedule {0!r} in the past at {1!r}'.format(
                    kind, time
                ),
                clock=self.clock,
            )
        event = Event(time=time, seq=self._next_seq, kind=kind)
        self._next_seq += 1
        heapq.heappush(self._heap, (event.time, event.seq, event))
        return event

    def pop(self):
        """Remove the earliest event and advance the clock to it."""
        if not self._heap:
            raise errors.UsageError('The event queue is empty.')
        time, _, event = heapq.heappop(self._heap)
        if time < self.clock:
            raise errors.SimulationError(
                'event {0!r} is out of order'.format(event),
                clock=self.clock,
            )
        self.clock = time
        return event

    def drain(self):
        """Pop events until the queue is empty."""
        while self._heap:
            yield self.pop()
