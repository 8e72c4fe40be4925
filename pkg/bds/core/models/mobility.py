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
"""User mobility inside a circular cell.

The default model is the Random Duration model: a UE alternates between
walks, with a uniformly drawn direction, speed and duration, and pauses of a
uniformly drawn duration. A walk that hits the cell boundary is reflected
specularly about the tangent at the hit point, as many times as needed, so
the UE population never changes and the stationary location distribution
stays uniform over the disk.

Positions are evaluated lazily at query time; a segment is just its start
point, start time and parameters.

>>> segment = Segment(start_pos=(499.0, 0.0), start_time=0.0,
...                   kind=SegmentKind.WALK, duration=2.0, speed=1.0)
>>> position_at(segment, 2.0, radius_m=500.0)
(499.0, 0.0)
"""

import enum
import math

import attr
import numpy as np
from scipy import stats

from bds.core import errors
from bds.core.models.streams import STREAMS, make_generator

TWO_PI = 2.0 * math.pi


class SegmentKind(enum.Enum):
    """Kind of a mobility segment."""

    WALK = 'walk'
    PAUSE = 'pause'


@attr.s(frozen=True, slots=True)
class Segment:
    """A straight walk or a pause starting at ``start_pos``."""

    start_pos = attr.ib(converter=tuple)
    start_time = attr.ib()
    kind = attr.ib()
    duration = attr.ib()
    direction = attr.ib(default=0.0)
    speed = attr.ib(default=0.0)

    @property
    def end_time(self):
        """Time at which the segment is over."""
        return self.start_time + self.duration

    @property
    def heading(self):
        """Unit vector of the initial walking direction."""
        return math.cos(self.direction), math.sin(self.direction)


def sample_uniform_disk(rng, radius_m, size=None):
    """Draw points uniformly distributed over a disk centred at the origin.

    The radial coordinate is ``R * sqrt(u)`` so that the area density is
    constant. With ``size`` an array of shape ``(size, 2)`` is returned.
    """
    r = radius_m * np.sqrt(rng.random(size))
    theta = rng.uniform(0.0, TWO_PI, size)
    if size is None:
        return float(r * math.cos(theta)), float(r * math.sin(theta))
    return np.column_stack((r * np.cos(theta), r * np.sin(theta)))


def next_segment(prev_end_pos, prev_end_time, rng, cfg, previous_kind=None):
    """Draw the Random Duration segment following ``previous_kind``.

    Walks and pauses alternate; the first segment of a UE is a walk or a
    pause with equal probability.
    """
    if previous_kind is None:
        walk = rng.random() < 0.5
    else:
        walk = previous_kind is SegmentKind.PAUSE

    if walk:
        direction = rng.uniform(0.0, TWO_PI)
        speed = rng.uniform(*cfg.speed_range_mps)
        duration = rng.uniform(*cfg.walk_range_s)
        return Segment(
            start_pos=prev_end_pos,
            start_time=prev_end_time,
            kind=SegmentKind.WALK,
            duration=float(duration),
            direction=float(direction),
            speed=float(speed),
        )

    return Segment(
        start_pos=prev_end_pos,
        start_time=prev_end_time,
        kind=SegmentKind.PAUSE,
        duration=float(rng.uniform(*cfg.pause_range_s)),
    )


def _walk(x, y, ux, uy, distance, radius):
    """Move ``distance`` from ``(x, y)`` reflecting off the circle."""
    while True:
        b = x * ux + y * uy
        c = min(x * x + y * y - radius * radius, 0.0)
        to_boundary = -b + math.sqrt(b * b - c)
        if distance <= to_boundary:
            return x + distance * ux, y + distance * uy

        x += to_boundary * ux
        y += to_boundary * uy
        norm = math.hypot(x, y)
        nx, ny = x / norm, y / norm
        x, y = radius * nx, radius * ny
        dot = ux * nx + uy * ny
        if dot == 0.0:
            # exactly tangent: tilt inwards so the next chord is not empty
            ux, uy = ux - 1e-12 * nx, uy - 1e-12 * ny
            scale = math.hypot(ux, uy)
            ux, uy = ux / scale, uy / scale
        else:
            ux, uy = ux - 2.0 * dot * nx, uy - 2.0 * dot * ny
        distance -= to_boundary


def position_at(segment, t, radius_m):
    """Return the position on ``segment`` at time ``t``."""
    if not segment.start_time <= t <= segment.end_time:
        raise errors.ParameterError(
            't={0!r} outside of segment [{1!r}, {2!r}].'.format(
                t, segment.start_time, segment.end_time
            ),
            param_hint='t'
        )
    x, y = segment.start_pos
    if segment.kind is SegmentKind.PAUSE:
        return x, y

    ux, uy = segment.heading
    distance = segment.speed * (t - segment.start_time)
    return _walk(x, y, ux, uy, distance, radius_m)


@attr.s
class RandomDurationMobility:
    """Random Duration model with pauses and boundary reflection."""

    cfg = attr.ib()

    def next_segment(self, position, time, rng, previous_kind=None):
        """Draw the next segment."""
        return next_segment(position, time, rng, self.cfg, previous_kind)


@attr.s
class RandomWaypointMobility:
    """Classic Random Waypoint model without pauses.

    The UE walks straight towards a waypoint drawn uniformly over the cell;
    chords of a disk never leave it, so no reflection happens.
    """

    cfg = attr.ib()

    def next_segment(self, position, time, rng, previous_kind=None):
        """Walk to a new uniformly drawn waypoint."""
        wx, wy = sample_uniform_disk(rng, self.cfg.cell_radius_m)
        dx, dy = wx - position[0], wy - position[1]
        speed = float(rng.uniform(*self.cfg.speed_range_mps))
        return Segment(
            start_pos=position,
            start_time=time,
            kind=SegmentKind.WALK,
            duration=math.hypot(dx, dy) / speed,
            direction=math.atan2(dy, dx),
            speed=speed,
        )


@attr.s
class StaticMobility:
    """UEs never move."""

    cfg = attr.ib(default=None)

    def next_segment(self, position, time, rng, previous_kind=None):
        """Pause forever."""
        return Segment(
            start_pos=position,
            start_time=time,
            kind=SegmentKind.PAUSE,
            duration=math.inf,
        )


MOBILITY_MODELS = {
    'random-duration': RandomDurationMobility,
    'random-waypoint': RandomWaypointMobility,
    'static': StaticMobility,
}
"""Available mobility models."""


def radial_ks_statistic(radii, radius_m):
    """Kolmogorov-Smirnov distance between radii and a uniform disk.

    Under a uniform location distribution ``P(r <= x) = (x / R) ** 2``.
    """

    def cdf(x):
        return np.clip((np.asarray(x) / radius_m)**2, 0.0, 1.0)

    return float(stats.kstest(np.asarray(radii), cdf).statistic)


def stationary_uniformity_check(
    cfg,
    n_samples,
    sample_interval_s=100.0,
    model='random-duration',
    seed=None,
):
    """Sample one long trajectory and test its radial distribution.

    A single UE starts at a uniformly drawn position and is sampled every
    ``sample_interval_s`` seconds; returns the KS statistic against
    ``(r / R) ** 2``.
    """
    if n_samples < 1:
        raise errors.ParameterError(
            'at least one sample is required.', param_hint='n_samples'
        )
    if sample_interval_s <= 0:
        raise errors.ParameterError(
            'must be positive.', param_hint='sample_interval_s'
        )
    try:
        mobility = MOBILITY_MODELS[model](cfg)
    except KeyError:
        raise errors.ParameterError(
            'unknown model {0!r}.'.format(model), param_hint='model'
        )

    radius = cfg.cell_radius_m
    rng = make_generator(
        cfg.seed if seed is None else seed, 0, STREAMS.index('mobility')
    )
    segment = mobility.next_segment(
        sample_uniform_disk(rng, radius), 0.0, rng
    )

    radii = np.empty(n_samples)
    t = 0.0
    for i in range(n_samples):
        t += sample_interval_s
        while segment.end_time < t:
            end = position_at(segment, segment.end_time, radius)
            segment = mobility.next_segment(
                end, segment.end_time, rng, segment.kind
            )
        radii[i] = math.hypot(*position_at(segment, t, radius))

    return radial_ks_statistic(radii, radius)
