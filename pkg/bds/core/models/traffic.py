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
"""Uplink workload of a UE.

Bursts arrive as a Poisson process and burst sizes are geometric on
``{1, 2, ...}`` bytes. The default mean burst size makes the byte rate of
the generator match the smartphone application mix in :data:`TRAFFIC_MIX`.
"""

import math

import attr

from bds.core import errors


@attr.s(frozen=True, slots=True)
class TrafficScenario:
    """One application type of the smartphone traffic mix."""

    name = attr.ib()
    weight = attr.ib()
    interarrival_s = attr.ib()
    size_bytes = attr.ib()

    @property
    def rate_bps(self):
        """Mean byte rate of the application, bytes per second."""
        return self.size_bytes / self.interarrival_s


TRAFFIC_MIX = (
    TrafficScenario('light background', 0.60, 10.0, 50),
    TrafficScenario('heavy background', 0.20, 0.5, 100),
    TrafficScenario('instant messaging', 0.10, 2.0, 100),
    TrafficScenario('gaming', 0.05, 0.1, 25),
    TrafficScenario('interactive content pull', 0.05, 0.01, 40),
)
"""Uplink application mix of a typical smartphone user."""


@attr.s(frozen=True, slots=True)
class Burst:
    """A chunk of uplink data ready at ``arrival_time``."""

    ue_id = attr.ib()
    arrival_time = attr.ib()
    size_bytes = attr.ib()

    @size_bytes.validator
    def _check_size(self, attribute, value):
        if value < 1:
            raise errors.ParameterError(
                'a burst carries at least one byte.', param_hint='size_bytes'
            )


def next_interarrival_s(rng, cfg, size=None):
    """Draw exponential inter-arrival times with the configured mean."""
    return rng.exponential(cfg.mean_interarrival_s, size)


def next_burst_size_bytes(rng, cfg, size=None):
    """Draw geometric burst sizes with the configured mean.

    The success probability is ``1 / mean_burst_bytes``; the support starts
    at one byte.
    """
    p = 1.0 / cfg.mean_burst_bytes
    if not 0 < p <= 1:
        raise errors.ParameterError(
            'the mean burst size must be at least one byte.',
            param_hint='mean_burst_bytes'
        )
    draw = rng.geometric(p, size)
    return int(draw) if size is None else draw


@attr.s(frozen=True)
class PoissonTraffic:
    """Default traffic model bound to a scenario."""

    cfg = attr.ib()

    def next_interarrival_s(self, rng):
        """Draw the delay until the next burst."""
        return float(next_interarrival_s(rng, self.cfg))

    def next_burst_size_bytes(self, rng):
        """Draw the size of a burst."""
        return next_burst_size_bytes(rng, self.cfg)


@attr.s(frozen=True, slots=True)
class RateCheck:
    """Byte rates of the generator and of the application mix."""

    generator_bps = attr.ib()
    mixture_bps = attr.ib()
    scenarios = attr.ib()

    @property
    def ratio(self):
        """Generator rate over mixture rate."""
        return self.generator_bps / self.mixture_bps


def mixture_rate_bps(scenarios=TRAFFIC_MIX):
    """Weighted mean byte rate of an application mix."""
    total_weight = math.fsum(s.weight for s in scenarios)
    if total_weight <= 0:
        raise errors.ParameterError(
            'weights must sum to a positive value.', param_hint='scenarios'
        )
    return math.fsum(s.weight * s.rate_bps for s in scenarios) / total_weight


def aggregate_rate_check(cfg, scenarios=TRAFFIC_MIX):
    """Compare the generator byte rate with the application mix rate.

    >>> from bds.core.models.scenario import ScenarioConfig
    >>> check = aggregate_rate_check(ScenarioConfig())
    >>> check.generator_bps, round(check.mixture_bps, 3)
    (260.0, 260.5)
    """
    return RateCheck(
        generator_bps=cfg.mean_burst_bytes / cfg.mean_interarrival_s,
        mixture_bps=mixture_rate_bps(scenarios),
        scenarios=tuple(scenarios),
    )
