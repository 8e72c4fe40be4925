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
"""Battery Deposit Service logic.

A UE with a low battery and a poor cellular link asks for help. Among the
healthy, unassociated UEs within the cooperation radius one helper is
chosen; from then on the helpee sends its bursts over a cheap D2D link and
the helper relays them to the eNodeB over its own cellular link. The pair
is re-checked at every burst of the helpee and torn down as soon as one of
the establishment guards fails.

Signaling is instantaneous and costs no energy; it is only counted.
"""

import enum

import attr
import numpy as np

from bds.core import errors
from bds.core.models.channel import LinkType, burst_duration_s, \
    burst_energy_j, cellular_link, d2d_link, shadow_sample
from bds.core.models.records import AssociationRecord
from bds.core.models.ue import ORIGIN, distance_m

SIGNALING_MESSAGES = (
    'BDSInitHelpRequest',
    'BDSHelpGranted',
    'BDSRequest',
    'BDSDiscovery',
)
"""Messages exchanged once per help request; each candidate adds a reply."""


Association = AssociationRecord
"""A live helper association and its audit trail."""


def signaling_messages(n_candidates):
    """Count the messages of one help request with ``n_candidates``."""
    return len(SIGNALING_MESSAGES) + n_candidates


@attr.s(frozen=True, slots=True)
class Candidate:
    """A potential helper as seen by the helpee."""

    ue_id = attr.ib()
    distance_m = attr.ib()
    battery_fraction = attr.ib()


@attr.s(frozen=True, slots=True)
class Debit:
    """Energy owed by one UE for one transmission."""

    ue_id = attr.ib()
    energy_j = attr.ib()
    duration_s = attr.ib()
    link_type = attr.ib()
    n_bytes = attr.ib()
    relayed = attr.ib(default=False)


class Verdict(enum.Enum):
    """Outcome of an association check."""

    KEEP = 'keep'
    OUT_OF_RANGE = 'out-of-range'
    HELPER_LOW_BATTERY = 'helper-low-battery'
    DEPLETED = 'depleted'
    EXPIRED = 'expired'


class SelectionStrategy:
    """Pick one helper from a candidate list.

    Subclasses implement :meth:`key`; the candidate with the smallest key
    wins and the UE id breaks ties. A strategy based on a virtual currency
    would plug in here by ranking candidates on their asking price.
    """

    name = None

    def key(self, candidate):
        """Return the ranking key of ``candidate``."""
        raise NotImplementedError

    def choose(self, candidates):
        """Return the winning candidate or ``None``."""
        if not candidates:
            return None
        return min(candidates, key=lambda c: (self.key(c), c.ue_id))


class Proximity(SelectionStrategy):
    """Select the closest candidate."""

    name = 'proximity'

    def key(self, candidate):
        """Rank by distance."""
        return candidate.distance_m


class MaxBattery(SelectionStrategy):
    """Select the candidate with the highest remaining battery."""

    name = 'max-battery'

    def key(self, candidate):
        """Rank by battery, highest first."""
        return -candidate.battery_fraction


STRATEGIES = {cls.name: cls for cls in (Proximity, MaxBattery)}
"""Registered helper selection strategies."""


def get_strategy(strategy):
    """Return a strategy instance for a name or pass an instance through."""
    if isinstance(strategy, SelectionStrategy):
        return strategy
    try:
        return STRATEGIES[strategy]()
    except KeyError:
        raise errors.ParameterError(
            '{0!r} is not one of {1}.'.format(
                strategy, ', '.join(STRATEGIES)
            ),
            param_hint='strategy'
        )


def needs_help(ue, pl_cellular_db, cfg):
    """Decide whether ``ue`` should ask for a helper.

    >>> from bds.core.models.scenario import ScenarioConfig
    >>> from bds.core.models.ue import UeState
    >>> ue = UeState(id=0, segment=None, battery_j=60.0, capacity_j=300.0)
    >>> needs_help(ue, 115.0, ScenarioConfig())
    True
    >>> needs_help(ue, 105.0, ScenarioConfig())
    False
    """
    return (
        ue.assoc is None and ue.battery_fraction < cfg.gamma1 and
        pl_cellular_db >= cfg.coop_pl_threshold_db
    )


def eligible_helpers(population, helpee, t, cfg, position=None):
    """List the UEs that may help ``helpee`` at ``t``.

    Candidates are alive, unassociated, above ``gamma2``, not left waiting
    for a helper at their own last burst and within ``coop_radius_m``. They
    are returned by id.
    """
    fraction = population.battery_fraction
    mask = population.available & (fraction > cfg.gamma2)
    mask[helpee.id] = False
    ids = np.flatnonzero(mask)
    if not ids.size:
        return []

    if position is None:
        position = population.position_of(helpee, t)
    xs, ys = population.positions_at(ids, t)
    distances = np.hypot(xs - position[0], ys - position[1])
    within = distances <= cfg.coop_radius_m

    return [
        Candidate(
            ue_id=int(ue_id),
            distance_m=float(d),
            battery_fraction=float(fraction[ue_id]),
        ) for ue_id, d in zip(ids[within], distances[within])
    ]


def select_helper(candidates, helpee=None, strategy='proximity'):
    """Return the id of the chosen helper or ``None``."""
    chosen = get_strategy(strategy).choose(
        [c for c in candidates if helpee is None or c.ue_id != helpee.id]
    )
    return None if chosen is None else chosen.ue_id


def maintain_association(assoc, t, population, cfg):
    """Re-check a live association at ``t``."""
    helpee = population[assoc.helpee_id]
    helper = population[assoc.helper_id]
    if not (helpee.alive and helper.alive):
        return Verdict.DEPLETED
    if helper.battery_fraction <= cfg.gamma2:
        return Verdict.HELPER_LOW_BATTERY
    if t - assoc.established_at > cfg.max_association_s:
        return Verdict.EXPIRED
    d = distance_m(
        population.position_of(helpee, t), population.position_of(helper, t)
    )
    if d > cfg.coop_radius_m:
        return Verdict.OUT_OF_RANGE
    return Verdict.KEEP


def draw_shadow(ue, link_type, rng, cfg):
    """Shadowing of a link of ``ue``, fresh or fixed per ``shadowing_mode``."""
    if cfg.shadowing_mode == 'per-ue':
        return ue.fixed_shadow_db.get(link_type, 0.0)
    return shadow_sample(rng, link_type, cfg)


def _debit(ue, sample, n_bytes, params, relayed=False):
    """Price one transmission of ``n_bytes`` over ``sample``."""
    return Debit(
        ue_id=ue.id,
        energy_j=burst_energy_j(
            sample.pl_db, n_bytes, params, sample.link_type
        ),
        duration_s=burst_duration_s(n_bytes, params),
        link_type=sample.link_type,
        n_bytes=n_bytes,
        relayed=relayed,
    )


def route_burst(
    burst, helpee, helper, positions, cfg, params, cellular=None
):
    """Return the energy debits caused by ``burst``.

    Without ``helper`` the sender pays for its own cellular transmission,
    reusing ``cellular`` when the caller has already drawn it. With a helper
    the sender pays for the D2D hop and the helper for relaying the same
    bytes over its cellular link; the helpee debit comes first.
    """
    if burst.ue_id != helpee.id:
        raise errors.ParameterError(
            'burst of UE {0} routed for UE {1}.'.format(
                burst.ue_id, helpee.id
            ),
            param_hint='burst'
        )
    position = positions[helpee.id]
    n_bytes = burst.size_bytes

    if helper is None:
        if cellular is None:
            cellular = cellular_link(
                distance_m(position, ORIGIN), cfg,
                draw_shadow(
                    helpee, LinkType.CELLULAR, helpee.streams.shadowing, cfg
                )
            )
        return [_debit(helpee, cellular, n_bytes, params)]

    helper_position = positions[helper.id]
    hop = d2d_link(
        distance_m(position, helper_position), cfg,
        draw_shadow(helpee, LinkType.D2D, helpee.streams.d2d_shadowing, cfg)
    )
    relay = cellular_link(
        distance_m(helper_position, ORIGIN), cfg,
        draw_shadow(
            helper, LinkType.CELLULAR, helper.streams.relay_shadowing, cfg
        )
    )
    return [
        _debit(helpee, hop, n_bytes, params),
        _debit(helper, relay, n_bytes, params, relayed=True),
    ]
