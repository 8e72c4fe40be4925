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
"""Discrete-event simulation of one replication.

:func:`init_scenario` places the UEs, draws their batteries and schedules
their first events; :func:`run` then processes the queue until the horizon
or until every battery is empty and returns one
:class:`~bds.core.models.records.UsageRecord` per UE.
"""

import logging
import math

import attr

from bds.core import errors
from bds.core.models import protocol
from bds.core.models.channel import LinkType, PowerParams, cellular_link, \
    shadow_sample
from bds.core.models.events import BurstArrival, Checkpoint, EventQueue, \
    SegmentEnd, SimulationEnd
from bds.core.models.mobility import RandomDurationMobility, \
    sample_uniform_disk
from bds.core.models.records import UsageRecord
from bds.core.models.streams import UeStreams
from bds.core.models.traffic import Burst, PoissonTraffic
from bds.core.models.ue import ORIGIN, Population, Role, UeState, \
    distance_m

logger = logging.getLogger(__name__)


@attr.s
class SimState:
    """Everything one replication owns."""

    cfg = attr.ib()
    population = attr.ib()
    queue = attr.ib()
    traffic = attr.ib()
    mobility = attr.ib()
    strategy = attr.ib()
    params = attr.ib()
    checkpoints_s = attr.ib(default=())

    associations = attr.ib(default=attr.Factory(list), repr=False)
    n_alive = attr.ib(default=0)
    end_time = attr.ib(default=None)

    bytes_generated = attr.ib(default=0)
    bytes_to_enb = attr.ib(default=0)
    help_requests = attr.ib(default=0)
    signaling_messages = attr.ib(default=0)

    @property
    def ues(self):
        """UEs in id order."""
        return self.population.ues

    @property
    def clock(self):
        """Current simulation time."""
        return self.queue.clock


def _check_position(position, radius_m, ue_id):
    """Reject explicit positions outside of the cell."""
    if math.hypot(*position) > radius_m * (1.0 + 1e-9):
        raise errors.ParameterError(
            'UE {0} at {1!r} lies outside the cell.'.format(ue_id, position),
            param_hint='positions'
        )


def init_scenario(
    cfg,
    positions=None,
    batteries_j=None,
    traffic=None,
    mobility=None,
    strategy=None,
    checkpoints_s=(),
):
    """Build the initial state of a replication.

    ``positions`` and ``batteries_j`` override the random placement and
    initial batteries; ``traffic``, ``mobility`` and ``strategy`` replace
    the models named by ``cfg``. A battery snapshot is taken at every time
    in ``checkpoints_s`` not after the horizon.
    """
    if positions is not None and len(positions) != cfg.n_ues:
        raise errors.ParameterError(
            'expected {0} positions.'.format(cfg.n_ues),
            param_hint='positions'
        )
    if batteries_j is not None and len(batteries_j) != cfg.n_ues:
        raise errors.ParameterError(
            'expected {0} batteries.'.format(cfg.n_ues),
            param_hint='batteries_j'
        )

    radius = cfg.cell_radius_m
    capacity = cfg.battery_capacity_j
    traffic = traffic or PoissonTraffic(cfg)
    mobility = mobility or RandomDurationMobility(cfg)

    ues = []
    for ue_id in range(cfg.n_ues):
        streams = UeStreams.for_ue(cfg.seed, ue_id)
        if positions is None:
            position = sample_uniform_disk(streams.placement, radius)
        else:
            position = tuple(float(v) for v in positions[ue_id])
            _check_position(position, radius, ue_id)

        # uniform on (0, 1]
        battery = (1.0 - streams.placement.random()) * capacity
        if batteries_j is not None:
            battery = float(batteries_j[ue_id])
            if not 0 <= battery <= capacity:
                raise errors.ParameterError(
                    'UE {0} battery {1!r} J outside [0, {2}].'.format(
                        ue_id, battery, capacity
                    ),
                    param_hint='batteries_j'
                )

        ue = UeState(
            id=ue_id,
            segment=mobility.next_segment(position, 0.0, streams.mobility),
            battery_j=battery,
            capacity_j=capacity,
            streams=streams,
        )
        if cfg.shadowing_mode == 'per-ue':
            ue.fixed_shadow_db = {
                LinkType.CELLULAR:
                    shadow_sample(streams.shadowing, LinkType.CELLULAR, cfg),
                LinkType.D2D:
                    shadow_sample(streams.d2d_shadowing, LinkType.D2D, cfg),
            }
        if battery == 0:
            ue.depleted_at = 0.0
        ues.append(ue)

    state = SimState(
        cfg=cfg,
        population=Population(ues, radius),
        queue=EventQueue(),
        traffic=traffic,
        mobility=mobility,
        strategy=protocol.get_strategy(strategy or cfg.strategy),
        params=PowerParams.from_config(cfg),
        checkpoints_s=tuple(sorted(set(checkpoints_s))),
        n_alive=sum(1 for ue in ues if ue.alive),
    )

    queue = state.queue
    # checkpoints first so that one at the horizon pops before the end
    for target in state.checkpoints_s:
        if 0 <= target <= cfg.sim_end_s:
            queue.schedule(target, Checkpoint(target))
    queue.schedule(cfg.sim_end_s, SimulationEnd())

    for ue in ues:
        if not ue.alive:
            continue
        queue.schedule(
            traffic.next_interarrival_s(ue.streams.traffic),
            BurstArrival(ue.id)
        )
        if math.isfinite(ue.segment.end_time):
            queue.schedule(ue.segment.end_time, SegmentEnd(ue.id))

    return state


def _establish(state, helpee, helper, t, distance):
    """Create an association after re-checking its guards."""
    cfg = state.cfg
    if not (
        distance <= cfg.coop_radius_m and
        helper.battery_fraction > cfg.gamma2 and
        helpee.battery_fraction < cfg.gamma1 and helpee.assoc is None and
        helper.assoc is None and helper.alive and helpee.alive
    ):
        raise errors.SimulationError(
            'association {0} -> {1} violates its guards'.format(
                helpee.id, helper.id
            ),
            clock=t,
        )
    assoc = protocol.Association(
        helpee_id=helpee.id,
        helper_id=helper.id,
        established_at=t,
        distance_m=distance,
        helpee_fraction=helpee.battery_fraction,
        helper_fraction=helper.battery_fraction,
    )
    helpee.assoc = helper.assoc = assoc
    helpee.role, helper.role = Role.HELPEE, Role.HELPER
    helpee.was_helpee = True
    state.associations.append(assoc)
    state.population.update_availability(helpee)
    state.population.update_availability(helper)
    logger.debug(
        't=%.3f association %d -> %d at %.1f m', t, helpee.id, helper.id,
        distance
    )
    return assoc


def _teardown(state, assoc, t, verdict):
    """Close an association."""
    population = state.population
    helpee = population[assoc.helpee_id]
    helper = population[assoc.helper_id]
    for ue in (helpee, helper):
        if ue.assoc is not assoc:
            raise errors.SimulationError(
                'UE {0} lost track of its association'.format(ue.id),
                clock=t,
            )
        ue.assoc = None
        ue.role = Role.NORMAL
        population.update_availability(ue)
    assoc.teardown_at = t
    assoc.reason = verdict.value
    logger.debug(
        't=%.3f teardown %d -> %d: %s', t, helpee.id, helper.id,
        verdict.value
    )


def _find_helper(state, ue, t, position, cellular):
    """Return the helper ``ue`` relays through for a burst at ``t``."""
    cfg = state.cfg
    population = state.population
    if ue.role is Role.HELPER:
        return None

    if ue.role is Role.HELPEE:
        verdict = protocol.maintain_association(ue.assoc, t, population, cfg)
        if verdict is protocol.Verdict.KEEP:
            return population[ue.assoc.helper_id]
        _teardown(state, ue.assoc, t, verdict)

    pl = cellular.pl_db if cfg.trigger_uses_shadowing else cellular.pl_det_db
    if not protocol.needs_help(ue, pl, cfg):
        _set_seeking(state, ue, False)
        return None

    candidates = protocol.eligible_helpers(population, ue, t, cfg, position)
    state.help_requests += 1
    state.signaling_messages += protocol.signaling_messages(len(candidates))
    helper_id = protocol.select_helper(candidates, ue, state.strategy)
    if helper_id is None:
        _set_seeking(state, ue, True)
        return None

    candidate = next(c for c in candidates if c.ue_id == helper_id)
    helper = population[helper_id]
    _set_seeking(state, ue, False)
    _establish(state, ue, helper, t, candidate.distance_m)
    return helper


def _set_seeking(state, ue, seeking):
    """Record whether ``ue`` is left waiting for a helper."""
    if ue.seeking_help != seeking:
        ue.seeking_help = seeking
        state.population.update_availability(ue)


def _apply(state, debit, t):
    """Take the energy of ``debit`` from its UE."""
    ue = state.population[debit.ue_id]
    if not ue.alive:
        raise errors.SimulationError(
            'debit of {0:.6f} J for depleted UE {1}'.format(
                debit.energy_j, ue.id
            ),
            clock=t,
        )
    if debit.energy_j < 0:
        raise errors.SimulationError(
            'negative debit for UE {0}'.format(ue.id), clock=t
        )

    if debit.energy_j >= ue.battery_j:
        spent = ue.battery_j
        ue.final_burst = (t, spent)
        ue.depleted_at = t + debit.duration_s * spent / debit.energy_j
        ue.battery_j = 0.0
        state.n_alive -= 1
        logger.debug('t=%.3f UE %d depleted', ue.depleted_at, ue.id)
    else:
        spent = debit.energy_j
        ue.battery_j -= spent
    ue.energy_spent_j += spent

    if debit.link_type is LinkType.D2D:
        ue.bytes_sent_d2d += debit.n_bytes
    elif debit.relayed:
        ue.bytes_relayed += debit.n_bytes
        ue.assoc.bytes_relayed += debit.n_bytes
        state.bytes_to_enb += debit.n_bytes
    else:
        ue.bytes_sent_direct += debit.n_bytes
        state.bytes_to_enb += debit.n_bytes

    state.population.update_battery(ue)
    if not ue.alive:
        state.population.update_availability(ue)


def _on_burst(state, t, kind):
    ue = state.population[kind.ue_id]
    if not ue.alive:
        return
    cfg = state.cfg
    population = state.population

    burst = Burst(
        ue_id=ue.id,
        arrival_time=t,
        size_bytes=state.traffic.next_burst_size_bytes(ue.streams.traffic),
    )
    state.bytes_generated += burst.size_bytes

    position = population.position_of(ue, t)
    cellular = cellular_link(
        distance_m(position, ORIGIN), cfg,
        protocol.draw_shadow(
            ue, LinkType.CELLULAR, ue.streams.shadowing, cfg
        )
    )

    helper = None
    if cfg.cooperation_enabled:
        helper = _find_helper(state, ue, t, position, cellular)

    positions = {ue.id: position}
    if helper is not None:
        positions[helper.id] = population.position_of(helper, t)
    debits = protocol.route_burst(
        burst, ue, helper, positions, cfg, state.params, cellular=cellular
    )
    for debit in debits:
        _apply(state, debit, t)

    # the burst is settled under the routing it started with
    assoc = ue.assoc
    if assoc is not None and not (
        population[assoc.helpee_id].alive and
        population[assoc.helper_id].alive
    ):
        _teardown(state, assoc, t, protocol.Verdict.DEPLETED)

    if ue.alive:
        state.queue.schedule(
            t + state.traffic.next_interarrival_s(ue.streams.traffic),
            BurstArrival(ue.id)
        )


def _on_segment_end(state, t, kind):
    ue = state.population[kind.ue_id]
    if not ue.alive:
        return
    segment = ue.segment
    end = state.population.position_of(ue, t)
    ue.segment = state.mobility.next_segment(
        end, t, ue.streams.mobility, segment.kind
    )
    state.population.update_segment(ue)
    if math.isfinite(ue.segment.end_time):
        state.queue.schedule(ue.segment.end_time, SegmentEnd(ue.id))


def _on_checkpoint(state, t, kind):
    for ue in state.population:
        ue.battery_at[kind.target_s] = ue.battery_at_time(kind.target_s)


_HANDLERS = {
    BurstArrival: _on_burst,
    SegmentEnd: _on_segment_end,
    Checkpoint: _on_checkpoint,
}


def usage_record(ue):
    """Summarize the outcome of ``ue``."""
    return UsageRecord(
        ue_id=ue.id,
        initial_j=ue.initial_j,
        depleted_at=ue.depleted_at,
        remaining_j=ue.battery_j,
        energy_spent_j=ue.energy_spent_j,
        bytes_sent_direct=ue.bytes_sent_direct,
        bytes_sent_d2d=ue.bytes_sent_d2d,
        bytes_relayed_for_others=ue.bytes_relayed,
        was_helpee=ue.was_helpee,
        battery_at=dict(ue.battery_at),
    )


def run(state):
    """Process events until the horizon or until every UE is depleted."""
    cfg = state.cfg
    queue = state.queue
    logger.info(
        'seed %d: %d UEs, cooperation %s', cfg.seed, cfg.n_ues,
        'on' if cfg.cooperation_enabled else 'off'
    )

    stopped_early = False
    while queue:
        if state.n_alive == 0 and cfg.stop_when_all_depleted:
            stopped_early = True
            break
        event = queue.pop()
        if isinstance(event.kind, SimulationEnd):
            break
        _HANDLERS[type(event.kind)](state, event.time, event.kind)

    state.end_time = queue.clock
    if stopped_early:
        # batteries no longer change, pending snapshots are known already
        for event in queue.drain():
            if isinstance(event.kind, Checkpoint):
                _on_checkpoint(state, event.time, event.kind)

    for ue in state.population:
        if ue.battery_j < 0:
            raise errors.SimulationError(
                'UE {0} has a negative battery'.format(ue.id),
                clock=state.end_time,
            )

    logger.info(
        'seed %d: finished at t=%.1f s, %d of %d UEs alive', cfg.seed,
        state.end_time, state.n_alive, cfg.n_ues
    )
    return [usage_record(ue) for ue in state.population]


def simulate(cfg, checkpoints_s=(), **overrides):
    """Initialize and run one replication."""
    state = init_scenario(cfg, checkpoints_s=checkpoints_s, **overrides)
    return run(state), state
