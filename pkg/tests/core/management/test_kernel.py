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
"""Simulation kernel tests."""

import math

import attr
import pytest

from bds.core import errors
from bds.core.management.kernel import init_scenario, run, simulate
from bds.core.models.channel import LinkType, PowerParams, \
    burst_duration_s, burst_energy_j, pl_winner_a1, pl_winner_c2
from bds.core.models.ue import Role

INTERARRIVAL_S = 30.0
BURST_BYTES = 7800


def _depletion_time(battery_j, energy_j, duration_s, first_slot=0):
    """Closed-form depletion time of a UE paying ``energy_j`` per burst.

    Bursts happen at multiples of the inter-arrival time; the burst that
    empties the battery is cut short in proportion to what was left.
    """
    full_bursts = math.floor(battery_j / energy_j)
    left_j = battery_j - full_bursts * energy_j
    return (
        (first_slot + full_bursts + 1) * INTERARRIVAL_S +
        duration_s * left_j / energy_j
    )


def _cellular_energy(distance_m, params):
    return burst_energy_j(
        pl_winner_c2(distance_m, 25.0, 1.5, 2.0), BURST_BYTES, params
    )


def test_empty_battery_is_depleted_at_start(
    deterministic_config, constant_traffic, static_mobility
):
    """A UE starting with 0 J is depleted at time 0 and never transmits."""
    records, state = simulate(
        deterministic_config,
        positions=[(0.0, 100.0), (0.0, -100.0), (100.0, 0.0)],
        batteries_j=[0.0, 1.0, 1.0],
        traffic=constant_traffic,
        mobility=static_mobility,
    )
    assert records[0].depleted_at == 0.0
    assert records[0].remaining_j == 0.0
    assert records[0].energy_spent_j == 0.0
    assert records[0].bytes_sent_direct == 0
    assert all(record.depleted for record in records)
    assert state.n_alive == 0


def test_single_ue_closed_form(
    deterministic_config, constant_traffic, static_mobility
):
    """A lonely UE depletes exactly when its bursts have used its energy."""
    cfg = attr.evolve(deterministic_config, n_ues=1)
    records, state = simulate(
        cfg,
        positions=[(100.0, 0.0)],
        batteries_j=[3.0],
        traffic=constant_traffic,
        mobility=static_mobility,
    )
    params = PowerParams.from_config(cfg)
    energy = _cellular_energy(100.0, params)
    duration = burst_duration_s(BURST_BYTES, params)

    expected = _depletion_time(3.0, energy, duration)
    assert records[0].depleted_at == pytest.approx(expected, rel=1e-6)
    assert records[0].energy_spent_j == pytest.approx(3.0)
    assert records[0].bytes_sent_direct == \
        (math.floor(3.0 / energy) + 1) * BURST_BYTES
    assert state.end_time == pytest.approx(
        math.floor(expected / INTERARRIVAL_S) * INTERARRIVAL_S
    )


def test_three_ue_relaying(
    deterministic_config, constant_traffic, static_mobility
):
    """One helpee, its only possible helper and a distant bystander.

    UE 0 relays every burst through UE 1 until it is empty; UE 1 pays for
    its own bursts plus the relayed ones; UE 2 is out of reach and sends
    directly.
    """
    records, state = simulate(
        deterministic_config,
        positions=[(200.0, 0.0), (210.0, 0.0), (-200.0, 0.0)],
        batteries_j=[3.0, 150.0, 20.0],
        traffic=constant_traffic,
        mobility=static_mobility,
    )
    params = PowerParams.from_config(deterministic_config)
    duration = burst_duration_s(BURST_BYTES, params)
    d2d_energy = burst_energy_j(
        pl_winner_a1(10.0, 1, 2.0), BURST_BYTES, params, LinkType.D2D
    )
    helper_energy = _cellular_energy(210.0, params)
    bystander_energy = _cellular_energy(200.0, params)
    assert d2d_energy == pytest.approx(0.01502, abs=1e-5)
    assert helper_energy == pytest.approx(0.08497, abs=1e-5)

    helpee_end = _depletion_time(3.0, d2d_energy, duration)
    relayed_slots = math.floor(3.0 / d2d_energy) + 1
    assert relayed_slots == 200
    helper_left = 150.0 - 2 * relayed_slots * helper_energy
    helper_end = _depletion_time(
        helper_left, helper_energy, duration, first_slot=relayed_slots
    )
    bystander_end = _depletion_time(20.0, bystander_energy, duration)

    helpee, helper, bystander = records
    assert helpee.depleted_at == pytest.approx(helpee_end, rel=1e-6)
    assert helper.depleted_at == pytest.approx(helper_end, rel=1e-6)
    assert bystander.depleted_at == pytest.approx(bystander_end, rel=1e-6)

    assert helpee.was_helpee
    assert helpee.bytes_sent_d2d == relayed_slots * BURST_BYTES
    assert helpee.bytes_sent_direct == 0
    assert helper.bytes_relayed_for_others == relayed_slots * BURST_BYTES
    assert not helper.was_helpee
    assert bystander.bytes_sent_d2d == 0

    assoc, = state.associations
    assert (assoc.helpee_id, assoc.helper_id) == (0, 1)
    assert assoc.established_at == INTERARRIVAL_S
    assert assoc.teardown_at == relayed_slots * INTERARRIVAL_S
    assert assoc.reason == 'depleted'
    assert assoc.distance_m == pytest.approx(10.0)
    assert assoc.bytes_relayed == relayed_slots * BURST_BYTES
    assert state.end_time == pytest.approx(
        math.floor(helper_end / INTERARRIVAL_S) * INTERARRIVAL_S
    )


def test_without_cooperation_everybody_sends_directly(
    deterministic_config, constant_traffic, static_mobility
):
    """The non-cooperative arm never associates."""
    cfg = attr.evolve(deterministic_config, cooperation_enabled=False)
    records, state = simulate(
        cfg,
        positions=[(200.0, 0.0), (210.0, 0.0), (-200.0, 0.0)],
        batteries_j=[3.0, 150.0, 20.0],
        traffic=constant_traffic,
        mobility=static_mobility,
    )
    params = PowerParams.from_config(cfg)
    duration = burst_duration_s(BURST_BYTES, params)
    assert state.associations == []
    assert state.help_requests == 0
    assert records[0].depleted_at == pytest.approx(
        _depletion_time(3.0, _cellular_energy(200.0, params), duration),
        rel=1e-6
    )


def _cooperative(cfg):
    """Make help requests frequent in a small cell."""
    return attr.evolve(cfg, coop_pl_threshold_db=90.0, gamma2=0.2)


def test_conservation(small_config):
    """Energy and bytes are neither created nor lost."""
    records, state = simulate(_cooperative(small_config))
    assert state.associations

    for record in records:
        assert record.remaining_j >= 0
        assert record.initial_j - record.remaining_j == pytest.approx(
            record.energy_spent_j, abs=1e-9
        )
    sent = sum(r.bytes_sent_direct + r.bytes_sent_d2d for r in records)
    relayed = sum(r.bytes_relayed_for_others for r in records)
    assert sent == state.bytes_generated
    assert relayed == sum(r.bytes_sent_d2d for r in records)
    assert state.bytes_to_enb == state.bytes_generated
    assert relayed == sum(a.bytes_relayed for a in state.associations)


def test_association_invariants(small_config):
    """A UE takes part in at most one association at a time."""
    records, state = simulate(_cooperative(small_config))
    end = state.end_time

    intervals = {}
    for assoc in state.associations:
        assert assoc.helper_id != assoc.helpee_id
        assert assoc.distance_m <= small_config.coop_radius_m
        assert assoc.helpee_fraction < small_config.gamma1
        assert assoc.helper_fraction > 0.2
        stop = end if assoc.teardown_at is None else assoc.teardown_at
        assert stop >= assoc.established_at
        for ue_id in (assoc.helpee_id, assoc.helper_id):
            intervals.setdefault(ue_id, []).append(
                (assoc.established_at, stop)
            )

    for spans in intervals.values():
        spans.sort()
        for (_, previous_end), (start, _) in zip(spans, spans[1:]):
            assert start >= previous_end

    for ue in state.ues:
        if ue.role is Role.NORMAL:
            assert ue.assoc is None
        else:
            assert ue.assoc.teardown_at is None
            assert ue.alive

    assert all(
        records[a.helpee_id].was_helpee for a in state.associations
    )


def test_determinism(small_config):
    """The same seed reproduces the same run."""
    cfg = _cooperative(small_config)
    first, first_state = simulate(cfg, checkpoints_s=(1800.0, ))
    second, second_state = simulate(cfg, checkpoints_s=(1800.0, ))
    assert first == second
    assert [r.battery_at for r in first] == [r.battery_at for r in second]
    assert first_state.associations == second_state.associations
    assert first_state.end_time == second_state.end_time

    other, _ = simulate(attr.evolve(cfg, seed=cfg.seed + 1))
    assert other != first


def test_arms_share_initial_conditions(small_config):
    """Cooperation does not change placements or initial batteries."""
    noncoop_config = attr.evolve(small_config, cooperation_enabled=False)
    coop, _ = simulate(small_config)
    noncoop, _ = simulate(noncoop_config)
    assert [r.initial_j for r in coop] == [r.initial_j for r in noncoop]

    segments = [ue.segment for ue in init_scenario(small_config).ues]
    assert segments == [ue.segment for ue in init_scenario(noncoop_config).ues]


def test_checkpoints(small_config):
    """Batteries are snapshot at every target within the horizon."""
    records, _ = simulate(
        small_config, checkpoints_s=(3600.0, 1800.0, 99999.0)
    )
    for record in records:
        assert set(record.battery_at) == {1800.0, 3600.0}
        assert record.initial_j >= record.battery_at[1800.0] >= \
            record.battery_at[3600.0] >= record.remaining_j
        if record.depleted_at is not None and record.depleted_at < 1800.0:
            assert record.battery_at[1800.0] == 0.0


def test_stops_when_everybody_is_depleted(small_config):
    """Without survivors the run ends early and snapshots stay complete."""
    cfg = attr.evolve(small_config, battery_capacity_j=0.5)
    records, state = simulate(cfg, checkpoints_s=(3600.0, 7200.0))
    assert state.end_time < cfg.sim_end_s
    assert all(record.depleted for record in records)
    assert all(
        record.battery_at == {3600.0: 0.0, 7200.0: 0.0} for record in records
    )
    last = max(record.depleted_at for record in records)
    assert last - INTERARRIVAL_S < state.end_time <= last

    _, state = simulate(attr.evolve(cfg, stop_when_all_depleted=False))
    assert state.end_time == cfg.sim_end_s


def test_survivors_at_the_horizon(small_config):
    """UEs alive at the horizon keep their remaining energy."""
    cfg = attr.evolve(small_config, sim_end_s=600.0)
    records, state = simulate(cfg)
    assert state.end_time == 600.0
    survivors = [r for r in records if not r.depleted]
    assert survivors
    assert all(r.remaining_j > 0 for r in survivors)


def test_per_ue_shadowing(small_config):
    """Fixed shadowing per UE is drawn once at start."""
    cfg = attr.evolve(small_config, shadowing_mode='per-ue')
    state = init_scenario(cfg)
    shadows = [ue.fixed_shadow_db[LinkType.CELLULAR] for ue in state.ues]
    assert len(set(shadows)) == len(shadows)
    records = run(state)
    assert len(records) == cfg.n_ues


def test_init_validation(deterministic_config):
    """Explicit placements and batteries are checked."""
    with pytest.raises(errors.ParameterError):
        init_scenario(deterministic_config, positions=[(0.0, 0.0)])
    with pytest.raises(errors.ParameterError):
        init_scenario(
            deterministic_config,
            positions=[(0.0, 0.0), (0.0, 0.0), (600.0, 0.0)]
        )
    with pytest.raises(errors.ParameterError):
        init_scenario(deterministic_config, batteries_j=[1.0, 2.0, 301.0])


def test_initial_batteries_are_uniform(config):
    """Initial batteries are uniform on (0, capacity]."""
    state = init_scenario(config)
    batteries = [ue.battery_j for ue in state.ues]
    assert 0 < min(batteries) and max(batteries) <= config.battery_capacity_j
    assert sum(batteries) / len(batteries) == pytest.approx(150.0, rel=0.1)
    assert all(math.hypot(*ue.segment.start_pos) <= 500.0 for ue in state.ues)


def test_checkpoint_at_the_horizon(small_config):
    """A snapshot taken at the horizon sees every UE."""
    cfg = attr.evolve(small_config, sim_end_s=1800.0)
    records, state = simulate(cfg, checkpoints_s=(1800.0, ))
    assert state.end_time == 1800.0
    survivors = [r for r in records if not r.depleted]
    assert survivors
    for record in records:
        assert set(record.battery_at) == {1800.0}
    for record in survivors:
        assert record.battery_at[1800.0] == record.remaining_j


def test_snapshot_during_the_final_burst(
    deterministic_config, constant_traffic, static_mobility
):
    """A snapshot inside the emptying burst is interpolated linearly."""
    cfg = attr.evolve(deterministic_config, n_ues=1)
    params = PowerParams.from_config(cfg)
    energy = _cellular_energy(100.0, params)
    duration = burst_duration_s(BURST_BYTES, params)
    battery = energy / 2
    target = INTERARRIVAL_S + duration / 4

    records, _ = simulate(
        cfg,
        positions=[(100.0, 0.0)],
        batteries_j=[battery],
        traffic=constant_traffic,
        mobility=static_mobility,
        checkpoints_s=(target, INTERARRIVAL_S + duration),
    )
    record, = records
    assert record.depleted_at == pytest.approx(INTERARRIVAL_S + duration / 2)
    assert record.depleted_at > target
    assert record.battery_at[target] == pytest.approx(battery / 2)
    assert record.battery_at[INTERARRIVAL_S + duration] == 0.0


def test_battery_never_increases(small_config):
    """Snapshots of every battery only go down over time."""
    targets = tuple(600.0 * k for k in range(1, 13))
    records, _ = simulate(_cooperative(small_config), checkpoints_s=targets)
    for record in records:
        levels = [record.initial_j]
        levels += [record.battery_at[t] for t in targets]
        levels.append(record.remaining_j)
        assert all(a >= b for a, b in zip(levels, levels[1:]))
    assert any(record.was_helpee for record in records)


def _waiting_pair(cfg, batteries_j, traffic, mobility):
    return simulate(
        cfg,
        positions=[(200.0, 0.0), (210.0, 0.0)],
        batteries_j=batteries_j,
        traffic=traffic,
        mobility=mobility,
    )


def test_waiting_helpee_is_not_a_helper(
    deterministic_config, constant_traffic, static_mobility
):
    """A UE refused a helper is skipped until its next burst."""
    cfg = attr.evolve(
        deterministic_config, n_ues=2, gamma1=0.5, gamma2=0.3, sim_end_s=600.0
    )
    # UE 0 sits between the thresholds and asks first
    _, state = _waiting_pair(
        cfg, [120.0, 30.0], constant_traffic, static_mobility
    )
    assert state.associations == []
    # bursts at 30 s to 570 s, the one at the horizon is not processed
    assert state.help_requests == 2 * 19

    # asking first, the low UE finds the other one still free
    _, state = _waiting_pair(
        cfg, [30.0, 120.0], constant_traffic, static_mobility
    )
    assoc = state.associations[0]
    assert (assoc.helpee_id, assoc.helper_id) == (0, 1)
    assert assoc.established_at == INTERARRIVAL_S
    assert assoc.helper_fraction == pytest.approx(0.4)
