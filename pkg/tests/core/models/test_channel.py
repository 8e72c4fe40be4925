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
"""Channel and energy model tests."""

import math

import numpy as np
import pytest

from bds.core import errors
from bds.core.models.channel import LinkType, PowerParams, \
    burst_duration_s, burst_energy_j, cellular_link, d2d_link, dbm_to_watt, \
    link_budget_report, link_sample, pl_umts_pedestrian, pl_winner_a1, \
    pl_winner_c2, shadow_sample, uplink_tx_power_dbm


@pytest.mark.parametrize(
    'distance, expected', [
        (300.0, 122.0),
        (10.0, 69.2),
        (500.0, 129.9),
    ]
)
def test_winner_c2_path_loss(distance, expected):
    """Check the macro-cell path loss at reference distances."""
    assert pl_winner_c2(distance, 25.0, 1.5, 2.0) == pytest.approx(
        expected, abs=0.05
    )


def test_winner_a1_path_loss():
    """Check the indoor path loss and the extra wall attenuation."""
    assert pl_winner_a1(10.0, 1, 2.0) == pytest.approx(72.6, abs=0.05)
    assert pl_winner_a1(1.0, 1, 2.0) == pytest.approx(35.84, abs=0.01)
    assert pl_winner_a1(10.0, 3, 2.0) - pl_winner_a1(10.0, 1, 2.0) == \
        pytest.approx(10.0)


def test_umts_path_loss():
    """Check the pedestrian path loss used for the link budget."""
    assert pl_umts_pedestrian(300.0, 2000.0) == pytest.approx(127.1, abs=0.05)
    assert pl_umts_pedestrian(10.0, 2000.0) == pytest.approx(68.0, abs=0.05)


@pytest.mark.parametrize('distance', [0.0, -1.0, 5.0])
def test_path_loss_rejects_short_distances(distance):
    """Distances below the validity range are refused."""
    with pytest.raises(errors.ParameterError):
        pl_winner_c2(distance, 25.0, 1.5, 2.0)


def test_links_clamp_to_minimum_distance(config):
    """Links closer than the model minimum use the minimum distance."""
    assert cellular_link(3.0, config).pl_det_db == pytest.approx(
        pl_winner_c2(10.0, 25.0, 1.5, 2.0)
    )
    assert d2d_link(0.2, config).pl_det_db == pytest.approx(
        pl_winner_a1(1.0, 1, 2.0)
    )


def test_link_sample_adds_shadowing(config):
    """The total path loss includes the shadowing term."""
    sample = link_sample(100.0, LinkType.D2D, config, shadow_db=-2.5)
    assert sample.link_type is LinkType.D2D
    assert sample.pl_db == pytest.approx(sample.pl_det_db - 2.5)
    assert link_sample(100.0, LinkType.CELLULAR, config).pl_db == \
        cellular_link(100.0, config).pl_db


def test_tx_power_control():
    """Check open-loop power control, the cap and the D2D floor."""
    params = PowerParams()
    assert uplink_tx_power_dbm(110.0, params) == pytest.approx(19.0)
    assert uplink_tx_power_dbm(122.0, params) == 24.0
    assert uplink_tx_power_dbm(30.0, params) == pytest.approx(-45.0)
    assert uplink_tx_power_dbm(30.0, params, LinkType.D2D) == -40.0

    two_rbs = PowerParams(n_rbs=2)
    assert uplink_tx_power_dbm(100.0, two_rbs) == pytest.approx(
        11.0 + 10.0 * math.log10(2.0)
    )


@pytest.mark.parametrize('link_type', [LinkType.CELLULAR, LinkType.D2D])
def test_tx_power_follows_the_path_loss(link_type):
    """Below the cap each dB of path loss costs 0.8 dB of power."""
    params = PowerParams()
    assert uplink_tx_power_dbm(73.0, params, link_type) == pytest.approx(
        -10.6, abs=0.05
    )
    step = 0.01
    for pl_db in np.linspace(60.0, 110.0, 11):
        slope = (
            uplink_tx_power_dbm(pl_db + step, params, link_type) -
            uplink_tx_power_dbm(pl_db - step, params, link_type)
        ) / (2 * step)
        assert slope == pytest.approx(0.8, abs=1e-6)


def test_tx_power_rejects_infinite_path_loss():
    """A non-finite path loss is an error."""
    with pytest.raises(errors.ParameterError):
        uplink_tx_power_dbm(math.inf, PowerParams())


def test_power_params_validation(config):
    """Check parameter validation and extraction from a scenario."""
    with pytest.raises(errors.ParameterError):
        PowerParams(alpha=1.5)
    with pytest.raises(errors.ParameterError):
        PowerParams(n_rbs=0)
    with pytest.raises(errors.ParameterError):
        PowerParams(p0_dbm=0.0, p_max_dbm=-1.0)

    params = PowerParams.from_config(config)
    assert params == PowerParams()
    assert params.rate_per_rb_bps == pytest.approx(224000.0)


def test_burst_duration():
    """A 7800 byte burst occupies one resource block for 0.2786 s."""
    assert burst_duration_s(7800, PowerParams()) == pytest.approx(
        0.278571, rel=1e-5
    )
    assert burst_duration_s(7800, PowerParams(n_rbs=2)) == pytest.approx(
        0.278571 / 2, rel=1e-5
    )
    with pytest.raises(errors.ParameterError):
        burst_duration_s(0, PowerParams())


def test_dbm_to_watt():
    """Check the unit conversion."""
    assert dbm_to_watt(30.0) == pytest.approx(1.0)
    assert dbm_to_watt(0.0) == pytest.approx(1e-3)
    assert dbm_to_watt(24.0) == pytest.approx(0.2512, abs=1e-4)


def test_burst_energy():
    """Check the energy of cellular and D2D bursts."""
    params = PowerParams()
    assert burst_energy_j(122.0, 7800, params) == pytest.approx(
        0.0850, abs=1e-4
    )
    assert burst_energy_j(73.0, 7800, params, LinkType.D2D) == \
        pytest.approx(0.01502, abs=1e-5)
    assert burst_energy_j(110.0, 7800, params) == pytest.approx(
        0.0371, abs=1e-4
    )


def test_burst_energy_grows_with_path_loss():
    """Energy is non-decreasing in path loss and flat once capped."""
    params = PowerParams()
    energies = [burst_energy_j(pl, 1000, params) for pl in range(60, 140)]
    assert all(a <= b for a, b in zip(energies, energies[1:]))
    assert energies[-1] == energies[-2]


def test_shadow_sample_statistics(config):
    """Shadowing is zero mean with the configured deviation."""
    rng = np.random.default_rng(3)
    cellular = np.array([
        shadow_sample(rng, LinkType.CELLULAR, config) for _ in range(20000)
    ])
    assert abs(cellular.mean()) < 0.2
    assert cellular.std() == pytest.approx(8.0, abs=0.2)

    d2d = np.array([
        shadow_sample(rng, LinkType.D2D, config) for _ in range(20000)
    ])
    assert d2d.std() == pytest.approx(4.0, abs=0.1)


def test_shadow_sample_without_deviation(deterministic_config):
    """A zero deviation draws nothing."""
    rng = np.random.default_rng(3)
    state = rng.bit_generator.state
    assert shadow_sample(rng, LinkType.CELLULAR, deterministic_config) == 0.0
    assert rng.bit_generator.state == state


def test_link_budget_report(config):
    """Compare the cellular and D2D links of both channel models."""
    umts, winner = link_budget_report(config)

    assert umts.model == 'UMTS'
    assert umts.cellular_db == pytest.approx(127.1, abs=0.05)
    assert umts.d2d_db == pytest.approx(68.0, abs=0.05)
    assert umts.tx_diff_db == pytest.approx(41.1, abs=0.05)

    assert winner.model == 'WINNER II'
    assert winner.cellular_db == pytest.approx(122.0, abs=0.05)
    assert winner.d2d_db == pytest.approx(72.6, abs=0.05)
    assert winner.pl_diff_db == pytest.approx(49.4, abs=0.1)
    assert winner.tx_diff_db == pytest.approx(31.4, abs=0.1)
