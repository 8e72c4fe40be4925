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
"""Pytest configuration."""

import attr
import pytest
from click.testing import CliRunner


@attr.s(frozen=True)
class ConstantTraffic:
    """Deterministic traffic: fixed inter-arrival time and burst size."""

    interarrival_s = attr.ib(default=30.0)
    size_bytes = attr.ib(default=7800)

    def next_interarrival_s(self, rng):
        """Return the fixed inter-arrival time."""
        return self.interarrival_s

    def next_burst_size_bytes(self, rng):
        """Return the fixed burst size."""
        return self.size_bytes


@pytest.fixture()
def runner():
    """Create a runner on isolated filesystem."""
    return CliRunner()


@pytest.fixture(autouse=True)
def global_config_dir(monkeypatch, tmpdir_factory):
    """Point the user-level defaults to a temporary directory."""
    with monkeypatch.context() as m:
        home_dir = tmpdir_factory.mktemp('fake_home').strpath
        m.setenv('BDS_CONFIG_DIR', home_dir)

        yield home_dir


@pytest.fixture()
def manager(global_config_dir):
    """A configuration manager on the temporary defaults directory."""
    from bds.core.management.config import ConfigManager

    return ConfigManager(global_config_dir)


@pytest.fixture()
def config():
    """Default scenario."""
    from bds.core.models.scenario import ScenarioConfig

    return ScenarioConfig()


@pytest.fixture()
def small_config():
    """A small and short scenario that runs in well under a second."""
    from bds.core.models.scenario import ScenarioConfig

    return ScenarioConfig(
        n_ues=40,
        cell_radius_m=150.0,
        battery_capacity_j=20.0,
        sim_end_s=2 * 3600.0,
        seed=11,
    )


@pytest.fixture()
def deterministic_config():
    """Three UEs without shadowing for hand-computed expectations."""
    from bds.core.models.scenario import ScenarioConfig

    return ScenarioConfig(
        n_ues=3,
        shadow_sigma_cellular_db=0.0,
        shadow_sigma_d2d_db=0.0,
        seed=5,
    )


@pytest.fixture()
def constant_traffic():
    """Deterministic traffic with 7800 byte bursts every 30 s."""
    return ConstantTraffic()


@pytest.fixture()
def static_mobility():
    """UEs that never move."""
    from bds.core.models.mobility import StaticMobility

    return StaticMobility()
