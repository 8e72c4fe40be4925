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
"""Radio channel and uplink energy model.

Cellular links use the WINNER II urban macro-cell (C2) NLOS path loss, D2D
links the WINNER II indoor (A1) NLOS light-wall path loss; both get
lognormal shadowing. Transmit power follows the LTE open-loop uplink power
control law ``min(P0 + alpha * PL + 10 log10(M), Pmax)`` and every burst
costs its radiated energy plus a constant per-transmission component.

>>> round(pl_winner_c2(300.0, 25.0, 1.5, 2.0), 1)
122.0
>>> round(pl_winner_a1(10.0, 1, 2.0), 1)
72.6
"""

import enum
import math

import attr

from bds.core import errors

SUBCARRIERS_PER_RB = 12
"""Subcarriers of one resource block."""

SYMBOLS_PER_MS = 14
"""OFDM symbols per 1 ms subframe (normal cyclic prefix)."""


class LinkType(enum.Enum):
    """Kind of radio link."""

    CELLULAR = 'cellular'
    D2D = 'd2d'


@attr.s(frozen=True, slots=True)
class LinkSample:
    """Path loss of one transmission split into its two parts."""

    pl_det_db = attr.ib()
    shadow_db = attr.ib()
    link_type = attr.ib()

    @property
    def pl_db(self):
        """Total path loss including shadowing."""
        return self.pl_det_db + self.shadow_db


def _check_alpha(instance, attribute, value):
    """Check the path-loss compensation exponent."""
    if not 0 <= value <= 1:
        raise errors.ParameterError(
            'must lie in [0, 1].', param_hint=attribute.name
        )


def _check_rbs(instance, attribute, value):
    """Check the number of resource blocks."""
    if value < 1:
        raise errors.ParameterError(
            'at least one resource block is required.',
            param_hint=attribute.name
        )


@attr.s(frozen=True, slots=True)
class PowerParams:
    """Open-loop power control and transmission parameters."""

    p0_dbm = attr.ib(default=-69.0)
    alpha = attr.ib(default=0.8, validator=_check_alpha)
    p_max_dbm = attr.ib(default=24.0)
    n_rbs = attr.ib(default=1, validator=_check_rbs)
    modulation_bits = attr.ib(default=4)
    code_rate = attr.ib(default=1.0 / 3.0)
    e_const_j = attr.ib(default=0.015)
    d2d_p_min_dbm = attr.ib(default=-40.0)

    def __attrs_post_init__(self):
        """Check the power cap."""
        if self.p_max_dbm < self.p0_dbm:
            raise errors.ParameterError(
                'must not be below p0_dbm.', param_hint='p_max_dbm'
            )

    @classmethod
    def from_config(cls, cfg):
        """Extract power parameters from a scenario."""
        return cls(
            p0_dbm=cfg.p0_dbm,
            alpha=cfg.alpha,
            p_max_dbm=cfg.p_max_dbm,
            n_rbs=cfg.n_rbs,
            modulation_bits=cfg.modulation_bits,
            code_rate=cfg.code_rate,
            e_const_j=cfg.e_const_j,
            d2d_p_min_dbm=cfg.d2d_p_min_dbm,
        )

    @property
    def rate_per_rb_bps(self):
        """Payload bit rate of one resource block."""
        return (
            SUBCARRIERS_PER_RB * SYMBOLS_PER_MS * 1000 *
            self.modulation_bits * self.code_rate
        )


def _check_distance(d_m, minimum):
    """Reject distances below the validity range of a model."""
    if not d_m > 0:
        raise errors.ParameterError(
            'distance must be positive, got {0!r}.'.format(d_m),
            param_hint='d_m'
        )
    if d_m < minimum:
        raise errors.ParameterError(
            'distance {0!r} m is below the model minimum of {1} m.'.format(
                d_m, minimum
            ),
            param_hint='d_m'
        )


def pl_winner_c2(d_m, h_enb_m, h_ue_m, fc_ghz):
    """WINNER II urban macro-cell (C2) NLOS path loss in dB.

    ``h_ue_m`` does not enter the NLOS formula; it is accepted so that the
    call mirrors the scenario geometry.
    """
    _check_distance(d_m, 10.0)
    log_h = math.log10(h_enb_m)
    return ((44.9 - 6.55 * log_h) * math.log10(d_m) + 34.46 + 5.83 * log_h +
            23.0 * math.log10(fc_ghz / 5.0))


def pl_winner_a1(d_m, n_walls, fc_ghz):
    """WINNER II indoor (A1) NLOS light-wall path loss in dB."""
    _check_distance(d_m, 1.0)
    if n_walls < 1:
        raise errors.ParameterError(
            'at least one wall is required.', param_hint='n_walls'
        )
    return (36.8 * math.log10(d_m) + 43.8 + 20.0 * math.log10(fc_ghz / 5.0) +
            5.0 * (n_walls - 1))


def pl_umts_pedestrian(d_m, fc_mhz):
    """UMTS outdoor-to-indoor and pedestrian path loss in dB."""
    _check_distance(d_m, 0.0)
    return 40.0 * math.log10(d_m / 1000.0) + 30.0 * math.log10(fc_mhz) + 49.0


def shadow_sigma_db(link_type, cfg):
    """Shadowing standard deviation of a link type."""
    if link_type is LinkType.D2D:
        return cfg.shadow_sigma_d2d_db
    return cfg.shadow_sigma_cellular_db


def shadow_sample(rng, link_type, cfg):
    """Draw a zero-mean normal shadowing term in dB."""
    sigma = shadow_sigma_db(link_type, cfg)
    if sigma == 0:
        return 0.0
    return float(rng.normal(0.0, sigma))


def uplink_tx_power_dbm(pl_total_db, params, link_type=LinkType.CELLULAR):
    """Open-loop uplink transmit power in dBm.

    D2D transmissions are additionally floored at the minimum UE output
    power.
    """
    if not math.isfinite(pl_total_db):
        raise errors.ParameterError(
            'path loss must be finite.', param_hint='pl_total_db'
        )
    power = min(
        params.p0_dbm + params.alpha * pl_total_db +
        10.0 * math.log10(params.n_rbs), params.p_max_dbm
    )
    if link_type is LinkType.D2D:
        power = max(power, params.d2d_p_min_dbm)
    return power


def burst_duration_s(n_bytes, params):
    """Air time of a burst sent as one continuous transmission."""
    if n_bytes < 1:
        raise errors.ParameterError(
            'a burst carries at least one byte.', param_hint='bytes'
        )
    return 8.0 * n_bytes / (params.n_rbs * params.rate_per_rb_bps)


def dbm_to_watt(p_dbm):
    """Convert dBm to watt."""
    return 10.0**((p_dbm - 30.0) / 10.0)


def burst_energy_j(
    pl_total_db, n_bytes, params, link_type=LinkType.CELLULAR
):
    """Energy in joules spent on one burst, constant component included."""
    duration = burst_duration_s(n_bytes, params)
    power_w = dbm_to_watt(
        uplink_tx_power_dbm(pl_total_db, params, link_type)
    )
    return power_w * duration + params.e_const_j


def cellular_link(distance_m, cfg, shadow_db=0.0):
    """Build the cellular link sample of a UE at ``distance_m``."""
    pl_det = pl_winner_c2(
        max(distance_m, cfg.min_cellular_distance_m), cfg.h_enb_m,
        cfg.h_ue_m, cfg.fc_ghz
    )
    return LinkSample(pl_det, shadow_db, LinkType.CELLULAR)


def d2d_link(distance_m, cfg, shadow_db=0.0):
    """Build the D2D link sample of a pair ``distance_m`` apart."""
    pl_det = pl_winner_a1(
        max(distance_m, cfg.min_d2d_distance_m), cfg.n_walls, cfg.fc_ghz
    )
    return LinkSample(pl_det, shadow_db, LinkType.D2D)


@attr.s(frozen=True, slots=True)
class LinkBudgetRow:
    """One channel model row of the link budget comparison."""

    model = attr.ib()
    cellular_db = attr.ib()
    d2d_db = attr.ib()

    # receiver corrections in dB, eNodeB advantage over a UE receiver
    gain_diff_db = attr.ib(default=14.0)
    noise_figure_diff_db = attr.ib(default=4.0)

    @property
    def pl_diff_db(self):
        """Path loss difference between the cellular and the D2D link."""
        return self.cellular_db - self.d2d_db

    @property
    def tx_diff_db(self):
        """Transmit power difference needed for equal receiver SNR."""
        return (
            self.pl_diff_db - self.gain_diff_db - self.noise_figure_diff_db
        )


def link_budget_report(
    cfg,
    cellular_distance_m=300.0,
    d2d_distance_m=10.0,
    enb_gain_dbi=14.0,
    ue_gain_dbi=0.0,
    enb_noise_figure_db=5.0,
    ue_noise_figure_db=9.0,
):
    """Compare cellular and D2D links for every channel model."""
    gain_diff = enb_gain_dbi - ue_gain_dbi
    nf_diff = ue_noise_figure_db - enb_noise_figure_db
    fc_mhz = cfg.fc_ghz * 1000.0
    return [
        LinkBudgetRow(
            model='UMTS',
            cellular_db=pl_umts_pedestrian(cellular_distance_m, fc_mhz),
            d2d_db=pl_umts_pedestrian(d2d_distance_m, fc_mhz),
            gain_diff_db=gain_diff,
            noise_figure_diff_db=nf_diff,
        ),
        LinkBudgetRow(
            model='WINNER II',
            cellular_db=pl_winner_c2(
                cellular_distance_m, cfg.h_enb_m, cfg.h_ue_m, cfg.fc_ghz
            ),
            d2d_db=pl_winner_a1(d2d_distance_m, cfg.n_walls, cfg.fc_ghz),
            gain_diff_db=gain_diff,
            noise_figure_diff_db=nf_diff,
        ),
    ]


def link_sample(distance_m, link_type, cfg, shadow_db=0.0):
    """Build the sample of a ``link_type`` link spanning ``distance_m``."""
    if link_type is LinkType.D2D:
        return d2d_link(distance_m, cfg, shadow_db)
    return cellular_link(distance_m, cfg, shadow_db)
