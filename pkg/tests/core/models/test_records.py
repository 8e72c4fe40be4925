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
"""Usage and association record tests."""

import pytest

from bds.core import errors
from bds.core.models.records import AssociationRecord, Estimate, \
    OutageReport, UsageRecord


def test_usage_record_consistency():
    """A record is depleted exactly when nothing remains."""
    depleted = UsageRecord(
        ue_id=0, initial_j=5.0, depleted_at=60.0, remaining_j=0.0
    )
    assert depleted.depleted
    assert depleted.usage_time_s(3600.0) == 60.0

    survivor = UsageRecord(
        ue_id=1, initial_j=5.0, depleted_at=None, remaining_j=2.0
    )
    assert not survivor.depleted
    assert survivor.usage_time_s(3600.0) == 3600.0

    with pytest.raises(errors.ParameterError):
        UsageRecord(ue_id=2, initial_j=5.0, depleted_at=60.0, remaining_j=1.0)
    with pytest.raises(errors.ParameterError):
        UsageRecord(ue_id=3, initial_j=5.0, depleted_at=None, remaining_j=0.0)
    with pytest.raises(errors.ParameterError):
        UsageRecord(
            ue_id=4,
            initial_j=5.0,
            depleted_at=None,
            remaining_j=1.0,
            bytes_sent_d2d=-1
        )


def test_battery_snapshots():
    """Snapshots are looked up by target time."""
    record = UsageRecord(
        ue_id=0,
        initial_j=5.0,
        depleted_at=None,
        remaining_j=2.0,
        battery_at={100.0: 4.0},
    )
    assert record.battery_at_target(100.0) == 4.0
    assert record.battery_at_target(0) == 5.0
    with pytest.raises(errors.UsageError):
        record.battery_at_target(200.0)


def test_association_record():
    """A UE cannot help itself and open associations have no duration."""
    assoc = AssociationRecord(helpee_id=1, helper_id=2, established_at=10.0)
    assert assoc.duration_s is None
    assoc.teardown_at = 25.0
    assert assoc.duration_s == 15.0

    with pytest.raises(errors.ParameterError):
        AssociationRecord(helpee_id=1, helper_id=1, established_at=10.0)


def test_estimate_bounds():
    """Confidence bounds surround the mean."""
    estimate = Estimate(mean=0.3, half_width=0.05, n=10)
    assert estimate.low == pytest.approx(0.25)
    assert estimate.high == pytest.approx(0.35)


def test_outage_report():
    """Outage fractions are checked and compared between arms."""
    report = OutageReport(
        target_s=36000.0,
        n_replications=10,
        p_outage_coop=Estimate(0.05),
        p_outage_noncoop=Estimate(0.35),
    )
    assert report.target_h == 10.0
    assert report.outage_gap == pytest.approx(0.30)
    assert OutageReport(target_s=0.0, n_replications=1).outage_gap is None

    with pytest.raises(errors.ParameterError):
        OutageReport(
            target_s=0.0, n_replications=1, p_outage_coop=Estimate(1.5)
        )
