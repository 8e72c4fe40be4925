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
"""Usage time metrics.

A UE is in *outage* for a target usage time if its battery ran out before
the target. The *valueless battery* is what survivors still hold at the
target, when a charger is assumed to be reachable again.

>>> from bds.core.models.records import UsageRecord
>>> records = [
...     UsageRecord(ue_id=0, initial_j=10.0, depleted_at=100.0,
...                 remaining_j=0.0),
...     UsageRecord(ue_id=1, initial_j=10.0, depleted_at=None,
...                 remaining_j=4.0, battery_at={200.0: 4.0}),
... ]
>>> outage_probability(records, 200.0)
0.5
>>> valueless_battery(records, 200.0, capacity_j=10.0)
0.4
"""

import math

import attr
import numpy as np

from bds.core import errors


def _nonempty(records):
    """Return ``records`` as a list, rejecting empty input."""
    records = list(records)
    if not records:
        raise errors.UsageError('At least one usage record is required.')
    return records


def outage_probability(records, target_s):
    """Fraction of UEs depleted strictly before ``target_s``."""
    records = _nonempty(records)
    n_out = sum(
        1 for r in records
        if r.depleted_at is not None and r.depleted_at < target_s
    )
    return n_out / len(records)


def survivors(records, target_s):
    """UEs whose battery lasted at least until ``target_s``."""
    return [
        r for r in records
        if r.depleted_at is None or r.depleted_at >= target_s
    ]


def valueless_battery(records, target_s, capacity_j):
    """Mean battery fraction survivors still hold at ``target_s``.

    Returns ``None`` when nobody survives.
    """
    if capacity_j <= 0:
        raise errors.ParameterError(
            'must be positive.', param_hint='capacity_j'
        )
    alive = survivors(_nonempty(records), target_s)
    if not alive:
        return None
    total = math.fsum(r.battery_at_target(target_s) for r in alive)
    return total / (len(alive) * capacity_j)


@attr.s(frozen=True)
class UsageDistribution:
    """Histogram and empirical CDF of usage times.

    Survivors are right-censored at ``horizon_s``: they are left out of the
    histogram and keep the CDF below one.
    """

    bin_edges_s = attr.ib(repr=False)
    counts = attr.ib(repr=False)
    cdf_times_s = attr.ib(repr=False)
    cdf_values = attr.ib(repr=False)
    n_records = attr.ib()
    n_censored = attr.ib()
    horizon_s = attr.ib()

    @property
    def bins(self):
        """``(start, end, count)`` rows of the histogram."""
        return list(
            zip(self.bin_edges_s[:-1], self.bin_edges_s[1:], self.counts)
        )

    @property
    def cdf_points(self):
        """``(time, cdf)`` rows of the empirical CDF."""
        return list(zip(self.cdf_times_s, self.cdf_values))


def usage_time_distribution(records, bin_width_s, horizon_s=None):
    """Bin the depletion times of ``records``."""
    records = _nonempty(records)
    if not bin_width_s > 0:
        raise errors.UsageError(
            'The bin width must be positive, got {0!r}.'.format(bin_width_s)
        )

    depleted = np.array(
        sorted(r.depleted_at for r in records if r.depleted_at is not None),
        dtype=float,
    )
    n_censored = len(records) - depleted.size
    if horizon_s is None:
        horizon_s = float(depleted[-1]) if depleted.size else 0.0

    last = float(depleted[-1]) if depleted.size else 0.0
    n_bins = max(1, int(math.ceil(last / bin_width_s)))
    edges = bin_width_s * np.arange(n_bins + 1, dtype=float)
    counts, _ = np.histogram(depleted, bins=edges)

    times, multiplicity = np.unique(depleted, return_counts=True)
    cdf = np.cumsum(multiplicity) / len(records)

    return UsageDistribution(
        bin_edges_s=edges,
        counts=counts,
        cdf_times_s=times,
        cdf_values=cdf,
        n_records=len(records),
        n_censored=n_censored,
        horizon_s=horizon_s,
    )


@attr.s(frozen=True, slots=True)
class UsageSummary:
    """Location and spread of usage times, survivors counted at the horizon."""

    mean_s = attr.ib()
    q1_s = attr.ib()
    median_s = attr.ib()
    q3_s = attr.ib()
    n_records = attr.ib()
    n_censored = attr.ib()

    @property
    def iqr_s(self):
        """Interquartile range."""
        return self.q3_s - self.q1_s


def usage_summary(records, horizon_s):
    """Summarize usage times; survivors count as ``horizon_s``."""
    records = _nonempty(records)
    times = np.array([r.usage_time_s(horizon_s) for r in records])
    q1, median, q3 = np.percentile(times, [25, 50, 75])
    return UsageSummary(
        mean_s=math.fsum(times) / times.size,
        q1_s=float(q1),
        median_s=float(median),
        q3_s=float(q3),
        n_records=times.size,
        n_censored=sum(1 for r in records if r.depleted_at is None),
    )
