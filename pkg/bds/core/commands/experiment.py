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
"""Paired cooperative and non-cooperative replications.

Replication ``i`` of every arm runs with the same derived seed, so both
arms see identical placements, batteries, traffic and mobility and differ
only in whether cooperation is enabled.
"""

import functools
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import attr

from bds.core import errors
from bds.core.commands import metrics
from bds.core.commands.format.experiment import write_outputs
from bds.core.management.kernel import simulate
from bds.core.models.records import Estimate, OutageReport
from bds.core.models.streams import derive_replication_seed

logger = logging.getLogger(__name__)

ARMS = {
    'coop': True,
    'noncoop': False,
}
"""Cooperation flag of each arm."""

COOP_MODES = {
    'on': ('coop', ),
    'off': ('noncoop', ),
    'paired': ('coop', 'noncoop'),
}
"""Arms run for each value of ``--coop``."""

DEFAULT_TARGETS_H = (6.0, 8.0, 10.0)
"""Default target usage times in hours."""

Z_95 = 1.96


@attr.s(frozen=True)
class ReplicationResult:
    """Outcome of one arm of one replication."""

    replication = attr.ib()
    arm = attr.ib()
    seed = attr.ib()
    records = attr.ib(repr=False)
    associations = attr.ib(repr=False)
    end_time_s = attr.ib()
    bytes_generated = attr.ib(default=0)
    bytes_to_enb = attr.ib(default=0)
    help_requests = attr.ib(default=0)
    signaling_messages = attr.ib(default=0)


def run_replication(cfg, replication, arm, cooperation, targets_s):
    """Run one arm of one replication."""
    seed = derive_replication_seed(cfg.seed, replication)
    arm_cfg = attr.evolve(cfg, seed=seed, cooperation_enabled=cooperation)
    records, state = simulate(arm_cfg, checkpoints_s=targets_s)
    return ReplicationResult(
        replication=replication,
        arm=arm,
        seed=seed,
        records=tuple(records),
        associations=tuple(state.associations),
        end_time_s=state.end_time,
        bytes_generated=state.bytes_generated,
        bytes_to_enb=state.bytes_to_enb,
        help_requests=state.help_requests,
        signaling_messages=state.signaling_messages,
    )


def _run_task(cfg, targets_s, task):
    """Unpack a ``(replication, arm, cooperation)`` task."""
    replication, arm, cooperation = task
    return run_replication(cfg, replication, arm, cooperation, targets_s)


def iter_replications(cfg, n_replications, targets_s, arms, jobs=1):
    """Yield replication results in ``(replication, arm)`` order."""
    tasks = [(i, arm, arms[arm]) for i in range(n_replications)
             for arm in arms]
    run_task = functools.partial(_run_task, cfg, tuple(targets_s))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            yield from executor.map(run_task, tasks)
    else:
        yield from map(run_task, tasks)


def estimate(values):
    """Mean and 95 % half-width across replications, skipping ``None``."""
    values = [v for v in values if v is not None]
    if not values:
        return None
    n = len(values)
    mean = math.fsum(values) / n
    if n < 2:
        return Estimate(mean=mean, half_width=0.0, n=n)
    variance = math.fsum((v - mean)**2 for v in values) / (n - 1)
    return Estimate(
        mean=mean, half_width=Z_95 * math.sqrt(variance / n), n=n
    )


@attr.s(frozen=True)
class ArmSummary:
    """Pooled usage statistics of one arm."""

    arm = attr.ib()
    usage = attr.ib()
    distribution = attr.ib(repr=False)
    mean_usage_h = attr.ib()
    associations = attr.ib(default=0)
    signaling_messages = attr.ib(default=0)


@attr.s(frozen=True)
class ExperimentResult:
    """Everything an experiment produced."""

    cfg = attr.ib()
    targets_s = attr.ib()
    arms = attr.ib()
    replications = attr.ib(repr=False)
    reports = attr.ib()
    summaries = attr.ib()
    bin_width_s = attr.ib()

    def results_of(self, arm):
        """Replication results of ``arm`` in replication order."""
        return [r for r in self.replications if r.arm == arm]


def _arm_estimates(results, target_s, capacity_j):
    """Estimate outage and valueless battery of one arm at a target."""
    if not results:
        return None, None
    outage = estimate(
        metrics.outage_probability(r.records, target_s) for r in results
    )
    valueless = estimate(
        metrics.valueless_battery(r.records, target_s, capacity_j)
        for r in results
    )
    return outage, valueless


def aggregate(cfg, results, targets_s, arms, bin_width_s):
    """Reduce replication results to reports and per-arm summaries."""
    results = sorted(results, key=lambda r: (r.replication, r.arm))
    n_replications = len({r.replication for r in results})
    by_arm = {arm: [r for r in results if r.arm == arm] for arm in arms}

    reports = []
    for target in targets_s:
        coop = _arm_estimates(
            by_arm.get('coop', []), target, cfg.battery_capacity_j
        )
        noncoop = _arm_estimates(
            by_arm.get('noncoop', []), target, cfg.battery_capacity_j
        )
        reports.append(
            OutageReport(
                target_s=target,
                n_replications=n_replications,
                p_outage_coop=coop[0],
                p_outage_noncoop=noncoop[0],
                valueless_coop=coop[1],
                valueless_noncoop=noncoop[1],
            )
        )

    summaries = {}
    for arm, arm_results in by_arm.items():
        if not arm_results:
            continue
        records = [rec for r in arm_results for rec in r.records]
        usage = metrics.usage_summary(records, cfg.sim_end_s)
        summaries[arm] = ArmSummary(
            arm=arm,
            usage=usage,
            distribution=metrics.usage_time_distribution(
                records, bin_width_s, cfg.sim_end_s
            ),
            mean_usage_h=usage.mean_s / 3600.0,
            associations=sum(len(r.associations) for r in arm_results),
            signaling_messages=sum(
                r.signaling_messages for r in arm_results
            ),
        )
    return reports, summaries


def run_experiment(
    cfg,
    n_replications=10,
    targets_h=DEFAULT_TARGETS_H,
    arms=None,
    out_dir=None,
    jobs=1,
    bin_width_s=1800.0,
    progress=None,
):
    """Run paired replications, aggregate them and write the outputs.

    ``arms`` maps arm names to their cooperation flag and defaults to both
    arms of :data:`ARMS`. ``progress`` may wrap the result iterator, e.g.
    in a progress bar.
    """
    if n_replications < 1:
        raise errors.ParameterError(
            'at least one replication is required.',
            param_hint='--replications'
        )
    if jobs < 1:
        raise errors.ParameterError('must be positive.', param_hint='--jobs')
    targets_s = tuple(sorted({float(h) * 3600.0 for h in targets_h}))
    if any(t < 0 for t in targets_s):
        raise errors.ParameterError(
            'targets must not be negative.', param_hint='--targets'
        )
    late = [t for t in targets_s if t > cfg.sim_end_s]
    if late:
        raise errors.ParameterError(
            'targets {0} s lie beyond the horizon of {1} s.'.format(
                ', '.join('{0:.0f}'.format(t) for t in late), cfg.sim_end_s
            ),
            param_hint='--targets'
        )
    arms = dict(ARMS if arms is None else arms)

    logger.info(
        '%d replications of arms %s, seed %d', n_replications,
        ', '.join(arms), cfg.seed
    )
    results = iter_replications(cfg, n_replications, targets_s, arms, jobs)
    if progress is not None:
        results = progress(results)
    results = list(results)

    reports, summaries = aggregate(
        cfg, results, targets_s, tuple(arms), bin_width_s
    )
    result = ExperimentResult(
        cfg=cfg,
        targets_s=targets_s,
        arms=tuple(arms),
        replications=results,
        reports=reports,
        summaries=summaries,
        bin_width_s=bin_width_s,
    )

    if out_dir is not None:
        write_outputs(result, Path(out_dir))
    return result
