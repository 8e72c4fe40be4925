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
"""Serializers for experiment results.

Every float is written with a fixed number of decimals so that two runs
with the same seed produce byte-identical files.
"""

import csv
import io
import math
from collections import OrderedDict
from types import SimpleNamespace

import yaml

from bds.core import errors
from bds.core.models.scenario import ScenarioConfig
from bds.core.models.tabulate import tabulate
from bds.version import __version__

DECIMALS = 6


def fixed(value, decimals=DECIMALS):
    """Format a number with fixed decimals; ``None`` becomes empty."""
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, int):
        return str(value)
    value = float(value)
    if math.isinf(value):
        return 'inf' if value > 0 else '-inf'
    return '{0:.{1}f}'.format(value, decimals)


def _target_label(target_s):
    return '{0:g}h'.format(target_s / 3600.0)


def _csv(header, rows):
    """Render rows as CSV text."""
    with io.StringIO() as output:
        writer = csv.writer(output, lineterminator='\n')
        writer.writerow(header)
        writer.writerows(rows)
        return output.getvalue()


def records_csv(result):
    """One row per UE, replication and arm."""
    header = [
        'replication', 'seed', 'arm', 'ue_id', 'initial_j', 'depleted_at_s',
        'remaining_j', 'energy_spent_j', 'bytes_sent_direct',
        'bytes_sent_d2d', 'bytes_relayed_for_others', 'was_helpee'
    ]
    header += [
        'battery_at_{0}_j'.format(_target_label(t)) for t in result.targets_s
    ]
    rows = []
    for replication in result.replications:
        for record in replication.records:
            rows.append([
                replication.replication, replication.seed, replication.arm,
                record.ue_id,
                fixed(record.initial_j),
                fixed(record.depleted_at),
                fixed(record.remaining_j),
                fixed(record.energy_spent_j),
                record.bytes_sent_direct,
                record.bytes_sent_d2d,
                record.bytes_relayed_for_others,
                fixed(record.was_helpee),
            ] + [fixed(record.battery_at.get(t)) for t in result.targets_s])
    return _csv(header, rows)


def associations_csv(result):
    """One row per association for audit."""
    header = [
        'replication', 'arm', 'helpee_id', 'helper_id', 'established_at_s',
        'teardown_at_s', 'reason', 'distance_m', 'helpee_fraction',
        'helper_fraction', 'bytes_relayed'
    ]
    rows = []
    for replication in result.replications:
        for assoc in replication.associations:
            rows.append([
                replication.replication,
                replication.arm,
                assoc.helpee_id,
                assoc.helper_id,
                fixed(assoc.established_at),
                fixed(assoc.teardown_at),
                assoc.reason or 'open',
                fixed(assoc.distance_m),
                fixed(assoc.helpee_fraction),
                fixed(assoc.helper_fraction),
                assoc.bytes_relayed,
            ])
    return _csv(header, rows)


def cdf_csv(distribution):
    """Two-column empirical CDF."""
    return _csv(['usage_time_s', 'cdf'],
                [[fixed(t), fixed(p)] for t, p in distribution.cdf_points])


def histogram_csv(distribution):
    """Histogram of depletion times."""
    return _csv(['bin_start_s', 'bin_end_s', 'count'],
                [[fixed(start), fixed(end), int(count)]
                 for start, end, count in distribution.bins])


class SummaryDumper(yaml.SafeDumper):
    """YAML dumper writing floats with fixed decimals."""


def _float_representer(dumper, data):
    """Represent a float with fixed decimals."""
    if math.isinf(data):
        text = '.inf' if data > 0 else '-.inf'
    elif math.isnan(data):
        text = '.nan'
    else:
        text = fixed(data)
    return dumper.represent_scalar('tag:yaml.org,2002:float', text)


def _ordered_dict_representer(dumper, data):
    """Keep the insertion order of mappings."""
    return dumper.represent_mapping(
        'tag:yaml.org,2002:map', list(data.items())
    )


SummaryDumper.add_representer(float, _float_representer)
SummaryDumper.add_representer(OrderedDict, _ordered_dict_representer)


def _estimate(value):
    if value is None:
        return None
    return OrderedDict((
        ('mean', float(value.mean)),
        ('half_width', float(value.half_width)),
        ('n', int(value.n)),
    ))


CALIBRATION_LEVERS = ('n_rbs', 'e_const_j')
"""Scenario parameters tuned to match reference results."""


def _calibration(cfg):
    """Report the tuning levers next to their reference values."""
    reference = ScenarioConfig()
    changed = [
        key for key in CALIBRATION_LEVERS
        if getattr(cfg, key) != getattr(reference, key)
    ]
    return OrderedDict((
        ('n_rbs', int(cfg.n_rbs)),
        ('e_const_j', float(cfg.e_const_j)),
        ('reference', OrderedDict((
            ('n_rbs', int(reference.n_rbs)),
            ('e_const_j', float(reference.e_const_j)),
        ))),
        ('changed', changed),
        ('initial_battery', 'uniform (0, 1] x battery_capacity_j'),
    ))


def summary_document(result):
    """Build the summary as nested ordered mappings."""
    cfg = result.cfg
    scenario = OrderedDict()
    for key, _ in cfg.to_items():
        value = getattr(cfg, key)
        if isinstance(value, tuple):
            value = list(value)
        unit = cfg.unit_of(key)
        scenario[key] = value if unit is None else OrderedDict((
            ('value', value),
            ('unit', unit),
        ))

    targets = []
    for report in result.reports:
        targets.append(
            OrderedDict((
                ('target_h', float(report.target_h)),
                ('p_outage_coop', _estimate(report.p_outage_coop)),
                ('p_outage_noncoop', _estimate(report.p_outage_noncoop)),
                ('valueless_coop', _estimate(report.valueless_coop)),
                ('valueless_noncoop', _estimate(report.valueless_noncoop)),
            ))
        )

    arms = OrderedDict()
    for arm in result.arms:
        summary = result.summaries[arm]
        usage = summary.usage
        arms[arm] = OrderedDict((
            ('mean_usage_h', float(summary.mean_usage_h)),
            ('median_usage_h', float(usage.median_s / 3600.0)),
            ('iqr_h', float(usage.iqr_s / 3600.0)),
            ('n_records', int(usage.n_records)),
            ('n_censored', int(usage.n_censored)),
            ('associations', int(summary.associations)),
            ('signaling_messages', int(summary.signaling_messages)),
        ))

    return OrderedDict((
        ('bds_version', __version__),
        ('replications', len({r.replication for r in result.replications})),
        ('base_seed', int(cfg.seed)),
        ('horizon_h', float(cfg.sim_end_s / 3600.0)),
        ('bin_width_s', float(result.bin_width_s)),
        ('calibration', _calibration(cfg)),
        ('censoring', 'survivors at the horizon are right-censored'),
        ('scenario', scenario),
        ('targets', targets),
        ('arms', arms),
    ))


def summary_yaml(result):
    """Render the summary document as YAML."""
    return yaml.dump(
        summary_document(result),
        Dumper=SummaryDumper,
        default_flow_style=False,
        sort_keys=False,
    )


def experiment_files(result):
    """Map output file names to their content."""
    files = OrderedDict((
        ('records.csv', records_csv(result)),
        ('associations.csv', associations_csv(result)),
    ))
    for arm in result.arms:
        distribution = result.summaries[arm].distribution
        files['cdf_{0}.csv'.format(arm)] = cdf_csv(distribution)
        files['histogram_{0}.csv'.format(arm)] = histogram_csv(distribution)
    files['summary.yml'] = summary_yaml(result)
    return files


def write_outputs(result, out_dir):
    """Write every output file into ``out_dir``."""
    files = experiment_files(result)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise errors.OutputError(out_dir, e)
    for name, content in files.items():
        path = out_dir / name
        try:
            path.write_text(content)
        except OSError as e:
            raise errors.OutputError(path, e)
    return sorted(files)


def _pm(value, decimals=3):
    """Format an estimate as ``mean ± half-width``."""
    if value is None:
        return '-'
    return '{0:.{2}f} ± {1:.{2}f}'.format(
        value.mean, value.half_width, decimals
    )


def tabular(result):
    """Format the outage reports and arm summaries as tables."""
    rows = [
        SimpleNamespace(
            target_h=report.target_h,
            p_outage_coop=_pm(report.p_outage_coop),
            p_outage_noncoop=_pm(report.p_outage_noncoop),
            valueless_coop=_pm(report.valueless_coop),
            valueless_noncoop=_pm(report.valueless_noncoop),
        ) for report in result.reports
    ]
    reports = tabulate(
        rows,
        headers=OrderedDict((
            ('target_h', 'target (h)'),
            ('p_outage_coop', 'outage coop'),
            ('p_outage_noncoop', 'outage non-coop'),
            ('valueless_coop', 'valueless coop'),
            ('valueless_noncoop', 'valueless non-coop'),
        )),
        float_fmt='{0:g}',
    )
    arms = tabulate(
        [result.summaries[arm] for arm in result.arms],
        headers=OrderedDict((
            ('arm', None),
            ('mean_usage_h', 'mean usage (h)'),
            ('usage.n_censored', 'censored'),
            ('associations', None),
        )),
        float_fmt='{0:.2f}',
    )
    return '{0}\n\n{1}\n'.format(reports, arms)
