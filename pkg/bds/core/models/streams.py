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
"""Reproducible random number substreams.

Each UE owns one independent generator per random process. A generator is
addressed by ``(seed, ue_id, stream)`` only, so adding UEs to a scenario
never changes the draws of the existing ones, and the cooperative and
non-cooperative arms of a replication see the same traffic and mobility.
"""

import attr
import numpy as np

STREAMS = (
    'placement',
    'mobility',
    'traffic',
    'shadowing',
    'd2d_shadowing',
    'relay_shadowing',
)
"""Named per-UE random processes, in spawn-key order."""


def make_generator(seed, *key):
    """Return a generator for the substream addressed by ``key``."""
    return np.random.Generator(
        np.random.PCG64(np.random.SeedSequence(seed, spawn_key=key))
    )


def derive_replication_seed(seed, replication):
    """Return a distinct, reproducible seed for one replication.

    >>> derive_replication_seed(7, 0) == derive_replication_seed(7, 0)
    True
    >>> derive_replication_seed(7, 0) == derive_replication_seed(7, 1)
    False
    """
    if replication < 0:
        raise ValueError('replication must be non-negative')
    sequence = np.random.SeedSequence([seed, replication])
    return int(sequence.generate_state(1, dtype=np.uint32)[0])


@attr.s(slots=True)
class UeStreams:
    """Independent generators of a single UE."""

    placement = attr.ib()
    mobility = attr.ib()
    traffic = attr.ib()
    shadowing = attr.ib()
    d2d_shadowing = attr.ib()
    relay_shadowing = attr.ib()

    @classmethod
    def for_ue(cls, seed, ue_id):
        """Spawn all substreams of ``ue_id``."""
        return cls(
            **{
                name: make_generator(seed, ue_id, index)
                for index, name in enumerate(STREAMS)
            }
        )
