# Copyright 2019 The torusx Authors. All Rights Reserved.
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
"""Generic torusx periodic circle executor."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections

from absl import logging
import numpy as np
from typing import Any, Dict, List, Text

from torusx import types
from torusx.components.base import base_executor
from torusx.dynamics import circle_dynamics
from torusx.dynamics import orbits

_TABLE_HEADER = ['base_x', 'rho', 'diagnostic', 'classification',
                 'periodic_point', 'multiplier']


class Executor(base_executor.BaseExecutor):
  """Generic torusx periodic circle executor."""

  def Do(self, input_dict: Dict[Text, List[types.Artifact]],
         output_dict: Dict[Text, List[types.Artifact]],
         exec_properties: Dict[Text, Any]) -> None:
    """Classifies every periodic circle of period n.

    Args:
      input_dict: Input dict from input key to a list of Artifacts.
        - map_config: the map/config file of a skew map.
      output_dict: Output dict from output key to a list of Artifacts.
        - report: JSON with one analysis per circle and the class counts.
        - table: CSV with one row per circle.
      exec_properties: A dict of execution properties.
        - n: circle period.
        - iters: orbit length of the rotation number estimate.
        - max_denominator: largest q tried for a locked p/q orbit.
        - qp_threshold: diagnostic above which a circle is quasiperiodic.

    Returns:
      None
    """
    self._log_startup(input_dict, output_dict, exec_properties)
    torus_map = self._load_map(input_dict)
    n = exec_properties['n']
    bases = orbits.periodic_circle_bases(int(torus_map.matrix[0, 0]), n)
    starts = np.random.RandomState(self.seed).uniform(size=len(bases))

    def classify_one(i):
      cmap = circle_dynamics.restrict(torus_map, bases[i], n)
      return circle_dynamics.classify_circle(
          cmap, exec_properties['iters'], y0=starts[i],
          max_denominator=exec_properties['max_denominator'],
          qp_threshold=exec_properties['qp_threshold'])

    analyses = self._parallel_map(classify_one, range(len(bases)))
    counts = collections.Counter(a.classification for a in analyses)
    logging.info('%d period-%d circles: %s', len(bases), n, dict(counts))

    self._write_json(output_dict, 'report', {
        'n': n,
        'circles': analyses,
        'counts': {
            circle_dynamics.LOCKED: counts[circle_dynamics.LOCKED],
            circle_dynamics.QUASIPERIODIC:
                counts[circle_dynamics.QUASIPERIODIC],
            circle_dynamics.UNDETERMINED: counts[circle_dynamics.UNDETERMINED],
        },
    })
    self._write_csv(output_dict, 'table', _TABLE_HEADER,
                    [[float(base), a.rho, a.diagnostic, a.label,
                      a.periodic_point, a.multiplier]
                     for base, a in zip(bases, analyses)])
