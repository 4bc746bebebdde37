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
"""Generic torusx parameter sweep executor."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from typing import Any, Dict, List, Text

from torusx import types
from torusx.components.base import base_executor
from torusx.dynamics import circle_dynamics

_TABLE_HEADER = ['t', 'rho', 'diagnostic', 'classification', 'iters']


class Executor(base_executor.BaseExecutor):
  """Generic torusx parameter sweep executor."""

  def Do(self, input_dict: Dict[Text, List[types.Artifact]],
         output_dict: Dict[Text, List[types.Artifact]],
         exec_properties: Dict[Text, Any]) -> None:
    """Sweeps t and classifies the circle over base_x at every sample.

    Args:
      input_dict: Input dict from input key to a list of Artifacts.
        - map_config: the map/config file of a skew map.
      output_dict: Output dict from output key to a list of Artifacts.
        - report: JSON summary and per-sample analyses.
        - table: CSV rotation number curve.
      exec_properties: A dict of execution properties.
        - base_x, n: the circle.
        - t_min, t_max: parameter interval.
        - samples: number of t values, endpoints included.
        - iters: orbit length per sample.
        - max_denominator, qp_threshold: classification settings.

    Returns:
      None
    """
    self._log_startup(input_dict, output_dict, exec_properties)
    torus_map = self._load_map(input_dict)
    result = circle_dynamics.sweep(
        torus_map,
        exec_properties['base_x'],
        exec_properties['n'],
        (exec_properties['t_min'], exec_properties['t_max']),
        exec_properties['samples'],
        iters=exec_properties['iters'],
        seed=self.seed,
        map_fn=self._parallel_map,
        max_denominator=exec_properties['max_denominator'],
        qp_threshold=exec_properties['qp_threshold'])
    self._write_json(output_dict, 'report', result)
    self._write_csv(output_dict, 'table', _TABLE_HEADER, result.rows())
