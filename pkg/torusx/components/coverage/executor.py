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
"""Generic torusx coverage executor."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from absl import logging
from typing import Any, Dict, List, Text

from torusx import types
from torusx.components.base import base_executor
from torusx.dynamics import udv
from torusx.types import standard_component_specs
from torusx.utils import config_utils

_TABLE_HEADER = ['n', 'covered_fraction']


class Executor(base_executor.BaseExecutor):
  """Generic torusx coverage executor."""

  def Do(self, input_dict: Dict[Text, List[types.Artifact]],
         output_dict: Dict[Text, List[types.Artifact]],
         exec_properties: Dict[Text, Any]) -> None:
    """Iterates a disk until its images reach every cell of the grid.

    Args:
      input_dict: Input dict from input key to a list of Artifacts.
        - map_config: the map/config file.
      output_dict: Output dict from output key to a list of Artifacts.
        - report: JSON with N_cover (or "NotCovered") and the coverage
          curve.
        - table: CSV coverage curve.
      exec_properties: A dict of execution properties.
        - center: '(x, y)' or 'repeller'.
        - radius: disk radius.
        - grid_n: cells per axis.
        - max_iter: iterates examined.
        - samples: seeds in the disk, default 10 * grid_n^2.
        - mixing_target: optional centre of a second disk.

    Returns:
      None

    Raises:
      NotRepellerError: if center='repeller' and the map has no period-1
        repeller.
    """
    self._log_startup(input_dict, output_dict, exec_properties)
    torus_map = self._load_map(input_dict)
    if exec_properties['center'] == standard_component_specs.CENTER_REPELLER:
      center = udv.repeller_center(torus_map)
      logging.info('Disk centred on the repeller %s', center.tolist())
    else:
      center = config_utils.parse_pair(exec_properties['center'])
    result = udv.transitivity_cover(
        torus_map, center, exec_properties['radius'],
        exec_properties['grid_n'], exec_properties['max_iter'],
        seed=self.seed, samples=exec_properties['samples'],
        map_fn=self._parallel_map)

    report = {
        'center_source': exec_properties['center'],
        'coverage': result,
        'covered': result.covered,
    }
    target = exec_properties['mixing_target']
    if target is not None:
      report['mixing_target'] = target
      report['mixing_onset'] = udv.mixing_onset(
          torus_map, center, target, exec_properties['radius'],
          exec_properties['max_iter'], seed=self.seed)
    self._write_json(output_dict, 'report', report)
    self._write_csv(output_dict, 'table', _TABLE_HEADER, result.rows())
