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
"""Generic torusx fiber tracer executor."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from absl import logging
from typing import Any, Dict, List, Text

from torusx import types
from torusx.components.base import base_executor
from torusx.dynamics import conjugacy

_TABLE_HEADER = ['theta', 'index', 'x', 'y']


class Executor(base_executor.BaseExecutor):
  """Generic torusx fiber tracer executor."""

  def Do(self, input_dict: Dict[Text, List[types.Artifact]],
         output_dict: Dict[Text, List[types.Artifact]],
         exec_properties: Dict[Text, Any]) -> None:
    """Traces equally spaced fibers of Phi.

    Args:
      input_dict: Input dict from input key to a list of Artifacts.
        - map_config: the map/config file.
      output_dict: Output dict from output key to a list of Artifacts.
        - report: JSON summary of every polyline.
        - table: CSV of the fiber points.
      exec_properties: A dict of execution properties.
        - n_thetas: number of fibers.
        - n_points: points per fiber.
        - tol: truncation tolerance of the Phi series.

    Returns:
      None

    Raises:
      BracketFailureError: if a fiber line has no sign change, which means
        the map is not in the cone regime.
    """
    self._log_startup(input_dict, output_dict, exec_properties)
    torus_map = self._load_map(input_dict)
    n_thetas = exec_properties['n_thetas']
    polylines = [
        conjugacy.fiber_trace(torus_map, j / n_thetas,
                              exec_properties['n_points'],
                              exec_properties['tol'],
                              map_fn=self._parallel_map)
        for j in range(n_thetas)
    ]
    summaries = [polyline.summary() for polyline in polylines]
    all_closed = all(polyline.closed for polyline in polylines)
    max_residual = max(polyline.max_residual for polyline in polylines)
    logging.info('%d fibers traced; all closed: %s; max residual %s',
                 n_thetas, all_closed, max_residual)

    self._write_json(output_dict, 'report', {
        'fibers': summaries,
        'all_closed': all_closed,
        'max_residual': max_residual,
    })
    self._write_csv(output_dict, 'table', _TABLE_HEADER,
                    [[polyline.theta, i, p[0], p[1]]
                     for polyline in polylines
                     for i, p in enumerate(polyline.points)])
