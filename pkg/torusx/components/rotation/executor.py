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
"""Generic torusx rotation number executor."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from absl import logging
from typing import Any, Dict, List, Text

from torusx import types
from torusx.components.base import base_executor
from torusx.dynamics import circle_dynamics


class Executor(base_executor.BaseExecutor):
  """Generic torusx rotation number executor."""

  def Do(self, input_dict: Dict[Text, List[types.Artifact]],
         output_dict: Dict[Text, List[types.Artifact]],
         exec_properties: Dict[Text, Any]) -> None:
    """Estimates the rotation number on the circle over base_x.

    Args:
      input_dict: Input dict from input key to a list of Artifacts.
        - map_config: the map/config file of a skew map.
      output_dict: Output dict from output key to a list of Artifacts.
        - report: JSON with the estimate of the chosen method and the
          classification of the circle.
      exec_properties: A dict of execution properties.
        - base_x: rational base point j / (m^n - 1).
        - n: circle period.
        - y0: initial point on the circle.
        - method: 'plain' or 'weighted'.
        - iters: orbit length.
        - max_denominator: largest q tried for a locked p/q orbit.
        - qp_threshold: diagnostic above which a circle is quasiperiodic.

    Returns:
      None
    """
    self._log_startup(input_dict, output_dict, exec_properties)
    torus_map = self._load_map(input_dict)
    cmap = circle_dynamics.restrict(torus_map, exec_properties['base_x'],
                                    exec_properties['n'])
    estimate = circle_dynamics.rotation_number(
        cmap, exec_properties['y0'], exec_properties['iters'],
        exec_properties['method'], exec_properties['max_denominator'])
    analysis = circle_dynamics.classify_circle(
        cmap, exec_properties['iters'], y0=exec_properties['y0'],
        max_denominator=exec_properties['max_denominator'],
        qp_threshold=exec_properties['qp_threshold'])
    logging.info('%s: rho=%s (%s), %s', cmap.name, estimate.rho,
                 estimate.method, analysis.label)
    self._write_json(output_dict, 'report', {
        'circle': cmap.spec,
        'rho': estimate.rho,
        'rho_mod1': estimate.rho_mod1,
        'diagnostic': estimate.diagnostic,
        'method': estimate.method,
        'iters': estimate.iters,
        'analysis': analysis,
    })
