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
"""Generic torusx cone verifier executor."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from absl import logging
from typing import Any, Dict, List, Text

from torusx import types
from torusx.components.base import base_executor
from torusx.dynamics import spectral


class Executor(base_executor.BaseExecutor):
  """Generic torusx cone verifier executor."""

  def Do(self, input_dict: Dict[Text, List[types.Artifact]],
         output_dict: Dict[Text, List[types.Artifact]],
         exec_properties: Dict[Text, Any]) -> None:
    """Verifies the (K, alpha) cone conditions of the map.

    Args:
      input_dict: Input dict from input key to a list of Artifacts.
        - map_config: the map/config file.
      output_dict: Output dict from output key to a list of Artifacts.
        - report: JSON with the cone report, the delta check and the
          eigen data of M.
      exec_properties: A dict of execution properties.
        - K: required expansion, > 1.
        - alpha: cone opening; defaults to tan(theta) / 2 capped at 1.
        - grid_n: base points per axis.
        - boundary_samples: cone directions per base point.

    Returns:
      None
    """
    self._log_startup(input_dict, output_dict, exec_properties)
    torus_map = self._load_map(input_dict)
    spectral_data = spectral.eigen_data(torus_map.matrix)
    cone = spectral.ConeParams.from_spectral(spectral_data,
                                             exec_properties['K'],
                                             exec_properties['alpha'])
    report = spectral.cone_verify(torus_map, cone, exec_properties['grid_n'],
                                  exec_properties['boundary_samples'])
    delta = spectral.delta_check(torus_map, cone.alpha)
    logging.info('Cone check (K=%s, alpha=%s): pass=%s; delta check pass=%s',
                 cone.K, cone.alpha, report.passed, delta.passed)
    self._write_json(output_dict, 'report', {
        'cone': report,
        'cone_params': cone,
        'delta_check': delta,
        'pass': report.passed,
        'spectral': spectral_data,
    })
