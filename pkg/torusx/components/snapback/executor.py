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
"""Generic torusx snap-back repeller executor."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from typing import Any, Dict, List, Text

from torusx import types
from torusx.components.base import base_executor
from torusx.dynamics import errors
from torusx.dynamics import orbits


class Executor(base_executor.BaseExecutor):
  """Generic torusx snap-back repeller executor."""

  def Do(self, input_dict: Dict[Text, List[types.Artifact]],
         output_dict: Dict[Text, List[types.Artifact]],
         exec_properties: Dict[Text, Any]) -> None:
    """Finds the period-1 repeller and searches its preimage tree.

    Args:
      input_dict: Input dict from input key to a list of Artifacts.
        - map_config: the map/config file.
      output_dict: Output dict from output key to a list of Artifacts.
        - report: JSON with the repeller and the certificate, if any.
      exec_properties: A dict of execution properties.
        - neighborhood_r: radius of the repeller neighbourhood.
        - depth: preimage levels searched.
        - per_level: cap on the preimages kept per level.
        - seed_grid: Newton seeds per axis for the repeller.

    Returns:
      None

    Raises:
      NotRepellerError: if the map has no period-1 repeller.
    """
    self._log_startup(input_dict, output_dict, exec_properties)
    torus_map = self._load_map(input_dict)
    repellers = [
        orbit for orbit in orbits.find_periodic(torus_map, 1,
                                                exec_properties['seed_grid'])
        if orbit.orbit_class == orbits.OrbitClass.REPELLER
    ]
    if not repellers:
      raise errors.NotRepellerError('map has no period-1 repeller')
    certificate = orbits.snapback_search(
        torus_map, repellers[0], exec_properties['neighborhood_r'],
        exec_properties['depth'], exec_properties['per_level'],
        seed=self.seed)
    self._write_json(output_dict, 'report', {
        'repeller': repellers[0],
        'found': certificate is not None,
        'certificate': certificate,
    })
