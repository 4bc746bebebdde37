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
"""torusx Rotation component definition."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from typing import List, Text

from torusx.components.base import base_component
from torusx.components.rotation import executor
from torusx.dynamics import circle_dynamics
from torusx.dynamics import errors
from torusx.dynamics import torus_map as torus_map_lib
from torusx.types.standard_component_specs import RotationSpec


class Rotation(base_component.BaseComponent):
  """Rotation number and class of the return map on one vertical circle."""

  SPEC_CLASS = RotationSpec
  EXECUTOR_CLASS = executor.Executor
  COMMAND = 'rotation'
  OUTPUT_FILES = {'report': 'rotation.json'}

  def map_violations(self,
                     torus_map: torus_map_lib.TorusMap) -> List[Text]:
    violations = super(Rotation, self).map_violations(torus_map)
    try:
      circle_dynamics.restrict(torus_map, self.exec_properties['base_x'],
                               self.exec_properties['n'])
    except errors.NotInvariantCircleError as e:
      violations.append(str(e))
    return violations
