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
"""torusx Sweep component definition."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from typing import List, Text

from torusx.components.base import base_component
from torusx.components.sweep import executor
from torusx.dynamics import circle_dynamics
from torusx.dynamics import errors
from torusx.dynamics import torus_map as torus_map_lib
from torusx.types.standard_component_specs import SweepSpec


class Sweep(base_component.BaseComponent):
  """Classifies one periodic circle over a uniform grid of t values.

  The map of the config is the family member at any t; t is replaced by
  the sample values t_min..t_max. The table is the plot-ready rotation
  number curve (a devil's staircase for locked plateaus).
  """

  SPEC_CLASS = SweepSpec
  EXECUTOR_CLASS = executor.Executor
  COMMAND = 'sweep'
  OUTPUT_FILES = {'report': 'sweep.json', 'table': 'sweep.csv'}

  def map_violations(self,
                     torus_map: torus_map_lib.TorusMap) -> List[Text]:
    violations = super(Sweep, self).map_violations(torus_map)
    try:
      circle_dynamics.restrict(torus_map, self.exec_properties['base_x'],
                               self.exec_properties['n'])
    except errors.NotInvariantCircleError as e:
      violations.append(str(e))
    return violations
