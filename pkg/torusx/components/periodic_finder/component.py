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
"""torusx PeriodicFinder component definition."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from typing import List, Text

from torusx.components.base import base_component
from torusx.components.periodic_finder import executor
from torusx.dynamics import orbits
from torusx.dynamics import spectral
from torusx.dynamics import torus_map as torus_map_lib
from torusx.types.standard_component_specs import PeriodicFinderSpec


class PeriodicFinder(base_component.BaseComponent):
  """Finds and classifies the periodic orbits of periods 1..period.

  Besides the orbits, the report counts saddles and repellers per period and
  gives the covering radius of each class over periods up to every cap:
  both classes filling the torus is the multi-chaos signature.

  ## Example
  ```
    PeriodicFinder('reference_map.cfg', '/tmp/out', period=3).run()
  ```
  """

  SPEC_CLASS = PeriodicFinderSpec
  EXECUTOR_CLASS = executor.Executor
  COMMAND = 'find-periodic'
  OUTPUT_FILES = {'report': 'periodic.json', 'table': 'periodic.csv'}
  REQUIRES_EM = False

  def map_violations(self,
                     torus_map: torus_map_lib.TorusMap) -> List[Text]:
    # Grid and auto seeding work for any map; fiber seeding needs Phi.
    if self.exec_properties['seeding'] != orbits.SEEDING_FIBERS:
      return []
    violation = spectral.check_em(torus_map.matrix)
    return [violation] if violation else []
