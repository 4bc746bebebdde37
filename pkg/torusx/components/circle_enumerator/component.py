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
"""torusx CircleEnumerator component definition."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from typing import List, Text

from torusx.components.base import base_component
from torusx.components.circle_enumerator import executor
from torusx.dynamics import circle_dynamics
from torusx.dynamics import torus_map as torus_map_lib
from torusx.types.standard_component_specs import CircleEnumeratorSpec


class CircleEnumerator(base_component.BaseComponent):
  """Classifies the return map F^n on every period-n vertical circle.

  Only skew maps F(x, y) = (mx, ax + y + g(x, y)) permute the vertical
  circles x = j / (m^n - 1).
  """

  SPEC_CLASS = CircleEnumeratorSpec
  EXECUTOR_CLASS = executor.Executor
  COMMAND = 'circles'
  OUTPUT_FILES = {'report': 'circles.json', 'table': 'circles.csv'}

  def map_violations(self,
                     torus_map: torus_map_lib.TorusMap) -> List[Text]:
    violations = super(CircleEnumerator, self).map_violations(torus_map)
    violation = circle_dynamics.skew_form_violation(torus_map)
    if violation:
      violations.append(violation)
    return violations
