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
"""torusx ConeVerifier component definition."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from torusx.components.base import base_component
from torusx.components.cone_verifier import executor
from torusx.types.standard_component_specs import ConeVerifierSpec


class ConeVerifier(base_component.BaseComponent):
  """Checks the invariant cone field of DF on a grid of base points.

  The report holds the worst expansion, containment and transverse growth
  over the grid together with the ||DG|| < delta(M) check. A failing report
  is a valid result; the run still succeeds.

  ## Example
  ```
    ConeVerifier('reference_map.cfg', '/tmp/out', K=2, alpha=1).run()
  ```
  """

  SPEC_CLASS = ConeVerifierSpec
  EXECUTOR_CLASS = executor.Executor
  COMMAND = 'verify-cone'
  OUTPUT_FILES = {'report': 'cone.json'}
