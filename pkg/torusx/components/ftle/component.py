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
"""torusx Ftle component definition."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from torusx.components.base import base_component
from torusx.components.ftle import executor
from torusx.types.standard_component_specs import FtleSpec


class Ftle(base_component.BaseComponent):
  """Counts positive finite-time Lyapunov exponents along one orbit.

  A count that keeps switching between 1 and 2, with the weaker exponent
  taking both signs, is the numerical signature of unstable dimension
  variability. Any map with an invertible Jacobian qualifies.
  """

  SPEC_CLASS = FtleSpec
  EXECUTOR_CLASS = executor.Executor
  COMMAND = 'ftle'
  OUTPUT_FILES = {'report': 'ftle.json', 'table': 'ftle.csv'}
  REQUIRES_EM = False
