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
"""torusx Conjugacy component definition."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from torusx.components.base import base_component
from torusx.components.conjugacy import executor
from torusx.types.standard_component_specs import ConjugacySpec


class Conjugacy(base_component.BaseComponent):
  """Evaluates Phi and H = (Phi, proj_W) with their error certificates.

  Writes the truncation depth and tail bound of the Phi series, the
  factoring residual |Phi(F z) - m Phi(z)|, the Lipschitz defect against
  its analytic bound and the drift of the first coordinate of H under F.
  The table lists H and the factoring residual at every sample point.
  """

  SPEC_CLASS = ConjugacySpec
  EXECUTOR_CLASS = executor.Executor
  COMMAND = 'conjugacy'
  OUTPUT_FILES = {'report': 'conjugacy.json', 'table': 'conjugacy.csv'}
