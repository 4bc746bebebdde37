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
"""torusx Snapback component definition."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from torusx.components.base import base_component
from torusx.components.snapback import executor
from torusx.types.standard_component_specs import SnapbackSpec


class Snapback(base_component.BaseComponent):
  """Searches for a snap-back point of the period-1 repeller.

  A point q within neighborhood_r of the repeller R with F^n(q) = R and
  DF^n(q) nonsingular certifies chaos in the sense of Marotto. Finding none
  up to `depth` is a valid result.
  """

  SPEC_CLASS = SnapbackSpec
  EXECUTOR_CLASS = executor.Executor
  COMMAND = 'snapback'
  OUTPUT_FILES = {'report': 'snapback.json'}
  REQUIRES_EM = False
