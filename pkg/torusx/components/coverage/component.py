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
"""torusx Coverage component definition."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from torusx.components.base import base_component
from torusx.components.coverage import executor
from torusx.types.standard_component_specs import CoverageSpec


class Coverage(base_component.BaseComponent):
  """Forward images of a disk against a grid partition of the torus.

  The disk is centred on a given point or, with center='repeller', on the
  period-1 repeller. With mixing_target set, the report also gives the
  iterate from which every image of the disk meets the target disk.
  """

  SPEC_CLASS = CoverageSpec
  EXECUTOR_CLASS = executor.Executor
  COMMAND = 'cover'
  OUTPUT_FILES = {'report': 'cover.json', 'table': 'cover.csv'}
  REQUIRES_EM = False
