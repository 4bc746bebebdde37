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
"""torusx FiberTracer component definition."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from torusx.components.base import base_component
from torusx.components.fiber_tracer import executor
from torusx.types.standard_component_specs import FiberTracerSpec


class FiberTracer(base_component.BaseComponent):
  """Traces the fibers Phi^-1(j / n_thetas), j = 0..n_thetas-1.

  The table is plot-ready: one row per fiber point, in polyline order.
  """

  SPEC_CLASS = FiberTracerSpec
  EXECUTOR_CLASS = executor.Executor
  COMMAND = 'fibers'
  OUTPUT_FILES = {'report': 'fibers.json', 'table': 'fibers.csv'}
