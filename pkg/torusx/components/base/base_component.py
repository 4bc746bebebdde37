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
"""Base class for torusx components."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import abc
import inspect
import os

from typing import Any, Dict, List, Optional, Text

from torusx import types
from torusx.components.base import base_executor
from torusx.dynamics import spectral
from torusx.dynamics import torus_map as torus_map_lib
from torusx.types import standard_artifacts
from torusx.utils import json_utils


class BaseComponent(json_utils.Jsonable, metaclass=abc.ABCMeta):
  """Base class for a torusx subcommand.

  An instance of a subclass of BaseComponent represents the parameters for a
  single run of that subcommand: the map/config file it reads, the files it
  writes and its execution properties.

  Attributes:
    SPEC_CLASS: a subclass of types.ComponentSpec used by this component
      (required).
    EXECUTOR_CLASS: a subclass of base_executor.BaseExecutor that runs this
      component (required).
    COMMAND: name of the CLI subcommand (required).
    OUTPUT_FILES: output key -> file name inside the output directory.
    REQUIRES_EM: whether the matrix must satisfy (E_M).
  """

  SPEC_CLASS = None
  EXECUTOR_CLASS = None
  COMMAND = None
  OUTPUT_FILES = {}
  REQUIRES_EM = True

  def __init__(self, map_config: Text, output_dir: Text, **params):
    """Construct a component.

    Args:
      map_config: path of the map/config file.
      output_dir: directory the output files are written to.
      **params: raw execution properties; strings are converted by SPEC_CLASS.
    """
    self._validate_component_class()
    self.output_dir = output_dir
    channels = {
        'map_config': [
            standard_artifacts.MapConfig(uri=map_config, name='map_config')
        ],
    }
    for key, channel in self.SPEC_CLASS.OUTPUTS.items():
      channels[key] = [
          channel.type(uri=os.path.join(output_dir, self.OUTPUT_FILES[key]),
                       name=key)
      ]
    overlap = set(params) & set(channels)
    if overlap:
      raise ValueError('%s are channels of %s, not parameters' %
                       (sorted(overlap), self.__class__.__name__))
    params = {k: v for k, v in params.items() if v is not None}
    self.spec = self.SPEC_CLASS(**dict(params, **channels))

  @classmethod
  def _validate_component_class(cls):
    """Validate that the class attributes of this class are set properly."""
    if not (inspect.isclass(cls.SPEC_CLASS) and
            issubclass(cls.SPEC_CLASS, types.ComponentSpec)):
      raise TypeError(
          ('Component class %s expects SPEC_CLASS property to be a subclass '
           'of types.ComponentSpec; got %s instead.') % (cls, cls.SPEC_CLASS))
    if not (inspect.isclass(cls.EXECUTOR_CLASS) and
            issubclass(cls.EXECUTOR_CLASS, base_executor.BaseExecutor)):
      raise TypeError(
          ('Component class %s expects EXECUTOR_CLASS property to be a '
           'subclass of base_executor.BaseExecutor; got %s instead.') %
          (cls, cls.EXECUTOR_CLASS))
    if not cls.COMMAND:
      raise TypeError('Component class %s must set COMMAND.' % cls)
    missing = set(cls.SPEC_CLASS.OUTPUTS) - set(cls.OUTPUT_FILES)
    if missing:
      raise TypeError('Component class %s has no OUTPUT_FILES entry for %s.' %
                      (cls, sorted(missing)))

  def __repr__(self):
    return '%s(command: %s, inputs: %s, outputs: %s, exec_properties: %s)' % (
        self.__class__.__name__, self.COMMAND, self.inputs, self.outputs,
        self.exec_properties)

  def to_json_dict(self) -> Dict[Text, Any]:
    return {'command': self.COMMAND, 'spec': self.spec}

  @property
  def inputs(self) -> Dict[Text, List[types.Artifact]]:
    return self.spec.inputs

  @property
  def outputs(self) -> Dict[Text, List[types.Artifact]]:
    return self.spec.outputs

  @property
  def exec_properties(self) -> Dict[Text, Any]:
    return self.spec.exec_properties

  def map_violations(self,
                     torus_map: torus_map_lib.TorusMap) -> List[Text]:
    """Preconditions the map must meet for this subcommand.

    Only called once the execution properties are valid; subclasses may
    rely on them.
    """
    if not self.REQUIRES_EM:
      return []
    violation = spectral.check_em(torus_map.matrix)
    return [violation] if violation else []

  def validate(self,
               torus_map: Optional[torus_map_lib.TorusMap] = None
              ) -> List[Text]:
    """All violations; empty iff the run may start."""
    violations = self.spec.validate()
    if not violations and torus_map is not None:
      violations.extend(self.map_violations(torus_map))
    return violations

  def run(self, context: Optional[base_executor.BaseExecutor.Context] = None
         ) -> Dict[Text, List[types.Artifact]]:
    """Runs the executor and returns the published outputs."""
    executor = self.EXECUTOR_CLASS(context)
    executor.Do(self.inputs, self.outputs, dict(self.exec_properties))
    return self.outputs
