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
"""Tests for torusx.components.base.base_component."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import json
import os

from absl.testing import absltest

from torusx import types
from torusx.components.base import base_component
from torusx.components.base import base_executor
from torusx.dynamics import torus_map as torus_map_lib
from torusx.types import artifact
from torusx.types import component_spec
from torusx.types import standard_artifacts
from torusx.utils import io_utils
from torusx.utils import test_case_utils


class _BasicComponentSpec(types.ComponentSpec):

  PARAMETERS = {
      'folds':
          component_spec.ExecutionParameter(
              type=int, default=3, predicate=lambda v: v > 0,
              requirement='> 0'),
  }
  INPUTS = {
      'map_config':
          component_spec.ChannelParameter(type=standard_artifacts.MapConfig),
  }
  OUTPUTS = {
      'report':
          component_spec.ChannelParameter(type=standard_artifacts.JsonReport),
  }


class _EchoExecutor(base_executor.BaseExecutor):

  def Do(self, input_dict, output_dict, exec_properties):
    self._log_startup(input_dict, output_dict, exec_properties)
    torus_map = self._load_map(input_dict)
    self._write_json(output_dict, 'report', {
        'folds': exec_properties['folds'],
        'determinant': torus_map.determinant,
    })


class _BasicComponent(base_component.BaseComponent):

  SPEC_CLASS = _BasicComponentSpec
  EXECUTOR_CLASS = _EchoExecutor
  COMMAND = 'basic'
  OUTPUT_FILES = {'report': 'basic.json'}


class ComponentTest(test_case_utils.TestCase):

  def setUp(self):
    super(ComponentTest, self).setUp()
    self._output_dir = self.create_tempdir().full_path
    self._map_config = test_case_utils.testdata_path('reference_map.cfg')

  def testComponentBasic(self):
    component = _BasicComponent(self._map_config, self._output_dir, folds='7')
    self.assertEqual(component.exec_properties, {'folds': 7})
    self.assertEqual(component.inputs['map_config'][0].uri, self._map_config)
    report = component.outputs['report'][0]
    self.assertIsInstance(report, standard_artifacts.JsonReport)
    self.assertEqual(report.uri, os.path.join(self._output_dir, 'basic.json'))
    self.assertEqual(report.name, 'report')
    self.assertEqual(component.validate(), [])

  def testNoneParameterTakesDefault(self):
    component = _BasicComponent(self._map_config, self._output_dir,
                                folds=None)
    self.assertEqual(component.exec_properties, {'folds': 3})

  def testChannelAsParameter(self):
    with self.assertRaisesRegex(ValueError, 'are channels of'):
      _BasicComponent(self._map_config, self._output_dir, report='x')

  def testValidateCollectsViolations(self):
    component = _BasicComponent(self._map_config, self._output_dir, folds=0,
                                colour='red')
    self.assertEqual(component.validate(), [
        'colour is not a parameter of _BasicComponentSpec',
        'folds must be > 0',
    ])

  def testMapViolations(self):
    component = _BasicComponent(self._map_config, self._output_dir)
    self.assertEqual(
        component.validate(torus_map_lib.make_reference_map()), [])
    violations = component.validate(
        torus_map_lib.TorusMap([[1, 0], [1, 1]]))
    self.assertLen(violations, 1)
    self.assertIn('(E_M)', violations[0])

  def testMapNotCheckedWithBadParameters(self):
    component = _BasicComponent(self._map_config, self._output_dir, folds=-1)
    self.assertEqual(
        component.validate(torus_map_lib.TorusMap([[1, 0], [1, 1]])),
        ['folds must be > 0'])

  def testNoEMRequirement(self):

    class LenientComponent(_BasicComponent):
      REQUIRES_EM = False

    component = LenientComponent(self._map_config, self._output_dir)
    self.assertEqual(
        component.validate(torus_map_lib.TorusMap([[1, 0], [1, 1]])), [])

  def testRun(self):
    component = _BasicComponent(self._map_config, self._output_dir, folds=2)
    outputs = component.run(
        base_executor.BaseExecutor.Context(seed=0, provenance='abc'))
    report = outputs['report'][0]
    self.assertEqual(report.state, artifact.ArtifactState.PUBLISHED)
    self.assertEqual(report.checksum, io_utils.generate_fingerprint(report.uri))
    payload = json.loads(io_utils.read_string_file(report.uri))
    self.assertEqual(payload, {
        'folds': 2,
        'determinant': 3,
        'provenance': 'abc',
        'seed': 0,
    })

  def testComponentSpecClass(self):

    class MissingSpecComponent(base_component.BaseComponent):
      EXECUTOR_CLASS = _EchoExecutor
      COMMAND = 'missing'

    with self.assertRaisesRegex(
        TypeError, 'expects SPEC_CLASS property to be a subclass of '
        'types.ComponentSpec'):
      MissingSpecComponent(self._map_config, self._output_dir)

  def testComponentExecutorClass(self):

    class MissingExecutorComponent(base_component.BaseComponent):
      SPEC_CLASS = _BasicComponentSpec
      COMMAND = 'missing'
      OUTPUT_FILES = {'report': 'missing.json'}

    with self.assertRaisesRegex(
        TypeError, 'expects EXECUTOR_CLASS property to be a subclass of '
        'base_executor.BaseExecutor'):
      MissingExecutorComponent._validate_component_class()

  def testComponentOutputFiles(self):

    class NoFilesComponent(base_component.BaseComponent):
      SPEC_CLASS = _BasicComponentSpec
      EXECUTOR_CLASS = _EchoExecutor
      COMMAND = 'nofiles'

    with self.assertRaisesRegex(TypeError, 'no OUTPUT_FILES entry'):
      NoFilesComponent._validate_component_class()


if __name__ == '__main__':
  absltest.main()
