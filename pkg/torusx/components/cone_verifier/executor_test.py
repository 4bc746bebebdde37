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
"""Tests for torusx.components.cone_verifier.executor."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import json
import os

from absl.testing import absltest
from absl.testing import parameterized

from torusx.components.base import base_executor
from torusx.components.cone_verifier import executor
from torusx.dynamics import torus_map as torus_map_lib
from torusx.types import standard_artifacts
from torusx.utils import config_utils
from torusx.utils import io_utils
from torusx.utils import test_case_utils


class ExecutorTest(test_case_utils.TestCase):

  def _run(self, map_path, exec_properties):
    output_data_dir = os.path.join(self.create_tempdir().full_path,
                                   self._testMethodName)
    map_config = standard_artifacts.MapConfig(uri=map_path)
    report = standard_artifacts.JsonReport(
        uri=os.path.join(output_data_dir, 'cone.json'))
    properties = {'K': 2.0, 'alpha': 1.0, 'grid_n': 60,
                  'boundary_samples': 16}
    properties.update(exec_properties)
    executor.Executor(base_executor.BaseExecutor.Context(seed=0)).Do(
        {'map_config': [map_config]}, {'report': [report]}, properties)
    self.assertNotEmpty(report.checksum)
    return json.loads(io_utils.read_string_file(report.uri))

  def testDo(self):
    result = self._run(test_case_utils.testdata_path('reference_map.cfg'), {})
    self.assertTrue(result['pass'])
    self.assertTrue(result['cone']['pass'])
    self.assertTrue(result['delta_check']['pass'])
    self.assertEqual(result['spectral']['m'], 3)
    self.assertEqual(result['spectral']['v_m_left'], [1, 0])
    self.assertEqual(result['seed'], 0)
    self.assertGreater(result['cone']['min_expansion'], 2.0)

  @parameterized.named_parameters(('Small', 0.05, True), ('Large', 2.0, False))
  def testPassDependsOnEpsilon(self, epsilon, expected):
    map_path = os.path.join(self.create_tempdir().full_path, 'map.cfg')
    config_utils.write_config(map_path,
                              torus_map_lib.make_reference_map(epsilon=epsilon))
    result = self._run(map_path, {})
    self.assertEqual(result['pass'], expected)

  def testDefaultAlpha(self):
    result = self._run(test_case_utils.testdata_path('coupled_map.cfg'),
                       {'alpha': None})
    self.assertGreater(result['cone_params']['alpha'], 0.0)
    self.assertLessEqual(result['cone_params']['alpha'], 1.0)


if __name__ == '__main__':
  absltest.main()
