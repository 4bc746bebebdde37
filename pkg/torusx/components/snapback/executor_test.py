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
"""Tests for torusx.components.snapback.executor."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import json
import os

from absl.testing import absltest

from torusx.components.base import base_executor
from torusx.components.snapback import executor
from torusx.dynamics import errors
from torusx.dynamics import torus_map as torus_map_lib
from torusx.types import standard_artifacts
from torusx.utils import config_utils
from torusx.utils import io_utils
from torusx.utils import test_case_utils


class ExecutorTest(test_case_utils.TestCase):

  def _run(self, map_path, **exec_properties):
    report = standard_artifacts.JsonReport(uri=os.path.join(
        self.create_tempdir().full_path, 'snapback.json'))
    properties = {'neighborhood_r': 0.1, 'depth': 12, 'per_level': 5000,
                  'seed_grid': 16}
    properties.update(exec_properties)
    executor.Executor(base_executor.BaseExecutor.Context()).Do(
        {'map_config': [standard_artifacts.MapConfig(uri=map_path)]},
        {'report': [report]}, properties)
    return json.loads(io_utils.read_string_file(report.uri))

  def testDo(self):
    report = self._run(test_case_utils.testdata_path('reference_map.cfg'))
    self.assertTrue(report['found'])
    self.assertEqual(report['repeller']['class'], 'repeller')
    certificate = report['certificate']
    self.assertLess(certificate['residual'], 1e-9)
    self.assertGreater(abs(certificate['jac_det']), 1e-8)
    self.assertLess(certificate['dist_to_R'], 0.1)
    self.assertGreater(certificate['dist_to_R'], 1e-9)

  def testNotFoundIsValid(self):
    report = self._run(test_case_utils.testdata_path('reference_map.cfg'),
                       depth=1, neighborhood_r=1e-6)
    self.assertFalse(report['found'])
    self.assertIsNone(report['certificate'])

  def testNoRepeller(self):
    map_path = os.path.join(self.create_tempdir().full_path, 'shifted.cfg')
    config_utils.write_config(map_path,
                              torus_map_lib.make_reference_map(t=0.25))
    with self.assertRaises(errors.NotRepellerError):
      self._run(map_path)


if __name__ == '__main__':
  absltest.main()
