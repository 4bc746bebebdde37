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
"""Tests for torusx.components.circle_enumerator.executor."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import json
import os

from absl.testing import absltest

from torusx.components.base import base_executor
from torusx.components.circle_enumerator import component
from torusx.components.circle_enumerator import executor
from torusx.dynamics import torus_map as torus_map_lib
from torusx.types import standard_artifacts
from torusx.utils import io_utils
from torusx.utils import test_case_utils


class ExecutorTest(test_case_utils.TestCase):

  def _run(self, n):
    output_data_dir = os.path.join(self.create_tempdir().full_path,
                                   self._testMethodName)
    map_config = standard_artifacts.MapConfig(
        uri=test_case_utils.testdata_path('reference_map.cfg'))
    report = standard_artifacts.JsonReport(
        uri=os.path.join(output_data_dir, 'circles.json'))
    table = standard_artifacts.CsvTable(
        uri=os.path.join(output_data_dir, 'circles.csv'))
    executor.Executor(base_executor.BaseExecutor.Context(threads=2)).Do(
        {'map_config': [map_config]}, {'report': [report], 'table': [table]},
        {'n': n, 'iters': 2048, 'max_denominator': 16, 'qp_threshold': 3.0})
    return (json.loads(io_utils.read_string_file(report.uri)),
            io_utils.load_csv_rows(table.uri))

  def testFixedCircles(self):
    report, rows = self._run(1)
    self.assertEqual([c['label'] for c in report['circles']],
                     ['Locked(0/1)', 'Locked(1/2)'])
    self.assertEqual(report['counts'], {
        'locked': 2,
        'quasiperiodic': 0,
        'undetermined': 0,
    })
    self.assertEqual([row[0] for row in rows[1:]], ['0.0', '0.5'])

  def testPeriodTwoCircles(self):
    report, rows = self._run(2)
    self.assertLen(report['circles'], 8)
    self.assertLen(rows, 9)
    self.assertEqual(sum(report['counts'].values()), 8)


class ComponentTest(test_case_utils.TestCase):

  def testNotSkew(self):
    circles = component.CircleEnumerator('map.cfg', '/tmp/out')
    coupled = torus_map_lib.TorusMap(
        [[3, 0], [1, 1]],
        torus_map_lib.FourierPerturbation(
            [torus_map_lib.FourierTerm((0, 1), (0.02, 0.05))]))
    violations = circles.validate(coupled)
    self.assertEqual(violations,
                     ['vertical circles are invariant only when G_1 = 0'])

  def testSkewMap(self):
    circles = component.CircleEnumerator('map.cfg', '/tmp/out', n=3)
    self.assertEqual(circles.validate(torus_map_lib.make_reference_map()), [])


if __name__ == '__main__':
  absltest.main()
