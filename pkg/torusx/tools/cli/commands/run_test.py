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
"""Tests for torusx.tools.cli.commands.run."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import codecs
import json
import locale
import os

from absl.testing import absltest
from click import testing as click_testing
import mock

from torusx import components
from torusx.tools.cli import labels
from torusx.tools.cli.commands.run import run_group
from torusx.tools.cli.handler import run_handler
from torusx.utils import io_utils
from torusx.utils import test_case_utils


class RunTest(test_case_utils.TestCase):

  def setUp(self):
    # Change the encoding for Click since Python 3 is configured to use ASCII as
    # encoding for the environment.
    super(RunTest, self).setUp()
    if codecs.lookup(locale.getpreferredencoding()).name == 'ascii':
      os.environ['LANG'] = 'en_US.utf-8'
    self.runner = click_testing.CliRunner()
    self._out_dir = os.path.join(self.create_tempdir().full_path, 'out')
    self._reference = test_case_utils.testdata_path('reference_map.cfg')

  def testEveryComponentHasACommand(self):
    self.assertEqual(sorted(run_group.commands), sorted(components.COMPONENTS))

  def testFlagsPassedToHandler(self):
    with mock.patch.object(run_handler, 'RunHandler') as mock_handler:
      result = self.runner.invoke(run_group, [
          'find-periodic', '--config', 'map.cfg', '--period', '2', '--seed',
          '3', '--threads', '2'
      ])
    self.assertEqual(result.exit_code, 0, result.output)
    flags = mock_handler.call_args[0][0]
    self.assertEqual(flags[labels.COMMAND], 'find-periodic')
    self.assertEqual(flags[labels.CONFIG_PATH], 'map.cfg')
    self.assertEqual(flags[labels.OUT_DIR], labels.DEFAULT_OUT_DIR)
    self.assertEqual(flags[labels.SEED], 3)
    self.assertEqual(flags[labels.THREADS], 2)
    self.assertIsNone(flags[labels.TOL])
    self.assertEqual(flags[labels.COMMAND_PARAMS], {'period': '2'})
    mock_handler.return_value.run.assert_called_once_with()

  def testParameterNamesKeepTheirCase(self):
    with mock.patch.object(run_handler, 'RunHandler') as mock_handler:
      result = self.runner.invoke(
          run_group, ['verify-cone', '--config', 'map.cfg', '--K', '3'])
    self.assertEqual(result.exit_code, 0, result.output)
    self.assertEqual(mock_handler.call_args[0][0][labels.COMMAND_PARAMS],
                     {'K': '3'})

  def testTolIsACommonFlag(self):
    result = self.runner.invoke(run_group, ['conjugacy', '--help'])
    self.assertEqual(result.output.count('--tol'), 1)

  def testConfigRequired(self):
    result = self.runner.invoke(run_group, ['ftle'])
    self.assertNotEqual(result.exit_code, 0)
    self.assertIn('--config', result.output)

  def testUnknownParameter(self):
    result = self.runner.invoke(
        run_group, ['ftle', '--config', self._reference, '--period', '1'])
    self.assertNotEqual(result.exit_code, 0)

  def testFindPeriodicEndToEnd(self):
    result = self.runner.invoke(run_group, [
        'find-periodic', '--config', self._reference, '--out', self._out_dir,
        '--period', '1', '--coverage_grid', '20', '--threads', '1'
    ])
    self.assertEqual(result.exit_code, labels.EXIT_OK, result.output)
    report = json.loads(
        io_utils.read_string_file(
            os.path.join(self._out_dir, 'periodic.json')))
    self.assertLen(report['orbits'], 2)
    self.assertIn(os.path.join(self._out_dir, 'periodic.json'), result.output)

  def testMissingConfigEndToEnd(self):
    missing = os.path.join(self._out_dir, 'missing.cfg')
    result = self.runner.invoke(
        run_group, ['verify-cone', '--config', missing, '--out',
                    self._out_dir])
    self.assertEqual(result.exit_code, labels.EXIT_VALIDATION)
    self.assertIn(missing, result.output)


if __name__ == '__main__':
  absltest.main()
