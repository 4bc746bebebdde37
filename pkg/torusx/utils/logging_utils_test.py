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
"""Tests for torusx.utils.logging_utils."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import logging
import os

from absl.testing import absltest
from torusx.utils import logging_utils


class LoggingUtilsTest(absltest.TestCase):

  def setUp(self):
    super(LoggingUtilsTest, self).setUp()
    self._log_root = os.path.join(self.create_tempdir().full_path, 'log_dir')
    self._logger_config = logging_utils.LoggerConfig(log_root=self._log_root)

  def testLogging(self):
    """Ensure a logged string actually appears in the log file."""
    logger = logging_utils.get_logger(self._logger_config)
    logger.info('Test')
    logging_utils.close_logger(logger)
    with open(os.path.join(self._log_root, 'torusx.log')) as f:
      self.assertRegex(
          f.read(),
          r'^\d\d\d\d-\d\d-\d\d \d\d:\d\d:\d\d,\d\d\d - : '
          r'\(logging_utils_test.py:\d+\) - INFO: Test$')

  def testNoDuplicateHandlers(self):
    logger = logging_utils.get_logger(self._logger_config)
    logger = logging_utils.get_logger(self._logger_config)
    self.assertLen(logger.handlers, 1)
    logging_utils.close_logger(logger)

  def testLogRootIsFile(self):
    path = self.create_tempfile().full_path
    with self.assertRaises(RuntimeError):
      logging_utils.get_logger(logging_utils.LoggerConfig(log_root=path))

  def testDefaultSettings(self):
    """Ensure log defaults are set correctly."""
    config = logging_utils.LoggerConfig()
    self.assertEqual(config.log_root, '/var/tmp/torusx/logs')
    self.assertEqual(config.log_level, logging.INFO)
    self.assertEqual(config.command_name, '')
    self.assertEqual(config.worker_name, '')

  def testUpdateSettings(self):
    config = logging_utils.LoggerConfig()
    config.update({'command_name': 'sweep', 'log_level': logging.WARN})
    self.assertEqual(config.command_name, 'sweep')
    self.assertEqual(config.log_level, logging.WARN)
    with self.assertRaises(ValueError):
      config.update({'pipeline_name': 'x'})

  def testRunLoggerClosesHandlers(self):
    with logging_utils.run_logger(self._logger_config) as logger:
      logger.warning('inside')
      self.assertLen(logger.handlers, 1)
    self.assertEmpty(logger.handlers)
    with open(os.path.join(self._log_root, 'torusx.log')) as f:
      self.assertIn('WARNING: inside', f.read())

  def testLineFormat(self):
    config = logging_utils.LoggerConfig(command_name='ftle',
                                        worker_name='RunHandler')
    self.assertIn(' - ftle:RunHandler (', config.line_format)
    self.assertEqual(config.log_path,
                     os.path.join('/var/tmp/torusx/logs', 'torusx.log'))

  def testCopy(self):
    config = logging_utils.LoggerConfig(worker_name='wrk')
    clone = config.copy()
    clone.worker_name = 'other'
    self.assertEqual(config.worker_name, 'wrk')


if __name__ == '__main__':
  absltest.main()
