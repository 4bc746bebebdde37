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
"""Tests for torusx.utils.io_utils."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import json
import os

from absl.testing import absltest
import numpy as np

from torusx.utils import io_utils
from torusx.utils import test_case_utils


class IoUtilsTest(test_case_utils.TestCase):

  def setUp(self):
    super(IoUtilsTest, self).setUp()
    self._tmp_dir = self.create_tempdir().full_path

  def testWriteStringFileCreatesParents(self):
    file_path = os.path.join(self._tmp_dir, 'a', 'b', 'file.txt')
    io_utils.write_string_file(file_path, 'testing')
    self.assertEqual(io_utils.read_string_file(file_path), 'testing')

  def testWriteCsvFile(self):
    file_path = os.path.join(self._tmp_dir, 'table.csv')
    io_utils.write_csv_file(file_path, ['n', 'x', 'ok'],
                            [[1, 0.1, True], [np.int64(2), np.float64(1e-20),
                                              False]],
                            provenance='abc')
    self.assertEqual(
        io_utils.read_string_file(file_path),
        '# provenance=abc\nn,x,ok\n1,0.1,true\n2,1e-20,false\n')
    self.assertEqual(io_utils.load_csv_rows(file_path),
                     [['n', 'x', 'ok'], ['1', '0.1', 'true'],
                      ['2', '1e-20', 'false']])

  def testWriteCsvFileRowWidth(self):
    with self.assertRaisesRegex(ValueError, 'does not match header'):
      io_utils.write_csv_file(
          os.path.join(self._tmp_dir, 'bad.csv'), ['a', 'b'], [[1]])

  def testFormatValue(self):
    self.assertEqual(io_utils.format_value(None), '')
    self.assertEqual(io_utils.format_value(0.1 + 0.2), '0.30000000000000004')
    self.assertEqual(io_utils.format_value('saddle'), 'saddle')

  def testWriteJsonFileAddsProvenance(self):
    file_path = os.path.join(self._tmp_dir, 'report.json')
    io_utils.write_json_file(file_path, {'x': 1}, 'abc')
    self.assertEqual(
        json.loads(io_utils.read_string_file(file_path)),
        {'x': 1, 'provenance': 'abc'})

  def testFingerprint(self):
    first = os.path.join(self._tmp_dir, 'first.txt')
    second = os.path.join(self._tmp_dir, 'second.txt')
    io_utils.write_string_file(first, 'same')
    io_utils.write_string_file(second, 'same')
    self.assertEqual(io_utils.generate_fingerprint(first),
                     io_utils.generate_fingerprint(second))
    self.assertEqual(io_utils.generate_fingerprint(first),
                     io_utils.string_fingerprint('same'))
    self.assertLen(io_utils.string_fingerprint('same'), 64)


if __name__ == '__main__':
  absltest.main()
