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
"""Shared test case base class with numpy-aware assertions."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import os

from absl.testing import parameterized
import numpy as np
from typing import Any, Text

_TESTDATA_DIR = os.path.join(
    os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'testdata')


def testdata_path(name: Text) -> Text:
  """Absolute path of a file under torusx/testdata."""
  return os.path.join(_TESTDATA_DIR, name)


class TestCase(parameterized.TestCase):
  """absltest case with the array assertions of tf.test.TestCase."""

  def assertAllClose(self, a: Any, b: Any, rtol: float = 1e-6,
                     atol: float = 1e-6, msg: Text = '') -> None:
    np.testing.assert_allclose(
        np.asarray(a, dtype=complex if np.iscomplexobj(a) else float),
        np.asarray(b, dtype=complex if np.iscomplexobj(b) else float),
        rtol=rtol, atol=atol, err_msg=msg)

  def assertAllEqual(self, a: Any, b: Any, msg: Text = '') -> None:
    np.testing.assert_array_equal(np.asarray(a), np.asarray(b), err_msg=msg)

  def assertAllInRange(self, a: Any, lower: float, upper: float,
                       open_upper_bound: bool = False) -> None:
    a = np.asarray(a)
    self.assertTrue(np.all(a >= lower), 'values below {}'.format(lower))
    if open_upper_bound:
      self.assertTrue(np.all(a < upper), 'values not below {}'.format(upper))
    else:
      self.assertTrue(np.all(a <= upper), 'values above {}'.format(upper))
