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
"""Tests for torusx.utils.json_utils."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import fractions
import json

from absl.testing import absltest
import numpy as np

from torusx.utils import json_utils


class _DefaultJsonableObject(json_utils.Jsonable):

  def __init__(self, a, b, c):
    self.a = a
    self.b = b
    self.c = c


class JsonUtilsTest(absltest.TestCase):

  def testDumpsJsonableObjectRoundtrip(self):
    obj = _DefaultJsonableObject(1, {'a': 'b'}, [True])

    json_text = json_utils.dumps(obj)

    actual_obj = json_utils.loads(json_text)
    self.assertEqual(1, actual_obj.a)
    self.assertDictEqual({'a': 'b'}, actual_obj.b)
    self.assertCountEqual([True], actual_obj.c)

  def testDumpsNestedJsonableObject(self):
    nested_obj = _DefaultJsonableObject(1, 2, 3)
    obj = _DefaultJsonableObject(nested_obj, None, None)

    actual_obj = json_utils.loads(json_utils.dumps(obj))
    self.assertEqual(1, actual_obj.a.a)
    self.assertEqual(3, actual_obj.a.c)
    self.assertIsNone(actual_obj.b)

  def testDumpsNestedClass(self):
    obj = _DefaultJsonableObject(_DefaultJsonableObject, None, None)

    actual_obj = json_utils.loads(json_utils.dumps(obj))
    self.assertEqual(_DefaultJsonableObject, actual_obj.a)

  def testCanonicalDumpsConvertsNumpy(self):
    obj = _DefaultJsonableObject(
        np.arange(3), np.float64(0.5), {'z': np.bool_(True), 'y': 2 + 1j})

    self.assertEqual(
        json.loads(json_utils.canonical_dumps(obj)), {
            'a': [0, 1, 2],
            'b': 0.5,
            'c': {'y': [2.0, 1.0], 'z': True},
        })

  def testCanonicalDumpsSortsKeysAndEndsWithNewline(self):
    text = json_utils.canonical_dumps({'b': 1, 'a': 2})
    self.assertEqual(text, '{\n  "a": 2,\n  "b": 1\n}\n')

  def testCanonicalDumpsNonFinite(self):
    self.assertEqual(
        json.loads(json_utils.canonical_dumps([float('nan'), np.inf, 1.0])),
        [None, None, 1.0])

  def testCanonicalDictFraction(self):
    self.assertEqual(
        json_utils.canonical_dict({'x': fractions.Fraction(1, 3)}),
        {'x': '1/3'})

  def testLoadsRejectsNonJsonable(self):
    text = json.dumps({
        '__torusx_object_type__': 'jsonable',
        '__module__': 'fractions',
        '__class__': 'Fraction',
    })
    with self.assertRaisesRegex(ValueError, 'must be a subclass of Jsonable'):
      json_utils.loads(text)


if __name__ == '__main__':
  absltest.main()
